#include "ail2/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "ail2/errors.hpp"

namespace ail2::report {

namespace {

// Monochrome ramp for scores 0..4, lightest to darkest.
const char* const kRamp[5] = {"#f7f7f7", "#cccccc", "#969696", "#636363", "#252525"};
// Scores drawn on dark cells use white text.
const char* const kCellText[5] = {"#000000", "#000000", "#000000", "#ffffff", "#ffffff"};
const bool kGateDimension[7] = {true, true, false, true, true, false, false};
const char* const kDimensionNames[7] = {"m1", "m2", "m3", "m4", "m5", "m6", "m7"};

// Fixed 2-decimal, locale-independent number formatting for SVG coordinates.
std::string fmt2(double value) {
    char buffer[40];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                   std::chars_format::fixed, 2);
    if (ec != std::errc()) return "0.00";
    return std::string(buffer, ptr);
}

std::string entry_label(const BundleEntry& entry) {
    if (entry.rater_id) return entry.workflow_id + " @" + *entry.rater_id;
    return entry.workflow_id;
}

std::string opt_cell(const std::optional<int>& value) {
    return value ? std::to_string(*value) : "--";
}

void require_nonempty(const ReportBundle& bundle) {
    if (bundle.evaluations.empty()) throw DomainError("report bundle has no evaluations");
}

void svg_text(std::ostream& out, double x, double y, const std::string& anchor,
              const std::string& fill, int size, bool bold, const std::string& text) {
    out << "<text x=\"" << fmt2(x) << "\" y=\"" << fmt2(y) << "\" text-anchor=\"" << anchor
        << "\" font-family=\"monospace\" font-size=\"" << size << "\" fill=\"" << fill << "\"";
    if (bold) out << " font-weight=\"bold\"";
    out << ">" << text << "</text>\n";
}

void svg_rect(std::ostream& out, double x, double y, double w, double h,
              const std::string& fill, const std::string& stroke) {
    out << "<rect x=\"" << fmt2(x) << "\" y=\"" << fmt2(y) << "\" width=\"" << fmt2(w)
        << "\" height=\"" << fmt2(h) << "\" fill=\"" << fill << "\" stroke=\"" << stroke
        << "\"/>\n";
}

std::string fmt_median(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.1f", value);
    return buffer;
}

}  // namespace

std::string render_markdown(const ReportBundle& bundle) {
    require_nonempty(bundle);
    std::ostringstream out;
    out << "# AI to Learn 2.0 case scoring\n\n";
    out << "| Case | m1 | m2 | m3 | m4 | m5 | m6 | m7 | S | Gate | C | tau | Core "
           "| AI to Learn 2.0 |\n";
    out << "| --- | --- | --- | --- | --- | --- | --- | --- | --- | --- | --- | --- | --- "
           "| --- |\n";
    for (const auto& entry : bundle.evaluations) {
        out << "| " << entry_label(entry);
        for (int value : entry.profile.values) out << " | " << value;
        out << " | " << entry.evaluation.total;
        out << " | " << (entry.evaluation.gate ? 1 : 0);
        out << " | " << opt_cell(entry.capability_level);
        out << " | " << opt_cell(entry.threshold);
        out << " | " << (entry.evaluation.core ? 1 : 0);
        out << " | " << (entry.evaluation.full ? 1 : 0);
        out << " |\n";
    }

    if (!bundle.panel_summaries.empty()) {
        out << "\n## Panel summaries\n\n";
        out << "| Case | m1 | m2 | m3 | m4 | m5 | m6 | m7 |\n";
        out << "| --- | --- | --- | --- | --- | --- | --- | --- |\n";
        for (const auto& summary : bundle.panel_summaries) {
            out << "| " << summary.case_id;
            for (int i = 0; i < 7; ++i)
                out << " | " << fmt_median(summary.median_profile[static_cast<std::size_t>(i)])
                    << " (range " << summary.disagreement_range[static_cast<std::size_t>(i)]
                    << ")";
            out << " |\n";
        }
    }

    bool any_warnings = false;
    for (const auto& entry : bundle.evaluations)
        if (!entry.evaluation.warnings.empty()) any_warnings = true;
    if (any_warnings) {
        out << "\n## Warnings\n\n";
        for (const auto& entry : bundle.evaluations)
            for (const auto& warning : entry.evaluation.warnings)
                out << "- " << entry_label(entry) << " `" << warning.code
                    << "`: " << warning.message << "\n";
    }
    return out.str();
}

std::string render_heatmap_svg(const ReportBundle& bundle) {
    require_nonempty(bundle);
    const double label_width = 150.0;
    const double header_height = 40.0;
    const double cell_width = 54.0;
    const double cell_height = 30.0;
    const double footer_height = 58.0;
    const double right_margin = 16.0;
    const std::size_t rows = bundle.evaluations.size();
    const double width = label_width + 7.0 * cell_width + right_margin;
    const double height = header_height + static_cast<double>(rows) * cell_height + footer_height;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 "
        << fmt2(width) << " " << fmt2(height) << "\" width=\"" << fmt2(width) << "\" height=\""
        << fmt2(height) << "\">\n";
    svg_rect(out, 0.0, 0.0, width, height, "#ffffff", "none");

    // Column headers; gate dimensions carry a marker and bold face.
    for (int d = 0; d < 7; ++d) {
        const double cx = label_width + (d + 0.5) * cell_width;
        std::string name = kDimensionNames[d];
        if (kGateDimension[d]) name += "*";
        svg_text(out, cx, header_height - 12.0, "middle", "#000000", 13, kGateDimension[d], name);
    }

    for (std::size_t r = 0; r < rows; ++r) {
        const auto& entry = bundle.evaluations[r];
        const double y = header_height + static_cast<double>(r) * cell_height;
        svg_text(out, label_width - 8.0, y + cell_height / 2.0 + 4.0, "end", "#000000", 12,
                 false, entry_label(entry));
        for (int d = 0; d < 7; ++d) {
            const int score = entry.profile.values[static_cast<std::size_t>(d)];
            const double x = label_width + d * cell_width;
            svg_rect(out, x, y, cell_width, cell_height, kRamp[score], "#ffffff");
            svg_text(out, x + cell_width / 2.0, y + cell_height / 2.0 + 4.0, "middle",
                     kCellText[score], 12, false, std::to_string(score));
        }
    }

    // Footer: score ramp legend plus the gate marker note.
    const double legend_y = header_height + static_cast<double>(rows) * cell_height + 16.0;
    for (int score = 0; score <= 4; ++score) {
        const double x = label_width + score * 64.0;
        svg_rect(out, x, legend_y, 18.0, 12.0, kRamp[score], "#777777");
        svg_text(out, x + 24.0, legend_y + 10.0, "start", "#000000", 11, false,
                 std::to_string(score));
    }
    svg_text(out, label_width, legend_y + 32.0, "start", "#000000", 11, false,
             "* gate dimension (minimum 3 required)");
    out << "</svg>\n";
    return out.str();
}

std::string render_totals_svg(const ReportBundle& bundle) {
    require_nonempty(bundle);
    const double axis_width = 46.0;
    const double top_margin = 26.0;
    const double unit = 10.0;  // pixels per score point
    const double plot_height = 28.0 * unit;
    const double baseline = top_margin + plot_height;
    const double bar_width = 46.0;
    const double bar_gap = 26.0;
    const double annotation_height = 64.0;
    const std::size_t bars = bundle.evaluations.size();
    const double width =
        axis_width + 18.0 + static_cast<double>(bars) * (bar_width + bar_gap) + 40.0;
    const double height = baseline + annotation_height;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 "
        << fmt2(width) << " " << fmt2(height) << "\" width=\"" << fmt2(width) << "\" height=\""
        << fmt2(height) << "\">\n";
    svg_rect(out, 0.0, 0.0, width, height, "#ffffff", "none");

    // Y axis with ticks every 7 points.
    out << "<line x1=\"" << fmt2(axis_width) << "\" y1=\"" << fmt2(top_margin) << "\" x2=\""
        << fmt2(axis_width) << "\" y2=\"" << fmt2(baseline)
        << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    for (int tick = 0; tick <= 28; tick += 7) {
        const double y = baseline - tick * unit;
        out << "<line x1=\"" << fmt2(axis_width - 4.0) << "\" y1=\"" << fmt2(y) << "\" x2=\""
            << fmt2(axis_width) << "\" y2=\"" << fmt2(y)
            << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        svg_text(out, axis_width - 8.0, y + 4.0, "end", "#000000", 11, false,
                 std::to_string(tick));
    }

    // Dashed separators between the interpretation bands.
    const double band_edges[3] = {9.5, 16.5, 22.5};
    const double plot_right = width - 30.0;
    for (double edge : band_edges) {
        const double y = baseline - edge * unit;
        out << "<line x1=\"" << fmt2(axis_width) << "\" y1=\"" << fmt2(y) << "\" x2=\""
            << fmt2(plot_right) << "\" y2=\"" << fmt2(y)
            << "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"5 4\"/>\n";
        svg_text(out, plot_right + 4.0, y + 4.0, "start", "#888888", 10, false, fmt2(edge));
    }

    for (std::size_t i = 0; i < bars; ++i) {
        const auto& entry = bundle.evaluations[i];
        const double x = axis_width + 18.0 + static_cast<double>(i) * (bar_width + bar_gap);
        const double bar_height = entry.evaluation.total * unit;
        svg_rect(out, x, baseline - bar_height, bar_width, bar_height, "#636363", "#252525");
        svg_text(out, x + bar_width / 2.0, baseline - bar_height - 6.0, "middle", "#000000", 12,
                 true, std::to_string(entry.evaluation.total));
        svg_text(out, x + bar_width / 2.0, baseline + 16.0, "middle", "#000000", 12, false,
                 entry_label(entry));
        const std::string status = std::string("G:") + (entry.evaluation.gate ? "1" : "0") +
                                   " F:" + (entry.evaluation.full ? "1" : "0");
        svg_text(out, x + bar_width / 2.0, baseline + 32.0, "middle", "#444444", 11, false,
                 status);
    }
    svg_text(out, axis_width, baseline + 52.0, "start", "#000000", 11, false,
             "G = gate satisfied, F = full AI to Learn 2.0 compliance; dashed lines separate "
             "the interpretation bands");
    out << "</svg>\n";
    return out.str();
}

json to_canonical_json(const ReportBundle& bundle) {
    require_nonempty(bundle);
    json node = json::object();
    node["evaluations"] = json::array();
    for (const auto& entry : bundle.evaluations) {
        json e = json::object();
        e["workflow_id"] = entry.workflow_id;
        if (entry.rater_id) e["rater_id"] = *entry.rater_id;
        e["profile"] = model::to_canonical_json(entry.profile);
        e["evaluation"] = model::to_canonical_json(entry.evaluation);
        if (entry.capability_level)
            e["capability_level"] = *entry.capability_level;
        else
            e["capability_level"] = "not_applicable";
        if (entry.threshold)
            e["threshold"] = *entry.threshold;
        else
            e["threshold"] = "not_applicable";
        node["evaluations"].push_back(std::move(e));
    }
    if (!bundle.panel_summaries.empty()) {
        node["panel_summaries"] = json::array();
        for (const auto& summary : bundle.panel_summaries) {
            json s = json::object();
            s["case_id"] = summary.case_id;
            s["median_profile"] = summary.median_profile;
            s["disagreement_range"] = summary.disagreement_range;
            node["panel_summaries"].push_back(std::move(s));
        }
    }
    return node;
}

}  // namespace ail2::report

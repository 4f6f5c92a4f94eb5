#include "ail2/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include "ail2/audit.hpp"
#include "ail2/corpus.hpp"
#include "ail2/engine.hpp"
#include "ail2/model.hpp"
#include "ail2/report.hpp"
#include "ail2/stats.hpp"

namespace ail2::cli {

namespace {

struct Style {
    bool enabled = false;
    std::string green(const std::string& text) const {
        return enabled ? "\033[32m" + text + "\033[0m" : text;
    }
    std::string red(const std::string& text) const {
        return enabled ? "\033[31m" + text + "\033[0m" : text;
    }
};

Style style_for(std::ostream& err) {
    Style style;
    style.enabled = std::getenv("AIL2_NO_COLOR") == nullptr && &err == &std::cerr &&
                    isatty(STDERR_FILENO) != 0;
    return style;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write file: " + path);
    out << bytes;
    if (!out) throw DomainError("cannot write file: " + path);
}

model::WorkflowDescriptor load_workflow(const std::string& path,
                                        const model::ParseOptions& options) {
    try {
        return model::parse_workflow(read_file(path), options);
    } catch (const ParseError& e) {
        throw DomainError(path + ": " + e.what());
    }
}

model::AssessmentRecord load_assessment(const std::string& path,
                                        const model::ParseOptions& options) {
    try {
        return model::parse_assessment(read_file(path), options);
    } catch (const ParseError& e) {
        throw DomainError(path + ": " + e.what());
    }
}

stats::RaterPanel load_panel(const std::string& path, const model::ParseOptions& options) {
    try {
        return stats::parse_panel(read_file(path), options);
    } catch (const ParseError& e) {
        throw DomainError(path + ": " + e.what());
    } catch (const DomainError& e) {
        throw DomainError(path + ": " + std::string(e.what()));
    }
}

void emit(std::ostream& out, const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        out << text;
    else
        write_file(out_path, text);
}

int run_validate(const std::string& path, const model::ParseOptions& options, bool quiet,
                 std::ostream& out, std::ostream& err) {
    const auto workflow = load_workflow(path, options);
    const auto report = audit::audit_manifest(workflow.package);
    out << model::serialize(audit::to_canonical_json(report));
    if (!quiet) {
        const Style style = style_for(err);
        if (report.structurally_complete) {
            err << path << ": " << style.green("structurally complete") << "\n";
        } else {
            int warnings = 0;
            for (const auto& finding : report.findings)
                if (finding.severity == audit::Severity::warning) ++warnings;
            err << path << ": "
                << style.red(std::to_string(report.error_count()) + " error(s), " +
                             std::to_string(warnings) + " warning(s)")
                << "\n";
        }
    }
    return report.structurally_complete ? 0 : 1;
}

int run_score(const std::string& workflow_path, const std::string& assessment_path,
              const model::ParseOptions& options, std::ostream& out) {
    const auto workflow = load_workflow(workflow_path, options);
    const auto record = load_assessment(assessment_path, options);
    const auto evaluation = engine::evaluate_case(workflow, record);
    out << model::serialize(model::to_canonical_json(evaluation));
    return 0;
}

int run_report(const std::vector<std::string>& files, const std::string& format,
               const std::string& out_path, const model::ParseOptions& options,
               std::ostream& out) {
    if (files.size() < 2 || files.size() % 2 != 0)
        throw DomainError("report expects workflow/assessment file pairs");
    report::ReportBundle bundle;
    std::map<std::string, int> id_counts;
    std::vector<std::string> rater_ids;
    for (std::size_t i = 0; i < files.size(); i += 2) {
        const auto workflow = load_workflow(files[i], options);
        const auto record = load_assessment(files[i + 1], options);
        report::BundleEntry entry;
        entry.workflow_id = workflow.id;
        entry.profile = record.profile;
        entry.evaluation = engine::evaluate_case(workflow, record);
        entry.capability_level = record.capability.level;
        entry.threshold = engine::resolve_threshold(workflow.context);
        rater_ids.push_back(record.rater_id);
        ++id_counts[workflow.id];
        bundle.evaluations.push_back(std::move(entry));
    }
    // Qualify duplicated workflow ids with the rater.
    for (std::size_t i = 0; i < bundle.evaluations.size(); ++i)
        if (id_counts[bundle.evaluations[i].workflow_id] > 1)
            bundle.evaluations[i].rater_id = rater_ids[i];

    if (format == "md")
        emit(out, report::render_markdown(bundle), out_path);
    else if (format == "json")
        emit(out, model::serialize(report::to_canonical_json(bundle)), out_path);
    else if (format == "heatmap-svg")
        emit(out, report::render_heatmap_svg(bundle), out_path);
    else
        emit(out, report::render_totals_svg(bundle), out_path);
    return 0;
}

int run_corpus_list(std::ostream& out) {
    json list = json::array();
    for (const auto& c : corpus::load_corpus())
        list.push_back({{"id", c.id}, {"title", c.title}});
    out << model::serialize(list);
    return 0;
}

int run_corpus_show(const std::string& id, std::ostream& out) {
    for (const auto& c : corpus::load_corpus()) {
        if (c.id != id) continue;
        json node = json::object();
        node["id"] = c.id;
        node["title"] = c.title;
        node["workflow"] = model::to_canonical_json(c.workflow);
        node["assessment"] = model::to_canonical_json(c.assessment);
        out << model::serialize(node);
        return 0;
    }
    throw DomainError("unknown corpus case: " + id);
}

int run_corpus_verify(bool quiet, std::ostream& out, std::ostream& err) {
    const auto report = corpus::verify_corpus();
    out << model::serialize(corpus::to_canonical_json(report));
    if (!quiet) {
        const Style style = style_for(err);
        for (const auto& result : report.cases) {
            if (result.pass) {
                err << result.case_id << ": " << style.green("ok") << "\n";
            } else {
                err << result.case_id << ": " << style.red("mismatch");
                for (const auto& m : result.mismatches)
                    err << " [" << m.field << " expected " << m.expected << ", got " << m.actual
                        << "]";
                err << "\n";
            }
        }
        err << report.pass_count << "/" << report.cases.size() << " cases match Table 3\n";
    }
    return report.all_match ? 0 : 1;
}

int run_agree(const std::string& path, const std::string& stat, const std::string& weights,
              const std::string& icc_form, const model::ParseOptions& options,
              std::ostream& out) {
    const auto panel = load_panel(path, options);
    json node = json::object();
    node["stat"] = stat;
    node["value_kind"] = stats::to_string(panel.value_kind());

    if (stat == "icc") {
        const auto form =
            icc_form == "2_k" ? stats::IccForm::icc2_k : stats::IccForm::icc2_1;
        const auto result = stats::icc(panel, form);
        if (result) {
            node["defined"] = true;
            node["result"] = stats::to_canonical_json(*result);
        } else {
            node["defined"] = false;
            node["reason"] = "degenerate panel (no usable between-case variance)";
        }
        out << model::serialize(node);
        return 0;
    }

    if (stat == "kappa") {
        node["categories"] = panel.categories();
        node["weights"] = weights;
    }
    node["pairs"] = json::array();
    const auto scheme = weights == "linear" ? stats::WeightScheme::linear
                                            : stats::WeightScheme::quadratic;
    for (std::size_t a = 0; a < panel.rater_count(); ++a) {
        for (std::size_t b = a + 1; b < panel.rater_count(); ++b) {
            json pair = json::object();
            pair["rater_a"] = panel.rater_ids()[a];
            pair["rater_b"] = panel.rater_ids()[b];
            const auto col_a = panel.rater_column(a);
            const auto col_b = panel.rater_column(b);
            if (stat == "exact") {
                pair["value"] = stats::exact_agreement(col_a, col_b);
            } else {
                const auto kappa =
                    stats::weighted_kappa(col_a, col_b, panel.categories(), scheme);
                pair["defined"] = kappa.has_value();
                if (kappa) pair["value"] = *kappa;
            }
            node["pairs"].push_back(std::move(pair));
        }
    }
    out << model::serialize(node);
    return 0;
}

}  // namespace

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"AI to Learn 2.0 assessment toolkit"};
    app.name("ail2");
    app.require_subcommand(1);

    bool strict = true;
    bool quiet = false;
    app.add_flag("--strict,!--no-strict", strict,
                 "treat unknown document fields as schema errors (default: on)");
    app.add_flag("--quiet", quiet, "suppress informational diagnostics");

    auto* validate_cmd =
        app.add_subcommand("validate", "audit a workflow's deliverable package");
    std::string validate_path;
    validate_cmd->add_option("workflow", validate_path, "workflow document (.ail2w.json)")
        ->required();

    auto* score_cmd = app.add_subcommand("score", "evaluate one assessment of one workflow");
    std::string score_workflow;
    std::string score_assessment;
    score_cmd->add_option("workflow", score_workflow, "workflow document (.ail2w.json)")
        ->required();
    score_cmd->add_option("assessment", score_assessment, "assessment document (.ail2a.json)")
        ->required();

    auto* report_cmd =
        app.add_subcommand("report", "render a report over workflow/assessment pairs");
    std::vector<std::string> report_files;
    std::string report_format = "md";
    std::string report_out;
    report_cmd->add_option("pairs", report_files, "workflow and assessment files, alternating")
        ->required();
    report_cmd->add_option("--format", report_format, "md, json, heatmap-svg, or totals-svg")
        ->check(CLI::IsMember({"md", "json", "heatmap-svg", "totals-svg"}));
    report_cmd->add_option("--out", report_out, "output path (default: stdout)");

    auto* corpus_cmd = app.add_subcommand("corpus", "work with the bundled reference cases");
    corpus_cmd->require_subcommand(1);
    auto* corpus_list_cmd = corpus_cmd->add_subcommand("list", "list the bundled cases");
    auto* corpus_show_cmd = corpus_cmd->add_subcommand("show", "print one bundled case");
    std::string corpus_show_id;
    corpus_show_cmd->add_option("id", corpus_show_id, "case id (C1..C7)")->required();
    auto* corpus_verify_cmd = corpus_cmd->add_subcommand(
        "verify", "recompute all bundled cases and diff against the published table");

    auto* agree_cmd = app.add_subcommand("agree", "inter-rater statistics over a panel");
    std::string agree_path;
    std::string agree_stat;
    std::string agree_weights = "quadratic";
    std::string agree_icc_form = "2_1";
    agree_cmd->add_option("panel", agree_path, "panel document (.ail2p.json)")->required();
    agree_cmd->add_option("--stat", agree_stat, "kappa, icc, or exact")
        ->required()
        ->check(CLI::IsMember({"kappa", "icc", "exact"}));
    agree_cmd->add_option("--weights", agree_weights, "kappa weights (default: quadratic)")
        ->check(CLI::IsMember({"linear", "quadratic"}));
    agree_cmd->add_option("--icc-form", agree_icc_form, "ICC form (default: 2_1)")
        ->check(CLI::IsMember({"2_1", "2_k"}));

    auto* pld_cmd = app.add_subcommand("pld", "performance-learning divergence");
    double pld_artifact = 0.0;
    double pld_transfer = 0.0;
    pld_cmd->add_option("--artifact", pld_artifact, "artifact quality in [0,1]")->required();
    pld_cmd->add_option("--transfer", pld_transfer, "transfer quality in [0,1]")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "ail2: " << e.what() << "\n";
        err << app.help();
        return 2;
    }

    const model::ParseOptions options{strict};
    try {
        if (validate_cmd->parsed()) return run_validate(validate_path, options, quiet, out, err);
        if (score_cmd->parsed()) return run_score(score_workflow, score_assessment, options, out);
        if (report_cmd->parsed())
            return run_report(report_files, report_format, report_out, options, out);
        if (corpus_cmd->parsed()) {
            if (corpus_list_cmd->parsed()) return run_corpus_list(out);
            if (corpus_show_cmd->parsed()) return run_corpus_show(corpus_show_id, out);
            if (corpus_verify_cmd->parsed()) return run_corpus_verify(quiet, out, err);
        }
        if (agree_cmd->parsed())
            return run_agree(agree_path, agree_stat, agree_weights, agree_icc_form, options, out);
        if (pld_cmd->parsed()) {
            out << model::serialize(
                stats::to_canonical_json(stats::pld(pld_artifact, pld_transfer)));
            return 0;
        }
    } catch (const Error& e) {
        err << "ail2: error: " << e.what() << "\n";
        return 1;
    }
    err << "ail2: no command selected\n";
    return 2;
}

}  // namespace ail2::cli

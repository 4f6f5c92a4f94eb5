#include "ail2/stats.hpp"

#include <algorithm>
#include <cmath>

#include "ail2/fdist.hpp"
#include "json_reader.hpp"

namespace ail2::stats {

double exact_agreement(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.empty() || b.empty()) throw DomainError("exact agreement requires nonempty lists");
    if (a.size() != b.size()) throw DomainError("score lists differ in length");
    std::size_t matches = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == b[i]) ++matches;
    return static_cast<double>(matches) / static_cast<double>(a.size());
}

namespace {

double disagreement_weight(int i, int j, int categories, WeightScheme scheme) {
    const double span = categories - 1;
    if (scheme == WeightScheme::linear) return std::abs(i - j) / span;
    const double d = i - j;
    return d * d / (span * span);
}

}  // namespace

std::optional<double> weighted_kappa(const std::vector<int>& a, const std::vector<int>& b,
                                     int categories, WeightScheme scheme) {
    if (categories < 2) throw DomainError("weighted kappa requires at least 2 categories");
    if (a.size() != b.size()) throw DomainError("score lists differ in length");
    if (a.size() < 2) throw DomainError("weighted kappa requires at least 2 paired scores");
    for (const auto* list : {&a, &b})
        for (int value : *list)
            if (value < 0 || value >= categories)
                throw DomainError("score " + std::to_string(value) + " outside [0," +
                                  std::to_string(categories - 1) + "]");

    const double n = static_cast<double>(a.size());
    std::vector<double> marginal_a(static_cast<std::size_t>(categories), 0.0);
    std::vector<double> marginal_b(static_cast<std::size_t>(categories), 0.0);
    double observed = 0.0;  // sum of w_ij O_ij, accumulated pairwise
    for (std::size_t i = 0; i < a.size(); ++i) {
        observed += disagreement_weight(a[i], b[i], categories, scheme);
        marginal_a[static_cast<std::size_t>(a[i])] += 1.0;
        marginal_b[static_cast<std::size_t>(b[i])] += 1.0;
    }
    observed /= n;

    double expected = 0.0;  // sum of w_ij E_ij with E the marginal outer product
    for (int i = 0; i < categories; ++i) {
        if (marginal_a[static_cast<std::size_t>(i)] == 0.0) continue;
        for (int j = 0; j < categories; ++j) {
            if (marginal_b[static_cast<std::size_t>(j)] == 0.0) continue;
            expected += disagreement_weight(i, j, categories, scheme) *
                        (marginal_a[static_cast<std::size_t>(i)] / n) *
                        (marginal_b[static_cast<std::size_t>(j)] / n);
        }
    }
    if (expected == 0.0) return std::nullopt;  // both raters constant at one value
    return 1.0 - observed / expected;
}

RaterPanel::RaterPanel(std::vector<std::string> case_ids, std::vector<std::string> rater_ids,
                       std::vector<double> row_major_scores, ValueKind kind)
    : case_ids_(std::move(case_ids)),
      rater_ids_(std::move(rater_ids)),
      scores_(std::move(row_major_scores)),
      kind_(kind) {
    if (case_ids_.size() < 2) throw DomainError("panel requires at least 2 cases");
    if (rater_ids_.size() < 2) throw DomainError("panel requires at least 2 raters");
    if (scores_.size() != case_ids_.size() * rater_ids_.size())
        throw DomainError("panel scores must be a complete " +
                          std::to_string(case_ids_.size()) + "x" +
                          std::to_string(rater_ids_.size()) + " matrix, got " +
                          std::to_string(scores_.size()) + " values");
    const int hi = categories() - 1;
    for (double value : scores_) {
        if (!(value == std::floor(value)) || value < 0.0 || value > hi)
            throw DomainError("panel score " + std::to_string(value) +
                              " is not an integer in [0," + std::to_string(hi) + "]");
    }
}

int RaterPanel::categories() const {
    switch (kind_) {
        case ValueKind::dimension: return 5;
        case ValueKind::total: return 29;
        case ValueKind::capability: return 4;
    }
    return 5;
}

std::vector<int> RaterPanel::rater_column(std::size_t rater_index) const {
    std::vector<int> column;
    column.reserve(case_count());
    for (std::size_t i = 0; i < case_count(); ++i)
        column.push_back(static_cast<int>(at(i, rater_index)));
    return column;
}

RaterPanel::ValueKind value_kind_from_string(const std::string& token, const std::string& path) {
    if (token == "dimension") return RaterPanel::ValueKind::dimension;
    if (token == "total") return RaterPanel::ValueKind::total;
    if (token == "capability") return RaterPanel::ValueKind::capability;
    throw SchemaError(path, "must be one of dimension, total, capability");
}

std::string to_string(RaterPanel::ValueKind kind) {
    switch (kind) {
        case RaterPanel::ValueKind::dimension: return "dimension";
        case RaterPanel::ValueKind::total: return "total";
        case RaterPanel::ValueKind::capability: return "capability";
    }
    return "dimension";
}

RaterPanel parse_panel(const std::string& text, const model::ParseOptions& options) {
    const json document = model::parse_json_text(text);
    detail::ObjectReader r(document, "", options, /*top_level=*/true);
    auto case_ids = r.require_string_list("case_ids");
    auto rater_ids = r.require_string_list("rater_ids");
    const json& scores_node = detail::as_array(r.require("scores"), r.child("scores"));
    std::vector<double> scores;
    scores.reserve(scores_node.size());
    for (std::size_t i = 0; i < scores_node.size(); ++i) {
        if (!scores_node[i].is_number())
            throw SchemaError(detail::index_path(r.child("scores"), i), "expected a number");
        scores.push_back(scores_node[i].get<double>());
    }
    auto kind = value_kind_from_string(r.require_string("value_kind"), r.child("value_kind"));
    r.finish();
    return RaterPanel(std::move(case_ids), std::move(rater_ids), std::move(scores), kind);
}

json to_canonical_json(const RaterPanel& panel) {
    json node = json::object();
    node["case_ids"] = panel.case_ids();
    node["rater_ids"] = panel.rater_ids();
    node["scores"] = panel.scores();
    node["value_kind"] = to_string(panel.value_kind());
    return node;
}

std::string to_string(IccForm form) {
    return form == IccForm::icc2_1 ? "icc2_1" : "icc2_k";
}

std::optional<IccResult> icc(const RaterPanel& panel, IccForm form, double confidence_level) {
    const std::size_t n = panel.case_count();
    const std::size_t k = panel.rater_count();
    if (n < 2 || k < 2) throw DomainError("icc requires at least 2 cases and 2 raters");
    if (!(confidence_level > 0.0 && confidence_level < 1.0))
        throw DomainError("confidence level must lie in (0,1)");

    // Two-way ANOVA mean squares via row/column sum identities.
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    double grand = 0.0;
    double sum_squares = 0.0;
    std::vector<double> row_sums(n, 0.0);
    std::vector<double> col_sums(k, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const double x = panel.at(i, j);
            grand += x;
            sum_squares += x * x;
            row_sums[i] += x;
            col_sums[j] += x;
        }
    }
    const double correction = grand * grand / (nd * kd);
    const double ss_total = sum_squares - correction;
    if (ss_total == 0.0) return std::nullopt;  // zero total variance

    double ss_rows = -correction;
    for (double s : row_sums) ss_rows += s * s / kd;
    double ss_cols = -correction;
    for (double s : col_sums) ss_cols += s * s / nd;
    double ss_error = ss_total - ss_rows - ss_cols;
    if (ss_error < 0.0) ss_error = 0.0;  // rounding guard

    const double msr = ss_rows / (nd - 1.0);
    const double msc = ss_cols / (kd - 1.0);
    const double mse = ss_error / ((nd - 1.0) * (kd - 1.0));

    const double single_denominator = msr + (kd - 1.0) * mse + (kd / nd) * (msc - mse);
    if (single_denominator <= 0.0) return std::nullopt;
    const double single = (msr - mse) / single_denominator;

    IccResult result;
    result.icc_form = form;
    result.confidence_level = confidence_level;
    result.mean_squares = MeanSquares{msr, msc, mse};
    if (form == IccForm::icc2_1) {
        result.estimate = single;
    } else {
        const double average_denominator = msr + (msc - mse) / nd;
        if (average_denominator <= 0.0) return std::nullopt;
        result.estimate = (msr - mse) / average_denominator;
    }

    // Confidence bounds for the single-measures coefficient, stepped up with
    // Spearman-Brown for the average-measures form. Perfect agreement
    // (MSE = MSC = 0) degenerates to the point interval [1,1].
    double lower_single = single;
    double upper_single = single;
    if (mse == 0.0 && msc == 0.0) {
        lower_single = upper_single = 1.0;
    } else {
        const double alpha = 1.0 - confidence_level;
        const double a = (kd * single) / (nd * (1.0 - single));
        const double b = 1.0 + (kd * single * (nd - 1.0)) / (nd * (1.0 - single));
        const double num = a * msc + b * mse;
        const double df2 = num * num / ((a * msc) * (a * msc) / (kd - 1.0) +
                                        (b * mse) * (b * mse) / ((nd - 1.0) * (kd - 1.0)));
        if (std::isfinite(df2) && df2 > 0.0) {
            const double f_lower = f_quantile(1.0 - alpha / 2.0, nd - 1.0, df2);
            const double f_upper = f_quantile(1.0 - alpha / 2.0, df2, nd - 1.0);
            const double l1 = nd * (msr - f_lower * mse) /
                              (f_lower * (kd * msc + (kd * nd - kd - nd) * mse) + nd * msr);
            const double u1 = nd * (f_upper * msr - mse) /
                              (kd * msc + (kd * nd - kd - nd) * mse + nd * f_upper * msr);
            if (std::isfinite(l1)) lower_single = l1;
            if (std::isfinite(u1)) upper_single = u1;
        }
    }
    if (form == IccForm::icc2_1) {
        result.ci_lower = lower_single;
        result.ci_upper = upper_single;
    } else {
        // The step-up has a pole at -1/(k-1); the final clamp below repairs
        // any inversion it causes on strongly negative bounds.
        auto step_up = [&](double x) { return kd * x / (1.0 + (kd - 1.0) * x); };
        result.ci_lower = step_up(lower_single);
        result.ci_upper = step_up(upper_single);
    }
    // The F-based procedure assumes nonnegative agreement; on panels with
    // negative or near-zero agreement the raw bounds can fail to bracket the
    // point estimate. The reported interval must always contain it.
    result.ci_lower = std::min(result.ci_lower, result.estimate);
    result.ci_upper = std::max(result.ci_upper, result.estimate);
    return result;
}

json to_canonical_json(const IccResult& result) {
    json node = json::object();
    node["estimate"] = result.estimate;
    node["icc_form"] = to_string(result.icc_form);
    node["ci_lower"] = result.ci_lower;
    node["ci_upper"] = result.ci_upper;
    node["confidence_level"] = result.confidence_level;
    node["mean_squares"] = {{"rows", result.mean_squares.rows},
                            {"columns", result.mean_squares.columns},
                            {"error", result.mean_squares.error}};
    return node;
}

std::string to_string(GroupLabel label) {
    switch (label) {
        case GroupLabel::weak: return "weak";
        case GroupLabel::borderline: return "borderline";
        case GroupLabel::strong: return "strong";
    }
    return "weak";
}

GroupLabel group_from_string(const std::string& token, const std::string& path) {
    if (token == "weak") return GroupLabel::weak;
    if (token == "borderline") return GroupLabel::borderline;
    if (token == "strong") return GroupLabel::strong;
    throw SchemaError(path, "must be one of weak, borderline, strong");
}

KnownGroupsReport known_groups_check(const std::vector<GroupedTotal>& items) {
    if (items.empty()) throw DomainError("known-groups check requires at least one case");

    const GroupLabel order[3] = {GroupLabel::weak, GroupLabel::borderline, GroupLabel::strong};
    std::vector<std::vector<const GroupedTotal*>> buckets(3);
    for (const auto& item : items)
        buckets[static_cast<std::size_t>(item.group)].push_back(&item);

    KnownGroupsReport report;
    int represented = 0;
    for (int g = 0; g < 3; ++g) {
        const auto& bucket = buckets[static_cast<std::size_t>(g)];
        if (bucket.empty()) continue;
        ++represented;
        std::vector<int> totals;
        totals.reserve(bucket.size());
        for (const auto* item : bucket) totals.push_back(item->total);
        std::sort(totals.begin(), totals.end());
        GroupSummary summary;
        summary.group = order[g];
        summary.count = static_cast<int>(totals.size());
        summary.min = totals.front();
        summary.max = totals.back();
        const std::size_t mid = totals.size() / 2;
        summary.median = totals.size() % 2 == 1
                             ? totals[mid]
                             : (totals[mid - 1] + totals[mid]) / 2.0;
        report.groups.push_back(summary);
    }

    // Pairwise expected-order checks; strict between weak and strong, weak
    // inequality for the adjacent pairs.
    auto collect = [&](std::size_t lower, std::size_t higher, bool strict) {
        for (const auto* lo : buckets[lower]) {
            for (const auto* hi : buckets[higher]) {
                const bool violated =
                    strict ? lo->total >= hi->total : lo->total > hi->total;
                if (violated)
                    report.violations.push_back(OrderingViolation{
                        lo->case_id, hi->case_id, lo->total, hi->total});
            }
        }
    };
    collect(0, 2, /*strict=*/true);
    collect(0, 1, /*strict=*/false);
    collect(1, 2, /*strict=*/false);
    report.holds_strictly = report.violations.empty();
    if (represented < 2)
        report.note = "fewer than two groups represented; ordering holds vacuously";
    return report;
}

json to_canonical_json(const KnownGroupsReport& report) {
    json node = json::object();
    node["groups"] = json::array();
    for (const auto& summary : report.groups)
        node["groups"].push_back({{"group", to_string(summary.group)},
                                  {"count", summary.count},
                                  {"min", summary.min},
                                  {"median", summary.median},
                                  {"max", summary.max}});
    node["holds_strictly"] = report.holds_strictly;
    node["violations"] = json::array();
    for (const auto& violation : report.violations)
        node["violations"].push_back({{"lower_case", violation.lower_case},
                                      {"higher_case", violation.higher_case},
                                      {"lower_total", violation.lower_total},
                                      {"higher_total", violation.higher_total}});
    if (report.note) node["note"] = *report.note;
    return node;
}

DivergenceResult pld(double q_artifact, double q_transfer, double flag_threshold) {
    if (!(q_artifact >= 0.0 && q_artifact <= 1.0))
        throw DomainError("q_artifact must lie in [0,1]");
    if (!(q_transfer >= 0.0 && q_transfer <= 1.0))
        throw DomainError("q_transfer must lie in [0,1]");
    DivergenceResult result;
    result.q_artifact = q_artifact;
    result.q_transfer = q_transfer;
    result.pld = q_artifact - q_transfer;
    result.flag_threshold = flag_threshold;
    result.flagged = result.pld > flag_threshold;
    return result;
}

json to_canonical_json(const DivergenceResult& result) {
    json node = json::object();
    node["pld"] = result.pld;
    node["q_artifact"] = result.q_artifact;
    node["q_transfer"] = result.q_transfer;
    node["flagged"] = result.flagged;
    node["flag_threshold"] = result.flag_threshold;
    return node;
}

}  // namespace ail2::stats

#pragma once
// Inter-rater agreement and divergence statistics: exact agreement, weighted
// kappa, two-way random-effects ICC with confidence intervals, known-groups
// ordering checks, and the performance-learning divergence measure.
//
// Degenerate inputs (zero expected disagreement, zero between-case variance)
// yield typed undefined outcomes via empty optionals, never silent numbers.

#include <optional>
#include <string>
#include <vector>

#include "ail2/model.hpp"

namespace ail2::stats {

// Fraction of positions where the two score lists agree exactly.
double exact_agreement(const std::vector<int>& a, const std::vector<int>& b);

enum class WeightScheme { linear, quadratic };

// Weighted kappa over scores in [0, categories-1] with disagreement weights
// |i-j|/(k-1) (linear) or (i-j)^2/(k-1)^2 (quadratic, the default for the
// ordinal 0-4 rubric). Returns an empty optional when both raters are
// constant at the same value (zero expected disagreement).
std::optional<double> weighted_kappa(const std::vector<int>& a, const std::vector<int>& b,
                                     int categories,
                                     WeightScheme scheme = WeightScheme::quadratic);

// A complete n x k score matrix: n cases (rows) by k raters (columns),
// row-major. Loaded from .ail2p.json files.
class RaterPanel {
public:
    enum class ValueKind { dimension, total, capability };

    // Validates completeness (scores.size() == cases * raters), n >= 2,
    // k >= 2, and that every score is an integer in the kind's range
    // (dimension [0,4], total [0,28], capability [0,3]).
    RaterPanel(std::vector<std::string> case_ids, std::vector<std::string> rater_ids,
               std::vector<double> row_major_scores, ValueKind kind);

    std::size_t case_count() const { return case_ids_.size(); }
    std::size_t rater_count() const { return rater_ids_.size(); }
    double at(std::size_t case_index, std::size_t rater_index) const {
        return scores_[case_index * rater_count() + rater_index];
    }
    std::vector<int> rater_column(std::size_t rater_index) const;

    const std::vector<std::string>& case_ids() const { return case_ids_; }
    const std::vector<std::string>& rater_ids() const { return rater_ids_; }
    const std::vector<double>& scores() const { return scores_; }
    ValueKind value_kind() const { return kind_; }

    // Number of categories for kappa over this panel's values.
    int categories() const;

private:
    std::vector<std::string> case_ids_;
    std::vector<std::string> rater_ids_;
    std::vector<double> scores_;
    ValueKind kind_;
};

RaterPanel::ValueKind value_kind_from_string(const std::string& token, const std::string& path);
std::string to_string(RaterPanel::ValueKind kind);

RaterPanel parse_panel(const std::string& text, const model::ParseOptions& options = {});
json to_canonical_json(const RaterPanel& panel);

enum class IccForm { icc2_1, icc2_k };

struct MeanSquares {
    double rows = 0.0;     // between cases
    double columns = 0.0;  // between raters
    double error = 0.0;    // residual
};

// Two-way random-effects, absolute-agreement intraclass correlation.
struct IccResult {
    double estimate = 0.0;
    IccForm icc_form = IccForm::icc2_1;
    double ci_lower = 0.0;
    double ci_upper = 0.0;
    double confidence_level = 0.95;
    MeanSquares mean_squares;
};

std::string to_string(IccForm form);

// ICC(2,1) = (MSR - MSE) / (MSR + (k-1) MSE + (k/n)(MSC - MSE)); ICC(2,k) is
// the average-measures form. Confidence bounds follow the standard two-way
// random-effects procedure with F quantiles from fdist.hpp. Returns an empty
// optional for degenerate panels (zero total variance, or a nonpositive
// denominator in the requested form).
std::optional<IccResult> icc(const RaterPanel& panel, IccForm form = IccForm::icc2_1,
                             double confidence_level = 0.95);

json to_canonical_json(const IccResult& result);

enum class GroupLabel { weak, borderline, strong };

std::string to_string(GroupLabel label);
GroupLabel group_from_string(const std::string& token, const std::string& path);

struct GroupedTotal {
    std::string case_id;
    GroupLabel group = GroupLabel::weak;
    int total = 0;
};

struct GroupSummary {
    GroupLabel group = GroupLabel::weak;
    int count = 0;
    int min = 0;
    double median = 0.0;
    int max = 0;
};

struct OrderingViolation {
    std::string lower_case;   // case expected to score lower
    std::string higher_case;  // case expected to score at least as high
    int lower_total = 0;
    int higher_total = 0;
};

// holds_strictly requires max(weak) < min(strong), max(weak) <= min(borderline)
// and max(borderline) <= min(strong); groups with no cases are vacuous.
struct KnownGroupsReport {
    std::vector<GroupSummary> groups;  // in weak, borderline, strong order
    bool holds_strictly = false;
    std::vector<OrderingViolation> violations;
    std::optional<std::string> note;  // set when the ordering is vacuous
};

KnownGroupsReport known_groups_check(const std::vector<GroupedTotal>& items);

json to_canonical_json(const KnownGroupsReport& report);

// Performance-learning divergence: artifact quality minus transfer quality.
// `flagged` marks candidate false mastery; the 0.3 default threshold is a
// reporting convention, not a calibrated cutoff.
struct DivergenceResult {
    double pld = 0.0;
    double q_artifact = 0.0;
    double q_transfer = 0.0;
    bool flagged = false;
    double flag_threshold = 0.3;
};

DivergenceResult pld(double q_artifact, double q_transfer, double flag_threshold = 0.3);

json to_canonical_json(const DivergenceResult& result);

}  // namespace ail2::stats

#pragma once
// Deterministic report rendering: a Markdown scoring table mirroring the
// published case-scoring layout, a dimension heatmap, and a totals bar chart
// with interpretation-band lines. Identical bundles always render to
// byte-identical output; the SVG files are self-contained SVG 1.1.

#include <optional>
#include <string>
#include <vector>

#include "ail2/model.hpp"

namespace ail2::report {

struct BundleEntry {
    std::string workflow_id;
    std::optional<std::string> rater_id;  // qualifier when several raters score one workflow
    model::MaturityProfile profile;
    model::CaseEvaluation evaluation;
    std::optional<int> capability_level;  // empty renders as "--"
    std::optional<int> threshold;         // empty renders as "--"
};

// Cross-rater synopsis for one case: per-dimension medians and ranges.
struct PanelSummary {
    std::string case_id;
    std::array<double, 7> median_profile{};
    std::array<int, 7> disagreement_range{};  // max - min per dimension
};

struct ReportBundle {
    std::vector<BundleEntry> evaluations;  // rendered in this order
    std::vector<PanelSummary> panel_summaries;
};

// Markdown table with columns m1..m7, S, Gate, C, tau, Core and the full
// compliance verdict, "--" for not-applicable cells, followed by a warnings
// section when any case carries warnings. Throws DomainError when empty.
std::string render_markdown(const ReportBundle& bundle);

// One cell per (case, dimension) on a fixed 5-step monochrome ramp (0
// lightest, 4 darkest); gate dimension headers are marked. Returns the SVG
// bytes. Throws DomainError when empty.
std::string render_heatmap_svg(const ReportBundle& bundle);

// One bar per case at height S with dashed band-boundary lines at 9.5, 16.5
// and 22.5 and per-bar gate/full annotations. Throws DomainError when empty.
std::string render_totals_svg(const ReportBundle& bundle);

json to_canonical_json(const ReportBundle& bundle);

}  // namespace ail2::report

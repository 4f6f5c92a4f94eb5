#pragma once
// Structural audit of a deliverable-package manifest against the
// minimum-content checklist. Findings support, but never replace, the
// rater's package-sufficiency assertion.

#include <string>
#include <vector>

#include "ail2/model.hpp"

namespace ail2::audit {

enum class Severity { error, warning, info };
enum class Element { A, P, V, F, R };

// Fixed finding catalog. Findings are always emitted in element order
// A, P, V, F, R and in this order within an element.
//
//   A: A_ABSENT (error), A_OPAQUE_RUNTIME (warning)
//   P: P_ABSENT, P_NO_TOOLS, P_NO_VERIFICATION (errors), P_NO_HUMAN_DECISIONS (warning)
//   V: V_ABSENT, V_NO_EXCLUSIONS, V_NO_ASSUMPTIONS (errors)
//   F: F_ABSENT, F_NO_TRIGGERS, F_NO_ESCALATION (errors)
//   R: R_ABSENT, R_NO_POSTURE (errors), R_NO_FALLBACK (info)
struct AuditFinding {
    Severity severity = Severity::info;
    Element element = Element::A;
    std::string code;
    std::string message;

    bool operator==(const AuditFinding&) const = default;
};

struct AuditReport {
    std::vector<AuditFinding> findings;
    bool structurally_complete = false;  // true iff no error-severity findings

    bool has_code(const std::string& code) const;
    int error_count() const;

    bool operator==(const AuditReport&) const = default;
};

std::string to_string(Severity severity);
std::string to_string(Element element);

// Deterministic, always completes; never rejects a parsed manifest.
AuditReport audit_manifest(const model::DeliverablePackageManifest& manifest);

json to_canonical_json(const AuditReport& report);

}  // namespace ail2::audit

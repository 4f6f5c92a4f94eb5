#pragma once
// Compliance engine: computes the total maturity score, interpretation band,
// gate predicate, capability residual, learning requirement, core and full
// compliance, and advisory consistency warnings for one assessment record.
//
// All functions are pure; evaluations of distinct cases may run concurrently.

#include <optional>
#include <vector>

#include "ail2/audit.hpp"
#include "ail2/model.hpp"

namespace ail2::engine {

// Sum of the seven maturity scores; always in [0,28] for a valid profile.
int compute_total(const model::MaturityProfile& profile);

// Band partition over totals: 0-9 not_in_practice, 10-16 inspired,
// 17-22 aligned, 23-28 strong. Throws DomainError outside [0,28].
model::BandLabel classify_band(int total);

// Gate condition: m1, m2, m4, m5 all >= 3; m3, m6, m7 are ignored.
bool evaluate_gate(const model::MaturityProfile& profile);

// Resolves the capability threshold for a learning-intensive context: the
// explicit declaration wins; otherwise 2 for formative stakes and 3 for
// summative stakes. Operational or research stakes have no default and
// demand an explicit threshold. Throws DomainError when the context is not
// learning-intensive or no threshold can be resolved.
int default_threshold(const model::ContextDeclaration& context);

// Convenience wrapper: empty when the context is not learning-intensive.
std::optional<int> resolve_threshold(const model::ContextDeclaration& context);

// Capability residual: level >= threshold. Throws DomainError for a
// not_applicable level or a threshold outside [0,3].
bool evaluate_cap_res(const model::CapabilityEvidence& capability, int threshold);

// Learning requirement: true when the context is not learning-intensive,
// otherwise equal to the capability residual at the resolved threshold.
bool evaluate_learn_req(const model::ContextDeclaration& context,
                        const model::CapabilityEvidence& capability);

// Core compliance: conjunction of the four rater-asserted predicates.
bool evaluate_core(const model::PredicateAssertions& predicates);

// Full compliance: core AND learning requirement AND gate.
bool evaluate_full(bool core, bool learn_req, bool gate);

// Advisory cross-checks between asserted predicates, the maturity profile,
// the workflow's humans, and the package audit. Emitted in this fixed order:
//   W_ARTRES_M1            art_res asserted but m1 < 3
//   W_SOV_M2               sov asserted but m2 < 3
//   W_PROT_M5              prot asserted but m5 < 3
//   W_PACK_AUDIT           pack asserted but the audit has error findings
//   W_NO_RELEASE_AUTHORITY sov asserted but no human holds release authority
//   W_OPAQUE_RUNTIME_M1    audit reports A_OPAQUE_RUNTIME while m1 >= 3
// Warnings never alter computed results.
std::vector<model::Warning> cross_check_consistency(const model::WorkflowDescriptor& workflow,
                                                    const model::AssessmentRecord& record,
                                                    const audit::AuditReport& audit_report);

// Composes the full evaluation for one (workflow, record) pair, including
// the package audit driven warnings. Throws DomainError when the record does
// not reference the workflow or capability evidence is inconsistent with the
// declared context.
model::CaseEvaluation evaluate_case(const model::WorkflowDescriptor& workflow,
                                    const model::AssessmentRecord& record);

}  // namespace ail2::engine

#include "ail2/engine.hpp"

#include <string>

namespace ail2::engine {

int compute_total(const model::MaturityProfile& profile) {
    int total = 0;
    for (int value : profile.values) total += value;
    return total;
}

model::BandLabel classify_band(int total) {
    if (total < 0 || total > 28)
        throw DomainError("total " + std::to_string(total) + " outside [0,28]");
    if (total <= 9) return model::BandLabel::not_in_practice;
    if (total <= 16) return model::BandLabel::inspired;
    if (total <= 22) return model::BandLabel::aligned;
    return model::BandLabel::strong;
}

bool evaluate_gate(const model::MaturityProfile& profile) {
    return profile.values[0] >= 3 && profile.values[1] >= 3 && profile.values[3] >= 3 &&
           profile.values[4] >= 3;
}

int default_threshold(const model::ContextDeclaration& context) {
    if (!context.learning_intensive)
        throw DomainError("capability threshold requested for a non-learning-intensive context");
    if (context.capability_threshold) return *context.capability_threshold;
    switch (context.stakes) {
        case model::Stakes::formative: return 2;
        case model::Stakes::summative: return 3;
        case model::Stakes::operational:
        case model::Stakes::research:
            throw DomainError("explicit capability_threshold required for stakes \"" +
                              model::to_string(context.stakes) + "\"");
    }
    throw DomainError("explicit capability_threshold required");
}

std::optional<int> resolve_threshold(const model::ContextDeclaration& context) {
    if (!context.learning_intensive) return std::nullopt;
    return default_threshold(context);
}

bool evaluate_cap_res(const model::CapabilityEvidence& capability, int threshold) {
    if (!capability.level)
        throw DomainError("capability residual undefined for a not_applicable level");
    if (threshold < 0 || threshold > 3)
        throw DomainError("capability threshold " + std::to_string(threshold) +
                          " outside [0,3]");
    return *capability.level >= threshold;
}

bool evaluate_learn_req(const model::ContextDeclaration& context,
                        const model::CapabilityEvidence& capability) {
    if (!context.learning_intensive) return true;
    if (!capability.level)
        throw DomainError(
            "learning-intensive context requires a numeric capability level, got not_applicable");
    return evaluate_cap_res(capability, default_threshold(context));
}

bool evaluate_core(const model::PredicateAssertions& predicates) {
    return predicates.art_res && predicates.sov && predicates.prot && predicates.pack;
}

bool evaluate_full(bool core, bool learn_req, bool gate) { return core && learn_req && gate; }

std::vector<model::Warning> cross_check_consistency(const model::WorkflowDescriptor& workflow,
                                                    const model::AssessmentRecord& record,
                                                    const audit::AuditReport& audit_report) {
    std::vector<model::Warning> warnings;
    const auto& m = record.profile.values;
    const auto& p = record.predicates;

    auto warn = [&](const char* code, std::string message) {
        warnings.push_back(model::Warning{code, std::move(message)});
    };

    if (p.art_res && m[0] < 3)
        warn("W_ARTRES_M1",
             "art_res asserted but m1=" + std::to_string(m[0]) + " is below 3");
    if (p.sov && m[1] < 3)
        warn("W_SOV_M2", "sov asserted but m2=" + std::to_string(m[1]) + " is below 3");
    if (p.prot && m[4] < 3)
        warn("W_PROT_M5", "prot asserted but m5=" + std::to_string(m[4]) + " is below 3");
    if (p.pack && audit_report.error_count() > 0)
        warn("W_PACK_AUDIT", "pack asserted but the package audit reports " +
                                 std::to_string(audit_report.error_count()) +
                                 " error finding(s)");
    if (p.sov) {
        bool any_authority = false;
        for (const auto& human : workflow.humans)
            if (human.release_authority) any_authority = true;
        if (!any_authority)
            warn("W_NO_RELEASE_AUTHORITY",
                 "sov asserted but no listed human holds release authority");
    }
    if (audit_report.has_code("A_OPAQUE_RUNTIME") && m[0] >= 3)
        warn("W_OPAQUE_RUNTIME_M1",
             "audit reports an opaque runtime dependency while m1=" + std::to_string(m[0]) +
                 " claims black-box-free routine use");
    return warnings;
}

model::CaseEvaluation evaluate_case(const model::WorkflowDescriptor& workflow,
                                    const model::AssessmentRecord& record) {
    if (record.workflow_id != workflow.id)
        throw DomainError("assessment references workflow \"" + record.workflow_id +
                          "\" but the descriptor is \"" + workflow.id + "\"");
    const auto& context = workflow.context;
    if (context.learning_intensive && !record.capability.level)
        throw DomainError(
            "learning-intensive context requires a numeric capability level, got not_applicable");
    if (!context.learning_intensive && record.capability.level)
        throw DomainError(
            "capability level must be not_applicable when the context is not learning-intensive");

    model::CaseEvaluation evaluation;
    evaluation.total = compute_total(record.profile);
    evaluation.band = classify_band(evaluation.total);
    evaluation.gate = evaluate_gate(record.profile);
    if (context.learning_intensive)
        evaluation.cap_res = evaluate_cap_res(record.capability, default_threshold(context));
    evaluation.learn_req = evaluate_learn_req(context, record.capability);
    evaluation.core = evaluate_core(record.predicates);
    evaluation.full = evaluate_full(evaluation.core, evaluation.learn_req, evaluation.gate);
    evaluation.warnings =
        cross_check_consistency(workflow, record, audit::audit_manifest(workflow.package));
    return evaluation;
}

}  // namespace ail2::engine

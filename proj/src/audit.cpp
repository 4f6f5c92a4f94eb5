#include "ail2/audit.hpp"

#include <algorithm>

namespace ail2::audit {

namespace {

void add(std::vector<AuditFinding>& findings, Severity severity, Element element,
         const char* code, std::string message) {
    findings.push_back(AuditFinding{severity, element, code, std::move(message)});
}

}  // namespace

std::string to_string(Severity severity) {
    switch (severity) {
        case Severity::error: return "error";
        case Severity::warning: return "warning";
        case Severity::info: return "info";
    }
    return "info";
}

std::string to_string(Element element) {
    switch (element) {
        case Element::A: return "A";
        case Element::P: return "P";
        case Element::V: return "V";
        case Element::F: return "F";
        case Element::R: return "R";
    }
    return "A";
}

bool AuditReport::has_code(const std::string& code) const {
    return std::any_of(findings.begin(), findings.end(),
                       [&](const AuditFinding& f) { return f.code == code; });
}

int AuditReport::error_count() const {
    return static_cast<int>(std::count_if(findings.begin(), findings.end(), [](const AuditFinding& f) {
        return f.severity == Severity::error;
    }));
}

AuditReport audit_manifest(const model::DeliverablePackageManifest& manifest) {
    std::vector<AuditFinding> f;

    if (!manifest.artifact) {
        add(f, Severity::error, Element::A, "A_ABSENT", "artifact element is marked absent");
    } else {
        std::string opaque_required;
        for (const auto& dep : manifest.artifact->runtime_dependencies) {
            if (dep.opaque_ai && dep.required_for_routine_use) {
                if (!opaque_required.empty()) opaque_required += ", ";
                opaque_required += "\"" + dep.name + "\"";
            }
        }
        if (!opaque_required.empty())
            add(f, Severity::warning, Element::A, "A_OPAQUE_RUNTIME",
                "routine use depends on opaque AI: " + opaque_required);
    }

    if (!manifest.provenance) {
        add(f, Severity::error, Element::P, "P_ABSENT", "provenance element is marked absent");
    } else {
        if (manifest.provenance->tool_uses.empty())
            add(f, Severity::error, Element::P, "P_NO_TOOLS",
                "provenance lists no AI tool uses");
        if (manifest.provenance->verification_steps.empty())
            add(f, Severity::error, Element::P, "P_NO_VERIFICATION",
                "provenance lists no verification steps");
        if (manifest.provenance->human_decisions.empty())
            add(f, Severity::warning, Element::P, "P_NO_HUMAN_DECISIONS",
                "provenance records no human accept/modify/reject decisions");
    }

    if (!manifest.validity) {
        add(f, Severity::error, Element::V, "V_ABSENT", "validity element is marked absent");
    } else {
        if (manifest.validity->exclusions.empty())
            add(f, Severity::error, Element::V, "V_NO_EXCLUSIONS",
                "validity statement lists no exclusions");
        if (manifest.validity->assumptions.empty())
            add(f, Severity::error, Element::V, "V_NO_ASSUMPTIONS",
                "validity statement lists no assumptions");
    }

    if (!manifest.failure) {
        add(f, Severity::error, Element::F, "F_ABSENT", "failure element is marked absent");
    } else {
        if (manifest.failure->triggers.empty())
            add(f, Severity::error, Element::F, "F_NO_TRIGGERS",
                "failure rule lists no escalation triggers");
        if (manifest.failure->escalation_route.empty())
            add(f, Severity::error, Element::F, "F_NO_ESCALATION",
                "failure rule names no escalation route");
    }

    if (!manifest.resource) {
        add(f, Severity::error, Element::R, "R_ABSENT", "resource element is marked absent");
    } else {
        if (!manifest.resource->routine_use_posture)
            add(f, Severity::error, Element::R, "R_NO_POSTURE",
                "resource note declares no routine-use posture");
        if (!manifest.resource->low_resource_fallback ||
            manifest.resource->low_resource_fallback->empty())
            add(f, Severity::info, Element::R, "R_NO_FALLBACK",
                "resource note documents no low-resource fallback");
    }

    AuditReport report;
    report.findings = std::move(f);
    report.structurally_complete = report.error_count() == 0;
    return report;
}

json to_canonical_json(const AuditReport& report) {
    json node = json::object();
    node["findings"] = json::array();
    for (const auto& finding : report.findings)
        node["findings"].push_back({{"severity", to_string(finding.severity)},
                                    {"element", to_string(finding.element)},
                                    {"code", finding.code},
                                    {"message", finding.message}});
    node["structurally_complete"] = report.structurally_complete;
    return node;
}

}  // namespace ail2::audit

#include "ail2/model.hpp"

#include <algorithm>

#include "json_reader.hpp"

namespace ail2::model {

namespace {

const char* const kDimensionKeys[7] = {"m1", "m2", "m3", "m4", "m5", "m6", "m7"};
const char* const kPredicateKeys[4] = {"art_res", "sov", "prot", "pack"};

}  // namespace

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(e.what());
    }
}

namespace {

ContextDeclaration read_context(const json& node, const std::string& path,
                                const ParseOptions& options) {
    detail::ObjectReader r(node, path, options);
    ContextDeclaration ctx;
    ctx.purpose = r.require_string("purpose");
    ctx.audience = r.require_string("audience");
    ctx.stakes = stakes_from_string(r.require_string("stakes"), r.child("stakes"));
    ctx.sensitivity_classes = r.require_string_list("sensitivity_classes");
    ctx.runtime_environment = r.require_string("runtime_environment");
    ctx.learning_intensive = r.require_bool("learning_intensive");
    ctx.capability_threshold = r.optional_int_in_range("capability_threshold", 0, 3);
    if (!ctx.learning_intensive && ctx.capability_threshold)
        throw SchemaError(r.child("capability_threshold"),
                          "must be absent when learning_intensive is false");
    r.finish();
    return ctx;
}

ArtifactSection read_artifact(const json& node, const std::string& path,
                              const ParseOptions& options) {
    detail::ObjectReader r(node, path, options);
    ArtifactSection a;
    a.description = r.require_string("description");
    a.artifact_kind = r.require_string("artifact_kind");
    const json& deps = detail::as_array(r.require("runtime_dependencies"),
                                        r.child("runtime_dependencies"));
    for (std::size_t i = 0; i < deps.size(); ++i) {
        detail::ObjectReader d(deps[i], detail::index_path(r.child("runtime_dependencies"), i),
                               options);
        RuntimeDependency dep;
        dep.name = d.require_string("name");
        dep.opaque_ai = d.require_bool("opaque_ai");
        dep.required_for_routine_use = d.require_bool("required_for_routine_use");
        d.finish();
        a.runtime_dependencies.push_back(std::move(dep));
    }
    r.finish();
    return a;
}

ProvenanceSection read_provenance(const json& node, const std::string& path,
                                  const ParseOptions& options) {
    detail::ObjectReader r(node, path, options);
    ProvenanceSection p;
    const json& tools = detail::as_array(r.require("tool_uses"), r.child("tool_uses"));
    for (std::size_t i = 0; i < tools.size(); ++i) {
        detail::ObjectReader t(tools[i], detail::index_path(r.child("tool_uses"), i), options);
        ToolUse use;
        use.tool = t.require_string("tool");
        use.purpose = t.require_string("purpose");
        use.data_exposure_class = t.require_string("data_exposure_class");
        use.protection = t.require_string("protection");
        t.finish();
        p.tool_uses.push_back(std::move(use));
    }
    const json& decisions =
        detail::as_array(r.require("human_decisions"), r.child("human_decisions"));
    for (std::size_t i = 0; i < decisions.size(); ++i) {
        detail::ObjectReader d(decisions[i], detail::index_path(r.child("human_decisions"), i),
                               options);
        HumanDecision decision;
        decision.action =
            decision_action_from_string(d.require_string("action"), d.child("action"));
        decision.subject = d.require_string("subject");
        d.finish();
        p.human_decisions.push_back(std::move(decision));
    }
    p.verification_steps = r.require_string_list("verification_steps");
    r.finish();
    return p;
}

ValiditySection read_validity(const json& node, const std::string& path,
                              const ParseOptions& options) {
    detail::ObjectReader r(node, path, options);
    ValiditySection v;
    v.intended_purpose = r.require_string("intended_purpose");
    v.assumptions = r.require_string_list("assumptions");
    v.user_population = r.require_string("user_population");
    v.exclusions = r.require_string_list("exclusions");
    v.exclusion_rationale = r.require_string("exclusion_rationale");
    r.finish();
    return v;
}

FailureSection read_failure(const json& node, const std::string& path,
                            const ParseOptions& options) {
    detail::ObjectReader r(node, path, options);
    FailureSection f;
    f.failure_modes = r.require_string_list("failure_modes");
    f.warning_signs = r.require_string_list("warning_signs");
    f.triggers = r.require_string_list("triggers");
    f.escalation_route = r.require_string("escalation_route");
    r.finish();
    return f;
}

ResourceSection read_resource(const json& node, const std::string& path,
                              const ParseOptions& options) {
    detail::ObjectReader r(node, path, options);
    ResourceSection res;
    if (const json* posture = r.optional("routine_use_posture"))
        res.routine_use_posture = posture_from_string(
            detail::as_string(*posture, r.child("routine_use_posture")),
            r.child("routine_use_posture"));
    res.access_requirements = r.require_string("access_requirements");
    res.cost_energy_note = r.require_string("cost_energy_note");
    res.low_resource_fallback = r.optional_string("low_resource_fallback");
    r.finish();
    return res;
}

// Reads one package element which must be either a populated object or the
// explicit string sentinel "absent".
template <typename Section, typename Reader>
std::optional<Section> read_element(detail::ObjectReader& package, const std::string& key,
                                    const ParseOptions& options, Reader reader) {
    const json& node = package.require(key);
    if (node.is_string()) {
        if (node.get<std::string>() == "absent") return std::nullopt;
        throw SchemaError(package.child(key),
                          "must be a populated object or the string \"absent\"");
    }
    if (!node.is_object())
        throw SchemaError(package.child(key),
                          "must be a populated object or the string \"absent\"");
    return reader(node, package.child(key), options);
}

DeliverablePackageManifest read_package(const json& node, const std::string& path,
                                        const ParseOptions& options) {
    detail::ObjectReader r(node, path, options);
    DeliverablePackageManifest m;
    m.artifact = read_element<ArtifactSection>(r, "artifact", options, read_artifact);
    m.provenance = read_element<ProvenanceSection>(r, "provenance", options, read_provenance);
    m.validity = read_element<ValiditySection>(r, "validity", options, read_validity);
    m.failure = read_element<FailureSection>(r, "failure", options, read_failure);
    m.resource = read_element<ResourceSection>(r, "resource", options, read_resource);
    r.finish();
    return m;
}

MaturityProfile read_profile(const json& node, const std::string& path,
                             const ParseOptions& options) {
    detail::ObjectReader r(node, path, options);
    MaturityProfile profile;
    for (int i = 0; i < 7; ++i)
        profile.values[static_cast<std::size_t>(i)] =
            r.require_int_in_range(kDimensionKeys[i], 0, 4);
    r.finish();
    return profile;
}

CapabilityEvidence read_capability(const json& node, const std::string& path,
                                   const ParseOptions& options) {
    detail::ObjectReader r(node, path, options);
    CapabilityEvidence cap;
    const json& level = r.require("level");
    if (level.is_string()) {
        if (level.get<std::string>() != "not_applicable")
            throw SchemaError(r.child("level"),
                              "must be an integer in [0,3] or \"not_applicable\"");
    } else {
        cap.level = detail::as_int_in_range(level, r.child("level"), 0, 3);
    }
    cap.modality_note = r.optional_string("modality_note");
    r.finish();
    return cap;
}

PredicateAssertions read_predicates(const json& node, const std::string& path,
                                    const ParseOptions& options) {
    detail::ObjectReader r(node, path, options);
    PredicateAssertions p;
    p.art_res = r.require_bool("art_res");
    p.sov = r.require_bool("sov");
    p.prot = r.require_bool("prot");
    p.pack = r.require_bool("pack");
    const json& just = r.require("justifications");
    detail::ObjectReader j(just, r.child("justifications"), options);
    for (auto it = just.begin(); it != just.end(); ++it) {
        bool known = std::any_of(std::begin(kPredicateKeys), std::end(kPredicateKeys),
                                 [&](const char* k) { return it.key() == k; });
        if (!known)
            throw SchemaError(j.child(it.key()),
                              "justification keys must be one of art_res, sov, prot, pack");
        p.justifications[it.key()] = detail::as_string(it.value(), j.child(it.key()));
    }
    const bool asserted[4] = {p.art_res, p.sov, p.prot, p.pack};
    for (int i = 0; i < 4; ++i) {
        if (!asserted[i]) continue;
        auto found = p.justifications.find(kPredicateKeys[i]);
        if (found == p.justifications.end() || found->second.empty())
            throw SchemaError(r.child(kPredicateKeys[i]),
                              "asserted predicate requires a nonempty justification");
    }
    r.finish();
    return p;
}

std::map<std::string, std::string> read_dimension_notes(const json& node,
                                                        const std::string& path) {
    if (!node.is_object()) throw SchemaError(path, "expected an object");
    std::map<std::string, std::string> notes;
    for (auto it = node.begin(); it != node.end(); ++it) {
        bool known = std::any_of(std::begin(kDimensionKeys), std::end(kDimensionKeys),
                                 [&](const char* k) { return it.key() == k; });
        if (!known)
            throw SchemaError(detail::join_path(path, it.key()),
                              "dimension note keys must be m1..m7");
        notes[it.key()] = detail::as_string(it.value(), detail::join_path(path, it.key()));
    }
    return notes;
}

}  // namespace

std::string to_string(Stakes value) {
    switch (value) {
        case Stakes::formative: return "formative";
        case Stakes::summative: return "summative";
        case Stakes::operational: return "operational";
        case Stakes::research: return "research";
    }
    return "formative";
}

std::string to_string(DecisionAction value) {
    switch (value) {
        case DecisionAction::accepted: return "accepted";
        case DecisionAction::modified: return "modified";
        case DecisionAction::rejected: return "rejected";
    }
    return "accepted";
}

std::string to_string(RoutinePosture value) {
    switch (value) {
        case RoutinePosture::local: return "local";
        case RoutinePosture::cloud: return "cloud";
        case RoutinePosture::hybrid: return "hybrid";
    }
    return "local";
}

std::string to_string(BandLabel value) {
    switch (value) {
        case BandLabel::not_in_practice: return "not_in_practice";
        case BandLabel::inspired: return "inspired";
        case BandLabel::aligned: return "aligned";
        case BandLabel::strong: return "strong";
    }
    return "not_in_practice";
}

Stakes stakes_from_string(const std::string& token, const std::string& path) {
    if (token == "formative") return Stakes::formative;
    if (token == "summative") return Stakes::summative;
    if (token == "operational") return Stakes::operational;
    if (token == "research") return Stakes::research;
    throw SchemaError(path, "must be one of formative, summative, operational, research");
}

DecisionAction decision_action_from_string(const std::string& token, const std::string& path) {
    if (token == "accepted") return DecisionAction::accepted;
    if (token == "modified") return DecisionAction::modified;
    if (token == "rejected") return DecisionAction::rejected;
    throw SchemaError(path, "must be one of accepted, modified, rejected");
}

RoutinePosture posture_from_string(const std::string& token, const std::string& path) {
    if (token == "local") return RoutinePosture::local;
    if (token == "cloud") return RoutinePosture::cloud;
    if (token == "hybrid") return RoutinePosture::hybrid;
    throw SchemaError(path, "must be one of local, cloud, hybrid");
}

BandLabel band_from_string(const std::string& token, const std::string& path) {
    if (token == "not_in_practice") return BandLabel::not_in_practice;
    if (token == "inspired") return BandLabel::inspired;
    if (token == "aligned") return BandLabel::aligned;
    if (token == "strong") return BandLabel::strong;
    throw SchemaError(path, "must be one of not_in_practice, inspired, aligned, strong");
}

WorkflowDescriptor workflow_from_json(const json& document, const ParseOptions& options) {
    detail::ObjectReader r(document, "", options, /*top_level=*/true);
    WorkflowDescriptor w;
    w.id = r.require_nonempty_string("id");
    w.task = r.require_string("task");
    const json& humans = detail::as_array(r.require("humans"), r.child("humans"));
    if (humans.empty()) throw SchemaError(r.child("humans"), "at least one human is required");
    for (std::size_t i = 0; i < humans.size(); ++i) {
        detail::ObjectReader h(humans[i], detail::index_path(r.child("humans"), i), options);
        HumanActor actor;
        actor.name_or_role = h.require_nonempty_string("name_or_role");
        actor.release_authority = h.require_bool("release_authority");
        h.finish();
        w.humans.push_back(std::move(actor));
    }
    const json& components =
        detail::as_array(r.require("opaque_components"), r.child("opaque_components"));
    for (std::size_t i = 0; i < components.size(); ++i) {
        detail::ObjectReader c(components[i],
                               detail::index_path(r.child("opaque_components"), i), options);
        OpaqueComponent component;
        component.name = c.require_string("name");
        component.role = c.require_string("role");
        component.version_or_date = c.optional_string("version_or_date");
        c.finish();
        w.opaque_components.push_back(std::move(component));
    }
    w.source_classes = r.require_string_list("source_classes");
    w.context = read_context(r.require("context"), r.child("context"), options);
    w.package = read_package(r.require("package"), r.child("package"), options);
    w.evidence_modality = r.optional_string("evidence_modality");
    r.finish();
    return w;
}

AssessmentRecord assessment_from_json(const json& document, const ParseOptions& options) {
    detail::ObjectReader r(document, "", options, /*top_level=*/true);
    AssessmentRecord record;
    record.rater_id = r.require_nonempty_string("rater_id");
    record.workflow_id = r.require_nonempty_string("workflow_id");
    record.profile = read_profile(r.require("profile"), r.child("profile"), options);
    record.capability = read_capability(r.require("capability"), r.child("capability"), options);
    record.predicates = read_predicates(r.require("predicates"), r.child("predicates"), options);
    if (const json* notes = r.optional("dimension_notes"))
        record.dimension_notes = read_dimension_notes(*notes, r.child("dimension_notes"));
    r.finish();
    return record;
}

WorkflowDescriptor parse_workflow(const std::string& text, const ParseOptions& options) {
    return workflow_from_json(parse_json_text(text), options);
}

AssessmentRecord parse_assessment(const std::string& text, const ParseOptions& options) {
    return assessment_from_json(parse_json_text(text), options);
}

namespace {

json context_to_json(const ContextDeclaration& ctx) {
    json node = json::object();
    node["purpose"] = ctx.purpose;
    node["audience"] = ctx.audience;
    node["stakes"] = to_string(ctx.stakes);
    node["sensitivity_classes"] = ctx.sensitivity_classes;
    node["runtime_environment"] = ctx.runtime_environment;
    node["learning_intensive"] = ctx.learning_intensive;
    if (ctx.capability_threshold) node["capability_threshold"] = *ctx.capability_threshold;
    return node;
}

json package_to_json(const DeliverablePackageManifest& m) {
    json node = json::object();
    if (m.artifact) {
        json a = json::object();
        a["description"] = m.artifact->description;
        a["artifact_kind"] = m.artifact->artifact_kind;
        a["runtime_dependencies"] = json::array();
        for (const auto& dep : m.artifact->runtime_dependencies)
            a["runtime_dependencies"].push_back({{"name", dep.name},
                                                 {"opaque_ai", dep.opaque_ai},
                                                 {"required_for_routine_use",
                                                  dep.required_for_routine_use}});
        node["artifact"] = std::move(a);
    } else {
        node["artifact"] = "absent";
    }
    if (m.provenance) {
        json p = json::object();
        p["tool_uses"] = json::array();
        for (const auto& use : m.provenance->tool_uses)
            p["tool_uses"].push_back({{"tool", use.tool},
                                      {"purpose", use.purpose},
                                      {"data_exposure_class", use.data_exposure_class},
                                      {"protection", use.protection}});
        p["human_decisions"] = json::array();
        for (const auto& decision : m.provenance->human_decisions)
            p["human_decisions"].push_back(
                {{"action", to_string(decision.action)}, {"subject", decision.subject}});
        p["verification_steps"] = m.provenance->verification_steps;
        node["provenance"] = std::move(p);
    } else {
        node["provenance"] = "absent";
    }
    if (m.validity) {
        json v = json::object();
        v["intended_purpose"] = m.validity->intended_purpose;
        v["assumptions"] = m.validity->assumptions;
        v["user_population"] = m.validity->user_population;
        v["exclusions"] = m.validity->exclusions;
        v["exclusion_rationale"] = m.validity->exclusion_rationale;
        node["validity"] = std::move(v);
    } else {
        node["validity"] = "absent";
    }
    if (m.failure) {
        json f = json::object();
        f["failure_modes"] = m.failure->failure_modes;
        f["warning_signs"] = m.failure->warning_signs;
        f["triggers"] = m.failure->triggers;
        f["escalation_route"] = m.failure->escalation_route;
        node["failure"] = std::move(f);
    } else {
        node["failure"] = "absent";
    }
    if (m.resource) {
        json res = json::object();
        if (m.resource->routine_use_posture)
            res["routine_use_posture"] = to_string(*m.resource->routine_use_posture);
        res["access_requirements"] = m.resource->access_requirements;
        res["cost_energy_note"] = m.resource->cost_energy_note;
        if (m.resource->low_resource_fallback)
            res["low_resource_fallback"] = *m.resource->low_resource_fallback;
        node["resource"] = std::move(res);
    } else {
        node["resource"] = "absent";
    }
    return node;
}

}  // namespace

json to_canonical_json(const WorkflowDescriptor& workflow) {
    json node = json::object();
    node["id"] = workflow.id;
    node["task"] = workflow.task;
    node["humans"] = json::array();
    for (const auto& actor : workflow.humans)
        node["humans"].push_back({{"name_or_role", actor.name_or_role},
                                  {"release_authority", actor.release_authority}});
    node["opaque_components"] = json::array();
    for (const auto& component : workflow.opaque_components) {
        json c = json::object();
        c["name"] = component.name;
        c["role"] = component.role;
        if (component.version_or_date) c["version_or_date"] = *component.version_or_date;
        node["opaque_components"].push_back(std::move(c));
    }
    node["source_classes"] = workflow.source_classes;
    node["context"] = context_to_json(workflow.context);
    node["package"] = package_to_json(workflow.package);
    if (workflow.evidence_modality) node["evidence_modality"] = *workflow.evidence_modality;
    return node;
}

json to_canonical_json(const MaturityProfile& profile) {
    json node = json::object();
    for (int i = 0; i < 7; ++i) node[kDimensionKeys[i]] = profile.values[static_cast<std::size_t>(i)];
    return node;
}

json to_canonical_json(const AssessmentRecord& record) {
    json node = json::object();
    node["rater_id"] = record.rater_id;
    node["workflow_id"] = record.workflow_id;
    node["profile"] = to_canonical_json(record.profile);
    json cap = json::object();
    if (record.capability.level)
        cap["level"] = *record.capability.level;
    else
        cap["level"] = "not_applicable";
    if (record.capability.modality_note) cap["modality_note"] = *record.capability.modality_note;
    node["capability"] = std::move(cap);
    json predicates = json::object();
    predicates["art_res"] = record.predicates.art_res;
    predicates["sov"] = record.predicates.sov;
    predicates["prot"] = record.predicates.prot;
    predicates["pack"] = record.predicates.pack;
    predicates["justifications"] = record.predicates.justifications;
    node["predicates"] = std::move(predicates);
    if (!record.dimension_notes.empty()) node["dimension_notes"] = record.dimension_notes;
    return node;
}

json to_canonical_json(const CaseEvaluation& evaluation) {
    json node = json::object();
    node["total"] = evaluation.total;
    node["band"] = to_string(evaluation.band);
    node["gate"] = evaluation.gate;
    node["learn_req"] = evaluation.learn_req;
    if (evaluation.cap_res)
        node["cap_res"] = *evaluation.cap_res;
    else
        node["cap_res"] = "not_applicable";
    node["core"] = evaluation.core;
    node["full"] = evaluation.full;
    node["warnings"] = json::array();
    for (const auto& warning : evaluation.warnings)
        node["warnings"].push_back({{"code", warning.code}, {"message", warning.message}});
    return node;
}

std::string serialize(const json& value) { return value.dump(2) + "\n"; }

}  // namespace ail2::model

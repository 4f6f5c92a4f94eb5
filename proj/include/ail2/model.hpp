#pragma once
// Domain types for AI to Learn 2.0 workflows, deliverable packages, rater
// assessments, and computed evaluations, plus the canonical JSON encoding
// used by .ail2w.json (workflow) and .ail2a.json (assessment) files.
//
// All values are immutable after construction and every structural invariant
// is enforced at parse time; parsing is a pure function of the input bytes.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ail2/errors.hpp"

namespace ail2 {
// Canonical JSON value. The ordered flavor keeps document order stable so
// serialization is byte-deterministic.
using json = nlohmann::ordered_json;
}  // namespace ail2

namespace ail2::model {

enum class Stakes { formative, summative, operational, research };

// The declared context of use. `capability_threshold` may only be set for
// learning-intensive contexts; when unset the compliance engine derives a
// default from the stakes.
struct ContextDeclaration {
    std::string purpose;
    std::string audience;
    Stakes stakes = Stakes::formative;
    std::vector<std::string> sensitivity_classes;
    std::string runtime_environment;
    bool learning_intensive = false;
    std::optional<int> capability_threshold;  // in [0,3]

    bool operator==(const ContextDeclaration&) const = default;
};

struct HumanActor {
    std::string name_or_role;
    bool release_authority = false;

    bool operator==(const HumanActor&) const = default;
};

struct OpaqueComponent {
    std::string name;
    std::string role;
    std::optional<std::string> version_or_date;

    bool operator==(const OpaqueComponent&) const = default;
};

struct RuntimeDependency {
    std::string name;
    bool opaque_ai = false;
    bool required_for_routine_use = false;

    bool operator==(const RuntimeDependency&) const = default;
};

struct ArtifactSection {
    std::string description;
    std::string artifact_kind;
    std::vector<RuntimeDependency> runtime_dependencies;

    bool operator==(const ArtifactSection&) const = default;
};

enum class DecisionAction { accepted, modified, rejected };

struct ToolUse {
    std::string tool;
    std::string purpose;
    std::string data_exposure_class;
    std::string protection;

    bool operator==(const ToolUse&) const = default;
};

struct HumanDecision {
    DecisionAction action = DecisionAction::accepted;
    std::string subject;

    bool operator==(const HumanDecision&) const = default;
};

struct ProvenanceSection {
    std::vector<ToolUse> tool_uses;
    std::vector<HumanDecision> human_decisions;
    std::vector<std::string> verification_steps;

    bool operator==(const ProvenanceSection&) const = default;
};

struct ValiditySection {
    std::string intended_purpose;
    std::vector<std::string> assumptions;
    std::string user_population;
    std::vector<std::string> exclusions;
    std::string exclusion_rationale;

    bool operator==(const ValiditySection&) const = default;
};

struct FailureSection {
    std::vector<std::string> failure_modes;
    std::vector<std::string> warning_signs;
    std::vector<std::string> triggers;
    std::string escalation_route;

    bool operator==(const FailureSection&) const = default;
};

enum class RoutinePosture { local, cloud, hybrid };

struct ResourceSection {
    // An undeclared posture parses but is reported by the package audit.
    std::optional<RoutinePosture> routine_use_posture;
    std::string access_requirements;
    std::string cost_energy_note;
    std::optional<std::string> low_resource_fallback;

    bool operator==(const ResourceSection&) const = default;
};

// The five-element deliverable package. Each element is either populated or
// explicitly marked absent; in the canonical encoding an absent element is
// written as the string sentinel "absent", and silently omitting a key is a
// schema error.
struct DeliverablePackageManifest {
    std::optional<ArtifactSection> artifact;
    std::optional<ProvenanceSection> provenance;
    std::optional<ValiditySection> validity;
    std::optional<FailureSection> failure;
    std::optional<ResourceSection> resource;

    bool operator==(const DeliverablePackageManifest&) const = default;
};

struct WorkflowDescriptor {
    std::string id;
    std::string task;
    std::vector<HumanActor> humans;  // at least one
    std::vector<OpaqueComponent> opaque_components;
    std::vector<std::string> source_classes;
    ContextDeclaration context;
    DeliverablePackageManifest package;
    std::optional<std::string> evidence_modality;

    bool operator==(const WorkflowDescriptor&) const = default;
};

// Seven ordinal maturity scores, each in [0,4]. values[0] is m1, values[6] m7.
struct MaturityProfile {
    std::array<int, 7> values{};

    bool operator==(const MaturityProfile&) const = default;
};

// Capability ladder level in [0,3]; an empty optional encodes the
// not_applicable sentinel used for non-learning-intensive contexts.
struct CapabilityEvidence {
    std::optional<int> level;
    std::optional<std::string> modality_note;

    bool operator==(const CapabilityEvidence&) const = default;
};

// The four rater-asserted compliance predicates. Every predicate asserted
// true must carry a nonempty justification.
struct PredicateAssertions {
    bool art_res = false;
    bool sov = false;
    bool prot = false;
    bool pack = false;
    std::map<std::string, std::string> justifications;

    bool operator==(const PredicateAssertions&) const = default;
};

struct AssessmentRecord {
    std::string rater_id;
    std::string workflow_id;
    MaturityProfile profile;
    CapabilityEvidence capability;
    PredicateAssertions predicates;
    std::map<std::string, std::string> dimension_notes;  // keyed m1..m7

    bool operator==(const AssessmentRecord&) const = default;
};

// Interpretation band over the total score: 0-9, 10-16, 17-22, 23-28.
enum class BandLabel { not_in_practice, inspired, aligned, strong };

struct Warning {
    std::string code;
    std::string message;

    bool operator==(const Warning&) const = default;
};

// Computed outputs for one assessment of one workflow. `cap_res` is empty
// when the context is not learning-intensive (rendered as not_applicable).
struct CaseEvaluation {
    int total = 0;
    BandLabel band = BandLabel::not_in_practice;
    bool gate = false;
    bool learn_req = false;
    std::optional<bool> cap_res;
    bool core = false;
    bool full = false;
    std::vector<Warning> warnings;

    bool operator==(const CaseEvaluation&) const = default;
};

struct ParseOptions {
    // When set, unknown fields outside the reserved top-level "x_extensions"
    // key are schema errors; otherwise they are ignored.
    bool strict = true;
};

// Enum token conversions used by the canonical encoding.
std::string to_string(Stakes value);
std::string to_string(DecisionAction value);
std::string to_string(RoutinePosture value);
std::string to_string(BandLabel value);
Stakes stakes_from_string(const std::string& token, const std::string& path);
DecisionAction decision_action_from_string(const std::string& token, const std::string& path);
RoutinePosture posture_from_string(const std::string& token, const std::string& path);
BandLabel band_from_string(const std::string& token, const std::string& path);

// Parses raw bytes into a JSON value; throws SyntaxError on malformed input.
json parse_json_text(const std::string& text);

// Parsing. Throws SyntaxError for malformed JSON and SchemaError (naming the
// offending field path) for any structural or invariant violation.
WorkflowDescriptor parse_workflow(const std::string& text, const ParseOptions& options = {});
AssessmentRecord parse_assessment(const std::string& text, const ParseOptions& options = {});
WorkflowDescriptor workflow_from_json(const json& document, const ParseOptions& options = {});
AssessmentRecord assessment_from_json(const json& document, const ParseOptions& options = {});

// Canonical serialization: fixed field order, round-trips through parse.
json to_canonical_json(const WorkflowDescriptor& workflow);
json to_canonical_json(const AssessmentRecord& record);
json to_canonical_json(const MaturityProfile& profile);
json to_canonical_json(const CaseEvaluation& evaluation);

// Canonical text form: 2-space indent plus trailing newline.
std::string serialize(const json& value);

}  // namespace ail2::model

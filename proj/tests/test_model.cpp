#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "ail2/corpus.hpp"
#include "ail2/model.hpp"

using namespace ail2;

namespace {

const char* minimal_workflow_json() {
    return R"({
      "id": "W1",
      "task": "draft a summary",
      "humans": [{"name_or_role": "owner", "release_authority": true}],
      "opaque_components": [],
      "source_classes": ["notes"],
      "context": {
        "purpose": "practice",
        "audience": "self",
        "stakes": "formative",
        "sensitivity_classes": [],
        "runtime_environment": "laptop",
        "learning_intensive": true
      },
      "package": {
        "artifact": {"description": "summary", "artifact_kind": "text", "runtime_dependencies": []},
        "provenance": "absent",
        "validity": "absent",
        "failure": "absent",
        "resource": "absent"
      }
    })";
}

std::string corpus_workflow_text(const std::string& id) {
    for (const auto& c : corpus::load_corpus())
        if (c.id == id) return model::serialize(model::to_canonical_json(c.workflow));
    FAIL(("unknown corpus id " + id));
    return {};
}

std::string corpus_assessment_text(const std::string& id) {
    for (const auto& c : corpus::load_corpus())
        if (c.id == id) return model::serialize(model::to_canonical_json(c.assessment));
    FAIL(("unknown corpus id " + id));
    return {};
}

// Collects the dotted path of every leaf value in a document, mirroring the
// parser's error-path format.
void collect_leaf_paths(const json& node, const std::string& path,
                        std::vector<std::pair<std::string, json::json_pointer>>& out,
                        const json::json_pointer& pointer) {
    if (node.is_object()) {
        for (auto it = node.begin(); it != node.end(); ++it) {
            if (path.empty() && it.key() == "x_extensions") continue;
            collect_leaf_paths(it.value(), path.empty() ? it.key() : path + "." + it.key(), out,
                               pointer / it.key());
        }
    } else if (node.is_array()) {
        for (std::size_t i = 0; i < node.size(); ++i)
            collect_leaf_paths(node[i], path + "[" + std::to_string(i) + "]", out,
                               pointer / i);
    } else {
        out.emplace_back(path, pointer);
    }
}

// Object keys (with dotted paths) for the removal walker.
void collect_object_keys(const json& node, const std::string& path,
                         std::vector<std::pair<std::string, json::json_pointer>>& out,
                         const json::json_pointer& pointer) {
    if (node.is_object()) {
        for (auto it = node.begin(); it != node.end(); ++it) {
            const std::string child = path.empty() ? it.key() : path + "." + it.key();
            out.emplace_back(child, pointer / it.key());
            collect_object_keys(it.value(), child, out, pointer / it.key());
        }
    } else if (node.is_array()) {
        for (std::size_t i = 0; i < node.size(); ++i)
            collect_object_keys(node[i], path + "[" + std::to_string(i) + "]", out, pointer / i);
    }
}

bool ends_with(const std::string& value, const std::string& suffix) {
    return value.size() >= suffix.size() &&
           value.compare(value.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool starts_with(const std::string& value, const std::string& prefix) {
    return value.compare(0, prefix.size(), prefix) == 0;
}

}  // namespace

TEST_CASE("workflow parses with optional threshold left unset") {
    const auto workflow = model::parse_workflow(minimal_workflow_json());
    CHECK(workflow.id == "W1");
    CHECK(workflow.context.stakes == model::Stakes::formative);
    CHECK(workflow.context.learning_intensive);
    CHECK_FALSE(workflow.context.capability_threshold.has_value());
    CHECK_FALSE(workflow.package.provenance.has_value());
    CHECK(workflow.package.artifact.has_value());
}

TEST_CASE("capability_threshold on a non-learning-intensive context is rejected") {
    json doc = model::parse_json_text(minimal_workflow_json());
    doc["context"]["learning_intensive"] = false;
    doc["context"]["capability_threshold"] = 3;
    try {
        model::workflow_from_json(doc);
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(e.path() == "context.capability_threshold");
    }
}

TEST_CASE("C5 fixture round-trips through parse and serialize") {
    const std::string text = corpus_workflow_text("C5");
    const auto first = model::parse_workflow(text);
    const auto second = model::parse_workflow(model::serialize(model::to_canonical_json(first)));
    CHECK(first == second);
    CHECK(first.package.artifact.has_value());
    CHECK(first.package.provenance.has_value());
    CHECK(first.package.validity.has_value());
    CHECK(first.package.failure.has_value());
    CHECK(first.package.resource.has_value());
}

TEST_CASE("every corpus document round-trips to a structurally equal value") {
    for (const auto& c : corpus::load_corpus()) {
        const auto workflow =
            model::parse_workflow(model::serialize(model::to_canonical_json(c.workflow)));
        CHECK(workflow == c.workflow);
        const auto record =
            model::parse_assessment(model::serialize(model::to_canonical_json(c.assessment)));
        CHECK(record == c.assessment);
    }
}

TEST_CASE("assessment with out-of-range score names the dimension path") {
    json doc = model::parse_json_text(corpus_assessment_text("C1"));
    doc["profile"]["m4"] = 5;
    try {
        model::assessment_from_json(doc);
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(e.path() == "profile.m4");
    }

    doc["profile"]["m4"] = -1;
    CHECK_THROWS_AS(model::assessment_from_json(doc), SchemaError);
    doc["profile"]["m4"] = 2.5;
    CHECK_THROWS_AS(model::assessment_from_json(doc), SchemaError);
}

TEST_CASE("C1 assessment fixture parses to the published profile") {
    const auto record = model::parse_assessment(corpus_assessment_text("C1"));
    CHECK(record.profile.values == std::array<int, 7>{1, 1, 0, 0, 1, 2, 1});
    CHECK(record.capability.level == 0);
    CHECK_FALSE(record.predicates.art_res);
    CHECK_FALSE(record.predicates.sov);
    CHECK_FALSE(record.predicates.prot);
    CHECK_FALSE(record.predicates.pack);
}

TEST_CASE("asserted predicate without justification names the predicate path") {
    json doc = model::parse_json_text(corpus_assessment_text("C5"));
    doc["predicates"]["justifications"].erase("art_res");
    try {
        model::assessment_from_json(doc);
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(e.path() == "predicates.art_res");
    }

    // An empty justification is as bad as a missing one.
    doc = model::parse_json_text(corpus_assessment_text("C5"));
    doc["predicates"]["justifications"]["art_res"] = "";
    CHECK_THROWS_AS(model::assessment_from_json(doc), SchemaError);

    // Unasserted predicates need no justification.
    doc = model::parse_json_text(corpus_assessment_text("C1"));
    doc["predicates"]["justifications"].erase("art_res");
    CHECK_NOTHROW(model::assessment_from_json(doc));
}

TEST_CASE("capability level accepts the not_applicable sentinel only") {
    json doc = model::parse_json_text(corpus_assessment_text("C3"));
    CHECK_FALSE(model::assessment_from_json(doc).capability.level.has_value());
    doc["capability"]["level"] = "unknown";
    CHECK_THROWS_AS(model::assessment_from_json(doc), SchemaError);
    doc["capability"]["level"] = 4;
    CHECK_THROWS_AS(model::assessment_from_json(doc), SchemaError);
}

TEST_CASE("package elements must be present, populated or explicitly absent") {
    json doc = model::parse_json_text(minimal_workflow_json());

    json no_key = doc;
    no_key["package"].erase("validity");
    try {
        model::workflow_from_json(no_key);
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(e.path() == "package.validity");
    }

    json null_value = doc;
    null_value["package"]["validity"] = nullptr;
    CHECK_THROWS_AS(model::workflow_from_json(null_value), SchemaError);

    json wrong_sentinel = doc;
    wrong_sentinel["package"]["validity"] = "missing";
    CHECK_THROWS_AS(model::workflow_from_json(wrong_sentinel), SchemaError);
}

TEST_CASE("workflows require at least one human") {
    json doc = model::parse_json_text(minimal_workflow_json());
    doc["humans"] = json::array();
    try {
        model::workflow_from_json(doc);
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(e.path() == "humans");
    }
}

TEST_CASE("strict mode rejects unknown fields; x_extensions is reserved") {
    json doc = model::parse_json_text(minimal_workflow_json());
    doc["zzz"] = 1;
    try {
        model::workflow_from_json(doc);
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(e.path() == "zzz");
    }
    CHECK_NOTHROW(model::workflow_from_json(doc, model::ParseOptions{false}));

    json extended = model::parse_json_text(minimal_workflow_json());
    extended["x_extensions"] = {{"anything", {1, 2, 3}}};
    CHECK_NOTHROW(model::workflow_from_json(extended));

    json nested = model::parse_json_text(minimal_workflow_json());
    nested["context"]["zzz"] = true;
    try {
        model::workflow_from_json(nested);
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(e.path() == "context.zzz");
    }
    CHECK_NOTHROW(model::workflow_from_json(nested, model::ParseOptions{false}));
}

TEST_CASE("parsing is pure: same bytes, same value, same error message") {
    const std::string text = corpus_workflow_text("C7");
    CHECK(model::parse_workflow(text) == model::parse_workflow(text));

    const std::string broken = "{\"id\": ";
    std::string first_message;
    std::string second_message;
    try {
        model::parse_workflow(broken);
    } catch (const ParseError& e) {
        first_message = e.what();
    }
    try {
        model::parse_workflow(broken);
    } catch (const ParseError& e) {
        second_message = e.what();
    }
    CHECK_FALSE(first_message.empty());
    CHECK(first_message == second_message);
}

TEST_CASE("malformed bytes raise a syntax error") {
    CHECK_THROWS_AS(model::parse_workflow("not json"), SyntaxError);
    CHECK_THROWS_AS(model::parse_assessment("[1,2"), SyntaxError);
}

TEST_CASE("type-mutating any leaf yields a schema error naming its path") {
    for (const char* id : {"C1", "C5"}) {
        const json base = model::parse_json_text(corpus_workflow_text(id));
        std::vector<std::pair<std::string, json::json_pointer>> leaves;
        collect_leaf_paths(base, "", leaves, json::json_pointer());
        CHECK(leaves.size() > 20);
        for (const auto& [path, pointer] : leaves) {
            json mutated = base;
            mutated[pointer] = json::object();  // never a valid leaf type
            try {
                model::workflow_from_json(mutated);
                FAIL(("mutation at " + path + " was not rejected"));
            } catch (const SchemaError& e) {
                // The reported path is the mutated leaf, or a field inside it
                // when the leaf was an "absent" sentinel replaced by an object.
                const bool named = e.path() == path || starts_with(e.path(), path + ".");
                if (!named) FAIL(("mutation at " + path + " reported " + e.path()));
                CHECK(named);
            }
        }
    }
}

TEST_CASE("removing any required field yields a schema error naming its path") {
    // Optional fields may be removed freely; everything else must be flagged.
    const std::vector<std::string> optional_suffixes = {
        "capability_threshold", "version_or_date",       "evidence_modality",
        "routine_use_posture",  "low_resource_fallback", "modality_note",
        "dimension_notes",      "x_extensions"};

    auto is_optional = [&](const std::string& path) {
        for (const auto& suffix : optional_suffixes)
            if (ends_with(path, suffix)) return true;
        // Individual dimension notes and justifications of unasserted
        // predicates are also removable.
        return path.find("dimension_notes.") != std::string::npos;
    };

    const json base = model::parse_json_text(corpus_workflow_text("C4"));
    std::vector<std::pair<std::string, json::json_pointer>> keys;
    collect_object_keys(base, "", keys, json::json_pointer());
    CHECK(keys.size() > 30);
    for (const auto& [path, pointer] : keys) {
        json mutated = base;
        mutated[pointer.parent_pointer()].erase(pointer.back());
        if (is_optional(path)) {
            CHECK_NOTHROW(model::workflow_from_json(mutated));
            continue;
        }
        try {
            model::workflow_from_json(mutated);
            FAIL(("removal of " + path + " was not rejected"));
        } catch (const SchemaError& e) {
            CHECK(e.path() == path);
        }
    }
}

TEST_CASE("serialized workflows omit unset optional fields") {
    const auto workflow = model::parse_workflow(minimal_workflow_json());
    const json node = model::to_canonical_json(workflow);
    CHECK_FALSE(node.contains("evidence_modality"));
    CHECK_FALSE(node["context"].contains("capability_threshold"));
}

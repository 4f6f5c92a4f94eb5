#include <doctest.h>

#include <set>

#include "ail2/corpus.hpp"
#include "ail2/engine.hpp"

using namespace ail2;

namespace {

corpus::CorpusCase find_case(const std::string& id) {
    for (const auto& c : corpus::load_corpus())
        if (c.id == id) return c;
    FAIL(("unknown corpus id " + id));
    return {};
}

bool has_mismatch(const corpus::CaseResult& result, const std::string& field) {
    for (const auto& m : result.mismatches)
        if (m.field == field) return true;
    return false;
}

}  // namespace

TEST_CASE("the corpus loads exactly seven cases with ids C1..C7") {
    const auto& cases = corpus::load_corpus();
    REQUIRE(cases.size() == 7);
    for (int i = 0; i < 7; ++i) CHECK(cases[static_cast<std::size_t>(i)].id == "C" + std::to_string(i + 1));

    std::set<std::string> ids;
    for (const auto& c : cases) {
        ids.insert(c.id);
        CHECK(c.workflow.id == c.id);
        CHECK(c.assessment.workflow_id == c.id);
        CHECK_FALSE(c.title.empty());
    }
    CHECK(ids.size() == 7);
}

TEST_CASE("C6 is learning-intensive with threshold 3 and capability 3") {
    const auto c6 = find_case("C6");
    CHECK(c6.workflow.context.learning_intensive);
    CHECK(engine::resolve_threshold(c6.workflow.context) == 3);
    CHECK(c6.assessment.capability.level == 3);
}

TEST_CASE("C3 and C4 share the workflow family but differ on validity, failure and m4") {
    const auto c3 = find_case("C3");
    const auto c4 = find_case("C4");
    CHECK(c3.workflow.context.stakes == c4.workflow.context.stakes);
    CHECK(c3.workflow.context.learning_intensive == c4.workflow.context.learning_intensive);
    CHECK_FALSE(c3.workflow.package.validity.has_value());
    CHECK_FALSE(c3.workflow.package.failure.has_value());
    CHECK(c4.workflow.package.validity.has_value());
    CHECK(c4.workflow.package.failure.has_value());
    CHECK(c3.assessment.profile.values[3] == 1);
    CHECK(c4.assessment.profile.values[3] == 4);
}

TEST_CASE("loading twice yields structurally equal fixtures") {
    const auto& first = corpus::load_corpus();
    const auto& second = corpus::load_corpus();
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].workflow == second[i].workflow);
        CHECK(first[i].assessment == second[i].assessment);
    }
}

TEST_CASE("the unmodified corpus verifies 7/7") {
    const auto report = corpus::verify_corpus();
    CHECK(report.all_match);
    CHECK(report.pass_count == 7);
    for (const auto& result : report.cases) {
        CHECK(result.pass);
        CHECK(result.mismatches.empty());
    }
}

TEST_CASE("expected totals and gates follow the published table") {
    const int totals[7] = {6, 17, 22, 27, 27, 27, 27};
    const bool gates[7] = {false, false, false, true, true, true, true};
    const auto& cases = corpus::load_corpus();
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(cases[i].expected.total == totals[i]);
        CHECK(cases[i].expected.gate == gates[i]);
    }
}

TEST_CASE("patching C4's m4 to 1 breaks gate and full") {
    auto cases = corpus::load_corpus();
    for (auto& c : cases)
        if (c.id == "C4") c.assessment.profile.values[3] = 1;
    const auto report = corpus::verify_cases(cases);
    CHECK_FALSE(report.all_match);
    CHECK(report.pass_count == 6);
    for (const auto& result : report.cases) {
        if (result.case_id != "C4") {
            CHECK(result.pass);
            continue;
        }
        CHECK_FALSE(result.pass);
        CHECK(has_mismatch(result, "gate"));
        CHECK(has_mismatch(result, "full"));
        CHECK(has_mismatch(result, "m4"));
        CHECK(has_mismatch(result, "total"));
    }
}

TEST_CASE("forcing C1's predicates true breaks core with a field-level diff") {
    auto cases = corpus::load_corpus();
    for (auto& c : cases)
        if (c.id == "C1") {
            c.assessment.predicates.art_res = true;
            c.assessment.predicates.sov = true;
            c.assessment.predicates.prot = true;
            c.assessment.predicates.pack = true;
        }
    const auto report = corpus::verify_cases(cases);
    CHECK_FALSE(report.all_match);
    for (const auto& result : report.cases) {
        if (result.case_id != "C1") {
            CHECK(result.pass);
            continue;
        }
        CHECK_FALSE(result.pass);
        REQUIRE(result.mismatches.size() == 1);
        CHECK(result.mismatches[0].field == "core");
        CHECK(result.mismatches[0].expected == "false");
        CHECK(result.mismatches[0].actual == "true");
    }
}

TEST_CASE("every corpus case evaluates without warnings") {
    for (const auto& c : corpus::load_corpus()) {
        const auto evaluation = engine::evaluate_case(c.workflow, c.assessment);
        CHECK(evaluation.warnings.empty());
    }
}

TEST_CASE("verification report serializes with per-case entries") {
    const json node = corpus::to_canonical_json(corpus::verify_corpus());
    CHECK(node["all_match"] == true);
    CHECK(node["pass_count"] == 7);
    CHECK(node["case_count"] == 7);
    REQUIRE(node["cases"].size() == 7);
    CHECK(node["cases"][0]["id"] == "C1");
    CHECK(node["cases"][0]["pass"] == true);
}

TEST_CASE("the corpus bundle pairs each case with its resolved threshold") {
    const auto bundle = corpus::corpus_bundle();
    REQUIRE(bundle.evaluations.size() == 7);
    CHECK(bundle.evaluations[0].threshold == 3);   // C1: summative default
    CHECK(bundle.evaluations[1].threshold == 3);   // C2: summative default
    CHECK_FALSE(bundle.evaluations[2].threshold);  // C3: not learning-intensive
    CHECK(bundle.evaluations[5].threshold == 3);   // C6: explicit declaration
    CHECK(bundle.evaluations[0].capability_level == 0);
    CHECK_FALSE(bundle.evaluations[4].capability_level.has_value());
}

#include "ail2/corpus.hpp"

#include "ail2/engine.hpp"
#include "corpus_fixtures.hpp"

namespace ail2::corpus {

namespace {

// Expected scoring-table values for C1..C7, in fixture order.
const ExpectedEvaluation kExpected[7] = {
    // profile                 total band                              gate  C             tau           cap_res        core  full
    {{1, 1, 0, 0, 1, 2, 1}, 6, model::BandLabel::not_in_practice, false, 0, 3, false, false, false},
    {{3, 3, 2, 2, 2, 3, 2}, 17, model::BandLabel::aligned, false, 3, 3, true, false, false},
    {{4, 3, 3, 1, 4, 4, 3}, 22, model::BandLabel::aligned, false, std::nullopt, std::nullopt,
     std::nullopt, false, false},
    {{4, 4, 4, 4, 4, 4, 3}, 27, model::BandLabel::strong, true, std::nullopt, std::nullopt,
     std::nullopt, true, true},
    {{4, 4, 3, 4, 4, 4, 4}, 27, model::BandLabel::strong, true, std::nullopt, std::nullopt,
     std::nullopt, true, true},
    {{4, 4, 3, 4, 4, 4, 4}, 27, model::BandLabel::strong, true, 3, 3, true, true, true},
    {{4, 4, 4, 3, 4, 4, 4}, 27, model::BandLabel::strong, true, std::nullopt, std::nullopt,
     std::nullopt, true, true},
};

std::string opt_to_string(const std::optional<int>& value) {
    return value ? std::to_string(*value) : "--";
}

std::string opt_to_string(const std::optional<bool>& value) {
    if (!value) return "--";
    return *value ? "true" : "false";
}

std::string bool_to_string(bool value) { return value ? "true" : "false"; }

}  // namespace

const std::vector<CorpusCase>& load_corpus() {
    static const std::vector<CorpusCase> cases = [] {
        std::vector<CorpusCase> loaded;
        loaded.reserve(7);
        for (int i = 0; i < 7; ++i) {
            const auto& fixture = detail::kFixtures[i];
            CorpusCase c;
            c.id = fixture.id;
            c.title = fixture.title;
            c.workflow = model::parse_workflow(fixture.workflow_json);
            c.assessment = model::parse_assessment(fixture.assessment_json);
            c.expected = kExpected[i];
            if (c.workflow.id != c.id || c.assessment.workflow_id != c.id)
                throw Error("bundled fixture " + c.id + " carries a mismatched id");
            loaded.push_back(std::move(c));
        }
        return loaded;
    }();
    return cases;
}

VerificationReport verify_cases(const std::vector<CorpusCase>& cases) {
    VerificationReport report;
    for (const auto& c : cases) {
        CaseResult result;
        result.case_id = c.id;

        auto mismatch = [&](const std::string& field, std::string expected, std::string actual) {
            if (expected != actual)
                result.mismatches.push_back(
                    FieldMismatch{field, std::move(expected), std::move(actual)});
        };

        // Profile echo against the published m values.
        for (int d = 0; d < 7; ++d)
            mismatch("m" + std::to_string(d + 1),
                     std::to_string(c.expected.profile[static_cast<std::size_t>(d)]),
                     std::to_string(c.assessment.profile.values[static_cast<std::size_t>(d)]));

        const model::CaseEvaluation evaluation = engine::evaluate_case(c.workflow, c.assessment);
        mismatch("total", std::to_string(c.expected.total), std::to_string(evaluation.total));
        mismatch("band", model::to_string(c.expected.band), model::to_string(evaluation.band));
        mismatch("gate", bool_to_string(c.expected.gate), bool_to_string(evaluation.gate));
        mismatch("C", opt_to_string(c.expected.capability),
                 opt_to_string(c.assessment.capability.level));
        mismatch("tau", opt_to_string(c.expected.threshold),
                 opt_to_string(engine::resolve_threshold(c.workflow.context)));
        mismatch("cap_res", opt_to_string(c.expected.cap_res), opt_to_string(evaluation.cap_res));
        mismatch("core", bool_to_string(c.expected.core), bool_to_string(evaluation.core));
        mismatch("full", bool_to_string(c.expected.full), bool_to_string(evaluation.full));

        result.pass = result.mismatches.empty();
        if (result.pass) ++report.pass_count;
        report.cases.push_back(std::move(result));
    }
    report.all_match = report.pass_count == static_cast<int>(cases.size());
    return report;
}

VerificationReport verify_corpus() { return verify_cases(load_corpus()); }

report::ReportBundle corpus_bundle() {
    report::ReportBundle bundle;
    for (const auto& c : load_corpus()) {
        report::BundleEntry entry;
        entry.workflow_id = c.id;
        entry.profile = c.assessment.profile;
        entry.evaluation = engine::evaluate_case(c.workflow, c.assessment);
        entry.capability_level = c.assessment.capability.level;
        entry.threshold = engine::resolve_threshold(c.workflow.context);
        bundle.evaluations.push_back(std::move(entry));
    }
    return bundle;
}

json to_canonical_json(const VerificationReport& report) {
    json node = json::object();
    node["cases"] = json::array();
    for (const auto& result : report.cases) {
        json c = json::object();
        c["id"] = result.case_id;
        c["pass"] = result.pass;
        c["mismatches"] = json::array();
        for (const auto& m : result.mismatches)
            c["mismatches"].push_back(
                {{"field", m.field}, {"expected", m.expected}, {"actual", m.actual}});
        node["cases"].push_back(std::move(c));
    }
    node["pass_count"] = report.pass_count;
    node["case_count"] = static_cast<int>(report.cases.size());
    node["all_match"] = report.all_match;
    return node;
}

}  // namespace ail2::corpus

#pragma once
// The seven bundled reference cases (C1..C7) with their published expected
// scoring values, plus recompute-and-diff verification. The fixtures are
// read-only; `verify_cases` exists so tests can check that tampered corpora
// are caught.

#include <optional>
#include <string>
#include <vector>

#include "ail2/model.hpp"
#include "ail2/report.hpp"

namespace ail2::corpus {

// Normative per-case values from the published scoring table. Empty
// optionals are the "--" cells of non-learning-intensive cases.
struct ExpectedEvaluation {
    std::array<int, 7> profile{};
    int total = 0;
    model::BandLabel band = model::BandLabel::not_in_practice;
    bool gate = false;
    std::optional<int> capability;
    std::optional<int> threshold;
    std::optional<bool> cap_res;
    bool core = false;
    bool full = false;
};

struct CorpusCase {
    std::string id;
    std::string title;
    model::WorkflowDescriptor workflow;
    model::AssessmentRecord assessment;
    ExpectedEvaluation expected;
};

// Parses the bundled fixtures once and caches them; always returns the same
// seven cases in id order C1..C7. Throws if a bundled fixture is corrupt.
const std::vector<CorpusCase>& load_corpus();

struct FieldMismatch {
    std::string field;
    std::string expected;
    std::string actual;
};

struct CaseResult {
    std::string case_id;
    bool pass = false;
    std::vector<FieldMismatch> mismatches;
};

struct VerificationReport {
    std::vector<CaseResult> cases;
    int pass_count = 0;
    bool all_match = false;
};

// Recomputes every evaluation through the compliance engine and diffs each
// normative column against the expected values.
VerificationReport verify_cases(const std::vector<CorpusCase>& cases);
VerificationReport verify_corpus();

// Report bundle over the shipped corpus, in corpus order.
report::ReportBundle corpus_bundle();

json to_canonical_json(const VerificationReport& report);

}  // namespace ail2::corpus

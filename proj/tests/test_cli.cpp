#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ail2/cli.hpp"
#include "ail2/corpus.hpp"
#include "ail2/model.hpp"

using namespace ail2;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int status = 0;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::dispatch(std::move(args), out, err);
    return {status, out.str(), err.str()};
}

// Temp directory holding the corpus fixtures as files, built once.
class FixtureDir {
public:
    FixtureDir() {
        root_ = fs::temp_directory_path() / "ail2_cli_tests";
        fs::create_directories(root_);
        for (const auto& c : corpus::load_corpus()) {
            write(c.id + ".ail2w.json", model::serialize(model::to_canonical_json(c.workflow)));
            write(c.id + ".ail2a.json",
                  model::serialize(model::to_canonical_json(c.assessment)));
        }
        write("panel.ail2p.json",
              "{\"case_ids\": [\"a\", \"b\", \"c\", \"d\"], \"rater_ids\": [\"r1\", \"r2\"],\n"
              " \"scores\": [6, 8, 17, 15, 22, 23, 27, 27], \"value_kind\": \"total\"}\n");
        write("constant_panel.ail2p.json",
              "{\"case_ids\": [\"a\", \"b\"], \"rater_ids\": [\"r1\", \"r2\"],\n"
              " \"scores\": [5, 5, 5, 5], \"value_kind\": \"total\"}\n");
        write("broken.ail2w.json", "{\"id\": ");
    }

    std::string path(const std::string& name) const { return (root_ / name).string(); }

private:
    void write(const std::string& name, const std::string& content) {
        std::ofstream file(root_ / name, std::ios::binary);
        file << content;
    }
    fs::path root_;
};

const FixtureDir& fixtures() {
    static FixtureDir dir;
    return dir;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("corpus verify passes on the shipped fixtures") {
    const auto result = run({"corpus", "verify"});
    CHECK(result.status == 0);
    CHECK(result.err.find("7/7 cases match Table 3") != std::string::npos);
    const json report = model::parse_json_text(result.out);
    CHECK(report["all_match"] == true);
    CHECK(report["pass_count"] == 7);
}

TEST_CASE("--quiet silences the verify diagnostics but not the result") {
    const auto result = run({"--quiet", "corpus", "verify"});
    CHECK(result.status == 0);
    CHECK(result.err.empty());
    CHECK_FALSE(result.out.empty());
}

TEST_CASE("corpus list and show") {
    const auto list = run({"corpus", "list"});
    CHECK(list.status == 0);
    const json cases = model::parse_json_text(list.out);
    REQUIRE(cases.size() == 7);
    CHECK(cases[0]["id"] == "C1");

    const auto shown = run({"corpus", "show", "C2"});
    CHECK(shown.status == 0);
    const json node = model::parse_json_text(shown.out);
    CHECK(node["id"] == "C2");
    CHECK(node["workflow"]["id"] == "C2");
    CHECK(node["assessment"]["profile"]["m1"] == 3);

    const auto unknown = run({"corpus", "show", "C9"});
    CHECK(unknown.status == 1);
    CHECK(unknown.err.find("C9") != std::string::npos);
}

TEST_CASE("score prints the evaluation and exits 0 regardless of compliance") {
    const auto result =
        run({"score", fixtures().path("C2.ail2w.json"), fixtures().path("C2.ail2a.json")});
    CHECK(result.status == 0);
    const json evaluation = model::parse_json_text(result.out);
    CHECK(evaluation["total"] == 17);
    CHECK(evaluation["gate"] == false);
    CHECK(evaluation["full"] == false);
    CHECK(evaluation["band"] == "aligned");
    CHECK(evaluation["cap_res"] == true);
}

TEST_CASE("score rejects a mismatched workflow/assessment pair") {
    const auto result =
        run({"score", fixtures().path("C1.ail2w.json"), fixtures().path("C2.ail2a.json")});
    CHECK(result.status == 1);
    CHECK(result.err.find("C2") != std::string::npos);
}

TEST_CASE("validate exits 0 only for structurally complete packages") {
    const auto good = run({"validate", fixtures().path("C5.ail2w.json")});
    CHECK(good.status == 0);
    const json good_report = model::parse_json_text(good.out);
    CHECK(good_report["structurally_complete"] == true);

    const auto bad = run({"validate", fixtures().path("C1.ail2w.json")});
    CHECK(bad.status == 1);
    const json bad_report = model::parse_json_text(bad.out);
    CHECK(bad_report["structurally_complete"] == false);
    CHECK(bad_report["findings"].size() == 5);
}

TEST_CASE("report renders markdown and writes byte-identical files") {
    const std::vector<std::string> pair = {fixtures().path("C3.ail2w.json"),
                                           fixtures().path("C3.ail2a.json")};
    const auto md = run({"report", pair[0], pair[1], "--format", "md"});
    CHECK(md.status == 0);
    CHECK(md.out.find("| C3 | 4 | 3 | 3 | 1 | 4 | 4 | 3 | 22 | 0 | -- | -- | 0 | 0 |") !=
          std::string::npos);

    const std::string out_a = fixtures().path("totals_a.svg");
    const std::string out_b = fixtures().path("totals_b.svg");
    CHECK(run({"report", pair[0], pair[1], "--format", "totals-svg", "--out", out_a}).status == 0);
    CHECK(run({"report", pair[0], pair[1], "--format", "totals-svg", "--out", out_b}).status == 0);
    const std::string bytes_a = slurp(out_a);
    CHECK_FALSE(bytes_a.empty());
    CHECK(bytes_a == slurp(out_b));

    const auto heatmap = run({"report", pair[0], pair[1], "--format", "heatmap-svg"});
    CHECK(heatmap.status == 0);
    CHECK(heatmap.out.find("<svg") != std::string::npos);

    const auto json_report = run({"report", pair[0], pair[1], "--format", "json"});
    CHECK(json_report.status == 0);
    CHECK(model::parse_json_text(json_report.out)["evaluations"].size() == 1);

    const auto odd = run({"report", pair[0], "--format", "md"});
    CHECK(odd.status == 1);
}

TEST_CASE("pld prints the divergence result") {
    const auto result = run({"pld", "--artifact", "0.9", "--transfer", "0.4"});
    CHECK(result.status == 0);
    const json node = model::parse_json_text(result.out);
    CHECK(node["pld"] == 0.5);
    CHECK(node["flagged"] == true);

    CHECK(run({"pld", "--artifact", "1.5", "--transfer", "0.4"}).status == 1);
}

TEST_CASE("agree computes kappa, exact and icc over a panel file") {
    const auto kappa = run({"agree", fixtures().path("panel.ail2p.json"), "--stat", "kappa"});
    CHECK(kappa.status == 0);
    const json kappa_node = model::parse_json_text(kappa.out);
    CHECK(kappa_node["stat"] == "kappa");
    CHECK(kappa_node["weights"] == "quadratic");
    CHECK(kappa_node["categories"] == 29);
    REQUIRE(kappa_node["pairs"].size() == 1);
    CHECK(kappa_node["pairs"][0]["defined"] == true);

    const auto exact = run({"agree", fixtures().path("panel.ail2p.json"), "--stat", "exact"});
    CHECK(exact.status == 0);
    const json exact_node = model::parse_json_text(exact.out);
    CHECK(exact_node["pairs"][0]["value"] == 0.25);  // only the 27/27 row agrees

    const auto icc = run({"agree", fixtures().path("panel.ail2p.json"), "--stat", "icc",
                          "--icc-form", "2_1"});
    CHECK(icc.status == 0);
    const json icc_node = model::parse_json_text(icc.out);
    CHECK(icc_node["defined"] == true);
    CHECK(icc_node["result"]["icc_form"] == "icc2_1");
    CHECK(icc_node["result"]["estimate"].get<double>() ==
          doctest::Approx(0.9851566794942276).epsilon(1e-9));

    const auto undefined =
        run({"agree", fixtures().path("constant_panel.ail2p.json"), "--stat", "icc"});
    CHECK(undefined.status == 0);
    CHECK(model::parse_json_text(undefined.out)["defined"] == false);
}

TEST_CASE("usage errors exit 2, domain errors exit 1") {
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"corpus", "verify", "--bogus-flag"}).status == 2);
    CHECK(run({}).status == 2);
    CHECK(run({"score", fixtures().path("C1.ail2w.json")}).status == 2);  // missing operand

    const auto missing = run({"validate", fixtures().path("no_such_file.ail2w.json")});
    CHECK(missing.status == 1);
    CHECK(missing.err.find("no_such_file") != std::string::npos);

    const auto broken = run({"validate", fixtures().path("broken.ail2w.json")});
    CHECK(broken.status == 1);
    CHECK(broken.err.find("broken.ail2w.json") != std::string::npos);
    CHECK(broken.err.find("syntax error") != std::string::npos);
}

TEST_CASE("help is printed on the output stream with status 0") {
    const auto result = run({"--help"});
    CHECK(result.status == 0);
    CHECK(result.out.find("Usage") != std::string::npos);
    CHECK(result.err.empty());
}

TEST_CASE("strict mode is the default; --no-strict tolerates unknown fields") {
    json doc = model::parse_json_text(slurp(fixtures().path("C5.ail2w.json")));
    doc["unexpected_field"] = 1;
    const std::string path = fixtures().path("extended.ail2w.json");
    {
        std::ofstream file(path, std::ios::binary);
        file << model::serialize(doc);
    }
    CHECK(run({"validate", path}).status == 1);
    const auto tolerant = run({"--no-strict", "validate", path});
    CHECK(tolerant.status == 0);
}

TEST_CASE("commands do not mutate their input files") {
    const std::string workflow_path = fixtures().path("C4.ail2w.json");
    const std::string assessment_path = fixtures().path("C4.ail2a.json");
    const std::string before = slurp(workflow_path) + slurp(assessment_path);
    CHECK(run({"score", workflow_path, assessment_path}).status == 0);
    CHECK(run({"validate", workflow_path}).status == 0);
    CHECK(slurp(workflow_path) + slurp(assessment_path) == before);
}

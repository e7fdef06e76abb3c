#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "qpr/cli.hpp"
#include "qpr/enumerator.hpp"
#include "qpr/network_io.hpp"

using namespace qpr;
namespace fs = std::filesystem;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

// Writes the document once per process and hands out the path.
class TempDoc {
public:
    TempDoc(const char* name, const NetworkDocument& doc)
        : path_(fs::temp_directory_path() / name) {
        std::ofstream file(path_);
        file << serialize_network(doc);
    }
    ~TempDoc() { fs::remove(path_); }

    std::string path() const { return path_.string(); }

private:
    fs::path path_;
};

NetworkDocument demo_doc(bool with_pmfs) {
    NetworkDocument doc;
    doc.network = test::k4_network();
    doc.name = "k4-demo";
    if (with_pmfs) {
        for (const auto& dist : test::uniform_dists(doc.network)) {
            doc.arc_pmfs.emplace_back(dist);
        }
    } else {
        doc.arc_pmfs.assign(doc.network.arcs.size(), std::nullopt);
    }
    return doc;
}

}  // namespace

TEST_CASE("solve prints vectors and count") {
    TempDoc doc("qpr_cli_solve.json", demo_doc(false));
    const auto result = run({"solve", doc.path(), "-d", "4", "-T", "7"});
    CHECK(result.code == kExitOk);
    CHECK(result.out == "(0,0,1,0,0,0)\n(0,2,0,0,0,2)\ncount: 2\n");
}

TEST_CASE("solve with an empty result still exits 0") {
    TempDoc doc("qpr_cli_empty.json", demo_doc(false));
    const auto result = run({"solve", doc.path(), "-d", "4", "-T", "1"});
    CHECK(result.code == kExitOk);
    CHECK(result.out == "count: 0\n");
}

TEST_CASE("solve --json carries exactly the enumerated vectors") {
    TempDoc doc("qpr_cli_json.json", demo_doc(false));
    const auto result = run({"solve", doc.path(), "-d", "4", "-T", "7", "--json"});
    CHECK(result.code == kExitOk);

    const auto parsed = nlohmann::json::parse(result.out);
    CHECK(parsed["query"]["d"] == 4);
    CHECK(parsed["query"]["T"] == 7);
    CHECK(parsed["sigma"] == 2);
    const auto expected = find_minimal_vectors(test::k4_network(), {4, 7});
    REQUIRE(parsed["minimal_vectors"].size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(parsed["minimal_vectors"][i].get<StateVector>() == expected[i]);
    }
}

TEST_CASE("solve --trace logs the first search steps") {
    TempDoc doc("qpr_cli_trace.json", demo_doc(false));
    const auto result =
        run({"solve", doc.path(), "-d", "4", "-T", "7", "--trace"});
    CHECK(result.code == kExitOk);
    CHECK(result.err.rfind("trace: extend 1 -> 2  lt 0  eta 2\n"
                           "trace: prune-lead 2 -> 3  lt 4\n",
                           0) == 0);
}

TEST_CASE("reliability exact") {
    TempDoc doc("qpr_cli_rel.json", demo_doc(true));
    const auto result = run({"reliability", doc.path(), "-d", "4", "-T", "7"});
    CHECK(result.code == kExitOk);
    CHECK(result.out.find("R = 0.918367346939\n") != std::string::npos);
    CHECK(result.out.find("method: exact\n") != std::string::npos);
    CHECK(result.out.find("sigma: 2\n") != std::string::npos);
}

TEST_CASE("reliability monte carlo") {
    TempDoc doc("qpr_cli_mc.json", demo_doc(true));
    const auto result = run({"reliability", doc.path(), "-d", "4", "-T", "7",
                             "--method", "mc", "--samples", "20000", "--seed", "3"});
    CHECK(result.code == kExitOk);
    CHECK(result.out.find("half_width = ") != std::string::npos);
    CHECK(result.out.find("method: mc\n") != std::string::npos);

    const auto again = run({"reliability", doc.path(), "-d", "4", "-T", "7",
                            "--method", "mc", "--samples", "20000", "--seed", "3"});
    CHECK(again.out == result.out);
}

TEST_CASE("reliability --json emits the result object") {
    TempDoc doc("qpr_cli_rel_json.json", demo_doc(true));
    const auto result =
        run({"reliability", doc.path(), "-d", "4", "-T", "7", "--json"});
    CHECK(result.code == kExitOk);
    const auto parsed = nlohmann::json::parse(result.out);
    CHECK(parsed["method"] == "exact");
    CHECK(parsed["sigma"] == 2);
    CHECK(parsed["half_width"].is_null());
    CHECK(parsed["reliability"].get<double>() ==
          doctest::Approx(45.0 / 49.0).epsilon(1e-9));
}

TEST_CASE("reliability without pmfs fails with a validation error") {
    TempDoc doc("qpr_cli_nopmf.json", demo_doc(false));
    const auto result = run({"reliability", doc.path(), "-d", "4", "-T", "7"});
    CHECK(result.code == kExitValidation);
    CHECK(result.err.find("pmf") != std::string::npos);
}

TEST_CASE("reliability forced exact over the sigma cap exits 4") {
    TempDoc doc("qpr_cli_cap.json", demo_doc(true));
    const auto forced = run({"reliability", doc.path(), "-d", "4", "-T", "7",
                             "--method", "exact", "--sigma-cap", "1"});
    CHECK(forced.code == kExitCapExceeded);

    // Without a forced method the command falls back to sampling.
    const auto fallback = run({"reliability", doc.path(), "-d", "4", "-T", "7",
                               "--sigma-cap", "1", "--samples", "5000"});
    CHECK(fallback.code == kExitOk);
    CHECK(fallback.out.find("method: mc\n") != std::string::npos);
}

TEST_CASE("mps lists every path with lead and required capacity") {
    TempDoc doc("qpr_cli_mps.json", demo_doc(false));
    const auto result = run({"mps", doc.path(), "-d", "4", "-T", "7"});
    CHECK(result.code == kExitOk);
    CHECK(result.out ==
          "1 -> 2 -> 3 -> 4  arcs: a1 a4 a6  lead: 9  eta: infeasible\n"
          "1 -> 2 -> 4  arcs: a1 a5  lead: 7  eta: infeasible\n"
          "1 -> 3 -> 2 -> 4  arcs: a2 a4 a5  lead: 11  eta: infeasible\n"
          "1 -> 3 -> 4  arcs: a2 a6  lead: 5  eta: 2\n"
          "1 -> 4  arcs: a3  lead: 1  eta: 1\n"
          "count: 5\n");

    const auto no_query = run({"mps", doc.path()});
    CHECK(no_query.code == kExitOk);
    CHECK(no_query.out.find("eta") == std::string::npos);

    const auto json_mode = run({"mps", doc.path(), "-d", "4", "-T", "7", "--json"});
    const auto parsed = nlohmann::json::parse(json_mode.out);
    REQUIRE(parsed["mps"].size() == 5);
    CHECK(parsed["mps"][4]["arcs"] == nlohmann::json::array({3}));
    CHECK(parsed["mps"][4]["eta"] == 1);
    CHECK(parsed["mps"][0]["eta"].is_null());
}

TEST_CASE("mps requires the demand and budget together") {
    TempDoc doc("qpr_cli_mps2.json", demo_doc(false));
    CHECK(run({"mps", doc.path(), "-d", "4"}).code == kExitUsage);
}

TEST_CASE("verify a document against the oracle") {
    TempDoc doc("qpr_cli_verify.json", demo_doc(true));
    const auto result = run({"verify", doc.path(), "-d", "4", "-T", "7"});
    CHECK(result.code == kExitOk);
    CHECK(result.out == "instances: 1  mismatches: 0\n");

    const auto json_mode =
        run({"verify", doc.path(), "-d", "4", "-T", "7", "--json"});
    const auto parsed = nlohmann::json::parse(json_mode.out);
    CHECK(parsed["agree"] == true);
}

TEST_CASE("verify random instances") {
    const auto result = run(
        {"verify", "--random", "--seed", "42", "--count", "200", "-d", "3", "-T", "8"});
    CHECK(result.code == kExitOk);
    CHECK(result.out == "instances: 200  mismatches: 0\n");
}

TEST_CASE("verify respects the state-space cap") {
    TempDoc doc("qpr_cli_verify_cap.json", demo_doc(true));
    const auto result = run(
        {"verify", doc.path(), "-d", "4", "-T", "7", "--state-cap", "10"});
    CHECK(result.code == kExitCapExceeded);
}

TEST_CASE("verify without a file or --random is a usage error") {
    CHECK(run({"verify", "-d", "4", "-T", "7"}).code == kExitUsage);
    CHECK(run({"verify", "--random", "--count", "1", "-d", "0"}).code ==
          kExitValidation);
}

TEST_CASE("usage and file errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"solve", "/nonexistent.json", "-d", "4", "-T", "7"}).code ==
          kExitUsage);
    CHECK(run({"solve"}).code == kExitUsage);

    TempDoc doc("qpr_cli_usage.json", demo_doc(false));
    CHECK(run({"solve", doc.path(), "-d", "4", "-T", "7", "--bogus"}).code ==
          kExitUsage);
    CHECK(run({"solve", doc.path(), "-d", "0", "-T", "7"}).code ==
          kExitValidation);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("malformed documents exit with the validation code") {
    const fs::path path = fs::temp_directory_path() / "qpr_cli_broken.json";
    {
        std::ofstream file(path);
        file << "{ not json";
    }
    CHECK(run({"solve", path.string(), "-d", "4", "-T", "7"}).code ==
          kExitValidation);
    fs::remove(path);
}

#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end checks against the built binary.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(AN_CLI_PATH) + " " + args + " 2>&1";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("gen prints the headline statistics") {
    const RunResult r = run_cli("gen 5 --stats");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "vertices: 60"));
    CHECK(contains(r.output, "edges: 120"));
    CHECK(contains(r.output, "regular: 4"));
    CHECK(contains(r.output, "diameter: 5"));
}

TEST_CASE("kappa fragment engine reports the theorem value on dimension 4") {
    const RunResult r = run_cli("kappa 4 --ell 4 --engine both");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "exhaustive: value 6"));
    CHECK(contains(r.output, "fragment: value 6"));
    CHECK(contains(r.output, "engines agree"));
}

TEST_CASE("kappa fragment engine reports the theorem value on dimension 5") {
    const RunResult r = run_cli("kappa 5 --ell 4 --engine fragment");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "fragment: value 9"));
    CHECK(contains(r.output, "satisfied: yes"));
}

TEST_CASE("cut six-cycle emits a satisfied certificate") {
    const RunResult r = run_cli("cut 4 --kind six-cycle");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "six-cycle cut"));
    CHECK(contains(r.output, "satisfied: yes"));
}

TEST_CASE("cut vertex and edge kinds emit certificates") {
    const RunResult v = run_cli("cut 4 --kind vertex --at 3");
    CHECK(v.exit_code == 0);
    CHECK(contains(v.output, "neighborhood cut of vertex 3"));
    CHECK(contains(v.output, "satisfied: yes"));
    const RunResult e = run_cli("cut 5 --kind edge");
    CHECK(e.exit_code == 0);
    CHECK(contains(e.output, "neighborhood cut of edge (0,"));
}

TEST_CASE("verify basic suite passes on dimension 4") {
    const RunResult r = run_cli("verify 4 --lemma basic");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "[PASS] an-basic-structure"));
}

TEST_CASE("verify small-cuts on dimension 4 reports the known violations and exits 1") {
    const RunResult r = run_cli("verify 4 --lemma small-cuts");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "[FAIL] small-cuts-le-2n-4"));
    CHECK(contains(r.output, "3-path+3-path"));
}

TEST_CASE("default verification suite passes on dimension 5") {
    const RunResult r = run_cli("verify 5 --suite default");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "all passed"));
    CHECK(contains(r.output, "[PASS] super-connectivity"));
    CHECK(contains(r.output, "[PASS] small-cuts-le-2n-4"));
}

TEST_CASE("full-suite small cuts demand the long-running flag") {
    const RunResult r = run_cli("verify 5 --suite full --lemma small-cuts");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "--long-running"));
    CHECK(contains(r.output, "subset tests"));  // cost estimate printed
}

TEST_CASE("audits outside their hypotheses are skipped, not failed") {
    const RunResult r = run_cli("verify 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "[skip] basic"));
    CHECK(contains(r.output, "[skip] super"));
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("bogus").exit_code == 2);
    CHECK(run_cli("kappa 4").exit_code == 2);          // missing --ell
    CHECK(run_cli("kappa 4 --ell 4 --engine nope").exit_code == 2);
    CHECK(run_cli("gen 2").exit_code == 2);            // below the dimension floor
    CHECK(run_cli("solve --edges /nonexistent --ell 2").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("kappa --help").exit_code == 0);
}

TEST_CASE("edge-list export round trips through solve") {
    const std::string edges = "/tmp/an_cli_test_edges.txt";
    std::remove(edges.c_str());
    const RunResult gen = run_cli("gen 4 --export-edges " + edges);
    CHECK(gen.exit_code == 0);
    const RunResult solve = run_cli("solve --edges " + edges + " --ell 4");
    CHECK(solve.exit_code == 0);
    CHECK(contains(solve.output, "exhaustive: value 6"));
    CHECK(contains(solve.output, "fragment: value 6"));
    CHECK(contains(solve.output, "engines agree"));
}

TEST_CASE("json ledgers are byte-identical across reruns with zeroed timings") {
    const std::string path = "/tmp/an_cli_ledger.json";
    const std::string copy = "/tmp/an_cli_ledger_first.json";
    std::remove(path.c_str());
    std::remove(copy.c_str());
    const std::string args =
        "--zero-timings --workers 2 kappa 4 --ell 3 --engine both --json " + path;
    CHECK(run_cli(args).exit_code == 0);
    REQUIRE(std::rename(path.c_str(), copy.c_str()) == 0);
    CHECK(run_cli(args).exit_code == 0);
    const std::string a = slurp(copy);
    const std::string b = slurp(path);
    CHECK(a == b);
    CHECK(contains(a, "\"value\": 5"));
    CHECK(contains(a, "\"elapsed_ms\": 0"));
    CHECK(contains(a, "\"faulty_labels\""));
}

TEST_CASE("export json names the dimension and labels") {
    const RunResult r = run_cli("export 3 --format json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"vertex_count\": 3"));
    CHECK(contains(r.output, "\"123\""));
    const RunResult dot = run_cli("export 3 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(contains(dot.output, "graph an3 {"));
}

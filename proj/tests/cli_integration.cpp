// End-to-end checks of the installed CLI: exit-code contract, JSON output,
// and byte-level determinism for a fixed seed.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string cli = HOLOFLOW_CLI_PATH;

int run(const std::string& args) {
    std::string cmd = cli + " " + args + " > cli_stdout.txt 2> cli_stderr.txt";
    int rc = std::system(cmd.c_str());
    if (rc < 0) FAIL("system() failed");
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run("leafspace --n 6 --i 9") == 2);
    CHECK(run("no-such-command") == 2);
    CHECK(run("montecarlo --scenario admissibility --trials 0 --seed 7") == 2);
    CHECK(run("montecarlo --scenario nonsense --trials 10 --seed 7") == 2);
    CHECK(run("jacobian --case case9 --t 6") == 2);
}

TEST_CASE("leafspace emits the table and JSON") {
    CHECK(run("--json ls.json leafspace --n 6 --i 2") == 0);
    std::string body = slurp("ls.json");
    CHECK(body.find("\"leaf_space\"") != std::string::npos);
    CHECK(body.find("\"involution\"") != std::string::npos);
    std::string text = slurp("cli_stdout.txt");
    CHECK(text.find("S*^5 u S*^3") != std::string::npos);
    std::remove("ls.json");
}

TEST_CASE("jacobian subcommand reproduces a pinned value") {
    CHECK(run("--json jac.json jacobian --case case2 --t 9 --point 2,3") == 0);
    std::string body = slurp("jac.json");
    CHECK(body.find("\"det\": \"-1792/4913\"") != std::string::npos);
    CHECK(body.find("\"matches_paper\": true") != std::string::npos);
    std::remove("jac.json");

    CHECK(run("jacobian --case case3 --t 13 --k 5 --symbolic") == 0);
    std::string text = slurp("cli_stdout.txt");
    CHECK(text.find("\"x5\"") != std::string::npos);
}

TEST_CASE("montecarlo JSON output is byte-identical for a fixed seed") {
    CHECK(run("--seed 11 --json mc1.json montecarlo --scenario flow-oracle --trials 50") == 0);
    CHECK(run("--seed 11 --json mc2.json montecarlo --scenario flow-oracle --trials 50") == 0);
    CHECK(slurp("mc1.json") == slurp("mc2.json"));
    CHECK(!slurp("mc1.json").empty());
    std::remove("mc1.json");
    std::remove("mc2.json");
}

TEST_CASE("interval obstruction subcommand") {
    CHECK(run("interval-obstruction --i 3") == 0);
    CHECK(slurp("cli_stdout.txt").find("\"obstruction\": true") != std::string::npos);
    CHECK(run("interval-obstruction --i 3 --control") == 0);
    CHECK(slurp("cli_stdout.txt").find("\"obstruction\": false") != std::string::npos);
    CHECK(run("interval-obstruction --i 0") == 2);
}

TEST_CASE("corrupt hook forces a mismatch exit") {
    CHECK(run("reproduce-appendix --corrupt jacobian-case3-t13-k5") == 1);
    std::string text = slurp("cli_stdout.txt");
    CHECK(text.find("[FAIL] jacobian-case3-t13-k5") != std::string::npos);
}

TEST_CASE("admissibility accepts a matrix file") {
    {
        std::ofstream out("p.json");
        out << R"({"t": 3, "entries": [["1/1","2/1","0/1"],["0/1","1/1","5/1"],["1/1","0/1","1/1"]]})";
    }
    CHECK(run("admissibility --p-file p.json --k 1") == 0);
    std::string text = slurp("cli_stdout.txt");
    CHECK(text.find("\"admissible\"") != std::string::npos);
    std::remove("p.json");
}

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hirzewahl/cli.hpp"

using namespace hirzewahl;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return Run{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("genus command output") {
    Run r = run({"genus", "--n", "0", "--a", "6", "--b", "9", "--delta", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "g=40 g~=39\n");
}

TEST_CASE("corank json carries the corank value") {
    Run r = run({"corank", "--n", "0", "--a", "6", "--b", "9", "--delta", "1", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"corank\": 9") != std::string::npos);
    CHECK(r.out.find("\"g\": 40") != std::string::npos);
}

TEST_CASE("intersect command") {
    Run r = run({"intersect", "--n", "2", "--d1", "1,0", "--d2", "1,0"});
    CHECK(r.code == 0);
    CHECK(r.out == "-2\n");

    Run k2 = run({"intersect", "--n", "1", "--delta", "3", "--d1", "-2,-3,-1,-1,-1", "--d2",
                  "-2,-3,-1,-1,-1"});
    CHECK(k2.out == "5\n");
}

TEST_CASE("cohomology command") {
    Run r = run({"cohomology", "--n", "2", "--d", "2,4"});
    CHECK(r.code == 0);
    CHECK(r.out == "h0=9 h1=0 h2=0 chi=9\n");
}

TEST_CASE("check commands and strict exits") {
    Run ok = run({"check-reider", "--n", "0", "--a", "6", "--b", "9", "--delta", "1", "--strict"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("verdict=true") != std::string::npos);

    Run fail =
        run({"check-reider", "--n", "1", "--a", "6", "--b", "12", "--delta", "1", "--strict"});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("hypothesis=false") != std::string::npos);

    Run lax = run({"check-reider", "--n", "1", "--a", "6", "--b", "12", "--delta", "1"});
    CHECK(lax.code == 0);

    Run jet = run({"check-jet", "--n", "1", "--a", "5", "--b", "9", "--delta", "2"});
    CHECK(jet.code == 0);
    CHECK(jet.out.find("jet_ample=true") != std::string::npos);

    Run amp = run({"check-ample", "--n", "1", "--d", "2,3", "--delta", "1"});
    CHECK(amp.code == 0);
    CHECK(amp.out.find("very_ample=true") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"genus", "--n", "0"}).code == 2);              // missing required flags
    CHECK(run({"genus", "--n", "0", "--a", "1", "--b", "1", "--bogus"}).code == 2);
    CHECK(run({"scan", "--n", "2..0", "--a", "1", "--b", "1"}).code == 2);  // inverted range
    CHECK(run({}).code == 2);
}

TEST_CASE("scan output is deterministic and ordered") {
    std::vector<std::string> args{"scan", "--n", "0..1", "--a", "6..7", "--b",
                                  "6..10", "--delta", "1..2", "--format", "tsv"};
    Run first = run(args);
    CHECK(first.code == 0);

    std::istringstream lines(first.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "n\ta\tb\tdelta\tg\tg_tilde\tthmA\tcorank\treider_A\treider_B\tnotes");
    long rows = 0;
    for (std::string line; std::getline(lines, line);) ++rows;
    CHECK(rows == 2 * 2 * 5 * 2);

    Run again = run(args);
    CHECK(again.out == first.out);

    std::vector<std::string> parallel = args;
    parallel.push_back("--jobs");
    parallel.push_back("4");
    CHECK(run(parallel).out == first.out);
}

TEST_CASE("scan json mirrors the tsv fields") {
    Run r = run({"scan", "--n", "0..0", "--a", "6..6", "--b", "9..9", "--delta", "1..1",
                 "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"thmA\": true") != std::string::npos);
    CHECK(r.out.find("\"corank\": 9") != std::string::npos);
    CHECK(r.out.find("\"reider_A\": true") != std::string::npos);
}

TEST_CASE("scan writes to a file") {
    std::string path = "cli_scan_test_output.tsv";
    Run r = run({"scan", "--n", "0..0", "--a", "6..6", "--b", "9..9", "--delta", "1..1",
                 "--output", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream file(path);
    REQUIRE(file.good());
    std::string header;
    std::getline(file, header);
    CHECK(header == "n\ta\tb\tdelta\tg\tg_tilde\tthmA\tcorank\treider_A\treider_B\tnotes");
    file.close();
    std::remove(path.c_str());
}

TEST_CASE("conjecture command") {
    Run r = run({"conjecture", "--n", "0", "--delta", "1", "--seed", "42"});
    CHECK(r.code == 0);
    CHECK(r.out == "lhs=9 rhs=8 holds=true seed=42\n");
}

TEST_CASE("gaussian-rank respects the wedge budget") {
    Run r = run({"gaussian-rank", "--n", "0", "--a", "6", "--b", "9", "--delta", "1",
                 "--max-wedge", "10"});
    CHECK(r.code == 2);
    CHECK(r.err.find("budget") != std::string::npos);
}

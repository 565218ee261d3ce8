#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "pichar/cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"pichar"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code =
        pichar::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli degree") {
    const auto r = run({"degree", "5,1^4"});
    CHECK(r.code == 0);
    CHECK(r.out == "70\n");

    const auto alt = run({"degree", "5,1^4", "--alt"});
    CHECK(alt.code == 0);
    CHECK(alt.out == "35\n35\n");

    const auto json = run({"--format", "json", "degree", "5,1^4"});
    CHECK(json.out == "{\"label\":\"5,1^4\",\"degree\":\"70\",\"mult\":1,\"split\":false}\n");
}

TEST_CASE("cli partitions") {
    const auto r = run({"partitions", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n3,1\n2^2\n2,1^2\n1^4\n");

    const auto json = run({"--format", "json", "partitions", "3"});
    CHECK(json.out == "{\"n\":3,\"count\":3,\"partitions\":[\"3\",\"2,1\",\"1^3\"]}\n");
}

TEST_CASE("cli pi-irr") {
    const auto r = run({"pi-irr", "9", "-p", "2", "-q", "3", "--group", "sym"});
    CHECK(r.code == 0);
    CHECK(r.out == "9\n1^9\n");

    const auto alt = run({"pi-irr", "7", "-p", "2", "-q", "3", "--group", "alt"});
    CHECK(alt.code == 0);
    // principal plus the degree-35 character
    CHECK(alt.out == "7\n4,2,1\n");
}

TEST_CASE("cli classify and witness") {
    CHECK(run({"classify", "sym", "9", "-p", "2", "-q", "3"}).out == "ONLY_LINEAR\n");
    CHECK(run({"classify", "sym", "10", "-p", "2", "-q", "3"}).out == "WITNESS_EXISTS\n");
    CHECK(run({"classify", "alt-ext", "9", "-p", "3", "-q", "2"}).out == "NOT_EXTENDIBLE\n");
    CHECK(run({"classify", "alt-ext", "10", "-p", "3", "-q", "2"}).out == "EXTENDIBLE\n");

    CHECK(run({"witness", "sym", "10", "-p", "3", "-q", "2"}).out == "WITNESS\t2^2,1^6\t35\n");
    CHECK(run({"witness", "sym", "9", "-p", "3", "-q", "2"}).out == "ONLY_LINEAR\n");
    CHECK(run({"witness", "alt", "9", "-p", "3", "-q", "2"}).out == "WITNESS\t5,1^4#0\t35\n");
    const auto json = run({"--format", "json", "witness", "alt", "8", "-p", "7", "-q", "2"});
    CHECK(json.out ==
          "{\"classification\":\"WITNESS\",\"witness\":\"4,2,1^2#0\",\"degree\":\"45\","
          "\"split\":true}\n");
}

TEST_CASE("cli graphs") {
    const auto dot = run({"graph", "sym", "17", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("graph gamma_prime {") == 0);
    CHECK(dot.out.find("// missing: 2 -- 17") != std::string::npos);
    CHECK(dot.out.find("3 -- 5;") != std::string::npos);
    CHECK(run({"--format", "dot", "graph", "sym", "17"}).out == dot.out);

    const auto nil = run({"graph", "nilpotent", "2:n", "3:n", "5:a"});
    CHECK(nil.out.find("edge\t2\t5") != std::string::npos);
    CHECK(nil.out.find("missing\t2\t3") != std::string::npos);

    const auto gl = run({"graph", "gl", "-n", "4", "-r", "3"});
    CHECK(gl.code == 0);
    CHECK(gl.out.find("missing\t2\t3") != std::string::npos);
    CHECK(gl.err.empty());

    // the degenerate case reports its override on stderr
    const auto gl22 = run({"graph", "gl", "-n", "2", "-r", "2"});
    CHECK(gl22.code == 0);
    CHECK(gl22.err.find("note:") != std::string::npos);
    CHECK(gl22.out.find("missing\t2\t3") != std::string::npos);

    const auto ju = run({"--format", "json", "graph", "alt", "5"});
    CHECK(ju.out ==
          "{\"vertices\":[2,3,5],\"edges\":[[2,3],[2,5],[3,5]],\"missing\":[]}\n");
}

TEST_CASE("cli gl") {
    CHECK(run({"gl", "classify", "-n", "4", "-r", "3", "-p", "2", "-q", "3"}).out ==
          "ONLY_LINEAR\n");
    CHECK(run({"gl", "degrees", "-n", "2", "-q", "3"}).out == "1\t2\n2\t3\n3\t2\n4\t1\n");

    // degenerate small group: the enumerated table overrides the closed form
    const auto degenerate = run({"gl", "classify", "-n", "2", "-r", "2", "-p", "2", "-q", "3"});
    CHECK(degenerate.code == 0);
    CHECK(degenerate.out == "ONLY_LINEAR\n");
    CHECK(degenerate.err.find("note:") != std::string::npos);

    // unitary side evaluates the closed form
    CHECK(run({"gl", "classify", "-n", "3", "-r", "2", "--eps=-1", "-p", "2", "-q", "3"}).out ==
          "ONLY_LINEAR\n");
    CHECK(run({"gl", "classify", "-n", "4", "-r", "2", "--eps=-1", "-p", "2", "-q", "3"}).out ==
          "WITNESS_EXISTS\n");
    const auto json = run({"--format", "json", "gl", "degrees", "-n", "2", "-q", "2"});
    CHECK(json.out ==
          "{\"order\":\"6\",\"degrees\":[{\"degree\":\"1\",\"count\":\"2\"},"
          "{\"degree\":\"2\",\"count\":\"1\"}]}\n");
}

TEST_CASE("cli verify") {
    const auto ok = run({"verify", "--suite", "a7"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("[PASS] a7") == 0);

    const auto capped = run({"verify", "--suite", "valuation", "--max-n", "8", "--jobs", "2"});
    CHECK(capped.code == 0);
    CHECK(capped.out.find("n <= 8") != std::string::npos);

    const auto unknown = run({"verify", "--suite", "nonsense"});
    CHECK(unknown.code == 2);
}

TEST_CASE("cli help") {
    const auto top = run({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("partitions") != std::string::npos);
    CHECK(run({"graph", "--help"}).code == 0);
}

TEST_CASE("cli error handling") {
    CHECK(run({"degree", "oops"}).code == 2);
    CHECK(run({"pi-irr", "9", "-p", "4", "-q", "3"}).code == 2);
    CHECK(run({"witness", "sym", "10", "-p", "2", "-q", "11"}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"graph", "nilpotent", "2:x"}).code == 2);
    CHECK(run({"gl", "degrees", "-n", "2", "-q", "6"}).code == 2);
    CHECK(run({}).code == 2);  // a subcommand is required
}

TEST_CASE("cli env cap") {
    setenv("PICHAR_MAX_N", "6", 1);
    const auto capped = run({"verify", "--suite", "valuation", "--max-n", "30"});
    unsetenv("PICHAR_MAX_N");
    CHECK(capped.code == 0);
    CHECK(capped.out.find("n <= 6") != std::string::npos);
}

TEST_CASE("cli determinism") {
    const auto a = run({"pi-irr", "12", "-p", "5", "-q", "7", "--group", "sym"});
    const auto b = run({"pi-irr", "12", "-p", "5", "-q", "7", "--group", "sym"});
    CHECK(a.out == b.out);
    const auto v1 = run({"verify", "--suite", "sym-classify", "--max-n", "12", "--jobs", "1"});
    const auto v4 = run({"verify", "--suite", "sym-classify", "--max-n", "12", "--jobs", "4"});
    CHECK(v1.out == v4.out);
}

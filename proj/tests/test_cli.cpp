#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "quadgenus/cli.hpp"

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int const code = quadgenus::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::ordered_json run_json(std::vector<std::string> args)
{
    args.insert(args.begin(), "--json");
    auto const r = run(args);
    return nlohmann::ordered_json::parse(r.out);
}

bool contains(std::string const & s, std::string const & needle)
{
    return s.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("factor and genus field in text mode")
{
    auto const f = run({"factor", "840"});
    CHECK(f.code == 0);
    CHECK(contains(f.out, "840 = -3 · -7 · 5 · 8"));
    CHECK(contains(f.out, "r = 2, t = 4"));
    auto const g = run({"genus-field", "840"});
    CHECK(g.code == 0);
    CHECK(contains(g.out, "sqrt(-3), sqrt(-7), sqrt(5), sqrt(2)"));
    CHECK(contains(g.out, "sqrt(2), sqrt(5), sqrt(21)"));
}

TEST_CASE("json records")
{
    auto const j = run_json({"factor", "840"});
    CHECK(j.dump() ==
          R"({"command":"factor","inputs":{"d":840},"result":{"factors":[-3,-7,5,8],"r":2,"t":4},"status":"ok"})");
    auto const big = run_json({"is-fundamental", "1000000000000000000000001"});
    CHECK(big["inputs"]["n"] == "1000000000000000000000001");
    auto const k = run_json({"kronecker", "840", "11"});
    CHECK(k["status"] == "ok");
    CHECK(k["result"]["value"] == 1);
    // the same invocation prints byte-identical output
    CHECK(run({"--json", "class-group", "-260"}).out == run({"--json", "class-group", "-260"}).out);
}

TEST_CASE("exit codes")
{
    CHECK(run({"is-fundamental", "12"}).code == 0);
    CHECK(run({"factor", "7"}).code == 2);
    CHECK(contains(run({"factor", "7"}).err, "error:"));
    CHECK(run({"verify", "pgt", "--bound", "0"}).code == 2);
    CHECK(run({"verify", "bogus", "--bound", "10"}).code == 2);
    CHECK(run({"verify", "pgt", "--bound", "200000"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"jacobi", "3", "4"}).code == 2);
    CHECK(run({"kronecker", "5", "abc"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--max-factor-bits", "8", "factor", "1005"}).code == 2);
    auto const j = run_json({"factor", "7"});
    CHECK(j["status"] == "invalid-input");
}

TEST_CASE("verify")
{
    auto const r = run({"verify", "pgt", "--bound", "100"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "0 failures"));
    CHECK(contains(r.err, "verify pgt"));
    auto const j = run_json({"--jobs", "2", "verify", "redei", "--bound", "100"});
    CHECK(j["status"] == "ok");
    CHECK(j["result"]["failures"].empty());
    CHECK(run({"verify", "pgt", "--bound", "50", "--jobs", "3"}).out == run({"verify", "pgt", "--bound", "50"}).out);
}

TEST_CASE("characters and forms")
{
    auto const t = run({"char-table", "8"});
    CHECK(t.code == 0);
    CHECK(run_json({"to-kronecker", "3", "-1"})["result"]["discriminant"] == -3);
    CHECK(run({"to-kronecker", "8", "-1,1"}).code == 2);
    CHECK(run_json({"conductor", "8", "-1,1"})["result"]["conductor"] == 4);
    CHECK(run_json({"equivalent", "1", "6", "-1", "-1", "6", "1"})["result"]["equivalent"] == true);
    CHECK(run_json({"equivalent", "2", "1", "3", "2", "-1", "3"})["result"]["equivalent"] == false);
    CHECK(run_json({"unit-norm", "10"})["result"]["norm"] == -1);
    CHECK(run_json({"odd-class", "21"})["result"]["odd"] == true);
    auto const q = run_json({"quartic-splittings", "205"});
    REQUIRE(q["result"]["factorizations"].size() == 1);
    auto const g = run({"genus-chars", "-84"});
    CHECK(g.code == 0);
}

#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "canform/cli.hpp"
#include "canform/serialize.hpp"

using namespace canform;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "canform");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("compute free latex")
{
    Run r = run({"compute", "--type", "A", "--rank", "2", "--weight", "2,1", "--basis", "free", "--format", "latex"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("\\Omega_{(2,1)} =", 0) == 0);
    CHECK(r.out.find("\\tilde{f}_{1}\\tilde{f}_{2}\\tilde{f}_{1}") != std::string::npos);
}

TEST_CASE("compute pbw json")
{
    Run r = run({"compute", "--type", "A", "--rank", "2", "--weight", "1,1", "--basis", "pbw", "--format", "json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["coefficients"].size() == 2);
    const Var t = Var::t(1, 1), s = Var::t(2, 1), o = Var::origin();
    for (const auto &c : j["coefficients"]) {
        RatFun f = ratfun_from_json(c["coefficient"]);
        if (c["p"] == json::array({1, 0, 1}))
            CHECK(equals(f, RatFun::inverse_difference(t, o) * RatFun::inverse_difference(s, o)));
        else
            CHECK(equals(f, RatFun::inverse_difference(t, o) * RatFun::inverse_difference(s, t)));
    }
}

TEST_CASE("compute rep text")
{
    Run r = run({"compute", "--rank", "1", "--weight", "2", "--basis", "rep", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("F_{e1-e2} v1 (x) F_{e1-e2} v2") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(run({"compute", "--type", "D", "--rank", "2", "--weight", "1,1"}).code == 3);
    CHECK(run({"compute", "--type", "B", "--rank", "1", "--weight", "1", "--basis", "pbw"}).code == 3);
    CHECK(run({"compute", "--rank", "2", "--weight", "1"}).code == 2);
    CHECK(run({"compute", "--weight", "1,x"}).code == 2);
    CHECK(run({"compute", "--type", "E", "--weight", "1"}).code == 2);
    CHECK(run({"compute", "--weight", "1", "--format", "pdf"}).code == 2);
    CHECK(run({"verify", "nothing"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"compute", "--help"}).code == 0);
}

TEST_CASE("verify suites")
{
    Run r = run({"verify", "residue", "--type", "A", "--rank", "1", "--weight", "2"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["status"] == "pass");
    CHECK(j["suite"] == "residue");
    CHECK(run({"verify", "all", "--max-weight", "2", "--max-rank", "2", "--types", "A2,B2,C2,D3"}).code == 0);
    CHECK(run({"verify", "serre", "--types", "B2"}).code == 0);
}

TEST_CASE("corrupted ordering fails")
{
    Run r = run({"verify", "pbw", "--types", "A2", "--max-weight", "3", "--corrupt-order"});
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    CHECK(j["status"] == "fail");
    bool has_counterexample = false;
    for (const auto &rep : j["reports"])
        has_counterexample = has_counterexample || !rep["counterexamples"].empty();
    CHECK(has_counterexample);
}

TEST_CASE("output is deterministic and independent of --jobs")
{
    const std::vector<std::string> args{"verify", "all", "--max-weight", "3", "--max-rank", "2", "--types", "A2,B2"};
    Run one = run(args);
    auto more = args;
    more.insert(more.end(), {"--jobs", "3"});
    Run three = run(more);
    CHECK(one.code == 0);
    CHECK(one.out == three.out);
    CHECK(run(args).out == one.out);
    Run a = run({"compute", "--type", "C", "--rank", "2", "--weight", "2,1", "--basis", "pbw"});
    CHECK(a.out == run({"compute", "--type", "C", "--rank", "2", "--weight", "2,1", "--basis", "pbw"}).out);
}

TEST_CASE("seed flag and environment override")
{
    json j = json::parse(run({"verify", "matsuo", "--seed", "42"}).out);
    CHECK(j["seed"] == "42");
    setenv("CANFORM_SEED", "7", 1);
    j = json::parse(run({"verify", "matsuo", "--seed", "42"}).out);
    unsetenv("CANFORM_SEED");
    CHECK(j["seed"] == "7");
    CHECK(j["status"] == "pass");
}

TEST_CASE("export and --out")
{
    const auto path = std::filesystem::temp_directory_path() / "canform_cli_test.json";
    CHECK(run({"export", "roots", "--type", "B", "--rank", "3", "--out", path.string()}).code == 0);
    std::ifstream in(path);
    json j = json::parse(in);
    CHECK(j["roots"].size() == 9);
    std::filesystem::remove(path);

    Run tex = run({"export", "roots", "--type", "D", "--rank", "4", "--format", "latex"});
    CHECK(tex.out.rfind("\\begin{tabular}", 0) == 0);
    Run flags = run({"export", "flags", "--weight", "1,1"});
    CHECK(flags.code == 0);
    CHECK(json::parse(flags.out)["words"].size() == 2);
    CHECK(run({"export", "roots"}).code == 2);
}

TEST_CASE("corpus verb")
{
    Run r = run({"corpus", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(run({"corpus", "--file", "/nonexistent/corpus.txt"}).code == 3);
}

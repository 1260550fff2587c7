#include <cstdio>
#include <fstream>
#include <sstream>

#include "cobord/cli.hpp"
#include "cobord/chern.hpp"
#include "cobord/json_io.hpp"
#include "doctest.h"

using namespace cobord;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented examples") {
    Run r = run({"nseries", "--model", "free", "-n", "2", "-D", "3"});
    CHECK(r.status == 0);
    CHECK(r.out == "2*x + a[1,1]*x^2 + 2*a[1,2]*x^3\n");

    r = run({"component", "Q8", "--chow", "-d", "2", "--json"});
    CHECK(r.status == 0);
    CHECK(r.out == "{\"rank\":0,\"torsion\":[\"8\"]}\n");

    r = run({"cells", "gr", "2", "4"});
    CHECK(r.status == 0);
    CHECK(r.out == "ranks: 1 1 2 1 1\n");
}

TEST_CASE("every subcommand runs and is deterministic") {
    std::vector<std::vector<std::string>> commands{
        {"nseries", "-n", "3", "-D", "3"},
        {"nseries", "-n", "-2", "--model", "mult"},
        {"inverse", "--model", "log", "-D", "5"},
        {"pseries"},
        {"pseries", "--model", "free", "-D", "5"},
        {"sp2", "--model", "add"},
        {"sp2", "--roots", "paired", "-D", "4"},
        {"present", "O(3)", "--model", "log", "-D", "4"},
        {"chow", "SO(5)", "-D", "5"},
        {"component", "Z/2xZ/4", "-d", "1"},
        {"bq-relations", "-D", "4"},
        {"cells", "p", "2", "x", "gr", "1", "3", "--list"},
        {"axioms", "--model", "mult"},
    };
    for (auto cmd : commands) {
        INFO(cmd.front());
        Run a = run(cmd);
        Run b = run(cmd);
        CHECK(a.status == 0);
        CHECK(a.err.empty());
        CHECK_FALSE(a.out.empty());
        CHECK(a.out == b.out);
        cmd.push_back("--json");
        Run j = run(cmd);
        CHECK(j.status == 0);
        CHECK(Json::accept(j.out));
        CHECK(run(cmd).out == j.out);
    }
}

TEST_CASE("json output re-parses into equal values") {
    Run r = run({"nseries", "-n", "3", "-D", "4", "--json"});
    CHECK(series_from_json(Json::parse(r.out)) == n_series(build_model(ModelKind::UniversalFree, 4), 3));

    r = run({"pseries", "--json"});
    ExpressResult p = express_from_json(Json::parse(r.out));
    ExpressResult expected = p_series(build_model(ModelKind::UniversalLog, 6));
    CHECK(p.result == expected.result);
    CHECK(p.residual.is_zero());

    r = run({"present", "Q8", "-D", "4", "--json"});
    GradedPresentation q = presentation_from_json(Json::parse(r.out));
    CHECK(structurally_equal(q, present(parse_group("Q8"), build_model(ModelKind::UniversalFree, 4))));

    r = run({"component", "Q8", "-d", "3", "--json"});
    CHECK(component_from_json(Json::parse(r.out), 3) == GradedComponent{3, 0, {Integer(2), Integer(2)}});

    r = run({"bq-relations", "--model", "add", "-D", "4", "--json"});
    Json arr = Json::parse(r.out);
    REQUIRE(arr.size() == 6);
    CHECK(to_string(series_from_json(arr[5])) == "-8*z");
}

TEST_CASE("text formats") {
    Run r = run({"pseries", "--model", "mult"});
    CHECK(r.out == "P(u) = -beta*u\nresidual = 0\n");
    r = run({"axioms", "-D", "4"});
    CHECK(r.out == "left-unit: ok\nright-unit: ok\ncommutativity: ok\nassociativity: fails in degree 4\n");
    r = run({"component", "Q8", "-d", "1"});
    CHECK(r.out == "degree 1: rank 0, torsion [2, 2]\n");
    r = run({"present", "GL(2)"});
    CHECK(r.out ==
          "group: GL(2)\nformula: Omega*[[c1,c2]]\ncoefficient: lazard-free D=6 Dc=6\ngenerators: c1:1 c2:2\n"
          "relations: none\n");
    r = run({"inverse", "--model", "free", "-D", "3"});
    CHECK(r.out == "-x + a[1,1]*x^2 - a[1,1]^2*x^3\n");
}

TEST_CASE("usage errors exit 64") {
    for (std::vector<std::string> cmd : std::vector<std::vector<std::string>>{
             {},
             {"bogus"},
             {"nseries"},
             {"nseries", "-n", "2", "--frobnicate"},
             {"nseries", "-n", "2", "-D", "0"},
             {"nseries", "-n", "2", "--coeff-bound", "0"},
             {"nseries", "-n", "2", "--model", "weird"},
             {"component", "Q8"},
             {"sp2", "--roots", "quad"},
         }) {
        Run r = run(cmd);
        CHECK(r.status == kExitUsage);
        CHECK(r.out.empty());
    }
    Run help = run({"--help"});
    CHECK(help.status == 0);
    CHECK(help.out.find("nseries") != std::string::npos);
}

TEST_CASE("computation errors exit 1 with a json error") {
    Run r = run({"present", "U(2)"});
    CHECK(r.status == kExitComputation);
    CHECK(r.out.empty());
    Json e = Json::parse(r.err);
    CHECK(e["error"] == "UnsupportedGroup");
    CHECK(e["message"].is_string());

    r = run({"present", "GL(4)", "-D", "3"});
    CHECK(r.status == kExitComputation);
    CHECK(Json::parse(r.err)["error"] == "BoundTooSmall");

    r = run({"cells", "gr", "3", "2"});
    CHECK(r.status == kExitComputation);
    CHECK(Json::parse(r.err)["error"] == "InvalidParameters");
}

TEST_CASE("output file") {
    const std::string path = "cli_output_test.txt";
    Run r = run({"nseries", "-n", "2", "-D", "3", "-o", path});
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == "2*x + a[1,1]*x^2 + 2*a[1,2]*x^3\n");
    std::remove(path.c_str());

    r = run({"nseries", "-n", "2", "-o", "/nonexistent-dir/out.txt"});
    CHECK(r.status == kExitComputation);
}

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "jetsolve/cli.hpp"
#include "jetsolve/errors.hpp"
#include "jetsolve/io.hpp"
#include "support.hpp"

using namespace jetsolve;
using support::P;

namespace {

std::string data(const std::string& name) { return std::string(JETSOLVE_TEST_DATA) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("formats") {
  TEST_CASE("poly files") {
    const PolySystem s = parse_poly_system("# comment\nvars x y\n\neq x + y  # trailing\neq x*y - 2\n");
    CHECK(s.variables == std::vector<std::string>{"x", "y"});
    REQUIRE(s.equations.size() == 2);
    CHECK(s.equations[1] == P("x*y-2"));
    CHECK_THROWS_WITH_AS(parse_poly_system("vars x\neq x +\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_poly_system("vars x\nfoo x\n"), doctest::Contains("line 2"), ParseError);
    CHECK(parse_poly_system("eq y - 1\neq x10 + x9\n").variables == std::vector<std::string>{"x9", "x10", "y"});
    CHECK_THROWS_AS(parse_poly_system("vars x\n"), ParseError);
    CHECK_THROWS_AS(parse_poly_system("vars x\neq x - y\neq x\n"), ParseError);
  }

  TEST_CASE("pde files") {
    const PdeSystem s = load_pde_system(data("ode_pair.pde"));
    CHECK(s.functions == 1);
    CHECK(s.surplus == 1);
    CHECK(s.base_variables == std::vector<std::string>{"x"});
    CHECK(s.equations[0] == P("S1[1] - S1[0]^2"));
    CHECK_THROWS_WITH_AS(load_pde_system(data("malformed.pde")), doctest::Contains("line 5"), ParseError);
    CHECK_THROWS_AS(parse_pde_system("unknowns 1\nsurplus 1\nvars x\neq S1[1] - q\neq S1\n"), ParseError);
    CHECK_THROWS_AS(parse_pde_system("unknowns 1\nsurplus 1\nvars x\neq S1[1]\n"), Error);
    const PdeSystem t = parse_pde_system("unknowns 1\nsurplus 1\nvars x y\neq S1[1,0] - S1\neq S1[0,1]\n");
    CHECK(t.equations[0] == P("S1[1,0] - S1[0,0]"));
  }

  TEST_CASE("points") {
    const Assignment a = parse_point(R"({"S1": "1/2", "S1[1]": 3, "x": "-2"})", 1);
    CHECK(a.at("S1[0]") == Scalar(1, 2));
    CHECK(a.at("S1[1]") == 3);
    CHECK(a.at("x") == -2);
    CHECK_THROWS_AS(parse_point("[1, 2]", 1), ParseError);
    CHECK_THROWS_AS(parse_point(R"({"x": "1/0"})", 1), ParseError);
    CHECK_THROWS_AS(parse_point(R"({"x": 1.5})", 1), ParseError);
    CHECK_THROWS_AS(parse_point("{", 1), ParseError);
  }

  TEST_CASE("missing files") { CHECK_THROWS_AS(read_file(data("no_such_file")), Error); }

  TEST_CASE("prolonged systems round trip") {
    std::mt19937 rng(91);
    for (int trial = 0; trial < 20; ++trial) {
      const unsigned m = 1 + trial % 2;
      const PdeSystem s = support::random_pde(rng, 1 + trial % 3 / 2, 1, m, 3);
      const Flavor flavor = trial % 2 ? Flavor::extended : Flavor::plain;
      const ProlongedSystem ps = prolong(s, OrderVector(std::vector<unsigned>(m, 1 + trial % 3)), flavor);
      const std::string first = dump(to_json(ps));
      const ProlongedSystem back = prolonged_from_json(Json::parse(first));
      CHECK(back.codec() == ps.codec());
      CHECK(dump(to_json(back)) == first);
    }
  }

  TEST_CASE("json shapes") {
    const Json c = to_json(counts(1, 1, OrderVector({3})));
    CHECK(c.dump() == R"({"N_H":6,"N_S":4,"N_H_w":8,"N_S_w":5})");
    CHECK(dump(Json::object()) == "{}\n");
    const Json cond = to_json(SideCondition{P("x")});
    CHECK(cond["relation"] == "!= 0");
    CHECK(cond["state"] == "symbolic");
  }
}

TEST_SUITE("cli") {
  TEST_CASE("reduce") {
    Run r = cli_run({"reduce", data("quadratic.poly")});
    CHECK(r.code == cli::kSolved);
    CHECK(contains(r.out, "solution: x = 1"));
    r = cli_run({"reduce", data("contradictory.poly")});
    CHECK(r.code == cli::kInconsistent);
    r = cli_run({"reduce", data("coprime.poly")});
    CHECK(r.code == cli::kInconsistent);
    r = cli_run({"--format", "json", "reduce", data("quadratic.poly")});
    const Json j = Json::parse(r.out);
    CHECK(j["status"] == "solved");
    CHECK(j["solutions"][0]["x"] == "1");
    CHECK(j["steps"][0]["kind"] == "pair-reduce");
  }

  TEST_CASE("solve and eliminate") {
    Run r = cli_run({"--format", "json", "solve", data("three_curves.poly")});
    CHECK(r.code == cli::kSolved);
    const Json j = Json::parse(r.out);
    REQUIRE(j["solutions"].size() == 2);
    CHECK(j["solutions"][1]["x"] == "2");
    r = cli_run({"eliminate", data("three_curves.poly"), "--var", "y"});
    CHECK(r.code == cli::kSolved);
    CHECK(contains(r.out, "x + y - 3"));
  }

  TEST_CASE("pde pipeline") {
    Run r = cli_run({"solve", data("ode_pair.pde"), "--orders", "2"});
    CHECK(r.code == cli::kSolved);
    CHECK(contains(r.out, "S1[0] = 0, S1[1] = 0, S1[2] = 0"));
    CHECK(contains(r.out, "certified: yes"));
    r = cli_run({"rank", data("exp_family.pde"), "--orders", "1", "--point", data("family_point.json")});
    CHECK(r.code == cli::kNotCertified);
    r = cli_run({"rank", data("exp_family.pde"), "--orders", "1", "--point", data("bad_point.json")});
    CHECK(r.code == cli::kNotASolution);
    CHECK(contains(r.err, "alpha=1"));
    r = cli_run({"rank", data("ode_pair.pde"), "--orders", "1", "--point", data("zero_point.json")});
    CHECK(r.code == cli::kSolved);
  }

  TEST_CASE("prolong and counts") {
    Run r = cli_run({"--format", "json", "prolong", data("ode_pair.pde"), "--orders", "2", "--extended"});
    CHECK(r.code == cli::kSolved);
    const Json j = Json::parse(r.out);
    CHECK(j["flavor"] == "extended");
    CHECK(j["equations"].size() == 6);
    CHECK(j["unknowns"].size() == 4);
    r = cli_run({"counts", "--p", "1", "--n", "1", "--m", "2", "--orders", "1,1"});
    CHECK(r.code == cli::kSolved);
    CHECK(contains(r.err, "N_H < N_S"));
    r = cli_run({"--format", "json", "counts", "--p", "2", "--n", "1", "--m", "1", "--minimize"});
    CHECK(Json::parse(r.out)["minimal"]["orders"][0] == 2);
  }

  TEST_CASE("oracle") {
    Run r = cli_run({"oracle", "resultant", data("three_curves.poly"), "--var", "y", "--pair", "1,3"});
    CHECK(r.code == cli::kSolved);
    CHECK(contains(r.out, "2*x^2 - 6*x + 4"));
    r = cli_run({"oracle", "roots", data("three_curves.poly"), "--bound", "5"});
    CHECK(contains(r.out, "x = 1, y = 2"));
    r = cli_run({"oracle", "gcd", data("quadratic.poly"), "--var", "x"});
    CHECK(contains(r.out, "x - 1"));
  }

  TEST_CASE("errors") {
    CHECK(cli_run({}).code == cli::kError);
    CHECK(cli_run({"bogus"}).code == cli::kError);
    CHECK(cli_run({"reduce", data("no_such_file.poly")}).code == cli::kError);
    Run r = cli_run({"solve", data("malformed.pde"), "--orders", "1"});
    CHECK(r.code == cli::kError);
    CHECK(contains(r.err, "line 5"));
    CHECK(cli_run({"counts", "--p", "1", "--n", "1", "--m", "2", "--orders", "1"}).code == cli::kError);
  }

  TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "jetsolve_cli_output.json";
    Run r = cli_run({"--format", "json", "--output", path.string(), "reduce", data("quadratic.poly")});
    CHECK(r.code == cli::kSolved);
    CHECK(Json::parse(read_file(path))["status"] == "solved");
    std::filesystem::remove(path);
  }
}

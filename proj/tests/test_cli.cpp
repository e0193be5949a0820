#include <random>

#include "doctest.h"
#include "mpp/cli.hpp"
#include "mpp/correspondence.hpp"
#include "mpp/expr.hpp"

using namespace mpp;

namespace {

Parameter P(const std::string& expr) { return normalize(parse_param_expr(expr)); }

/// Random valid parameter, printed canonically.
Parameter randomParameter(std::mt19937& rng) {
  std::uniform_int_distribution<int> rankDist(0, 4);
  EnumOpts opts;
  opts.phaseI = true;
  std::vector<Parameter> pool = enumerate_parameters(rankDist(rng), opts);
  if (pool.empty()) return Parameter{};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(rng)];
}

}  // namespace

TEST_CASE("expression parsing examples") {
  {
    std::vector<BlockSpec> specs = parse_param_expr("2*[1 x S(2)] + [sgn x S(2)]");
    REQUIRE(specs.size() == 2);
    CHECK(specs[0].mult == 2);
    CHECK(specs[1].mult == 1);
  }
  {
    Parameter p = P("[unr(1/4,0) x S(1)] + [unr(3/4,0) x S(1)]");
    CHECK(p.jPairs().size() == 1);
  }
  CHECK_THROWS_WITH_AS(P("[1 x S(0)]"), doctest::Contains("BadA"), Error);
  CHECK_THROWS_AS(parse_param_expr("[1 x S(2)"), Error);
  CHECK_THROWS_AS(parse_param_expr("[1 y S(2)]"), Error);
  CHECK_THROWS_AS(parse_param_expr(""), Error);
  CHECK_THROWS_AS(parse_param_expr("[foo x S(2)]"), Error);
  // abstract labels round trip with their attributes
  Parameter abs = P("2*[rho(tau;dim=2,sd=S,eps=-1,wm1=+1) x S(2)]");
  CHECK(normalize(parse_param_expr(print_parameter(abs))) == abs);
  Parameter nsd = P("[rho(pi;dim=2,sd=dual:piv,wm1=-1) x S(1)] + [rho(piv;dim=2,sd=dual:pi,wm1=-1) x S(1)]");
  CHECK(normalize(parse_param_expr(print_parameter(nsd))) == nsd);
}

TEST_CASE("print then parse is the identity on canonical forms") {
  CHECK(print_parameter(Parameter{}) == "0");
  CHECK(P("0").empty());
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    Parameter p = randomParameter(rng);
    std::string text = print_parameter(p);
    CHECK(normalize(parse_param_expr(text)) == p);
    CHECK(print_parameter(normalize(parse_param_expr(text))) == text);
  }
}

TEST_CASE("sign vector parsing") {
  CHECK(parse_signs("+,-", 2) == SignVector{{1, -1}});
  CHECK(parse_signs("+1,-1", 2) == SignVector{{1, -1}});
  CHECK(parse_signs("", 0) == SignVector{{}});
  CHECK(print_signs(SignVector{{1, -1}}) == "+,-");
  CHECK_THROWS_AS(parse_signs("+,?", 2), Error);
  CHECK_THROWS_AS(parse_signs("+", 2), Error);
}

TEST_CASE("cli transfer matches the worked example") {
  CliResult r = run_cli({"transfer", "[1 x S(2)] + [sgn x S(2)]", "--chi", "+,+"});
  REQUIRE(r.exitCode == 0);
  CHECK(r.out.find("\"chiOut\": \"-,+\"") != std::string::npos);
}

TEST_CASE("cli chi order follows the canonical I+ order, not input order") {
  CliResult a = run_cli({"transfer", "[1 x S(2)] + [sgn x S(2)]", "--chi", "+,-"});
  CliResult b = run_cli({"transfer", "[sgn x S(2)] + [1 x S(2)]", "--chi", "+,-"});
  REQUIRE(a.exitCode == 0);
  REQUIRE(b.exitCode == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cli verify and weyl examples") {
  CliResult v = run_cli({"verify", "[1 x S(4)] + [1 x S(2)]", "--chi", "+,+"});
  REQUIRE(v.exitCode == 0);
  CHECK(v.out.find("\"agreement\": true") != std::string::npos);

  CliResult w = run_cli({"weyl", "--n", "2", "--word", "1,2,1,2"});
  REQUIRE(w.exitCode == 0);
  CHECK(w.out.find("\"length\": 4") != std::string::npos);
  CHECK(w.out.find("\"minusScalar\": \"q^(-2)\"") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli({"analyze", "[1 x S(2)]"}).exitCode == 0);
  CHECK(run_cli({"analyze", "[1 x S(3)]"}).exitCode == 1);    // domain error
  CHECK(run_cli({"analyze", "[1 x S(2)"}).exitCode == 1);     // syntax error in the expression
  CHECK(run_cli({"analyze"}).exitCode == 2);                  // missing argument
  CHECK(run_cli({"frobnicate"}).exitCode == 2);               // unknown subcommand
  CHECK(run_cli({"verify"}).exitCode == 2);                   // neither expr nor --exhaustive
  CHECK(run_cli({"weyl", "--n", "2", "--word", "7"}).exitCode == 1);
}

TEST_CASE("cli JSON output is deterministic") {
  std::vector<std::vector<std::string>> invocations = {
      {"analyze", "2*[1 x S(2)] + [sgn x S(2)]", "--support"},
      {"verify", "--rank", "2", "--exhaustive"},
      {"factors", "[1 x S(2)] + [1 x S(4)]"},
      {"endoscopy", "[1 x S(2)] + [sgn x S(2)]"},
      {"enumerate", "--rank", "3", "--discrete"},
  };
  for (const auto& args : invocations) {
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    REQUIRE(a.exitCode == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli factors and descend surfaces") {
  CliResult f = run_cli({"factors", "[1 x S(2)]"});
  REQUIRE(f.exitCode == 0);
  CHECK(f.out.find("\"L\": \"(1 - q^(-1/2) X)^-1\"") != std::string::npos);
  CHECK(f.out.find("\"gammaHalf\": \"-1\"") != std::string::npos);

  CliResult fs = run_cli({"factors", "[1 x S(2)] + [sgn x S(2)]", "--s", "1,0"});
  REQUIRE(fs.exitCode == 0);
  CHECK(fs.out.find("\"epsMinusPart\": \"-1\"") != std::string::npos);

  CliResult d = run_cli({"descend", "[1 x S(4)] + [1 x S(2)]", "--chi", "+,+", "--block", "1,4"});
  REQUIRE(d.exitCode == 0);
  CHECK(d.out.find("\"phiMinus\": \"2*[1 x S(2)]\"") != std::string::npos);
  CHECK(d.out.find("\"kernel\": \"diagonal\"") != std::string::npos);

  CliResult e = run_cli({"endoscopy", "[1 x S(2)] + [sgn x S(2)]", "--s", "1,0"});
  REQUIRE(e.exitCode == 0);
  CHECK(e.out.find("\"sign\": \"-1\"") != std::string::npos);
}

TEST_CASE("cli text mode renders without JSON punctuation") {
  CliResult t = run_cli({"--text", "analyze", "[1 x S(2)]"});
  REQUIRE(t.exitCode == 0);
  CHECK(t.out.find('{') == std::string::npos);
  CHECK(t.out.find("rank: 1") != std::string::npos);
}

TEST_CASE("cli global conductor flags reach the factors") {
  // with d odd, eps(1/2, sgn, psi) = -1 flips the orthogonal block values
  CliResult d0 = run_cli({"factors", "[sgn x S(2)]"});
  CliResult d1 = run_cli({"--d-psi", "1", "factors", "[sgn x S(2)]"});
  REQUIRE(d0.exitCode == 0);
  REQUIRE(d1.exitCode == 0);
  CHECK(d0.out.find("\"nu\": \"+\"") != std::string::npos);
  CHECK(d1.out.find("\"nu\": \"+\"") != std::string::npos);  // even a: d drops out
}

#include <algorithm>
#include <random>

#include "doctest.h"
#include "mpp/correspondence.hpp"
#include "mpp/expr.hpp"

using namespace mpp;

namespace {

Parameter P(const std::string& expr) { return normalize(parse_param_expr(expr)); }

std::vector<Parameter> boundedUpTo(int maxRank, bool withI = true) {
  std::vector<Parameter> all;
  EnumOpts opts;
  opts.phaseI = withI;
  for (int r = 0; r <= maxRank; ++r)
    for (Parameter& p : enumerate_parameters(r, opts)) all.push_back(std::move(p));
  return all;
}

}  // namespace

TEST_CASE("unramified characters") {
  UnramifiedCharacter t = UnramifiedCharacter::trivial();
  UnramifiedCharacter s = UnramifiedCharacter::sgn();
  CHECK(t.selfDual());
  CHECK(s.selfDual());
  CHECK(t.quadSign() == 1);
  CHECK(s.quadSign() == -1);
  CHECK(t.dual() == t);
  CHECK(s.dual() == s);
  UnramifiedCharacter quarter(Rational(1, 4), Rational(0));
  CHECK_FALSE(quarter.selfDual());
  CHECK(quarter.dual() == UnramifiedCharacter(Rational(3, 4), Rational(0)));
  CHECK(quarter.dual().dual() == quarter);
  UnramifiedCharacter half(Rational(0), Rational(1, 2));
  CHECK_FALSE(half.bounded());
  CHECK(half.dual() == UnramifiedCharacter(Rational(0), Rational(-1, 2)));
}

TEST_CASE("block self-dual types follow the parity rule") {
  SimpleBlock triv2{SupercuspidalLabel(UnramifiedCharacter::trivial()), 2};
  CHECK(triv2.sd() == SelfDualType::Symplectic);  // orthogonal rho, even a
  SimpleBlock triv3{SupercuspidalLabel(UnramifiedCharacter::trivial()), 3};
  CHECK(triv3.sd() == SelfDualType::Orthogonal);
  AbstractLabel sympl{"tau", 2, SelfDualType::Symplectic, "", -1, 1, {}};
  CHECK(SimpleBlock{SupercuspidalLabel(sympl), 1}.sd() == SelfDualType::Symplectic);
  CHECK(SimpleBlock{SupercuspidalLabel(sympl), 2}.sd() == SelfDualType::Orthogonal);
  SimpleBlock quarter{SupercuspidalLabel(UnramifiedCharacter(Rational(1, 4), Rational(0))), 5};
  CHECK(quarter.sd() == SelfDualType::NotSelfDual);
}

TEST_CASE("normalize: classification examples") {
  Parameter a = P("[1 x S(2)] + [sgn x S(2)]");
  CHECK(a.rank() == 2);
  CHECK(a.iPlus().size() == 2);
  CHECK(a.iMinus().empty());
  CHECK(a.jPairs().empty());

  CHECK_THROWS_WITH_AS(P("[1 x S(3)]"), doctest::Contains("OddOrthogonalMultiplicity"), Error);

  Parameter c = P("[unr(1/4,0) x S(1)] + [unr(3/4,0) x S(1)]");
  CHECK(c.rank() == 1);
  CHECK(c.iPlus().empty());
  CHECK(c.jPairs().size() == 1);
}

TEST_CASE("normalize: error paths") {
  CHECK_THROWS_WITH_AS(P("[unr(1/4,0) x S(1)]"), doctest::Contains("UnpairedNonSelfDual"), Error);
  CHECK_THROWS_WITH_AS(P("[unr(1/4,0) x S(1)] + 2*[unr(3/4,0) x S(1)]"),
                       doctest::Contains("UnpairedNonSelfDual"), Error);
  // an inconsistent abstract label: symplectic type in odd dimension
  CHECK_THROWS_WITH_AS(P("[rho(tau;dim=1,sd=S,eps=+1,wm1=+1) x S(1)]"),
                       doctest::Contains("OddTotalDimension"), Error);
  CHECK_THROWS_WITH_AS(P("[1 x S(0)]"), doctest::Contains("BadA"), Error);
  CHECK_THROWS_WITH_AS(normalize({{SupercuspidalLabel(UnramifiedCharacter::trivial()), 2, 0}}),
                       doctest::Contains("BadMultiplicity"), Error);
  CHECK_THROWS_WITH_AS(P("[rho(x;dim=2,sd=dual:x,wm1=+1) x S(1)]"),
                       doctest::Contains("BadLabel"), Error);
}

TEST_CASE("phase denominators obey the configured bound") {
  // denominator 8 is admitted by default, denominator 3 is not
  Parameter p = P("[unr(1/8,0) x S(1)] + [unr(7/8,0) x S(1)]");
  CHECK(p.rank() == 1);
  CHECK_THROWS_WITH_AS(P("[unr(1/3,0) x S(1)] + [unr(2/3,0) x S(1)]"),
                       doctest::Contains("BadLabel"), Error);
  // the bound is configurable
  std::vector<BlockSpec> specs = {
      {SupercuspidalLabel(UnramifiedCharacter(Rational(1, 3), Rational(0))), 1, 1},
      {SupercuspidalLabel(UnramifiedCharacter(Rational(2, 3), Rational(0))), 1, 1}};
  CHECK(normalize(specs, 12).rank() == 1);
  CHECK_THROWS_AS(normalize(specs, 8), Error);
}

TEST_CASE("normalize merges duplicate terms") {
  Parameter a = P("[1 x S(2)] + [1 x S(2)]");
  Parameter b = P("2*[1 x S(2)]");
  CHECK(a == b);
  CHECK(a.blocks().size() == 1);
  CHECK(a.blocks()[0].second == 2);
}

TEST_CASE("component_data examples") {
  {
    ComponentData cd = component_data(P("[1 x S(2)] + [sgn x S(2)]"));
    REQUIRE(cd.shape.factors.size() == 2);
    CHECK(cd.shape.factors[0].kind == FactorKind::Orthogonal);
    CHECK(cd.shape.factors[0].size == 1);
    CHECK(cd.group.order() == 4);
    CHECK(cd.zPhi == SignVector{{-1, -1}});
  }
  {
    ComponentData cd = component_data(P("2*[1 x S(2)]"));
    REQUIRE(cd.shape.factors.size() == 1);
    CHECK(cd.shape.factors[0].kind == FactorKind::Orthogonal);
    CHECK(cd.shape.factors[0].size == 2);
    CHECK(cd.group.order() == 2);
    CHECK(cd.zPhi == SignVector{{1}});
  }
  {
    ComponentData cd = component_data(P("[unr(1/4,0) x S(1)] + [unr(3/4,0) x S(1)]"));
    REQUIRE(cd.shape.factors.size() == 1);
    CHECK(cd.shape.factors[0].kind == FactorKind::GeneralLinear);
    CHECK(cd.group.order() == 1);
  }
}

TEST_CASE("flags examples") {
  Flags f1 = flags(P("[1 x S(2)] + [sgn x S(2)]"));
  CHECK(f1.bounded);
  CHECK(f1.discrete);
  CHECK(f1.goodParity);
  CHECK(f1.jordan.size() == 2);

  Flags f2 = flags(P("2*[1 x S(2)]"));
  CHECK(f2.bounded);
  CHECK_FALSE(f2.discrete);
  CHECK(f2.goodParity);

  Flags f3 = flags(P("[unr(0,1/2) x S(1)] + [unr(0,-1/2) x S(1)]"));
  CHECK_FALSE(f3.bounded);
  CHECK_FALSE(f3.discrete);
  CHECK_FALSE(f3.goodParity);
}

TEST_CASE("dual examples") {
  Parameter a = P("[1 x S(2)]");
  CHECK(a.dualParam() == a);
  Parameter b = P("[unr(1/4,0) x S(1)] + [unr(3/4,0) x S(1)]");
  CHECK(b.dualParam() == b);
  Parameter c = P("[unr(0,1/2) x S(1)] + [unr(0,-1/2) x S(1)]");
  CHECK(c.dualParam() == c);
}

TEST_CASE("every valid parameter is globally self-dual") {
  for (const Parameter& phi : boundedUpTo(3)) CHECK(phi.dualParam() == phi);
}

TEST_CASE("component group order and factor bookkeeping") {
  for (const Parameter& phi : boundedUpTo(3)) {
    ComponentData cd = component_data(phi);
    CHECK(cd.group.order() == (std::size_t{1} << phi.iPlus().size()));
    std::size_t orth = 0;
    for (const CentralizerFactor& f : cd.shape.factors)
      if (f.kind == FactorKind::Orthogonal) ++orth;
    CHECK(orth == phi.iPlus().size());
    CHECK(cd.group.basis == phi.iPlus());
  }
}

TEST_CASE("normalize is idempotent and order-insensitive") {
  std::mt19937 rng(7);
  for (const Parameter& phi : boundedUpTo(3)) {
    // feed its own blocks back, split and shuffled
    std::vector<BlockSpec> specs;
    for (const auto& [b, m] : phi.blocks())
      for (int c = 0; c < m; ++c) specs.push_back({b.rho, b.a, 1});
    std::shuffle(specs.begin(), specs.end(), rng);
    CHECK(normalize(specs) == phi);
  }
}

TEST_CASE("discrete implies good parity and multiplicity-free jordan") {
  for (const Parameter& phi : boundedUpTo(4, false)) {
    Flags f = flags(phi);
    if (f.discrete) {
      CHECK(f.goodParity);
      for (const auto& [b, m] : f.jordan) CHECK(m == 1);
    }
    if (f.goodParity) CHECK(f.bounded);
  }
}

TEST_CASE("character pairing is bimultiplicative") {
  ComponentGroup g;
  g.basis = {0, 1, 2};
  auto elems = g.elements();
  CHECK(elems.size() == 8);
  for (const auto& chi : elems)
    for (const auto& x : elems)
      for (const auto& y : elems)
        CHECK(ComponentGroup::pairing(chi, x * y) ==
              ComponentGroup::pairing(chi, x) * ComponentGroup::pairing(chi, y));
}

TEST_CASE("involution image and signature validation") {
  Parameter phi = P("2*[1 x S(2)]");
  ComponentData cd = component_data(phi);
  CHECK(involutionImage(phi, {{0}}) == SignVector{{1}});
  CHECK(involutionImage(phi, {{1}}) == SignVector{{-1}});
  CHECK(involutionImage(phi, {{2}}) == SignVector{{1}});
  CHECK_THROWS_WITH_AS(checkSignature(cd.shape, {{3}}), doctest::Contains("InvalidSignature"),
                       Error);
  CHECK_THROWS_WITH_AS(checkSignature(cd.shape, {{1, 1}}), doctest::Contains("InvalidSignature"),
                       Error);
  // symplectic factors need even k
  Parameter psi = P("2*[1 x S(1)]");
  ComponentData cd2 = component_data(psi);
  CHECK_THROWS_WITH_AS(checkSignature(cd2.shape, {{1}}), doctest::Contains("InvalidSignature"),
                       Error);
}

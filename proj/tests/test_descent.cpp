#include "doctest.h"
#include "mpp/correspondence.hpp"
#include "mpp/descent.hpp"
#include "mpp/expr.hpp"

using namespace mpp;

namespace {

Parameter P(const std::string& expr) { return normalize(parse_param_expr(expr)); }

SimpleBlock B(const std::string& xi, int a) {
  UnramifiedCharacter c = (xi == "1") ? UnramifiedCharacter::trivial() : UnramifiedCharacter::sgn();
  return {SupercuspidalLabel(c), a};
}

const PsiConductor psi0 = PsiConductor::standard(0);

std::vector<Parameter> discreteUpTo(int maxRank) {
  std::vector<Parameter> all;
  EnumOpts opts;
  opts.discreteOnly = true;
  for (int r = 0; r <= maxRank; ++r)
    for (Parameter& p : enumerate_parameters(r, opts)) all.push_back(std::move(p));
  return all;
}

}  // namespace

TEST_CASE("descend_param examples") {
  Parameter phi = P("[1 x S(4)] + [1 x S(2)]");
  {
    ParamDescent pd = descend_param(phi, B("1", 4));
    CHECK(pd.minus == P("2*[1 x S(2)]"));
    CHECK(pd.dcase.tag == DescentTag::Case2);
  }
  {
    ParamDescent pd = descend_param(phi, B("1", 2));
    CHECK(pd.minus == P("[1 x S(4)]"));
    CHECK(pd.dcase.tag == DescentTag::Case3);
  }
  {
    ParamDescent pd = descend_param(P("[1 x S(4)] + [sgn x S(2)]"), B("1", 4));
    CHECK(pd.minus == P("[1 x S(2)] + [sgn x S(2)]"));
    CHECK(pd.dcase.tag == DescentTag::Case1);
  }
  CHECK_THROWS_WITH_AS(descend_param(phi, B("sgn", 2)), doctest::Contains("BlockNotPresent"),
                       Error);
  CHECK_THROWS_WITH_AS(descend_param(P("2*[1 x S(2)]"), B("1", 2)),
                       doctest::Contains("NotDiscrete"), Error);
  // an a = 1 block can exist for abstract symplectic labels; it cannot descend
  Parameter abs = P("[rho(tau;dim=2,sd=S,eps=-1,wm1=+1) x S(1)]");
  CHECK_THROWS_WITH_AS(descend_param(abs, abs.blocks()[0].first), doctest::Contains("BadA"),
                       Error);
}

TEST_CASE("component descent and kernels") {
  Parameter phi = P("[1 x S(4)] + [1 x S(2)]");
  {
    ComponentDescent cd = component_descent(phi, B("1", 4));
    CHECK(cd.kernel.kind == KernelKind::Diagonal);
    CHECK(cd.pd.minus.iPlus().size() == 1);
    // both slots land on the merged O(2) slot
    CHECK(cd.slotTarget == std::vector<int>{0, 0});
  }
  {
    ComponentDescent cd = component_descent(phi, B("1", 2));
    CHECK(cd.kernel.kind == KernelKind::Coordinate);
    CHECK(cd.kernel.slot0 == 0);  // (1,2) sorts before (1,4)
    CHECK(cd.pd.minus.iPlus().size() == 1);
    CHECK(cd.slotTarget == std::vector<int>{-1, 0});
  }
  {
    ComponentDescent cd = component_descent(P("[1 x S(4)] + [sgn x S(2)]"), B("1", 4));
    CHECK(cd.kernel.kind == KernelKind::Trivial);
    CHECK(cd.pd.minus.iPlus().size() == 2);  // bijection
  }
}

TEST_CASE("descent exactness and nu stability, rank <= 4 here") {
  for (const Parameter& phi : discreteUpTo(4)) {
    Character nu = nu_char(phi, psi0);
    for (const auto& [b, m] : phi.blocks()) {
      if (b.a < 2) continue;
      ComponentDescent cd = component_descent(phi, b);
      std::size_t sPhi = std::size_t{1} << phi.iPlus().size();
      std::size_t sMinus = std::size_t{1} << cd.pd.minus.iPlus().size();
      CHECK(sPhi == cd.kernel.order() * sMinus);
      // kernel classification matches the case tags
      switch (cd.pd.dcase.tag) {
        case DescentTag::Case1:
          CHECK(cd.kernel.kind == KernelKind::Trivial);
          CHECK(b.a > 2);
          CHECK(phi.indexOf({b.rho, b.a - 2}) < 0);
          break;
        case DescentTag::Case2:
          CHECK(cd.kernel.kind == KernelKind::Diagonal);
          CHECK(b.a > 2);
          CHECK(phi.indexOf({b.rho, b.a - 2}) >= 0);
          break;
        case DescentTag::Case3:
          CHECK(cd.kernel.kind == KernelKind::Coordinate);
          CHECK(b.a == 2);
          break;
      }
      // surjectivity with kernel exactly T: every descended character pulls
      // back to |T| characters
      Character nuMinus = nu_char(cd.pd.minus, psi0);
      for (std::size_t k = 0; k < cd.slotTarget.size(); ++k) {
        if (cd.slotTarget[k] < 0) continue;
        // nu components survive descent unchanged (z is a-independent)
        CHECK(nu.s[k] == nuMinus.s[static_cast<std::size_t>(cd.slotTarget[k])]);
      }
      // rank bookkeeping
      CHECK(cd.pd.minus.rank() == phi.rank() - 1);
      CHECK(cd.pd.minus.goodParity());
    }
  }
}

TEST_CASE("valid choices examples") {
  {
    Parameter phi = P("[1 x S(4)] + [1 x S(2)]");
    auto cs = valid_choices(phi, SignVector{{1, 1}}, psi0);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].block == B("1", 4));
    CHECK(cs[0].tag == DescentTag::Case2);
    CHECK(cs[0].alphaPrime == 1);
    CHECK(cs[0].alphaDouble == 1);
  }
  {
    Parameter phi = P("[1 x S(2)] + [sgn x S(2)]");
    auto cs = valid_choices(phi, SignVector{{-1, 1}}, psi0);
    CHECK(cs.size() == 2);
  }
  CHECK(valid_choices(P("[sgn x S(2)]"), SignVector{{1}}, psi0).empty());
  CHECK(valid_choices(P("[sgn x S(2)]"), SignVector{{-1}}, psi0).empty());
}

TEST_CASE("enhanced descent examples") {
  {
    EnhancedParameter low =
        jacquet_enhanced(P("[1 x S(4)] + [1 x S(2)]"), SignVector{{1, 1}}, B("1", 4), psi0);
    CHECK(low.phi == P("2*[1 x S(2)]"));
    CHECK(low.chi == SignVector{{1}});
  }
  {
    EnhancedParameter low =
        jacquet_enhanced(P("[1 x S(2)] + [sgn x S(2)]"), SignVector{{-1, 1}}, B("sgn", 2), psi0);
    CHECK(low.phi == P("[1 x S(2)]"));
    CHECK(low.chi == SignVector{{-1}});
  }
  {
    // Case1: the replaced slot keeps its nu component
    Parameter phi = P("[1 x S(4)] + [sgn x S(2)]");
    EnhancedParameter low = jacquet_enhanced(phi, SignVector{{1, 1}}, B("1", 4), psi0);
    CHECK(low.phi == P("[1 x S(2)] + [sgn x S(2)]"));
    // (chi nu) = (-1, +1) relabels; nu_minus = (-1, +1): product (+1, +1)
    CHECK(low.chi == SignVector{{1, 1}});
  }
  // the kernel filter is enforced
  CHECK_THROWS_WITH_AS(
      jacquet_enhanced(P("[1 x S(4)] + [1 x S(2)]"), SignVector{{1, 1}}, B("1", 2), psi0),
      doctest::Contains("ChoiceInvalid"), Error);
}

TEST_CASE("endoscopic descent examples") {
  {
    Parameter phi = P("[1 x S(2)] + [sgn x S(2)]");
    // factor order follows canonical block order: (1,2) then (sgn,2)
    Factorization f = endoscopic_descent(phi, {{1, 0}}, B("1", 2));
    CHECK(f.datum == EndoDatum{1, 0});
    CHECK(f.phiDouble.empty());
    CHECK(f.phiPrime == P("[sgn x S(2)]"));
  }
  {
    Parameter phi = P("[1 x S(2)] + [sgn x S(2)]");
    Factorization f = endoscopic_descent(phi, {{0, 0}}, B("1", 2));
    CHECK(f.datum == EndoDatum{1, 0});
    CHECK(f.phiPrime == P("[sgn x S(2)]"));
  }
  {
    // Case2 with s trivial on both partner slots
    Parameter phi = P("[1 x S(4)] + [1 x S(2)]");
    Factorization f = endoscopic_descent(phi, {{0, 0}}, B("1", 4));
    CHECK(f.datum == EndoDatum{2, 0});
    CHECK(f.phiPrime == P("2*[1 x S(2)]"));
    InvolutionSignature sMinus = descend_signature(phi, {{0, 0}}, B("1", 4));
    CHECK(f == factorize(descend_param(phi, B("1", 4)).minus, sMinus));
  }
  CHECK_THROWS_WITH_AS(endoscopic_descent(P("[1 x S(2)]"), {{0}}, B("sgn", 2)),
                       doctest::Contains("BlockNotPresent"), Error);
}

TEST_CASE("endoscopic descent commutes with factorization, rank <= 3 here") {
  for (const Parameter& phi : discreteUpTo(3)) {
    for (const auto& [b, m] : phi.blocks()) {
      if (b.a < 2) continue;
      ParamDescent pd = descend_param(phi, b);
      for (const InvolutionSignature& s : involutions(phi)) {
        Factorization viaDescent = endoscopic_descent(phi, s, b);
        InvolutionSignature sMinus = descend_signature(phi, s, b);
        Factorization viaFactorize = factorize(pd.minus, sMinus);
        CHECK(viaDescent == viaFactorize);
      }
    }
  }
}

TEST_CASE("descent chains terminate at the base ranks") {
  for (const Parameter& phi : discreteUpTo(4)) {
    ComponentGroup g = component_data(phi).group;
    for (const GroupElement& chi : g.elements()) {
      // follow first valid choices downward; rank strictly drops
      Parameter cur = phi;
      Character c = chi;
      int guard = 0;
      while (cur.rank() > 1) {
        auto cs = valid_choices(cur, c, psi0);
        if (cs.empty()) break;
        EnhancedParameter low = jacquet_enhanced(cur, c, cs[0].block, psi0);
        CHECK(low.phi.rank() == cur.rank() - 1);
        if (!low.phi.discrete()) break;  // handled by the LIR stage upstream
        cur = low.phi;
        c = low.chi;
        REQUIRE(++guard < 32);
      }
    }
  }
}

#include "doctest.h"
#include "mpp/correspondence.hpp"
#include "mpp/expr.hpp"
#include "mpp/factors.hpp"

using namespace mpp;

namespace {

Parameter P(const std::string& expr) { return normalize(parse_param_expr(expr)); }

SimpleBlock quadBlock(int z, int a) {
  return {SupercuspidalLabel(z > 0 ? UnramifiedCharacter::trivial() : UnramifiedCharacter::sgn()),
          a};
}

const PsiConductor psi0 = PsiConductor::standard(0);

}  // namespace

TEST_CASE("root numbers of quadratic blocks") {
  CHECK(eps_half_block(quadBlock(1, 2), psi0) == Scalar(-1));
  CHECK(eps_half_block(quadBlock(-1, 2), psi0) == Scalar(1));
  CHECK(eps_half_block(quadBlock(-1, 3), psi0) == Scalar(1));
  // other even conductor exponents give the same signs
  PsiConductor psi2 = PsiConductor::standard(1);
  CHECK(psi2.d == 2);
  CHECK(eps_half_block(quadBlock(1, 2), psi2) == Scalar(-1));
  CHECK(eps_half_block(quadBlock(-1, 2), psi2) == Scalar(1));
}

TEST_CASE("closed form: even a gives -z independently of a") {
  for (int z : {1, -1})
    for (int a = 2; a <= 12; a += 2)
      CHECK(eps_half_block(quadBlock(z, a), psi0) == Scalar(-z));
}

TEST_CASE("quarter-turn phases stay exact, octant phases do not") {
  SimpleBlock qi{SupercuspidalLabel(UnramifiedCharacter(Rational(1, 4), Rational(0))), 2};
  // (z^d)^a (-z)^{a-1} with z = i, d = 0, a = 2: -i
  CHECK(eps_half_block(qi, psi0) == -Scalar::i());
  SimpleBlock oct{SupercuspidalLabel(UnramifiedCharacter(Rational(1, 8), Rational(0))), 2};
  CHECK_THROWS_WITH_AS(eps_half_block(oct, psi0), doctest::Contains("NotEvaluable"), Error);
}

TEST_CASE("abstract labels in the eps path") {
  AbstractLabel tau{"tau", 2, SelfDualType::Symplectic, "", -1, 1, {}};
  CHECK(eps_half_block({SupercuspidalLabel(tau), 1}, psi0) == Scalar(-1));
  CHECK_THROWS_WITH_AS(eps_half_block({SupercuspidalLabel(tau), 3}, psi0),
                       doctest::Contains("NotEvaluable"), Error);
  AbstractLabel tauF = tau;
  tauF.frobSign = 1;
  // eps^a (-frob)^{a-1} = (-1)^3 (-1)^2 = -1
  CHECK(eps_half_block({SupercuspidalLabel(tauF), 3}, psi0) == Scalar(-1));
  AbstractLabel nsd{"pi", 2, SelfDualType::NotSelfDual, "piv", 1, 1, {}};
  CHECK_THROWS_WITH_AS(eps_half_block({SupercuspidalLabel(nsd), 1}, psi0),
                       doctest::Contains("NotEvaluable"), Error);
}

TEST_CASE("nu character examples") {
  CHECK(nu_char(P("[1 x S(2)] + [sgn x S(2)]"), psi0) == SignVector{{-1, 1}});
  CHECK(nu_char(P("[1 x S(4)]"), psi0) == SignVector{{-1}});
  CHECK(nu_char(P("[unr(1/4,0) x S(1)] + [unr(3/4,0) x S(1)]"), psi0) == SignVector{{}});
}

TEST_CASE("L-factors and the gamma path") {
  {
    LGamma lg = L_and_gamma(P("[1 x S(2)]"), psi0);
    CHECK(lg.L.str() == "(1 - q^(-1/2) X)^-1");
    CHECK(lg.gammaHalf == Scalar(-1));
  }
  CHECK(L_and_gamma(P("[sgn x S(2)]"), psi0).gammaHalf == Scalar(1));
  {
    LGamma lg = L_and_gamma(Parameter{}, psi0);
    CHECK(lg.L.str() == "1");
    CHECK(lg.gammaHalf == Scalar(1));
  }
  CHECK_THROWS_WITH_AS(L_and_gamma(P("[unr(0,1/2) x S(1)] + [unr(0,-1/2) x S(1)]"), psi0),
                       doctest::Contains("PoleAtHalf"), Error);
  CHECK_THROWS_WITH_AS(L_and_gamma(P("[rho(tau;dim=2,sd=S,eps=-1,wm1=+1) x S(1)]"), psi0),
                       doctest::Contains("NotEvaluable"), Error);
}

TEST_CASE("gamma-path agreement: gamma(1/2)^{-1} equals the block root number") {
  for (int z : {1, -1})
    for (int a = 2; a <= 12; a += 2) {
      Parameter single = normalize({{quadBlock(z, a).rho, a, 1}});
      LGamma lg = L_and_gamma(single, psi0);
      Scalar gammaInv = Scalar(1).divExact(lg.gammaHalf);
      CHECK(gammaInv == eps_half_block(quadBlock(z, a), psi0));
    }
}

TEST_CASE("eps of the minus part of an involution") {
  Parameter phi = P("[1 x S(2)] + [sgn x S(2)]");
  CHECK(eps_minus_part(phi, {{1, 0}}, psi0) == Scalar(-1));
  CHECK(eps_minus_part(phi, {{0, 0}}, psi0) == Scalar(1));  // identity involution
  Parameter twice = P("2*[1 x S(2)]");
  CHECK(eps_minus_part(twice, {{2}}, psi0) == Scalar(1));  // (-1)^2
}

TEST_CASE("eps additivity over direct sums") {
  EnumOpts opts;
  opts.phaseI = true;
  for (int r = 0; r <= 3; ++r)
    for (const Parameter& phi : enumerate_parameters(r, opts)) {
      ComponentData cd = component_data(phi);
      InvolutionSignature full;
      for (const CentralizerFactor& f : cd.shape.factors) full.k.push_back(f.size);
      Scalar joint = eps_minus_part(phi, full, psi0);
      Scalar product(1);
      for (const auto& [b, m] : phi.blocks()) product *= eps_half_block(b, psi0).pow(m);
      CHECK(joint == product);
    }
}

TEST_CASE("bounded L-factors have no zero or pole at s > 0") {
  EnumOpts opts;
  opts.phaseI = true;
  for (int r = 0; r <= 3; ++r)
    for (const Parameter& phi : enumerate_parameters(r, opts)) {
      LGamma lg = L_and_gamma(phi, psi0);
      // exact evaluation on the half-integer grid q^{-s}, s in {1/2,...,3}
      for (int halfS = 1; halfS <= 6; ++halfS) {
        Scalar x = Scalar::qPow(-halfS);
        CHECK_FALSE(lg.L.den().eval(x).isZero());
        CHECK_FALSE(lg.L.num().eval(x).isZero());
      }
      // structural form: every denominator root is z-bar * q^{(a-1)/2} with
      // |root| >= 1, never q^{-s} with s > 0
      for (const auto& [b, m] : phi.blocks()) CHECK(b.rho.chi().texp == Rational(0));
    }
}

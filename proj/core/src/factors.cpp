#include "mpp/factors.hpp"

namespace mpp {

namespace {

/// chi(w)^e as a Scalar: phase must land on a quarter turn and the modulus
/// exponent on a half-integer, else the value leaves the ring.
Scalar charPow(const UnramifiedCharacter& chi, long long e) {
  Rational rot = (chi.rot * Rational(e)).mod1();
  Rational texp = chi.texp * Rational(e);
  Rational quarter = rot * Rational(4);
  if (!quarter.isInteger())
    fail(Err::NotEvaluable, "phase exp(2*pi*i*" + rot.str() + ") is not a quarter turn");
  Rational half = texp * Rational(2);
  if (!half.isInteger())
    fail(Err::NotEvaluable, "q-exponent " + texp.str() + " is not a half-integer");
  GaussQ phase;
  switch (quarter.num() % 4) {
    case 0: phase = GaussQ(Rational(1)); break;
    case 1: phase = GaussQ(Rational(0), Rational(1)); break;
    case 2: phase = GaussQ(Rational(-1)); break;
    default: phase = GaussQ(Rational(0), Rational(-1)); break;
  }
  return Scalar::monomial(phase, static_cast<int>(half.num()));
}

Scalar charValue(const UnramifiedCharacter& chi) { return charPow(chi, 1); }

}  // namespace

Scalar eps_half_block(const SimpleBlock& block, const PsiConductor& psi) {
  const int a = block.a;
  if (block.rho.unramified()) {
    const UnramifiedCharacter& chi = block.rho.chi();
    // (z^d)^a * (-z)^{a-1} with z = chi(w)
    Scalar zda = charPow(chi, static_cast<long long>(psi.d) * a);
    Scalar mza = (-charValue(chi)).pow(a - 1);
    return zda * mza;
  }
  const AbstractLabel& l = block.rho.abs();
  if (l.sd == SelfDualType::NotSelfDual)
    fail(Err::NotEvaluable, "no declared root number for non-self-dual label '" + l.name + "'");
  Scalar eps = Scalar(l.epsHalf).pow(a);
  if (a == 1) return eps;
  if (!l.frobSign)
    fail(Err::NotEvaluable,
         "label '" + l.name + "' needs a declared Frobenius sign for a >= 2");
  return eps * Scalar(-*l.frobSign).pow(a - 1);
}

Character nu_char(const Parameter& phi, const PsiConductor& psi) {
  Character nu = SignVector::ones(static_cast<int>(phi.iPlus().size()));
  for (std::size_t k = 0; k < phi.iPlus().size(); ++k) {
    const SimpleBlock& b = phi.blocks()[static_cast<std::size_t>(phi.iPlus()[k])].first;
    nu.s[k] = eps_half_block(b, psi).signValue();
  }
  return nu;
}

namespace {

/// Euler factor of one block: 1 - z q^{-(a-1)/2} X in the denominator.
Poly eulerFactor(const SimpleBlock& b) {
  if (!b.rho.unramified())
    fail(Err::NotEvaluable, "L-factor needs unramified blocks, got '" + b.rho.abs().name + "'");
  Scalar z = charValue(b.rho.chi());
  return Poly::linear(Scalar(1), -(z * Scalar::qPow(-(b.a - 1))));
}

}  // namespace

LGamma L_and_gamma(const Parameter& phi, const PsiConductor& psi) {
  Poly den = Poly::one();
  for (const auto& [b, m] : phi.blocks())
    for (int c = 0; c < m; ++c) den = den * eulerFactor(b);
  LGamma out;
  out.L = RationalFunction(Poly::one(), den);

  Poly denDual = Poly::one();
  const Parameter dual = phi.dualParam();
  for (const auto& [b, m] : dual.blocks())
    for (int c = 0; c < m; ++c) denDual = denDual * eulerFactor(b);

  // gamma(1/2) = eps(1/2, phi) * L(1/2, dual) / L(1/2, phi)
  //            = eps(1/2, phi) * den(q^{-1/2}) / denDual(q^{-1/2}).
  const Scalar xHalf = Scalar::qPow(-1);
  Scalar dHere = den.eval(xHalf);
  Scalar dDual = denDual.eval(xHalf);
  if (dHere.isZero() || dDual.isZero())
    fail(Err::PoleAtHalf, "L-value has a pole at s = 1/2");

  Scalar eps(1);
  for (const auto& [b, m] : phi.blocks()) eps *= eps_half_block(b, psi).pow(m);
  out.gammaHalf = eps * dHere.divExact(dDual);
  return out;
}

Scalar eps_minus_part(const Parameter& phi, const InvolutionSignature& s,
                      const PsiConductor& psi) {
  ComponentData cd = component_data(phi);
  checkSignature(cd.shape, s);
  Scalar eps(1);
  for (std::size_t f = 0; f < cd.shape.factors.size(); ++f) {
    const CentralizerFactor& fac = cd.shape.factors[f];
    const int k = s.k[f];
    if (k == 0) continue;
    const SimpleBlock& b = phi.blocks()[static_cast<std::size_t>(fac.blockIndex)].first;
    if (fac.kind == FactorKind::GeneralLinear) {
      // k copies of (phi_j + dual); eps(phi)eps(dual) = det(phi)(-1) = w(-1)^a
      if (b.rho.unramified()) {
        const SimpleBlock d = b.dualBlock();
        eps *= (eps_half_block(b, psi) * eps_half_block(d, psi)).pow(k);
      } else {
        eps *= Scalar(b.rho.centralSign()).pow(static_cast<long long>(b.a) % 2 == 0 ? 0 : k);
      }
    } else {
      eps *= eps_half_block(b, psi).pow(k);
    }
  }
  return eps;
}

}  // namespace mpp

#pragma once

#include "mpp/params.hpp"
#include "mpp/ratfunc.hpp"

namespace mpp {

/// Conductor data of the additive character. The default has d = 2*e2
/// (valuation of 4), which is even; only even d is exercised by the suite.
struct PsiConductor {
  int d = 0;   // conductor exponent
  int e2 = 0;  // valuation of 2, so |2|_F = q^{-e2}

  static PsiConductor standard(int e2 = 0) { return {2 * e2, e2}; }
};

/// eps(1/2, rho x r(a), psi). For an unramified character with value z at the
/// uniformizer this is (z^d)^a * (-z)^{a-1}; self-dual blocks land in {+1,-1}.
/// Throws Err::NotEvaluable outside the exactly-representable range.
Scalar eps_half_block(const SimpleBlock& block, const PsiConductor& psi);

/// The root-number character nu_phi: component eps(1/2, phi_i, psi) at each
/// i in I+.
Character nu_char(const Parameter& phi, const PsiConductor& psi);

struct LGamma {
  RationalFunction L;
  Scalar gammaHalf;
};

/// L(s, phi) with one Euler factor per block (monodromy-invariant line only),
/// and gamma(1/2) = eps(1/2) * L(1/2, dual) / L(1/2, phi) evaluated exactly.
/// Throws Err::PoleAtHalf when either L-value has a pole at s = 1/2.
LGamma L_and_gamma(const Parameter& phi, const PsiConductor& psi);

/// eps(1/2) of the (-1)-eigenspace of an involution: the product of block
/// root numbers with the signature multiplicities. GL pairs contribute
/// jointly via det, so abstract dual pairs with declared omega_rho(-1) are
/// still evaluable.
Scalar eps_minus_part(const Parameter& phi, const InvolutionSignature& s, const PsiConductor& psi);

}  // namespace mpp

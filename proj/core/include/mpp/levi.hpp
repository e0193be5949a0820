#pragma once

#include "mpp/params.hpp"
#include "mpp/weyl.hpp"

namespace mpp {

/// One GL-side part of a Langlands-type decomposition: a bounded block
/// multiset twisted by |det|^exponent with exponent > 0.
struct GlPart {
  std::vector<std::pair<SimpleBlock, int>> blocks;
  Rational exponent;

  int dim() const;
};

/// phi = phi0 + sum_k (part_k + dual part_k) with phi0 bounded; the I+ slots
/// of phi0 and phi coincide (slot k of phi corresponds to slot k of phi0).
struct TemperedSupport {
  Parameter phi0;
  std::vector<GlPart> glParts;  // exponents strictly positive, descending
  LeviShape shape;
};

TemperedSupport tempered_support(const Parameter& phi);

/// phi = gp + (ngp + dual ngp) for bounded phi; gp carries the I+ content,
/// ngp takes half of each I- multiplicity and one member of each J pair.
struct GoodParitySplit {
  Parameter gp;
  std::vector<std::pair<SimpleBlock, int>> ngp;
};

GoodParitySplit good_parity_split(const Parameter& phi);

/// One factor of the relative Weyl group W_phi(M,G).
struct TowerFactor {
  FactorKind kind;     // Orthogonal: signed perms; Symplectic: type C; GL: symmetric
  int rank;            // rank of the factor's Weyl group
  int blockIndex;      // anchor block in phi
  bool totalSignToP;   // true for I+ blocks of even multiplicity
  int pSlot = -1;      // I+ slot receiving the total sign
};

/// Discrete support of a bounded phi: phi0 collects the odd-multiplicity I+
/// blocks once each, the rest pairs off into GL factors; the tower groups
/// describe W_phi, N_phi = W_phi x mu_2^{I+_odd} and the map p: W_phi -> S_phi.
struct DiscreteSupport {
  Parameter phi0;
  std::vector<std::pair<SimpleBlock, int>> glBlocks;  // with copy counts
  LeviShape shape;
  std::vector<TowerFactor> weylFactors;
  std::vector<int> oddSlots;   // I+ slot positions with odd multiplicity
  std::vector<int> evenSlots;  // I+ slot positions with even multiplicity
  std::size_t weylOrder = 1;   // |W_phi|
};

DiscreteSupport discrete_support(const Parameter& phi);

/// chi restricted along S_{phi0} -> S_phi (basis I+_odd inside I+).
Character restrict_char(const Character& chi, const DiscreteSupport& ds);

/// Under tempered_support the component groups are identified slotwise.
Character restrict_char(const Character& chi, const TemperedSupport& ts);

}  // namespace mpp

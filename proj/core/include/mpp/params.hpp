#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mpp/rational.hpp"

namespace mpp {

/// Unramified character of F^x, pinned down by its value at a uniformizer:
/// chi(w) = exp(2*pi*i*rot) * q^texp.
struct UnramifiedCharacter {
  Rational rot;   // unit part, kept in [0,1)
  Rational texp;  // modulus exponent

  UnramifiedCharacter() = default;
  UnramifiedCharacter(Rational r, Rational t) : rot(r.mod1()), texp(t) {}

  static UnramifiedCharacter trivial() { return {Rational(0), Rational(0)}; }
  static UnramifiedCharacter sgn() { return {Rational(1, 2), Rational(0)}; }

  UnramifiedCharacter dual() const { return {(Rational(1) - rot).mod1(), -texp}; }
  bool bounded() const { return texp.isZero(); }
  bool selfDual() const { return (rot + rot).isInteger() && texp.isZero(); }
  /// chi(w) for a quadratic character; requires selfDual()
  int quadSign() const { return rot.isZero() ? 1 : -1; }

  friend bool operator==(const UnramifiedCharacter&, const UnramifiedCharacter&) = default;
};

enum class SelfDualType { Symplectic, Orthogonal, NotSelfDual };

/// Opaque supercuspidal label carrying just the invariants the general
/// machinery consumes. Closed-form evaluation requires the Unramified kind.
struct AbstractLabel {
  std::string name;
  int dim = 1;
  SelfDualType sd = SelfDualType::Orthogonal;
  std::string dualName;          // set iff sd == NotSelfDual
  int epsHalf = 1;               // declared root number; meaningful iff self-dual
  int centralSign = 1;           // omega_rho(-1)
  std::optional<int> frobSign;   // needed for eps of rho x r(a), a >= 2; no CLI surface

  friend bool operator==(const AbstractLabel&, const AbstractLabel&) = default;
};

struct SupercuspidalLabel {
  std::variant<UnramifiedCharacter, AbstractLabel> v;

  SupercuspidalLabel() : v(UnramifiedCharacter::trivial()) {}
  SupercuspidalLabel(UnramifiedCharacter c) : v(c) {}
  SupercuspidalLabel(AbstractLabel a) : v(std::move(a)) {}

  bool unramified() const { return std::holds_alternative<UnramifiedCharacter>(v); }
  const UnramifiedCharacter& chi() const { return std::get<UnramifiedCharacter>(v); }
  const AbstractLabel& abs() const { return std::get<AbstractLabel>(v); }

  int dim() const { return unramified() ? 1 : abs().dim; }
  SelfDualType sd() const;
  SupercuspidalLabel dualLabel() const;
  bool bounded() const { return unramified() ? chi().bounded() : true; }
  int centralSign() const { return unramified() ? 1 : abs().centralSign; }

  friend bool operator==(const SupercuspidalLabel&, const SupercuspidalLabel&) = default;
};

/// rho x r(a): a simple Weil-Deligne representation, dimension dim(rho)*a.
struct SimpleBlock {
  SupercuspidalLabel rho;
  int a = 1;

  int dim() const { return rho.dim() * a; }
  SelfDualType sd() const;
  SimpleBlock dualBlock() const { return {rho.dualLabel(), a}; }
  bool bounded() const { return rho.bounded(); }

  friend bool operator==(const SimpleBlock&, const SimpleBlock&) = default;
};

/// Total order behind the canonical block listing.
bool blockLess(const SimpleBlock& x, const SimpleBlock& y);

/// Raw input to normalize(): one summand rho x r(a) with a multiplicity.
struct BlockSpec {
  SupercuspidalLabel rho;
  int a = 1;
  int mult = 1;
};

/// Canonical symplectic-type parameter: multiset of simple blocks in
/// canonical order together with the I+/I-/J classification.
class Parameter {
 public:
  Parameter() = default;

  const std::vector<std::pair<SimpleBlock, int>>& blocks() const { return blocks_; }
  int rank() const { return rank_; }
  const std::vector<int>& iPlus() const { return iPlus_; }
  const std::vector<int>& iMinus() const { return iMinus_; }
  const std::vector<std::pair<int, int>>& jPairs() const { return jPairs_; }
  bool empty() const { return blocks_.empty(); }

  bool bounded() const;
  bool discrete() const;
  bool goodParity() const;
  bool inertiaTrivial() const;  // every label unramified

  /// Multiplicity of a block, 0 when absent.
  int multiplicityOf(const SimpleBlock& b) const;
  /// Index into blocks() or -1.
  int indexOf(const SimpleBlock& b) const;

  Parameter dualParam() const;

  friend bool operator==(const Parameter&, const Parameter&) = default;

 private:
  friend Parameter normalize(const std::vector<BlockSpec>&, int);
  std::vector<std::pair<SimpleBlock, int>> blocks_;
  int rank_ = 0;
  std::vector<int> iPlus_, iMinus_;
  std::vector<std::pair<int, int>> jPairs_;
};

/// Merges duplicates, sorts canonically, classifies indices and validates the
/// symplectic-parameter constraints. Unit parts of character values must be
/// roots of unity of denominator dividing phaseBound.
Parameter normalize(const std::vector<BlockSpec>& specs, int phaseBound);
Parameter normalize(const std::vector<BlockSpec>& specs);

struct Flags {
  bool bounded = false;
  bool discrete = false;
  bool goodParity = false;
  std::vector<std::pair<SimpleBlock, int>> jordan;
};
Flags flags(const Parameter& phi);

enum class FactorKind { Orthogonal, Symplectic, GeneralLinear };

struct CentralizerFactor {
  FactorKind kind;
  int size;        // m_i, resp. m_j for GL
  int blockIndex;  // anchor block (lower index of the pair for GL)
  int pairIndex = -1;  // second block of a GL pair
};

struct CentralizerShape {
  std::vector<CentralizerFactor> factors;
};

/// Sign vector over the I+ basis; doubles as group element and character.
struct SignVector {
  std::vector<int> s;  // entries +1 / -1

  int size() const { return static_cast<int>(s.size()); }
  static SignVector ones(int n) { return {std::vector<int>(static_cast<std::size_t>(n), 1)}; }
  bool trivial() const {
    for (int x : s)
      if (x != 1) return false;
    return true;
  }
  SignVector operator*(const SignVector& o) const {
    SignVector r = *this;
    for (std::size_t k = 0; k < r.s.size(); ++k) r.s[k] *= o.s[k];
    return r;
  }
  friend bool operator==(const SignVector&, const SignVector&) = default;
};
using GroupElement = SignVector;
using Character = SignVector;

/// Elementary abelian 2-group on the I+ blocks.
struct ComponentGroup {
  std::vector<int> basis;  // block indices in I+, canonical order

  int rankLog2() const { return static_cast<int>(basis.size()); }
  std::size_t order() const { return std::size_t{1} << basis.size(); }
  /// chi(x) = prod over coordinates where x = -1 of chi_i; bimultiplicative.
  static int pairing(const Character& chi, const GroupElement& x);
  std::vector<GroupElement> elements() const;
};

struct ComponentData {
  CentralizerShape shape;
  ComponentGroup group;
  GroupElement zPhi;  // image of -id, componentwise (-1)^{m_i}
};
ComponentData component_data(const Parameter& phi);

struct EnhancedParameter {
  Parameter phi;
  Character chi;  // over the I+ basis of phi, canonical order

  friend bool operator==(const EnhancedParameter&, const EnhancedParameter&) = default;
};

/// Conjugacy class of an involution s in S_phi, recorded as the multiplicity
/// of the eigenvalue -1 on each centralizer factor.
struct InvolutionSignature {
  std::vector<int> k;  // aligned with CentralizerShape::factors

  friend bool operator==(const InvolutionSignature&, const InvolutionSignature&) = default;
};

/// Checks the per-factor bounds (O: 0<=k<=m, Sp: k even, GL: 0<=k<=m).
void checkSignature(const CentralizerShape& shape, const InvolutionSignature& s);

/// Component of the image of s in the component group, per I+ slot.
GroupElement involutionImage(const Parameter& phi, const InvolutionSignature& s);

}  // namespace mpp

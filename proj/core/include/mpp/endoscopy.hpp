#pragma once

#include <map>
#include <string>
#include <vector>

#include "mpp/factors.hpp"
#include "mpp/params.hpp"

namespace mpp {

/// Elliptic endoscopic datum for rank n: SO(2n'+1) x SO(2n''+1).
struct EndoDatum {
  int nPrime = 0;
  int nDoublePrime = 0;

  friend auto operator<=>(const EndoDatum&, const EndoDatum&) = default;
};

/// Complete, duplicate-free enumeration of involution signatures for phi.
std::vector<InvolutionSignature> involutions(const Parameter& phi);

struct Factorization {
  EndoDatum datum;
  Parameter phiPrime;   // +1 eigenpart
  Parameter phiDouble;  // -1 eigenpart

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Splits phi along an involution into valid symplectic-type parameters of
/// ranks n' + n'' = n.
Factorization factorize(const Parameter& phi, const InvolutionSignature& s);

/// Formal symbol tags. Stable-transfer symbols are opaque: equal exactly when
/// (datum, phi', phi'') coincide literally.
struct Symbol {
  enum Kind { PacketMember, StableTransfer } kind;
  // PacketMember: phi / chi strings; StableTransfer: datum + phi' / phi''
  EndoDatum datum;
  std::string a, b;

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

Symbol packetSymbol(const Parameter& phi, const Character& chi);
Symbol transferSymbol(const Factorization& f);

/// Integer/rational formal combination of symbols.
class VirtualCharacter {
 public:
  VirtualCharacter() = default;
  static VirtualCharacter basis(Symbol s) {
    VirtualCharacter v;
    v.terms_[std::move(s)] = Rational(1);
    return v;
  }

  VirtualCharacter operator+(const VirtualCharacter& o) const;
  VirtualCharacter operator-(const VirtualCharacter& o) const;
  VirtualCharacter& operator+=(const VirtualCharacter& o);
  VirtualCharacter& operator-=(const VirtualCharacter& o);
  VirtualCharacter scale(const Rational& c) const;
  bool isZero() const { return terms_.empty(); }
  const std::map<Symbol, Rational>& terms() const { return terms_; }
  friend bool operator==(const VirtualCharacter&, const VirtualCharacter&) = default;

 private:
  void add(const Symbol& s, const Rational& c);
  std::map<Symbol, Rational> terms_;
};

struct TransferTerm {
  Factorization fac;
  Scalar sign;          // eps(phi^{s=-1})
  VirtualCharacter vc;  // sign * [StableTransfer symbol]
};

/// T_{phi,s}: the stable-transfer symbol weighted by the epsilon sign of the
/// (-1)-eigenpart.
TransferTerm t_phi_s(const Parameter& phi, const InvolutionSignature& s, const PsiConductor& psi);

/// Tables are keyed by printed sign vectors over the I+ basis ("", "+,-", ...).
using PacketTable = std::map<std::string, VirtualCharacter>;

/// T(x) = sum_chi chi(x) member(chi).
PacketTable fourier_to_stable(const ComponentGroup& group, const PacketTable& members);
/// member(chi) = |S|^{-1} sum_x chi(x) T(x).
PacketTable fourier_to_members(const ComponentGroup& group, const PacketTable& stable);

}  // namespace mpp

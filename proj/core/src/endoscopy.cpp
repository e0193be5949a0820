#include "mpp/endoscopy.hpp"

#include "mpp/expr.hpp"

namespace mpp {

std::vector<InvolutionSignature> involutions(const Parameter& phi) {
  ComponentData cd = component_data(phi);
  std::vector<InvolutionSignature> out;
  InvolutionSignature cur;
  cur.k.assign(cd.shape.factors.size(), 0);
  // odometer over the per-factor ranges
  std::size_t f = 0;
  out.push_back(cur);
  while (true) {
    for (f = 0; f < cd.shape.factors.size(); ++f) {
      const CentralizerFactor& fac = cd.shape.factors[f];
      int step = (fac.kind == FactorKind::Symplectic) ? 2 : 1;
      if (cur.k[f] + step <= fac.size) {
        cur.k[f] += step;
        break;
      }
      cur.k[f] = 0;
    }
    if (f == cd.shape.factors.size()) break;
    out.push_back(cur);
  }
  return out;
}

Factorization factorize(const Parameter& phi, const InvolutionSignature& s) {
  ComponentData cd = component_data(phi);
  checkSignature(cd.shape, s);
  std::vector<BlockSpec> plus, minus;
  for (std::size_t f = 0; f < cd.shape.factors.size(); ++f) {
    const CentralizerFactor& fac = cd.shape.factors[f];
    const int k = s.k[f];
    const SimpleBlock& b = phi.blocks()[static_cast<std::size_t>(fac.blockIndex)].first;
    if (fac.kind == FactorKind::GeneralLinear) {
      const SimpleBlock d = phi.blocks()[static_cast<std::size_t>(fac.pairIndex)].first;
      if (k > 0) {
        minus.push_back({b.rho, b.a, k});
        minus.push_back({d.rho, d.a, k});
      }
      if (fac.size - k > 0) {
        plus.push_back({b.rho, b.a, fac.size - k});
        plus.push_back({d.rho, d.a, fac.size - k});
      }
    } else {
      if (k > 0) minus.push_back({b.rho, b.a, k});
      if (fac.size - k > 0) plus.push_back({b.rho, b.a, fac.size - k});
    }
  }
  Factorization out;
  out.phiPrime = normalize(plus);
  out.phiDouble = normalize(minus);
  out.datum = {out.phiPrime.rank(), out.phiDouble.rank()};
  return out;
}

Symbol packetSymbol(const Parameter& phi, const Character& chi) {
  return Symbol{Symbol::PacketMember, EndoDatum{}, print_parameter(phi), print_signs(chi)};
}

Symbol transferSymbol(const Factorization& f) {
  return Symbol{Symbol::StableTransfer, f.datum, print_parameter(f.phiPrime),
                print_parameter(f.phiDouble)};
}

void VirtualCharacter::add(const Symbol& s, const Rational& c) {
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    if (!c.isZero()) terms_.emplace(s, c);
    return;
  }
  Rational v = it->second + c;
  if (v.isZero())
    terms_.erase(it);
  else
    it->second = v;
}

VirtualCharacter VirtualCharacter::operator+(const VirtualCharacter& o) const {
  VirtualCharacter r = *this;
  for (auto& [s, c] : o.terms_) r.add(s, c);
  return r;
}

VirtualCharacter VirtualCharacter::operator-(const VirtualCharacter& o) const {
  VirtualCharacter r = *this;
  for (auto& [s, c] : o.terms_) r.add(s, -c);
  return r;
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& o) {
  for (auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& o) {
  for (auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

VirtualCharacter VirtualCharacter::scale(const Rational& c) const {
  VirtualCharacter r;
  if (c.isZero()) return r;
  for (auto& [s, v] : terms_) r.terms_.emplace(s, v * c);
  return r;
}

TransferTerm t_phi_s(const Parameter& phi, const InvolutionSignature& s,
                     const PsiConductor& psi) {
  if (!phi.bounded()) fail(Err::NotBounded, "endoscopic transfer needs a bounded parameter");
  TransferTerm out;
  out.fac = factorize(phi, s);
  out.sign = eps_minus_part(phi, s, psi);
  Rational coeff(out.sign.signValue());
  out.vc = VirtualCharacter::basis(transferSymbol(out.fac)).scale(coeff);
  return out;
}

namespace {

void checkComplete(const ComponentGroup& group, const PacketTable& table, const char* what) {
  if (table.size() != group.order())
    fail(Err::IncompleteTable, std::string(what) + " table has " + std::to_string(table.size()) +
                                   " entries, expected " + std::to_string(group.order()));
}

}  // namespace

namespace {

/// Exact Walsh-Hadamard butterflies over the mask-indexed table; computes
/// out[B] = sum_A (-1)^{popcount(A & B)} in[A] in k 2^k virtual-character adds.
std::vector<VirtualCharacter> walshTransform(const ComponentGroup& group,
                                             const PacketTable& table, const char* what) {
  checkComplete(group, table, what);
  const std::size_t n = group.order();
  std::vector<VirtualCharacter> v(n);
  std::vector<GroupElement> elems = group.elements();
  for (std::size_t mask = 0; mask < n; ++mask) {
    auto it = table.find(print_signs(elems[mask]));
    if (it == table.end())
      fail(Err::IncompleteTable, std::string("missing ") + what + " entry " +
                                     print_signs(elems[mask]));
    v[mask] = it->second;
  }
  for (std::size_t bit = 1; bit < n; bit <<= 1)
    for (std::size_t i = 0; i < n; ++i)
      if ((i & bit) == 0) {
        VirtualCharacter sum = v[i];
        sum += v[i | bit];
        VirtualCharacter diff = std::move(v[i]);
        diff -= v[i | bit];
        v[i] = std::move(sum);
        v[i | bit] = std::move(diff);
      }
  return v;
}

}  // namespace

PacketTable fourier_to_stable(const ComponentGroup& group, const PacketTable& members) {
  std::vector<VirtualCharacter> v = walshTransform(group, members, "member");
  std::vector<GroupElement> elems = group.elements();
  PacketTable out;
  for (std::size_t mask = 0; mask < v.size(); ++mask)
    out[print_signs(elems[mask])] = std::move(v[mask]);
  return out;
}

PacketTable fourier_to_members(const ComponentGroup& group, const PacketTable& stable) {
  std::vector<VirtualCharacter> v = walshTransform(group, stable, "stable");
  std::vector<GroupElement> elems = group.elements();
  const Rational inv(1, static_cast<long long>(group.order()));
  PacketTable out;
  for (std::size_t mask = 0; mask < v.size(); ++mask)
    out[print_signs(elems[mask])] = v[mask].scale(inv);
  return out;
}

}  // namespace mpp

#include "mpp/params.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace mpp {

SelfDualType SupercuspidalLabel::sd() const {
  if (unramified())
    return chi().selfDual() ? SelfDualType::Orthogonal : SelfDualType::NotSelfDual;
  return abs().sd;
}

SupercuspidalLabel SupercuspidalLabel::dualLabel() const {
  if (unramified()) return SupercuspidalLabel(chi().dual());
  AbstractLabel d = abs();
  if (d.sd == SelfDualType::NotSelfDual) std::swap(d.name, d.dualName);
  return SupercuspidalLabel(d);
}

SelfDualType SimpleBlock::sd() const {
  switch (rho.sd()) {
    case SelfDualType::NotSelfDual:
      return SelfDualType::NotSelfDual;
    case SelfDualType::Symplectic:
      return (a % 2 == 1) ? SelfDualType::Symplectic : SelfDualType::Orthogonal;
    case SelfDualType::Orthogonal:
      return (a % 2 == 0) ? SelfDualType::Symplectic : SelfDualType::Orthogonal;
  }
  return SelfDualType::NotSelfDual;
}

namespace {

// (d_rho, kind, rot, texp, a, name): a deterministic total order
std::tuple<int, int, Rational, Rational, int, std::string> sortKey(const SimpleBlock& b) {
  if (b.rho.unramified())
    return {1, 0, b.rho.chi().rot, b.rho.chi().texp, b.a, ""};
  const AbstractLabel& l = b.rho.abs();
  return {l.dim, 1, Rational(0), Rational(0), b.a, l.name};
}

void checkLabel(const SupercuspidalLabel& rho, int phaseBound) {
  if (rho.unramified()) {
    long long den = rho.chi().rot.den();
    if (phaseBound % den != 0)
      fail(Err::BadLabel, "phase denominator " + std::to_string(den) +
                              " exceeds the configured bound " + std::to_string(phaseBound));
    return;
  }
  const AbstractLabel& l = rho.abs();
  if (l.dim < 1) fail(Err::BadLabel, "abstract label '" + l.name + "' needs dim >= 1");
  if (l.name.empty()) fail(Err::BadLabel, "abstract label needs a name");
  if (l.sd == SelfDualType::NotSelfDual) {
    if (l.dualName.empty())
      fail(Err::BadLabel, "non-self-dual label '" + l.name + "' needs a dual name");
    if (l.dualName == l.name)
      fail(Err::BadLabel, "label '" + l.name + "' cannot be its own dual partner");
  } else if (l.epsHalf != 1 && l.epsHalf != -1) {
    fail(Err::BadLabel, "epsHalf of '" + l.name + "' must be +1 or -1");
  }
  if (l.centralSign != 1 && l.centralSign != -1)
    fail(Err::BadLabel, "central sign of '" + l.name + "' must be +1 or -1");
}

}  // namespace

bool blockLess(const SimpleBlock& x, const SimpleBlock& y) { return sortKey(x) < sortKey(y); }

Parameter normalize(const std::vector<BlockSpec>& specs) { return normalize(specs, 8); }

Parameter normalize(const std::vector<BlockSpec>& specs, int phaseBound) {
  std::vector<std::pair<SimpleBlock, int>> merged;
  for (const BlockSpec& s : specs) {
    if (s.a < 1) fail(Err::BadA, "S(a) needs a >= 1, got a = " + std::to_string(s.a));
    if (s.mult < 1) fail(Err::BadMultiplicity, "multiplicity must be >= 1");
    checkLabel(s.rho, phaseBound);
    SimpleBlock b{s.rho, s.a};
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const auto& p) { return p.first == b; });
    if (it == merged.end())
      merged.emplace_back(b, s.mult);
    else
      it->second += s.mult;
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& x, const auto& y) { return blockLess(x.first, y.first); });

  Parameter phi;
  phi.blocks_ = std::move(merged);

  long long total = 0;
  for (std::size_t i = 0; i < phi.blocks_.size(); ++i) {
    const auto& [b, m] = phi.blocks_[i];
    total += static_cast<long long>(b.dim()) * m;
    switch (b.sd()) {
      case SelfDualType::Symplectic:
        phi.iPlus_.push_back(static_cast<int>(i));
        break;
      case SelfDualType::Orthogonal:
        if (m % 2 != 0)
          fail(Err::OddOrthogonalMultiplicity,
               "orthogonal-type block at index " + std::to_string(i) +
                   " has odd multiplicity " + std::to_string(m));
        phi.iMinus_.push_back(static_cast<int>(i));
        break;
      case SelfDualType::NotSelfDual:
        break;  // paired below
    }
  }

  // Pair every non-self-dual block with its contragredient at equal multiplicity.
  std::vector<bool> seen(phi.blocks_.size(), false);
  for (std::size_t i = 0; i < phi.blocks_.size(); ++i) {
    const auto& [b, m] = phi.blocks_[i];
    if (b.sd() != SelfDualType::NotSelfDual || seen[i]) continue;
    SimpleBlock d = b.dualBlock();
    int j = phi.indexOf(d);
    if (j < 0 || phi.blocks_[static_cast<std::size_t>(j)].second != m)
      fail(Err::UnpairedNonSelfDual,
           "block at index " + std::to_string(i) + " lacks a dual partner at equal multiplicity");
    seen[i] = seen[static_cast<std::size_t>(j)] = true;
    phi.jPairs_.emplace_back(static_cast<int>(i), j);
  }

  if (total % 2 != 0)
    fail(Err::OddTotalDimension, "total dimension " + std::to_string(total) + " is odd");
  phi.rank_ = static_cast<int>(total / 2);
  return phi;
}

int Parameter::multiplicityOf(const SimpleBlock& b) const {
  int i = indexOf(b);
  return i < 0 ? 0 : blocks_[static_cast<std::size_t>(i)].second;
}

int Parameter::indexOf(const SimpleBlock& b) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].first == b) return static_cast<int>(i);
  return -1;
}

bool Parameter::bounded() const {
  for (const auto& [b, m] : blocks_)
    if (!b.bounded()) return false;
  return true;
}

bool Parameter::discrete() const {
  if (!goodParity()) return false;
  for (const auto& [b, m] : blocks_)
    if (m != 1) return false;
  return true;
}

bool Parameter::goodParity() const { return iMinus_.empty() && jPairs_.empty(); }

bool Parameter::inertiaTrivial() const {
  for (const auto& [b, m] : blocks_)
    if (!b.rho.unramified()) return false;
  return true;
}

Parameter Parameter::dualParam() const {
  std::vector<BlockSpec> specs;
  for (const auto& [b, m] : blocks_) specs.push_back({b.rho.dualLabel(), b.a, m});
  return normalize(specs);
}

Flags flags(const Parameter& phi) {
  Flags f;
  f.bounded = phi.bounded();
  f.discrete = phi.discrete();
  f.goodParity = phi.goodParity();
  f.jordan = phi.blocks();
  return f;
}

int ComponentGroup::pairing(const Character& chi, const GroupElement& x) {
  int v = 1;
  for (std::size_t k = 0; k < chi.s.size(); ++k)
    if (x.s[k] == -1) v *= chi.s[k];
  return v;
}

std::vector<GroupElement> ComponentGroup::elements() const {
  std::vector<GroupElement> out;
  const int n = rankLog2();
  for (std::size_t mask = 0; mask < order(); ++mask) {
    GroupElement e = SignVector::ones(n);
    for (int b = 0; b < n; ++b)
      if (mask >> b & 1) e.s[static_cast<std::size_t>(b)] = -1;
    out.push_back(std::move(e));
  }
  return out;
}

ComponentData component_data(const Parameter& phi) {
  ComponentData cd;
  for (int i : phi.iPlus())
    cd.shape.factors.push_back(
        {FactorKind::Orthogonal, phi.blocks()[static_cast<std::size_t>(i)].second, i, -1});
  for (int i : phi.iMinus())
    cd.shape.factors.push_back(
        {FactorKind::Symplectic, phi.blocks()[static_cast<std::size_t>(i)].second, i, -1});
  for (auto [j, jp] : phi.jPairs()) {
    int lo = std::min(j, jp), hi = std::max(j, jp);
    cd.shape.factors.push_back(
        {FactorKind::GeneralLinear, phi.blocks()[static_cast<std::size_t>(lo)].second, lo, hi});
  }
  std::sort(cd.shape.factors.begin(), cd.shape.factors.end(),
            [](const CentralizerFactor& a, const CentralizerFactor& b) {
              return a.blockIndex < b.blockIndex;
            });

  cd.group.basis = phi.iPlus();
  cd.zPhi = SignVector::ones(static_cast<int>(cd.group.basis.size()));
  for (std::size_t k = 0; k < cd.group.basis.size(); ++k) {
    int m = phi.blocks()[static_cast<std::size_t>(cd.group.basis[k])].second;
    cd.zPhi.s[k] = (m % 2 == 0) ? 1 : -1;
  }
  return cd;
}

void checkSignature(const CentralizerShape& shape, const InvolutionSignature& s) {
  if (s.k.size() != shape.factors.size())
    fail(Err::InvalidSignature, "signature length " + std::to_string(s.k.size()) +
                                    " != factor count " + std::to_string(shape.factors.size()));
  for (std::size_t f = 0; f < shape.factors.size(); ++f) {
    int k = s.k[f];
    const CentralizerFactor& fac = shape.factors[f];
    if (k < 0 || k > fac.size)
      fail(Err::InvalidSignature, "factor " + std::to_string(f) + ": need 0 <= k <= " +
                                      std::to_string(fac.size));
    if (fac.kind == FactorKind::Symplectic && k % 2 != 0)
      fail(Err::InvalidSignature,
           "symplectic factor " + std::to_string(f) + " needs even k, got " + std::to_string(k));
  }
}

GroupElement involutionImage(const Parameter& phi, const InvolutionSignature& s) {
  ComponentData cd = component_data(phi);
  checkSignature(cd.shape, s);
  GroupElement x = SignVector::ones(static_cast<int>(cd.group.basis.size()));
  for (std::size_t f = 0; f < cd.shape.factors.size(); ++f) {
    const CentralizerFactor& fac = cd.shape.factors[f];
    if (fac.kind != FactorKind::Orthogonal) continue;
    for (std::size_t k = 0; k < cd.group.basis.size(); ++k)
      if (cd.group.basis[k] == fac.blockIndex && s.k[f] % 2 == 1) x.s[k] = -1;
  }
  return x;
}

}  // namespace mpp

#include "mpp/levi.hpp"

#include <algorithm>
#include <map>

namespace mpp {

int GlPart::dim() const {
  int d = 0;
  for (const auto& [b, m] : blocks) d += b.dim() * m;
  return d;
}

TemperedSupport tempered_support(const Parameter& phi) {
  std::vector<BlockSpec> stay;
  // positive-exponent representatives grouped by exponent
  std::map<Rational, std::vector<std::pair<SimpleBlock, int>>, std::greater<Rational>> moved;

  std::vector<bool> consumed(phi.blocks().size(), false);
  for (std::size_t i = 0; i < phi.blocks().size(); ++i) {
    if (consumed[i]) continue;
    const auto& [b, m] = phi.blocks()[i];
    if (b.bounded()) {
      stay.push_back({b.rho, b.a, m});
      consumed[i] = true;
      continue;
    }
    // non-bounded blocks are never self-dual, so they sit in J pairs
    SimpleBlock d = b.dualBlock();
    int j = phi.indexOf(d);
    consumed[i] = true;
    if (j >= 0) consumed[static_cast<std::size_t>(j)] = true;
    const UnramifiedCharacter& chi = b.rho.chi();
    SimpleBlock rep = (chi.texp > Rational(0)) ? b : d;
    Rational e = rep.rho.chi().texp;
    UnramifiedCharacter unit(rep.rho.chi().rot, Rational(0));
    moved[e].push_back({SimpleBlock{SupercuspidalLabel(unit), rep.a}, m});
  }

  TemperedSupport ts;
  ts.phi0 = normalize(stay);
  for (auto& [e, blocks] : moved) {
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& x, const auto& y) { return blockLess(x.first, y.first); });
    GlPart part;
    part.blocks = blocks;
    part.exponent = e;
    ts.glParts.push_back(std::move(part));
  }
  ts.shape.spRank = ts.phi0.rank();
  for (const GlPart& p : ts.glParts) ts.shape.glSizes.push_back(p.dim());
  return ts;
}

GoodParitySplit good_parity_split(const Parameter& phi) {
  if (!phi.bounded()) fail(Err::NotBounded, "good-parity split needs a bounded parameter");
  GoodParitySplit out;
  std::vector<BlockSpec> gp;
  for (int i : phi.iPlus()) {
    const auto& [b, m] = phi.blocks()[static_cast<std::size_t>(i)];
    gp.push_back({b.rho, b.a, m});
  }
  out.gp = normalize(gp);
  for (int i : phi.iMinus()) {
    const auto& [b, m] = phi.blocks()[static_cast<std::size_t>(i)];
    out.ngp.emplace_back(b, m / 2);
  }
  for (auto [j, jp] : phi.jPairs()) {
    int lo = std::min(j, jp);
    const auto& [b, m] = phi.blocks()[static_cast<std::size_t>(lo)];
    out.ngp.emplace_back(b, m);
  }
  std::sort(out.ngp.begin(), out.ngp.end(),
            [](const auto& x, const auto& y) { return blockLess(x.first, y.first); });
  return out;
}

DiscreteSupport discrete_support(const Parameter& phi) {
  if (!phi.bounded()) fail(Err::NotBounded, "discrete support needs a bounded parameter");
  DiscreteSupport ds;
  std::vector<BlockSpec> phi0;

  // slot bookkeeping over the I+ basis
  for (std::size_t k = 0; k < phi.iPlus().size(); ++k) {
    int i = phi.iPlus()[k];
    int m = phi.blocks()[static_cast<std::size_t>(i)].second;
    if (m % 2 == 1)
      ds.oddSlots.push_back(static_cast<int>(k));
    else
      ds.evenSlots.push_back(static_cast<int>(k));
  }

  for (std::size_t k = 0; k < phi.iPlus().size(); ++k) {
    int i = phi.iPlus()[k];
    const auto& [b, m] = phi.blocks()[static_cast<std::size_t>(i)];
    const bool odd = (m % 2 == 1);
    if (odd) phi0.push_back({b.rho, b.a, 1});
    int copies = (m - (odd ? 1 : 0)) / 2;
    if (copies > 0) ds.glBlocks.emplace_back(b, copies);
    TowerFactor tf;
    tf.kind = FactorKind::Orthogonal;
    tf.rank = m / 2;
    tf.blockIndex = i;
    tf.totalSignToP = !odd;
    tf.pSlot = odd ? -1 : static_cast<int>(k);
    ds.weylFactors.push_back(tf);
  }
  for (int i : phi.iMinus()) {
    const auto& [b, m] = phi.blocks()[static_cast<std::size_t>(i)];
    ds.glBlocks.emplace_back(b, m / 2);
    ds.weylFactors.push_back({FactorKind::Symplectic, m / 2, i, false, -1});
  }
  for (auto [j, jp] : phi.jPairs()) {
    int lo = std::min(j, jp);
    const auto& [b, m] = phi.blocks()[static_cast<std::size_t>(lo)];
    ds.glBlocks.emplace_back(b, m);
    ds.weylFactors.push_back({FactorKind::GeneralLinear, m, lo, false, -1});
  }
  std::sort(ds.glBlocks.begin(), ds.glBlocks.end(),
            [](const auto& x, const auto& y) { return blockLess(x.first, y.first); });

  ds.phi0 = normalize(phi0);
  ds.shape.spRank = ds.phi0.rank();
  for (const auto& [b, copies] : ds.glBlocks)
    for (int c = 0; c < copies; ++c) ds.shape.glSizes.push_back(b.dim());

  for (const TowerFactor& tf : ds.weylFactors) {
    std::size_t order = 1;
    switch (tf.kind) {
      case FactorKind::Orthogonal:
      case FactorKind::Symplectic:
        for (int r = 1; r <= tf.rank; ++r) order *= 2 * static_cast<std::size_t>(r);
        break;
      case FactorKind::GeneralLinear:
        for (int r = 2; r <= tf.rank; ++r) order *= static_cast<std::size_t>(r);
        break;
    }
    ds.weylOrder *= order;
  }
  return ds;
}

Character restrict_char(const Character& chi, const DiscreteSupport& ds) {
  Character out = SignVector::ones(static_cast<int>(ds.oddSlots.size()));
  for (std::size_t k = 0; k < ds.oddSlots.size(); ++k)
    out.s[k] = chi.s[static_cast<std::size_t>(ds.oddSlots[k])];
  return out;
}

Character restrict_char(const Character& chi, const TemperedSupport&) { return chi; }

}  // namespace mpp

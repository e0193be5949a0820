#include "mpp/descent.hpp"

#include <algorithm>

#include "mpp/expr.hpp"

namespace mpp {

namespace {

int requireBlock(const Parameter& phi, const SimpleBlock& block) {
  int i = phi.indexOf(block);
  if (i < 0) fail(Err::BlockNotPresent, "block [" + print_block(block) + "] not in parameter");
  return i;
}

void requireDiscrete(const Parameter& phi, const char* what) {
  if (!phi.discrete()) fail(Err::NotDiscrete, std::string(what) + " needs a discrete parameter");
}

/// I+ slot of a block index, or -1.
int slotOf(const Parameter& phi, int blockIndex) {
  for (std::size_t k = 0; k < phi.iPlus().size(); ++k)
    if (phi.iPlus()[k] == blockIndex) return static_cast<int>(k);
  return -1;
}

}  // namespace

ParamDescent descend_param(const Parameter& phi, const SimpleBlock& block) {
  requireDiscrete(phi, "descent");
  ParamDescent out;
  out.blockIndex = requireBlock(phi, block);
  if (block.a < 2) fail(Err::BadA, "descent needs a >= 2, got a = " + std::to_string(block.a));

  const SimpleBlock lowered{block.rho, block.a - 2};
  if (block.a == 2) {
    out.dcase = {DescentTag::Case3, -1};
  } else {
    int partner = phi.indexOf(lowered);
    out.dcase = (partner >= 0) ? DescentCase{DescentTag::Case2, partner}
                               : DescentCase{DescentTag::Case1, -1};
  }

  std::vector<BlockSpec> specs;
  for (std::size_t i = 0; i < phi.blocks().size(); ++i) {
    const auto& [b, m] = phi.blocks()[i];
    if (static_cast<int>(i) == out.blockIndex) {
      if (block.a > 2) specs.push_back({lowered.rho, lowered.a, m});
    } else {
      specs.push_back({b.rho, b.a, m});
    }
  }
  out.minus = normalize(specs);
  return out;
}

ComponentDescent component_descent(const Parameter& phi, const SimpleBlock& block) {
  ComponentDescent out;
  out.pd = descend_param(phi, block);
  const SimpleBlock lowered{block.rho, block.a - 2};

  const int s0 = slotOf(phi, out.pd.blockIndex);
  out.slotTarget.assign(phi.iPlus().size(), -1);
  for (std::size_t k = 0; k < phi.iPlus().size(); ++k) {
    const SimpleBlock& b = phi.blocks()[static_cast<std::size_t>(phi.iPlus()[k])].first;
    SimpleBlock target = (static_cast<int>(k) == s0) ? lowered : b;
    if (static_cast<int>(k) == s0 && block.a == 2) continue;  // dropped coordinate
    out.slotTarget[k] = slotOf(out.pd.minus, out.pd.minus.indexOf(target));
  }

  switch (out.pd.dcase.tag) {
    case DescentTag::Case1:
      out.kernel = {KernelKind::Trivial, s0, -1};
      break;
    case DescentTag::Case2:
      out.kernel = {KernelKind::Diagonal, s0, slotOf(phi, out.pd.dcase.partnerIndex)};
      break;
    case DescentTag::Case3:
      out.kernel = {KernelKind::Coordinate, s0, -1};
      break;
  }
  return out;
}

Character descend_character(const Character& chi, const ComponentDescent& cd) {
  const KernelT& ker = cd.kernel;
  bool trivialOnKernel = true;
  if (ker.kind == KernelKind::Diagonal)
    trivialOnKernel = chi.s[static_cast<std::size_t>(ker.slot0)] ==
                      chi.s[static_cast<std::size_t>(ker.slot1)];
  else if (ker.kind == KernelKind::Coordinate)
    trivialOnKernel = chi.s[static_cast<std::size_t>(ker.slot0)] == 1;
  if (!trivialOnKernel)
    fail(Err::ChoiceInvalid, "character is not trivial on the descent kernel");

  Character out = SignVector::ones(static_cast<int>(cd.pd.minus.iPlus().size()));
  for (std::size_t k = 0; k < cd.slotTarget.size(); ++k)
    if (cd.slotTarget[k] >= 0) out.s[static_cast<std::size_t>(cd.slotTarget[k])] = chi.s[k];
  return out;
}

std::vector<Choice> valid_choices(const Parameter& phi, const Character& chi,
                                  const PsiConductor& psi) {
  requireDiscrete(phi, "the descent chooser");
  std::vector<Choice> out;
  if (phi.rank() <= 1) return out;
  const Character chiNu = chi * nu_char(phi, psi);
  for (std::size_t i = 0; i < phi.blocks().size(); ++i) {
    const SimpleBlock& b = phi.blocks()[i].first;
    if (!b.rho.unramified() || b.a < 2) continue;
    ComponentDescent cd = component_descent(phi, b);
    bool ok = true;
    if (cd.kernel.kind == KernelKind::Diagonal)
      ok = chiNu.s[static_cast<std::size_t>(cd.kernel.slot0)] ==
           chiNu.s[static_cast<std::size_t>(cd.kernel.slot1)];
    else if (cd.kernel.kind == KernelKind::Coordinate)
      ok = chiNu.s[static_cast<std::size_t>(cd.kernel.slot0)] == 1;
    if (ok)
      out.push_back({b, static_cast<int>(i), cd.pd.dcase.tag, 1, b.rho.centralSign()});
  }
  return out;
}

EnhancedParameter jacquet_enhanced(const Parameter& phi, const Character& chi,
                                   const SimpleBlock& block, const PsiConductor& psi) {
  requireDiscrete(phi, "enhanced descent");
  if (phi.rank() <= 1) fail(Err::ChoiceInvalid, "enhanced descent needs rank > 1");
  if (!block.rho.unramified())
    fail(Err::ChoiceInvalid, "enhanced descent needs an unramified block");
  ComponentDescent cd = component_descent(phi, block);
  const Character chiNu = chi * nu_char(phi, psi);
  Character lowered = descend_character(chiNu, cd);  // throws ChoiceInvalid if not valid
  EnhancedParameter out;
  out.phi = cd.pd.minus;
  out.chi = lowered * nu_char(out.phi, psi);
  return out;
}

InvolutionSignature descend_signature(const Parameter& phi, const InvolutionSignature& s,
                                      const SimpleBlock& block) {
  requireDiscrete(phi, "signature descent");
  ComponentData cd = component_data(phi);
  checkSignature(cd.shape, s);
  ParamDescent pd = descend_param(phi, block);
  const SimpleBlock lowered{block.rho, block.a - 2};

  ComponentData cdm = component_data(pd.minus);
  InvolutionSignature sm;
  sm.k.assign(cdm.shape.factors.size(), 0);
  for (std::size_t f = 0; f < cd.shape.factors.size(); ++f) {
    const int srcBlock = cd.shape.factors[f].blockIndex;
    SimpleBlock target = (srcBlock == pd.blockIndex)
                             ? lowered
                             : phi.blocks()[static_cast<std::size_t>(srcBlock)].first;
    if (srcBlock == pd.blockIndex && block.a == 2) continue;  // factor disappears
    int tgtIndex = pd.minus.indexOf(target);
    for (std::size_t g = 0; g < cdm.shape.factors.size(); ++g)
      if (cdm.shape.factors[g].blockIndex == tgtIndex) sm.k[g] += s.k[f];
  }
  return sm;
}

Factorization endoscopic_descent(const Parameter& phi, const InvolutionSignature& s,
                                 const SimpleBlock& block) {
  requireDiscrete(phi, "endoscopic descent");
  const int bi = requireBlock(phi, block);
  if (block.a < 2) fail(Err::BadA, "descent needs a >= 2, got a = " + std::to_string(block.a));
  Factorization f = factorize(phi, s);
  ComponentData cd = component_data(phi);
  int kAtBlock = 0;
  for (std::size_t g = 0; g < cd.shape.factors.size(); ++g)
    if (cd.shape.factors[g].blockIndex == bi) kAtBlock = s.k[g];

  // lower (rho, a) inside the side it routes to
  auto lowerIn = [&](const Parameter& side) {
    std::vector<BlockSpec> specs;
    for (const auto& [b, m] : side.blocks()) {
      if (b == block) {
        if (block.a > 2) specs.push_back({b.rho, b.a - 2, m});
      } else {
        specs.push_back({b.rho, b.a, m});
      }
    }
    return normalize(specs);
  };

  Factorization out;
  if (kAtBlock % 2 == 1) {
    out.phiPrime = f.phiPrime;
    out.phiDouble = lowerIn(f.phiDouble);
  } else {
    out.phiPrime = lowerIn(f.phiPrime);
    out.phiDouble = f.phiDouble;
  }
  out.datum = {out.phiPrime.rank(), out.phiDouble.rank()};
  return out;
}

}  // namespace mpp

#include "mpp/correspondence.hpp"

#include <algorithm>

#include "mpp/expr.hpp"

namespace mpp {

EnhancedParameter tw_transfer(const EnhancedParameter& e, const PsiConductor& psi, Direction) {
  // phi_circ = phi and chi_circ = chi nu_phi; the inverse twists by nu again.
  return {e.phi, e.chi * nu_char(e.phi, psi)};
}

CentralSigns central_sign_and_sides(const EnhancedParameter& e, const PsiConductor& psi) {
  ComponentData cd = component_data(e.phi);
  Character chiNu = e.chi * nu_char(e.phi, psi);
  CentralSigns out;
  out.centralSign = ComponentGroup::pairing(chiNu, cd.zPhi);
  EnhancedParameter so = tw_transfer(e, psi, Direction::MpToSO);
  out.soSide = ComponentGroup::pairing(so.chi, cd.zPhi);
  return out;
}

namespace {

EnhancedParameter makeRank1(const UnramifiedCharacter& xi, int chiAtMinusOne) {
  EnhancedParameter e;
  e.phi = normalize({{SupercuspidalLabel(xi), 2, 1}});
  e.chi = SignVector{{chiAtMinusOne}};
  return e;
}

}  // namespace

std::vector<BaseTableEntry> base_table() {
  std::vector<BaseTableEntry> t;
  t.push_back({EnhancedParameter{}, Side::Plus, "empty", 1});
  t.push_back({makeRank1(UnramifiedCharacter::trivial(), -1), Side::Plus, "st(1)", 1});
  t.push_back({makeRank1(UnramifiedCharacter::sgn(), 1), Side::Plus, "st(sgn)", 1});
  t.push_back({makeRank1(UnramifiedCharacter::trivial(), 1), Side::Minus, "weil-odd", -1});
  t.push_back({makeRank1(UnramifiedCharacter::sgn(), -1), Side::Outside, "other-supercuspidal", -1});
  return t;
}

const char* membershipName(Membership m) {
  switch (m) {
    case Membership::IwahoriPlus: return "IwahoriPlus";
    case Membership::IwahoriMinus: return "IwahoriMinus";
    case Membership::Outside: return "Outside";
  }
  return "?";
}

namespace {

std::string memoKey(const EnhancedParameter& e, const PsiConductor& psi) {
  return print_parameter(e.phi) + "|" + print_signs(e.chi) + "|d" + std::to_string(psi.d);
}

const BaseTableEntry* lookupBase(const EnhancedParameter& e) {
  static const std::vector<BaseTableEntry> table = base_table();
  for (const BaseTableEntry& entry : table)
    if (entry.enh == e) return &entry;
  return nullptr;
}

Membership sideToMembership(Side s) {
  switch (s) {
    case Side::Plus: return Membership::IwahoriPlus;
    case Side::Minus: return Membership::IwahoriMinus;
    case Side::Outside: return Membership::Outside;
  }
  return Membership::Outside;
}

}  // namespace

Membership Pipeline::block_membership(const EnhancedParameter& e) {
  if (!e.phi.inertiaTrivial())
    fail(Err::NotEvaluable, "membership needs inertia-trivial (unramified) blocks");
  if (e.chi.size() != static_cast<int>(e.phi.iPlus().size()))
    fail(Err::InvalidSignature, "chi length does not match the I+ basis");
  Membership m = membershipImpl(e);
  if (m != Membership::Outside) {
    // the side reached through descent must reproduce the central sign
    CentralSigns cs = central_sign_and_sides(e, psi_);
    const int want = (m == Membership::IwahoriPlus) ? 1 : -1;
    if (cs.centralSign != want)
      fail(Err::OutsideBlock,
           "classification contradicts the central sign for " + memoKey(e, psi_));
  }
  return m;
}

Membership Pipeline::membershipImpl(const EnhancedParameter& e) {
  const std::string key = memoKey(e, psi_);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Membership result;
  const Parameter& phi = e.phi;
  if (!phi.bounded()) {
    TemperedSupport ts = tempered_support(phi);
    result = membershipImpl({ts.phi0, restrict_char(e.chi, ts)});
  } else if (!phi.goodParity()) {
    GoodParitySplit gs = good_parity_split(phi);
    result = membershipImpl({gs.gp, e.chi});
  } else if (!phi.discrete()) {
    DiscreteSupport ds = discrete_support(phi);
    result = membershipImpl({ds.phi0, restrict_char(e.chi, ds)});
  } else if (phi.rank() <= 1) {
    const BaseTableEntry* entry = lookupBase(e);
    if (entry == nullptr)
      fail(Err::NotEvaluable, "no base-table entry for " + print_parameter(phi));
    result = sideToMembership(entry->side);
  } else {
    std::vector<Choice> choices = valid_choices(phi, e.chi, psi_);
    if (choices.empty()) {
      result = Membership::Outside;
    } else {
      bool first = true;
      result = Membership::Outside;
      for (const Choice& c : choices) {
        Membership m = membershipImpl(jacquet_enhanced(phi, e.chi, c.block, psi_));
        if (first) {
          result = m;
          first = false;
        } else if (m != result) {
          fail(Err::OutsideBlock, "descent choices disagree on membership of " + key);
        }
      }
    }
  }
  std::lock_guard<std::mutex> lk(mu_);
  memo_.emplace(key, result);
  return result;
}

Pipeline::Derived Pipeline::derive(const EnhancedParameter& e) {
  const Parameter& phi = e.phi;
  Derived out;

  if (!phi.bounded()) {
    // Langlands stage: pass to the tempered support; the component groups are
    // identified slot by slot.
    TemperedSupport ts = tempered_support(phi);
    Derived sub = derive({ts.phi0, restrict_char(e.chi, ts)});
    out.chiCirc = sub.chiCirc;
    out.pathIndependent = sub.pathIndependent;
    out.node.stage = "Langlands";
    out.node.detail = "tempered support " + print_parameter(ts.phi0);
    out.node.children.emplace_back("phi0", std::move(sub.node));
    return out;
  }

  if (!phi.goodParity()) {
    GoodParitySplit gs = good_parity_split(phi);
    Derived sub = derive({gs.gp, e.chi});
    out.chiCirc = sub.chiCirc;
    out.pathIndependent = sub.pathIndependent;
    out.node.stage = "GoodParity";
    out.node.detail = "good-parity part " + print_parameter(gs.gp);
    out.node.children.emplace_back("gp", std::move(sub.node));
    return out;
  }

  if (!phi.discrete()) {
    // LIR stage: the S_{phi0}-part comes from the recursion, the R_phi-part
    // from inverse gamma values along the L-quotient path.
    DiscreteSupport ds = discrete_support(phi);
    Derived sub = derive({ds.phi0, restrict_char(e.chi, ds)});
    out.pathIndependent = sub.pathIndependent;
    out.chiCirc = SignVector::ones(static_cast<int>(phi.iPlus().size()));
    for (std::size_t k = 0; k < ds.oddSlots.size(); ++k)
      out.chiCirc.s[static_cast<std::size_t>(ds.oddSlots[k])] = sub.chiCirc.s[k];
    std::string rvals;
    for (int slot : ds.evenSlots) {
      int i = phi.iPlus()[static_cast<std::size_t>(slot)];
      const SimpleBlock& b = phi.blocks()[static_cast<std::size_t>(i)].first;
      Parameter single = normalize({{b.rho, b.a, 1}});
      LGamma lg = L_and_gamma(single, psi_);
      int gammaInv = Scalar(1).divExact(lg.gammaHalf).signValue();
      out.chiCirc.s[static_cast<std::size_t>(slot)] =
          e.chi.s[static_cast<std::size_t>(slot)] * gammaInv;
      if (!rvals.empty()) rvals += ", ";
      rvals += "gamma(1/2," + print_block(b) + ")^-1 = " + (gammaInv > 0 ? std::string("+1") : std::string("-1"));
    }
    out.node.stage = "LIR";
    out.node.detail = rvals.empty() ? "no R-group part" : rvals;
    out.node.children.emplace_back("phi0", std::move(sub.node));
    return out;
  }

  if (phi.rank() <= 1) {
    const BaseTableEntry* entry = lookupBase(e);
    if (entry == nullptr)
      fail(Err::OutsideBlock, "base table has no entry for " + print_parameter(phi));
    if (entry->side == Side::Outside)
      fail(Err::OutsideBlock, "base entry '" + entry->name + "' lies outside the blocks");
    // chi_circ is trivial on the Plus side and the sign character on Minus.
    out.chiCirc = SignVector::ones(static_cast<int>(phi.iPlus().size()));
    if (entry->side == Side::Minus)
      for (int& v : out.chiCirc.s) v = -1;
    out.node.stage = "Base";
    out.node.detail = entry->name;
    return out;
  }

  // Descent stage: invert r(sigma_{phi,chi_circ}) = sigma_{phi-,chi_circ-}
  // across every valid choice and demand agreement.
  std::vector<Choice> choices = valid_choices(phi, e.chi, psi_);
  if (choices.empty())
    fail(Err::OutsideBlock, "no valid descent choice for " + print_parameter(phi));
  out.node.stage = "Descent";
  bool haveResult = false;
  for (const Choice& c : choices) {
    ComponentDescent cd = component_descent(phi, c.block);
    EnhancedParameter lowered = jacquet_enhanced(phi, e.chi, c.block, psi_);
    Derived sub = derive(lowered);
    // pull chi_circ- back through the descent surjection; the kernel
    // coordinates are forced by T-triviality
    Character lifted = SignVector::ones(static_cast<int>(phi.iPlus().size()));
    for (std::size_t k = 0; k < cd.slotTarget.size(); ++k) {
      if (cd.slotTarget[k] >= 0)
        lifted.s[k] = sub.chiCirc.s[static_cast<std::size_t>(cd.slotTarget[k])];
      else
        lifted.s[k] = 1;  // Case3: chi_circ is trivial on the dropped mu_2
    }
    if (!sub.pathIndependent) out.pathIndependent = false;
    if (!haveResult) {
      out.chiCirc = lifted;
      haveResult = true;
    } else if (!(lifted == out.chiCirc)) {
      out.pathIndependent = false;
    }
    out.node.children.emplace_back("(" + print_block(c.block) + ")", std::move(sub.node));
  }
  out.node.detail = std::to_string(choices.size()) + " valid choice(s)";
  return out;
}

VerifyReport Pipeline::verify_pipeline(const EnhancedParameter& e) {
  VerifyReport rep;
  rep.input = e;
  rep.membership = block_membership(e);
  if (rep.membership == Membership::Outside)
    fail(Err::OutsideBlock, "parameter is outside the Iwahori blocks: " + memoKey(e, psi_));
  Derived d = derive(e);
  rep.tree = std::move(d.node);
  rep.derived = d.chiCirc;
  rep.closedForm = e.chi * nu_char(e.phi, psi_);
  rep.agreement = (rep.derived == rep.closedForm);
  rep.pathIndependent = d.pathIndependent;
  return rep;
}

namespace {

struct BlockKind {
  UnramifiedCharacter chi;  // unit value at the uniformizer
  int a;
  bool pair;  // true: the (+i,-i) dual pair, both members added
};

void enumerateRec(const std::vector<BlockKind>& kinds, std::size_t idx, int budget,
                  bool discreteOnly, std::vector<BlockSpec>& acc,
                  std::vector<Parameter>& out) {
  if (budget == 0) {
    // remaining kinds contribute nothing
    out.push_back(normalize(acc));
    return;
  }
  if (idx == kinds.size()) return;
  const BlockKind& k = kinds[idx];
  const int unit = k.pair ? 2 * k.a : k.a;
  const bool orthType = !k.pair && (k.a % 2 == 1);
  int maxMult = budget / unit;
  if (discreteOnly && !k.pair) maxMult = std::min(maxMult, 1);
  for (int m = 0; m <= maxMult; ++m) {
    if (m > 0) {
      if (orthType && m % 2 != 0) continue;  // I- multiplicities are even
      if (k.pair) {
        acc.push_back({SupercuspidalLabel(k.chi), k.a, m});
        acc.push_back({SupercuspidalLabel(k.chi.dual()), k.a, m});
      } else {
        acc.push_back({SupercuspidalLabel(k.chi), k.a, m});
      }
    }
    enumerateRec(kinds, idx + 1, budget - m * unit, discreteOnly, acc, out);
    if (m > 0) {
      acc.pop_back();
      if (k.pair) acc.pop_back();
    }
  }
}

}  // namespace

std::vector<Parameter> enumerate_parameters(int rank, const EnumOpts& opts) {
  if (rank < 0 || rank > opts.maxRank)
    fail(Err::RankBound, "rank " + std::to_string(rank) + " outside 0.." +
                             std::to_string(opts.maxRank));
  std::vector<BlockKind> kinds;
  const int dim = 2 * rank;
  for (int a = 1; a <= dim; ++a) {
    if (opts.discreteOnly && a % 2 == 1) continue;
    if (opts.phaseOne) kinds.push_back({UnramifiedCharacter::trivial(), a, false});
    if (opts.phaseMinusOne) kinds.push_back({UnramifiedCharacter::sgn(), a, false});
  }
  if (opts.phaseI && !opts.discreteOnly)
    for (int a = 1; a <= rank; ++a)
      kinds.push_back({UnramifiedCharacter(Rational(1, 4), Rational(0)), a, true});

  std::vector<Parameter> out;
  std::vector<BlockSpec> acc;
  enumerateRec(kinds, 0, dim, opts.discreteOnly, acc, out);

  std::vector<Parameter> filtered;
  for (Parameter& p : out) {
    if (opts.discreteOnly && !p.discrete()) continue;
    if (opts.boundedOnly && !p.bounded()) continue;
    filtered.push_back(std::move(p));
  }
  std::sort(filtered.begin(), filtered.end(), [](const Parameter& x, const Parameter& y) {
    return print_parameter(x) < print_parameter(y);
  });
  return filtered;
}

std::vector<EnhancedParameter> enumerate_enhanced(int rank, const EnumOpts& opts) {
  std::vector<EnhancedParameter> out;
  for (const Parameter& phi : enumerate_parameters(rank, opts)) {
    ComponentGroup g = component_data(phi).group;
    for (const GroupElement& chi : g.elements()) out.push_back({phi, chi});
  }
  return out;
}

}  // namespace mpp

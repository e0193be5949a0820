#pragma once

#include <mutex>
#include <unordered_map>

#include "mpp/descent.hpp"
#include "mpp/levi.hpp"

namespace mpp {

enum class Direction { MpToSO, SOToMp };

/// The parameter transfer: the L-parameter is fixed and the enhancement is
/// twisted by nu_phi. An involution, since nu_phi is 2-torsion.
EnhancedParameter tw_transfer(const EnhancedParameter& e, const PsiConductor& psi, Direction dir);

struct CentralSigns {
  int centralSign;  // (chi nu_phi)(z_phi)
  int soSide;       // chi_circ(z_phi) after transfer; always equal
};
CentralSigns central_sign_and_sides(const EnhancedParameter& e, const PsiConductor& psi);

enum class Side { Plus, Minus, Outside };

struct BaseTableEntry {
  EnhancedParameter enh;
  Side side;
  std::string name;  // "empty", "st(1)", "st(sgn)", "weil-odd", "other-supercuspidal"
  int centralSign;
};

/// The rank <= 1 classification: three Iwahori entries plus the rank-0 and
/// outside rows.
std::vector<BaseTableEntry> base_table();

enum class Membership { IwahoriPlus, IwahoriMinus, Outside };

const char* membershipName(Membership m);

/// One stage of a derivation tree.
struct VerifyNode {
  std::string stage;   // Langlands | GoodParity | LIR | Descent | Base
  std::string detail;  // entry name, descent block, R-part values, ...
  std::vector<std::pair<std::string, VerifyNode>> children;  // label -> subtree
};

struct VerifyReport {
  EnhancedParameter input;
  Membership membership = Membership::Outside;
  VerifyNode tree;
  Character derived;     // chi_circ recovered through the staged pipeline
  Character closedForm;  // chi * nu_phi
  bool agreement = false;
  bool pathIndependent = false;
};

/// Enumeration universe: inertia-trivial bounded parameters whose block
/// values at the uniformizer lie in the configured phase set.
struct EnumOpts {
  bool discreteOnly = false;
  bool boundedOnly = true;  // the universe is bounded; kept as an explicit filter
  bool phaseOne = true;     // +1
  bool phaseMinusOne = true;
  bool phaseI = false;      // +i/-i come as a dual pair
  int maxRank = 8;
};

std::vector<Parameter> enumerate_parameters(int rank, const EnumOpts& opts);
std::vector<EnhancedParameter> enumerate_enhanced(int rank, const EnumOpts& opts);

/// Membership search and staged verifier, with a concurrent memo table on
/// canonical enhanced-parameter keys.
class Pipeline {
 public:
  explicit Pipeline(PsiConductor psi) : psi_(psi) {}

  /// Reachability classification: reduce to the discrete support, descend
  /// through valid choices, and read off the base table. Sound for
  /// theorem-certified inputs, heuristic beyond them.
  Membership block_membership(const EnhancedParameter& e);

  /// Derives chi_circ without evaluating the root-number character at the top
  /// level, then compares against the closed form chi * nu_phi.
  VerifyReport verify_pipeline(const EnhancedParameter& e);

  const PsiConductor& psi() const { return psi_; }

 private:
  struct Derived {
    Character chiCirc;
    VerifyNode node;
    bool pathIndependent = true;
  };
  Derived derive(const EnhancedParameter& e);
  Membership membershipImpl(const EnhancedParameter& e);

  PsiConductor psi_;
  std::mutex mu_;
  std::unordered_map<std::string, Membership> memo_;
};

}  // namespace mpp

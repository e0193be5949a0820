#pragma once

#include "mpp/endoscopy.hpp"
#include "mpp/params.hpp"

namespace mpp {

enum class DescentTag { Case1, Case2, Case3 };

/// Case1: a > 2 and (rho, a-2) absent; Case2: a > 2 and (rho, a-2) present
/// (partner = its block index in phi); Case3: a = 2 (removal).
struct DescentCase {
  DescentTag tag;
  int partnerIndex = -1;
};

enum class KernelKind { Trivial, Diagonal, Coordinate };

/// Kernel of the component-group surjection S_phi ->> S_{phi-}.
struct KernelT {
  KernelKind kind = KernelKind::Trivial;
  int slot0 = -1;  // I+ slot of (rho, a)
  int slot1 = -1;  // I+ slot of (rho, a-2) in Case2

  std::size_t order() const { return kind == KernelKind::Trivial ? 1 : 2; }
};

struct ParamDescent {
  Parameter minus;
  DescentCase dcase;
  int blockIndex = -1;  // index of (rho, a) in phi
};

/// Replace rho x r(a) by rho x r(a-2), or remove it when a = 2. Defined for
/// discrete phi (multiplicity-free good parity), per the reduction hypotheses.
ParamDescent descend_param(const Parameter& phi, const SimpleBlock& block);

struct ComponentDescent {
  ParamDescent pd;
  KernelT kernel;
  /// per I+ slot of phi: the receiving I+ slot of phi-, or -1 when dropped
  std::vector<int> slotTarget;
};

ComponentDescent component_descent(const Parameter& phi, const SimpleBlock& block);

/// Pushes chi through the descent map; requires chi trivial on the kernel.
Character descend_character(const Character& chi, const ComponentDescent& cd);

struct Choice {
  SimpleBlock block;
  int blockIndex;
  DescentTag tag;
  int alphaPrime;   // +1
  int alphaDouble;  // omega_rho(-1); +1 for unramified rho
};

/// All blocks (rho, a) with rho unramified, a >= 2, and chi*nu_phi trivial on
/// the block's kernel. Empty at rank <= 1 and whenever no block qualifies.
std::vector<Choice> valid_choices(const Parameter& phi, const Character& chi,
                                  const PsiConductor& psi);

/// The enhanced Jacquet descent (phi, chi) -> (phi-, (chi nu_phi)- nu_{phi-}).
EnhancedParameter jacquet_enhanced(const Parameter& phi, const Character& chi,
                                   const SimpleBlock& block, const PsiConductor& psi);

/// Image of an involution signature under descent along (rho, a).
InvolutionSignature descend_signature(const Parameter& phi, const InvolutionSignature& s,
                                      const SimpleBlock& block);

/// Descends the endoscopic side containing (rho, a); agrees with
/// factorize(phi-, s-) on the nose.
Factorization endoscopic_descent(const Parameter& phi, const InvolutionSignature& s,
                                 const SimpleBlock& block);

}  // namespace mpp

#pragma once

#include <string>
#include <vector>

#include "mpp/scalar.hpp"

namespace mpp {

/// Element of (Z/2Z)^n x| S_n acting on the epsilon-basis, relative to the
/// reversed Borel: simple roots beta_1 = 2e_1, beta_i = e_i - e_{i-1}.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  static SignedPermutation identity(int n);
  static SignedPermutation minusIdentity(int n);
  /// Simple reflection t_i, 1-based; throws Err::IndexOutOfRange.
  static SignedPermutation generator(int n, int i);
  /// Assembles w(e_i) = signs[i] * e_{targets[i]} from 0-based targets.
  static SignedPermutation fromImages(std::vector<int> targets, std::vector<int> signs);

  int n() const { return static_cast<int>(img_.size()); }
  /// w(e_i) = sign * e_target, both 1-based in the pair (target, sign).
  std::pair<int, int> image(int i) const {
    return {img_[static_cast<std::size_t>(i - 1)] + 1, sgn_[static_cast<std::size_t>(i - 1)]};
  }

  SignedPermutation operator*(const SignedPermutation& o) const;  // (uv)(x) = u(v(x))
  SignedPermutation inverse() const;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

  /// Coordinates of w(r) for a root r given in the epsilon-basis.
  std::vector<long long> actOnRoot(const std::vector<long long>& r) const;

  /// Underlying permutation and sign vector of the semidirect decomposition.
  const std::vector<int>& perm() const { return img_; }
  const std::vector<int>& signs() const { return sgn_; }

  std::string str() const;

 private:
  std::vector<int> img_;  // 0-based targets
  std::vector<int> sgn_;  // +1 / -1
};

struct GeneratorWord {
  std::vector<int> letters;  // 1-based generator indices
};

/// Number of positive roots sent negative (reversed-Borel positivity).
int coxeterLength(const SignedPermutation& w);

struct ReducedResult {
  SignedPermutation w;
  GeneratorWord reduced;
  int length = 0;
};

/// Evaluates a word and produces the deterministic reduced expression
/// obtained by iterated left descent, smallest admissible generator first.
ReducedResult evaluate_and_reduce(int n, const GeneratorWord& word);

GeneratorWord reducedWord(const SignedPermutation& w);

enum class TMode { Roots, Components, Word };

/// t(w): count of long roots sent negative == sign-flip components == number
/// of occurrences of generator 1 in any reduced expression.
int t_invariant(const SignedPermutation& w, TMode mode);

struct ComparisonScalar {
  Scalar value;
  int gammaExponent = 0;  // formal exponent of the gamma_F(psi) symbol
};

/// '+' side: |2|^{t/2} = q^{-e2 t/2}; '-' side: (-q^{-1})^t |2|^{t/2}.
ComparisonScalar comparison_scalar(const SignedPermutation& w, char side, int e2);

/// Standard Levi Sp(spRank) x GL(n_1) x ... x GL(n_r) of a rank-n group; the
/// Sp block occupies the lowest coordinates, GL blocks follow in order.
struct LeviShape {
  int spRank = 0;
  std::vector<int> glSizes;

  int totalRank() const;
};

/// Unique minimal-length representative of the left coset W_M * w; requires
/// w to normalize the Levi (Err::NotNormalizing otherwise).
SignedPermutation min_coset_rep(const SignedPermutation& w, const LeviShape& levi);

/// All 2^n n! elements, deterministic order; test- and bench-scale only.
std::vector<SignedPermutation> allElements(int n);

}  // namespace mpp

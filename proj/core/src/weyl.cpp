#include "mpp/weyl.hpp"

#include <algorithm>
#include <numeric>

#include "mpp/errors.hpp"

namespace mpp {

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation w;
  w.img_.resize(static_cast<std::size_t>(n));
  std::iota(w.img_.begin(), w.img_.end(), 0);
  w.sgn_.assign(static_cast<std::size_t>(n), 1);
  return w;
}

SignedPermutation SignedPermutation::minusIdentity(int n) {
  SignedPermutation w = identity(n);
  w.sgn_.assign(static_cast<std::size_t>(n), -1);
  return w;
}

SignedPermutation SignedPermutation::generator(int n, int i) {
  if (i < 1 || i > n)
    fail(Err::IndexOutOfRange, "generator index " + std::to_string(i) + " outside 1.." +
                                   std::to_string(n));
  SignedPermutation w = identity(n);
  if (i == 1) {
    w.sgn_[0] = -1;  // reflection in 2e_1
  } else {
    std::swap(w.img_[static_cast<std::size_t>(i - 2)], w.img_[static_cast<std::size_t>(i - 1)]);
  }
  return w;
}

SignedPermutation SignedPermutation::fromImages(std::vector<int> targets, std::vector<int> signs) {
  std::vector<bool> hit(targets.size(), false);
  for (int t : targets) {
    if (t < 0 || t >= static_cast<int>(targets.size()) || hit[static_cast<std::size_t>(t)])
      fail(Err::IndexOutOfRange, "target indices are not a permutation");
    hit[static_cast<std::size_t>(t)] = true;
  }
  for (int s : signs)
    if (s != 1 && s != -1) fail(Err::IndexOutOfRange, "signs must be +1/-1");
  SignedPermutation w;
  w.img_ = std::move(targets);
  w.sgn_ = std::move(signs);
  return w;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& o) const {
  // (uv)(e_i) = u(v(e_i))
  SignedPermutation r;
  const std::size_t n = img_.size();
  r.img_.resize(n);
  r.sgn_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    int mid = o.img_[i];
    r.img_[i] = img_[static_cast<std::size_t>(mid)];
    r.sgn_[i] = o.sgn_[i] * sgn_[static_cast<std::size_t>(mid)];
  }
  return r;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation r;
  const std::size_t n = img_.size();
  r.img_.resize(n);
  r.sgn_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    r.sgn_[static_cast<std::size_t>(img_[i])] = sgn_[i];
  }
  return r;
}

std::vector<long long> SignedPermutation::actOnRoot(const std::vector<long long>& r) const {
  std::vector<long long> out(r.size(), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    out[static_cast<std::size_t>(img_[i])] += sgn_[i] * r[i];
  return out;
}

std::string SignedPermutation::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ",";
    if (sgn_[i] < 0) s += "-";
    s += std::to_string(img_[i] + 1);
  }
  return s + "]";
}

namespace {

/// Positive roots of the reversed system: e_j - e_i (i<j), e_i + e_j (i<j), 2e_i.
std::vector<std::vector<long long>> positiveRoots(int n) {
  std::vector<std::vector<long long>> roots;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> r(static_cast<std::size_t>(n), 0);
    r[static_cast<std::size_t>(i)] = 2;
    roots.push_back(r);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<long long> r(static_cast<std::size_t>(n), 0);
      r[static_cast<std::size_t>(i)] = -1;
      r[static_cast<std::size_t>(j)] = 1;
      roots.push_back(r);
      r[static_cast<std::size_t>(i)] = 1;
      roots.push_back(r);
    }
  return roots;
}

/// Reversed-Borel positivity: the highest-index nonzero coordinate is positive.
bool rootIsPositive(const std::vector<long long>& r) {
  for (std::size_t i = r.size(); i-- > 0;)
    if (r[i] != 0) return r[i] > 0;
  fail(Err::IndexOutOfRange, "zero vector is not a root");
}

}  // namespace

int coxeterLength(const SignedPermutation& w) {
  int len = 0;
  for (const auto& r : positiveRoots(w.n()))
    if (!rootIsPositive(w.actOnRoot(r))) ++len;
  return len;
}

GeneratorWord reducedWord(const SignedPermutation& w) {
  GeneratorWord out;
  SignedPermutation cur = w;
  int len = coxeterLength(cur);
  while (len > 0) {
    bool found = false;
    for (int i = 1; i <= cur.n(); ++i) {
      SignedPermutation next = SignedPermutation::generator(cur.n(), i) * cur;
      int l = coxeterLength(next);
      if (l < len) {
        out.letters.push_back(i);
        cur = next;
        len = l;
        found = true;
        break;
      }
    }
    if (!found) fail(Err::IndexOutOfRange, "no descent found for nontrivial element");
  }
  return out;
}

ReducedResult evaluate_and_reduce(int n, const GeneratorWord& word) {
  SignedPermutation w = SignedPermutation::identity(n);
  for (int i : word.letters) w = w * SignedPermutation::generator(n, i);
  ReducedResult res;
  res.w = w;
  res.reduced = reducedWord(w);
  res.length = coxeterLength(w);
  return res;
}

int t_invariant(const SignedPermutation& w, TMode mode) {
  switch (mode) {
    case TMode::Roots: {
      // count of i with w(2e_i) reversed-Borel negative
      int t = 0;
      for (int i = 0; i < w.n(); ++i) {
        std::vector<long long> r(static_cast<std::size_t>(w.n()), 0);
        r[static_cast<std::size_t>(i)] = 2;
        if (!rootIsPositive(w.actOnRoot(r))) ++t;
      }
      return t;
    }
    case TMode::Components: {
      int t = 0;
      for (int s : w.signs())
        if (s == -1) ++t;
      return t;
    }
    case TMode::Word: {
      GeneratorWord rw = reducedWord(w);
      return static_cast<int>(std::count(rw.letters.begin(), rw.letters.end(), 1));
    }
  }
  return 0;
}

ComparisonScalar comparison_scalar(const SignedPermutation& w, char side, int e2) {
  const int t = t_invariant(w, TMode::Components);
  ComparisonScalar out;
  out.gammaExponent = -t;
  Scalar half2 = Scalar::qPow(-e2 * t);  // |2|^{t/2} = q^{-e2*t/2}
  if (side == '+') {
    out.value = half2;
  } else if (side == '-') {
    out.value = (-Scalar::qPow(-2)).pow(t) * half2;
  } else {
    fail(Err::IndexOutOfRange, std::string("side must be '+' or '-', got '") + side + "'");
  }
  return out;
}

int LeviShape::totalRank() const {
  int n = spRank;
  for (int g : glSizes) n += g;
  return n;
}

namespace {

/// 1-based generator indices of the Levi's Weyl group: t_1..t_m for the Sp
/// block, and the transpositions interior to each GL block.
std::vector<int> leviGenerators(const LeviShape& levi) {
  std::vector<int> gens;
  for (int i = 1; i <= levi.spRank; ++i) gens.push_back(i);
  int base = levi.spRank;
  for (int g : levi.glSizes) {
    for (int i = base + 2; i <= base + g; ++i) gens.push_back(i);
    base += g;
  }
  return gens;
}

bool normalizesLevi(const SignedPermutation& w, const LeviShape& levi) {
  // Sp block must map to itself (any signs); each GL block must land on a GL
  // block of equal size with a uniform sign.
  const auto& img = w.perm();
  const auto& sgn = w.signs();
  std::vector<int> blockOf(static_cast<std::size_t>(w.n()), -1);
  std::vector<int> blockSize;
  for (int i = 0; i < levi.spRank; ++i) blockOf[static_cast<std::size_t>(i)] = 0;
  blockSize.push_back(levi.spRank);
  int base = levi.spRank;
  for (int g : levi.glSizes) {
    for (int i = base; i < base + g; ++i)
      blockOf[static_cast<std::size_t>(i)] = static_cast<int>(blockSize.size());
    blockSize.push_back(g);
    base += g;
  }
  for (std::size_t grp = 0; grp < blockSize.size(); ++grp) {
    int target = -2, uniformSign = 0;
    for (int i = 0; i < w.n(); ++i) {
      if (blockOf[static_cast<std::size_t>(i)] != static_cast<int>(grp)) continue;
      int to = blockOf[static_cast<std::size_t>(img[static_cast<std::size_t>(i)])];
      if (target == -2) {
        target = to;
        uniformSign = sgn[static_cast<std::size_t>(i)];
      } else if (to != target) {
        return false;
      }
      if (grp > 0 && sgn[static_cast<std::size_t>(i)] != uniformSign) return false;
    }
    if (target == -2) continue;  // empty block
    if (grp == 0) {
      if (target != 0) return false;
    } else {
      if (target == 0 || blockSize[static_cast<std::size_t>(target)] != blockSize[grp])
        return false;
    }
  }
  return true;
}

}  // namespace

SignedPermutation min_coset_rep(const SignedPermutation& w, const LeviShape& levi) {
  if (levi.totalRank() != w.n())
    fail(Err::NotNormalizing, "Levi rank " + std::to_string(levi.totalRank()) +
                                  " != group rank " + std::to_string(w.n()));
  if (!normalizesLevi(w, levi))
    fail(Err::NotNormalizing, "element does not normalize the Levi factorization");
  SignedPermutation cur = w;
  int len = coxeterLength(cur);
  const std::vector<int> gens = leviGenerators(levi);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : gens) {
      SignedPermutation next = SignedPermutation::generator(cur.n(), i) * cur;
      int l = coxeterLength(next);
      if (l < len) {
        cur = next;
        len = l;
        moved = true;
        break;
      }
    }
  }
  return cur;
}

std::vector<SignedPermutation> allElements(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<SignedPermutation> out;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> signs(static_cast<std::size_t>(n), 1);
      for (int b = 0; b < n; ++b)
        if (mask >> b & 1) signs[static_cast<std::size_t>(b)] = -1;
      out.push_back(SignedPermutation::fromImages(p, signs));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace mpp

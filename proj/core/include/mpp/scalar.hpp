#pragma once

#include <map>
#include <string>

#include "mpp/rational.hpp"

namespace mpp {

/// Gaussian rational a + b*i. A field, so Laurent polynomials over it admit
/// exact long division.
struct GaussQ {
  Rational re, im;

  GaussQ() = default;
  GaussQ(Rational r) : re(r) {}
  GaussQ(Rational r, Rational i) : re(r), im(i) {}

  bool isZero() const { return re.isZero() && im.isZero(); }
  GaussQ operator-() const { return {-re, -im}; }
  GaussQ operator+(const GaussQ& o) const { return {re + o.re, im + o.im}; }
  GaussQ operator-(const GaussQ& o) const { return {re - o.re, im - o.im}; }
  GaussQ operator*(const GaussQ& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussQ inverse() const {
    Rational n = re * re + im * im;
    if (n.isZero()) fail(Err::ExactDivision, "inverse of zero Gaussian rational");
    return {re / n, -im / n};
  }
  friend bool operator==(const GaussQ&, const GaussQ&) = default;
};

/// Exact value in Q(i)[q^{1/2}, q^{-1/2}], i.e. a finite formal sum of
/// monomials c * i^k * q^{m/2}. The residue cardinality q is purely symbolic;
/// distinct half-integer powers of q are linearly independent by fiat, so
/// equality is coefficient-wise and decidable.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long c) { set(0, GaussQ(Rational(c))); }
  Scalar(const Rational& c) { set(0, GaussQ(c)); }

  /// c * i^k * q^{half/2}
  static Scalar monomial(GaussQ c, int half) {
    Scalar s;
    s.set(half, c);
    return s;
  }
  static Scalar i() { return monomial(GaussQ(Rational(0), Rational(1)), 0); }
  /// q^{half/2}; pass half=2 for q, half=-1 for q^{-1/2}, ...
  static Scalar qPow(int half) { return monomial(GaussQ(Rational(1)), half); }

  bool isZero() const { return terms_.empty(); }
  bool isOne() const { return *this == Scalar(1); }
  /// true when the value is exactly +1 or -1
  bool isSign() const { return *this == Scalar(1) || *this == Scalar(-1); }
  /// +1 or -1; throws unless isSign()
  int signValue() const {
    if (*this == Scalar(1)) return 1;
    if (*this == Scalar(-1)) return -1;
    fail(Err::NotEvaluable, "scalar is not a sign: " + str());
  }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Exact division; throws Err::ExactDivision when the quotient leaves the ring.
  Scalar divExact(const Scalar& den) const;

  Scalar pow(int e) const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

  /// Canonical rendering over {i, q^(1/2)}: "-1", "i*q^(-1/2)", "1 - q^(-1)", ...
  std::string str() const;

  const std::map<int, GaussQ>& terms() const { return terms_; }

 private:
  void set(int half, GaussQ c) {
    if (c.isZero())
      terms_.erase(half);
    else
      terms_[half] = c;
  }
  void add(int half, GaussQ c);

  // key: exponent of q^{1/2}
  std::map<int, GaussQ> terms_;
};

std::string gaussStr(const GaussQ& c, bool withQPart);

}  // namespace mpp

#pragma once

#include <string>
#include <vector>

#include "mpp/scalar.hpp"

namespace mpp {

/// Polynomial in X = q^{-s} with Scalar coefficients, dense by X-degree.
class Poly {
 public:
  Poly() = default;
  Poly(Scalar c) {
    if (!c.isZero()) coeffs_.push_back(std::move(c));
  }
  static Poly one() { return Poly(Scalar(1)); }
  /// c0 + c1 X
  static Poly linear(Scalar c0, Scalar c1);

  bool isZero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Poly operator+(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  friend bool operator==(const Poly&, const Poly&) = default;

  Scalar eval(const Scalar& x) const;
  std::string str() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Quotient of polynomials in X; equality is cross-multiplicative, no
/// reduction to lowest terms is attempted.
class RationalFunction {
 public:
  RationalFunction() : num_(Poly::one()), den_(Poly::one()) {}
  RationalFunction(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  RationalFunction operator*(const RationalFunction& o) const {
    return {num_ * o.num_, den_ * o.den_};
  }
  RationalFunction inverse() const { return {den_, num_}; }

  bool equals(const RationalFunction& o) const { return num_ * o.den_ == o.num_ * den_; }

  bool hasPoleAt(const Scalar& x) const { return den_.eval(x).isZero(); }
  /// Exact value at X = x; throws Err::PoleAtHalf when the denominator vanishes.
  Scalar eval(const Scalar& x) const;

  std::string str() const;

 private:
  Poly num_, den_;
};

}  // namespace mpp

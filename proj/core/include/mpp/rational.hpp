#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "mpp/errors.hpp"

namespace mpp {

/// Exact rational number on int64. All values in this toolkit stay tiny
/// (character exponents, conductor exponents, Fourier denominators 2^k).
class Rational {
 public:
  constexpr Rational() : n_(0), d_(1) {}
  constexpr Rational(long long n) : n_(n), d_(1) {}
  Rational(long long n, long long d) : n_(n), d_(d) { reduce(); }

  long long num() const { return n_; }
  long long den() const { return d_; }

  bool isZero() const { return n_ == 0; }
  bool isInteger() const { return d_ == 1; }
  /// true when this is m/2 for some integer m
  bool isHalfInteger() const { return d_ == 1 || d_ == 2; }

  Rational operator-() const { return raw(-n_, d_); }
  Rational operator+(const Rational& o) const { return Rational(n_ * o.d_ + o.n_ * d_, d_ * o.d_); }
  Rational operator-(const Rational& o) const { return Rational(n_ * o.d_ - o.n_ * d_, d_ * o.d_); }
  Rational operator*(const Rational& o) const { return Rational(n_ * o.n_, d_ * o.d_); }
  Rational operator/(const Rational& o) const {
    if (o.n_ == 0) fail(Err::ExactDivision, "rational division by zero");
    return Rational(n_ * o.d_, d_ * o.n_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.n_ == b.n_ && a.d_ == b.d_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.n_ * b.d_ <=> b.n_ * a.d_;
  }

  /// Fractional part in [0, 1).
  Rational mod1() const {
    long long r = n_ % d_;
    if (r < 0) r += d_;
    return raw(r, d_);
  }

  std::string str() const {
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
  }

  /// Parses "p" or "p/q"; throws Err::Syntax on malformed input.
  static Rational parse(const std::string& s);

 private:
  static constexpr Rational raw(long long n, long long d) {
    Rational r;
    r.n_ = n;
    r.d_ = d;
    return r;
  }
  void reduce() {
    if (d_ == 0) fail(Err::ExactDivision, "zero denominator");
    if (d_ < 0) {
      n_ = -n_;
      d_ = -d_;
    }
    long long g = std::gcd(n_ < 0 ? -n_ : n_, d_);
    if (g > 1) {
      n_ /= g;
      d_ /= g;
    }
    if (n_ == 0) d_ = 1;
  }

  long long n_, d_;
};

inline Rational Rational::parse(const std::string& s) {
  if (s.empty()) fail(Err::Syntax, "empty rational");
  std::size_t slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long n = std::stoll(s, &used);
      if (used != s.size()) fail(Err::Syntax, "bad rational '" + s + "'");
      return Rational(n);
    }
    long long n = std::stoll(s.substr(0, slash), &used);
    if (used != slash) fail(Err::Syntax, "bad rational '" + s + "'");
    long long d = std::stoll(s.substr(slash + 1), &used);
    if (used != s.size() - slash - 1) fail(Err::Syntax, "bad rational '" + s + "'");
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    fail(Err::Syntax, "bad rational '" + s + "'");
  } catch (const std::out_of_range&) {
    fail(Err::Syntax, "rational out of range '" + s + "'");
  }
}

}  // namespace mpp

#include "mpp/scalar.hpp"

namespace mpp {

void Scalar::add(int half, GaussQ c) {
  auto it = terms_.find(half);
  if (it == terms_.end()) {
    if (!c.isZero()) terms_.emplace(half, c);
    return;
  }
  GaussQ s = it->second + c;
  if (s.isZero())
    terms_.erase(it);
  else
    it->second = s;
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (auto& [h, c] : terms_) r.terms_.emplace(h, -c);
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  for (auto& [h, c] : o.terms_) r.add(h, c);
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  for (auto& [h, c] : o.terms_) r.add(h, -c);
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  for (auto& [h1, c1] : terms_)
    for (auto& [h2, c2] : o.terms_) r.add(h1 + h2, c1 * c2);
  return r;
}

Scalar Scalar::divExact(const Scalar& den) const {
  if (den.isZero()) fail(Err::ExactDivision, "division by zero scalar");
  if (isZero()) return Scalar();
  // Laurent long division from the top term down. An exact quotient has
  // lowest exponent shiftMin; once the working shift drops below that, the
  // division cannot be exact.
  const int shiftMin = terms_.begin()->first - den.terms_.begin()->first;
  const auto dlead = std::prev(den.terms_.end());
  const GaussQ dinv = dlead->second.inverse();
  Scalar rem = *this, quot;
  while (!rem.isZero()) {
    auto rlead = std::prev(rem.terms_.end());
    int shift = rlead->first - dlead->first;
    if (shift < shiftMin)
      fail(Err::ExactDivision, "inexact scalar division: " + str() + " / " + den.str());
    GaussQ c = rlead->second * dinv;
    quot.add(shift, c);
    for (auto& [h, dc] : den.terms_) rem.add(h + shift, -(dc * c));
  }
  return quot;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return Scalar(1).divExact(pow(-e));
  Scalar r(1);
  Scalar b = *this;
  int k = e;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

std::string gaussStr(const GaussQ& c, bool withQPart) {
  // Renders the coefficient, assuming the caller prepends the sign context.
  if (c.im.isZero()) {
    if (c.re == Rational(1) && withQPart) return "";
    if (c.re == Rational(-1) && withQPart) return "-";
    return c.re.str();
  }
  if (c.re.isZero()) {
    if (c.im == Rational(1)) return "i";
    if (c.im == Rational(-1)) return "-i";
    return c.im.str() + "*i";
  }
  std::string im = c.im == Rational(1) ? "i" : (c.im == Rational(-1) ? "-i" : c.im.str() + "*i");
  std::string s = c.re.str();
  s += (im[0] == '-') ? " - " + im.substr(1) : " + " + im;
  // parenthesize only when a q-power follows
  return withQPart ? "(" + s + ")" : s;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [h, c] : terms_) {
    std::string coef = gaussStr(c, h != 0);
    std::string qpart;
    if (h != 0) {
      qpart = "q";
      if (h != 2) {
        qpart += "^(";
        qpart += (h % 2 == 0) ? std::to_string(h / 2)
                              : std::to_string(h) + "/2";
        qpart += ")";
      }
    }
    std::string term;
    if (qpart.empty()) {
      term = coef;
    } else if (coef.empty()) {
      term = qpart;
    } else if (coef == "-") {
      term = "-" + qpart;
    } else {
      term = coef + "*" + qpart;
    }
    if (first) {
      out = term;
      first = false;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace mpp

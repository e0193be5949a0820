#include "mpp/ratfunc.hpp"

namespace mpp {

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
}

Poly Poly::linear(Scalar c0, Scalar c1) {
  Poly p;
  p.coeffs_ = {std::move(c0), std::move(c1)};
  p.trim();
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    if (i < coeffs_.size()) r.coeffs_[i] += coeffs_[i];
    if (i < o.coeffs_.size()) r.coeffs_[i] += o.coeffs_[i];
  }
  r.trim();
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (isZero() || o.isZero()) return Poly();
  Poly r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Scalar());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  r.trim();
  return r;
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

std::string Poly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].isZero()) continue;
    std::string c = coeffs_[i].str();
    bool sum = c.find(" + ") != std::string::npos || c.find(" - ") != std::string::npos;
    std::string term;
    if (i == 0) {
      term = sum ? "(" + c + ")" : c;
    } else {
      std::string xs = (i == 1) ? "X" : "X^" + std::to_string(i);
      if (c == "1")
        term = xs;
      else if (c == "-1")
        term = "-" + xs;
      else if (sum)
        term = "(" + c + ") " + xs;
      else
        term = c + " " + xs;
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
  return out.empty() ? "0" : out;
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.isZero()) fail(Err::ExactDivision, "zero denominator in rational function");
}

Scalar RationalFunction::eval(const Scalar& x) const {
  Scalar d = den_.eval(x);
  if (d.isZero()) fail(Err::PoleAtHalf, "pole of rational function at evaluation point");
  return num_.eval(x).divExact(d);
}

std::string RationalFunction::str() const {
  if (den_ == Poly::one()) return num_.str();
  if (num_ == Poly::one()) return "(" + den_.str() + ")^-1";
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace mpp

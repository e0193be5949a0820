#include "mpp/expr.hpp"

#include <cctype>

namespace mpp {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void err(const std::string& what) const {
    fail(Err::Syntax, what + " at offset " + std::to_string(pos) + " in '" + text + "'");
  }
  void skipWs() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool atEnd() {
    skipWs();
    return pos >= text.size();
  }
  char peek() {
    skipWs();
    if (pos >= text.size()) err("unexpected end of input");
    return text[pos];
  }
  void expect(char c) {
    if (peek() != c) err(std::string("expected '") + c + "'");
    ++pos;
  }
  bool tryConsume(char c) {
    if (!atEnd() && peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long long integer() {
    skipWs();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      err("expected an integer");
    return std::stoll(text.substr(start, pos - start));
  }
  Rational rational() {
    long long n = integer();
    if (tryConsume('/')) {
      long long d = integer();
      return Rational(n, d);
    }
    return Rational(n);
  }
  std::string name(const char* stops) {
    skipWs();
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           std::string(stops).find(text[pos]) == std::string::npos)
      ++pos;
    if (pos == start) err("expected a name");
    return text.substr(start, pos - start);
  }
};

int parseSign(Cursor& c, const std::string& v) {
  if (v == "+1" || v == "+") return 1;
  if (v == "-1" || v == "-") return -1;
  c.err("expected +1 or -1, got '" + v + "'");
}

SupercuspidalLabel parseChar(Cursor& c) {
  std::string head = c.name("(,x])");
  if (head == "1") return SupercuspidalLabel(UnramifiedCharacter::trivial());
  if (head == "sgn") return SupercuspidalLabel(UnramifiedCharacter::sgn());
  if (head == "unr") {
    c.expect('(');
    Rational rot = c.rational();
    c.expect(',');
    Rational texp = c.rational();
    c.expect(')');
    return SupercuspidalLabel(UnramifiedCharacter(rot, texp));
  }
  if (head == "rho") {
    c.expect('(');
    AbstractLabel l;
    l.name = c.name(";)");
    c.expect(';');
    bool sawSd = false;
    while (true) {
      std::string key = c.name("=");
      c.expect('=');
      std::string val = c.name(",)");
      if (key == "dim") {
        l.dim = static_cast<int>(Rational::parse(val).num());
      } else if (key == "sd") {
        sawSd = true;
        if (val == "S") {
          l.sd = SelfDualType::Symplectic;
        } else if (val == "O") {
          l.sd = SelfDualType::Orthogonal;
        } else if (val.rfind("dual:", 0) == 0) {
          l.sd = SelfDualType::NotSelfDual;
          l.dualName = val.substr(5);
        } else {
          c.err("sd must be S, O or dual:NAME");
        }
      } else if (key == "eps") {
        l.epsHalf = parseSign(c, val);
      } else if (key == "wm1") {
        l.centralSign = parseSign(c, val);
      } else {
        c.err("unknown attribute '" + key + "'");
      }
      if (c.tryConsume(')')) break;
      c.expect(',');
    }
    if (!sawSd) c.err("rho(...) needs an sd attribute");
    return SupercuspidalLabel(l);
  }
  c.err("unknown character '" + head + "'");
}

BlockSpec parseTerm(Cursor& c) {
  BlockSpec spec;
  spec.mult = 1;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    spec.mult = static_cast<int>(c.integer());
    c.expect('*');
  }
  c.expect('[');
  spec.rho = parseChar(c);
  std::string x = c.name("(");
  if (x != "x") c.err("expected 'x'");
  std::string s = c.name("(");
  if (s != "S") c.err("expected 'S(a)'");
  c.expect('(');
  spec.a = static_cast<int>(c.integer());
  c.expect(')');
  c.expect(']');
  return spec;
}

}  // namespace

std::vector<BlockSpec> parse_param_expr(const std::string& text) {
  Cursor c{text};
  std::vector<BlockSpec> out;
  {
    // the empty (rank-0) parameter prints as "0"
    std::string trimmed;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (trimmed == "0") return out;
  }
  out.push_back(parseTerm(c));
  while (!c.atEnd()) {
    c.expect('+');
    out.push_back(parseTerm(c));
  }
  return out;
}

std::string print_label(const SupercuspidalLabel& rho) {
  if (rho.unramified()) {
    const UnramifiedCharacter& chi = rho.chi();
    if (chi == UnramifiedCharacter::trivial()) return "1";
    if (chi == UnramifiedCharacter::sgn()) return "sgn";
    return "unr(" + chi.rot.str() + "," + chi.texp.str() + ")";
  }
  const AbstractLabel& l = rho.abs();
  std::string s = "rho(" + l.name + ";dim=" + std::to_string(l.dim) + ",sd=";
  switch (l.sd) {
    case SelfDualType::Symplectic: s += "S"; break;
    case SelfDualType::Orthogonal: s += "O"; break;
    case SelfDualType::NotSelfDual: s += "dual:" + l.dualName; break;
  }
  if (l.sd != SelfDualType::NotSelfDual)
    s += ",eps=" + std::string(l.epsHalf > 0 ? "+1" : "-1");
  s += ",wm1=" + std::string(l.centralSign > 0 ? "+1" : "-1") + ")";
  return s;
}

std::string print_block(const SimpleBlock& b) {
  return print_label(b.rho) + " x S(" + std::to_string(b.a) + ")";
}

std::string print_parameter(const Parameter& phi) {
  if (phi.empty()) return "0";
  std::string out;
  for (const auto& [b, m] : phi.blocks()) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + "*";
    out += "[" + print_block(b) + "]";
  }
  return out;
}

std::string print_signs(const SignVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.s.size(); ++i) {
    if (i) out += ",";
    out += (v.s[i] > 0) ? "+" : "-";
  }
  return out;
}

SignVector parse_signs(const std::string& text, int expected) {
  SignVector v;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ',') ++end;
    std::string tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (tok == "+" || tok == "+1")
      v.s.push_back(1);
    else if (tok == "-" || tok == "-1")
      v.s.push_back(-1);
    else
      fail(Err::Syntax, "bad sign token '" + tok + "'");
    pos = end;
  }
  if (v.size() != expected)
    fail(Err::Syntax, "expected " + std::to_string(expected) + " signs, got " +
                          std::to_string(v.size()));
  return v;
}

}  // namespace mpp

#include "fivevec/formal.hpp"

#include <cctype>
#include <stdexcept>

namespace fv {

FormalPoly FormalPoly::symbol(const std::string& name) {
  FormalPoly p;
  p.terms_[Monomial{{name, 1}}] = 1;
  return p;
}

std::set<std::string> FormalPoly::symbols() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [s, e] : m) out.insert(s);
  return out;
}

void FormalPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

FormalPoly FormalPoly::operator-() const {
  FormalPoly out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

FormalPoly& FormalPoly::operator+=(const FormalPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FormalPoly& FormalPoly::operator-=(const FormalPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FormalPoly operator*(const FormalPoly& a, const FormalPoly& b) {
  FormalPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      FormalPoly::Monomial m = ma;
      for (const auto& [s, e] : mb) m[s] += e;
      out.add_term(m, ca * cb);
    }
  return out;
}

FormalPoly FormalPoly::derivative(const std::string& sym) const {
  FormalPoly out;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(sym);
    if (it == m.end()) continue;
    Monomial d = m;
    int e = it->second;
    if (e == 1)
      d.erase(sym);
    else
      d[sym] = e - 1;
    out.add_term(d, c * e);
  }
  return out;
}

Poly4 FormalPoly::substitute(const std::map<std::string, Poly4>& values) const {
  Poly4 out;
  for (const auto& [m, c] : terms_) {
    Poly4 term(c);
    for (const auto& [s, e] : m) {
      auto it = values.find(s);
      if (it == values.end()) throw std::invalid_argument("undeclared indeterminate '" + s + "'");
      for (int k = 0; k < e; ++k) term = term * it->second;
    }
    out += term;
  }
  return out;
}

namespace {

class FormalParser {
 public:
  explicit FormalParser(std::string_view s) : s_(s) {}

  FormalPoly parse() {
    FormalPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression parse error at column " + std::to_string(pos_ + 1) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  FormalPoly expr() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty expression");
    FormalPoly acc;
    bool first = true;
    for (;;) {
      bool neg = false;
      if (eat('-'))
        neg = true;
      else if (!eat('+') && !first)
        break;
      FormalPoly t = term();
      acc += neg ? -t : t;
      first = false;
    }
    return acc;
  }
  FormalPoly term() {
    FormalPoly acc = power();
    for (;;) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        FormalPoly d = power();
        if (d.terms().size() != 1 || !d.terms().begin()->first.empty()) fail("division only by a nonzero constant");
        acc = acc * FormalPoly(Rational(1 / d.terms().begin()->second));
      } else {
        return acc;
      }
    }
  }
  FormalPoly power() {
    FormalPoly base = atom();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 64) fail("exponent too large");
      FormalPoly out(1);
      for (unsigned long k = 0; k < e; ++k) out = out * base;
      return out;
    }
    return base;
  }
  FormalPoly atom() {
    skip_ws();
    if (pos_ == s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      FormalPoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return FormalPoly::symbol(std::string(s_.substr(start, pos_ - start)));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return FormalPoly(parse_rational(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FormalPoly parse_formal(std::string_view text) { return FormalParser(text).parse(); }

std::string to_string(const FormalPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    std::string mono;
    for (const auto& [s, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += s;
      if (e > 1) mono += "^" + std::to_string(e);
    }
    Rational mag = abs(c);
    std::string body = mono.empty() ? to_string(mag) : (mag == 1 ? mono : to_string(mag) + "*" + mono);
    if (out.empty())
      out = (sgn(c) < 0 ? "-" : "") + body;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace fv

#include "fivevec/poly.hpp"

#include <cctype>

namespace fv {

namespace {

class Parser {
 public:
  Parser(std::string_view text, bool allow_i) : s_(text), allow_i_(allow_i) {}

  PolyS parse() {
    PolyS p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what);
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

  PolyS expr() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty expression");
    PolyS acc;
    bool first = true;
    for (;;) {
      bool neg = false;
      if (eat('-'))
        neg = true;
      else if (!eat('+') && !first)
        break;
      PolyS t = term();
      acc += neg ? -t : t;
      first = false;
    }
    return acc;
  }

  PolyS term() {
    PolyS acc = power();
    for (;;) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        PolyS d = power();
        if (!d.is_constant() || d.is_zero()) fail("division only by a nonzero constant");
        acc = acc * PolyS(d.constant_term().inverse());
      } else {
        return acc;
      }
    }
  }

  PolyS power() {
    PolyS base = atom();
    if (eat('^')) {
      unsigned long e = integer();
      if (e > static_cast<unsigned long>(kDegreeCap) * 4) fail("exponent too large");
      PolyS out(1);
      for (unsigned long k = 0; k < e; ++k) out = out * base;
      return out;
    }
    return base;
  }

  unsigned long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  PolyS atom() {
    skip_ws();
    if (pos_ == s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      PolyS inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '3') fail("variables are x0..x3");
      int v = s_[pos_++] - '0';
      if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) fail("variables are x0..x3");
      return PolyS::var(v);
    }
    if (c == 'i' && allow_i_) {
      ++pos_;
      return PolyS(Surd::i());
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return PolyS(Surd(parse_rational(s_.substr(start, pos_ - start))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  bool allow_i_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

PolyS parse_poly_complex(std::string_view text) { return Parser(text, true).parse(); }

Poly4 parse_poly(std::string_view text) {
  PolyS p = Parser(text, false).parse();
  return p.map_coeffs<Rational>([](const Surd& c) { return c.as_complex().re; });
}

std::string to_string(const Poly4& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    std::string mono = monomial_text(e);
    std::string body = mono.empty() ? to_string(mag) : (mag == 1 ? mono : to_string(mag) + "*" + mono);
    if (out.empty())
      out = (sgn(c) < 0 ? "-" : "") + body;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + body;
  }
  return out;
}

std::string to_string(const PolyS& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_text(e);
    std::string coeff = "(" + to_string(c) + ")";
    if (!out.empty()) out += " + ";
    out += mono.empty() ? coeff : coeff + "*" + mono;
  }
  return out;
}

}  // namespace fv

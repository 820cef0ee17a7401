#include "fivevec/rational.hpp"

#include <stdexcept>

namespace fv {

namespace {

Rational pow10(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  auto bad = [&] { return std::invalid_argument("malformed number '" + s + "'"); };
  try {
    if (s.find_first_of(".eE") == std::string::npos) {
      Rational q(s);
      q.canonicalize();
      if (q.get_den() == 0) throw bad();
      return q;
    }
    std::string mant = s;
    long exp = 0;
    if (auto p = s.find_first_of("eE"); p != std::string::npos) {
      mant = s.substr(0, p);
      exp = std::stol(s.substr(p + 1));
    }
    bool neg = !mant.empty() && (mant[0] == '-' || mant[0] == '+');
    bool minus = neg && mant[0] == '-';
    if (neg) mant.erase(0, 1);
    std::string digits;
    long frac = 0;
    bool dot = false;
    for (char c : mant) {
      if (c == '.') {
        if (dot) throw bad();
        dot = true;
      } else if (c >= '0' && c <= '9') {
        digits += c;
        if (dot) ++frac;
      } else {
        throw bad();
      }
    }
    if (digits.empty()) throw bad();
    Rational q{mpz_class(digits)};
    q *= pow10(exp - frac);
    return minus ? Rational(-q) : q;
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

Complex Complex::inverse() const {
  Rational n = re * re + im * im;
  if (sgn(n) == 0) throw std::domain_error("inverse of complex zero");
  return {re / n, -im / n};
}

std::string to_string(const Complex& c) {
  if (is_zero(c.im)) return to_string(c.re);
  std::string im = c.im == 1 ? "i" : c.im == -1 ? "-i" : to_string(c.im) + "*i";
  if (is_zero(c.re)) return im;
  return "(" + to_string(c.re) + (sgn(c.im) > 0 ? "+" : "") + im + ")";
}

}  // namespace fv

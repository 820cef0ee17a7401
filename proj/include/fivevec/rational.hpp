#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

namespace fv {

using Rational = mpq_class;

// Accepts "3", "-3/4" and plain decimals such as "1e-9" or "0.25".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Canonicalized n/d; mpq_class(n, d) alone does not reduce.
inline Rational frac(long n, unsigned long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Gaussian rationals, used for the Clifford matrices and gauge coefficients.
struct Complex {
  Rational re;
  Rational im;

  Complex() = default;
  Complex(Rational r) : re(std::move(r)) {}
  Complex(int r) : re(r) {}
  Complex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Complex i() { return {0, 1}; }

  Complex conj() const { return {re, -im}; }
  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
  Complex inverse() const;
};

inline bool is_zero(const Complex& c) { return is_zero(c.re) && is_zero(c.im); }
std::string to_string(const Complex& c);
inline std::ostream& operator<<(std::ostream& os, const Complex& c) { return os << to_string(c); }

}  // namespace fv

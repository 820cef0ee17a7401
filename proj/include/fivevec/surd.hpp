#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include "fivevec/rational.hpp"

namespace fv {

// Exact element of Q(i)(sqrt 2, sqrt 3, ...): a finite sum of Gaussian
// rationals times square roots of distinct squarefree positive integers.
// Needed because the diagonal generalized Gell-Mann generators and the U(1)
// normalizations carry radicals.
class Surd {
 public:
  Surd() = default;
  Surd(int v) : Surd(Complex(v)) {}
  Surd(const Rational& v) : Surd(Complex(v)) {}
  Surd(const Complex& v) {
    if (!fv::is_zero(v)) terms_[1] = v;
  }

  // Principal square root of a nonnegative rational.
  static Surd sqrt(const Rational& q);
  static Surd i() { return Surd(Complex::i()); }

  const std::map<std::uint64_t, Complex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational_complex() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }
  // Gaussian-rational value; throws unless is_rational_complex().
  Complex as_complex() const;

  Surd conj() const;
  Surd inverse() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }

  double real_approx() const;

 private:
  void add_term(std::uint64_t radicand, const Complex& c);
  std::map<std::uint64_t, Complex> terms_;
};

inline bool is_zero(const Surd& s) { return s.is_zero(); }
std::string to_string(const Surd& s);
inline std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << to_string(s); }

}  // namespace fv

#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "fivevec/poly.hpp"

namespace fv {

// Polynomial over named formal indeterminates (field components and their
// derivative symbols such as `D0_phi`), with rational coefficients.
class FormalPoly {
 public:
  using Monomial = std::map<std::string, int>;

  FormalPoly() = default;
  FormalPoly(const Rational& c) {
    if (sgn(c) != 0) terms_[Monomial{}] = c;
  }
  FormalPoly(int c) : FormalPoly(Rational(c)) {}
  static FormalPoly symbol(const std::string& name);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::set<std::string> symbols() const;

  FormalPoly operator-() const;
  FormalPoly& operator+=(const FormalPoly& o);
  FormalPoly& operator-=(const FormalPoly& o);
  friend FormalPoly operator+(FormalPoly a, const FormalPoly& b) { return a += b; }
  friend FormalPoly operator-(FormalPoly a, const FormalPoly& b) { return a -= b; }
  friend FormalPoly operator*(const FormalPoly& a, const FormalPoly& b);
  friend bool operator==(const FormalPoly& a, const FormalPoly& b) { return a.terms_ == b.terms_; }

  FormalPoly derivative(const std::string& sym) const;
  // Replace every symbol by a field value; unknown symbols are an error.
  Poly4 substitute(const std::map<std::string, Poly4>& values) const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

FormalPoly parse_formal(std::string_view text);
std::string to_string(const FormalPoly& p);

}  // namespace fv

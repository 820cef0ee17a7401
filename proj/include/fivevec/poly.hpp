#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fivevec/rational.hpp"
#include "fivevec/surd.hpp"

namespace fv {

inline constexpr int kDegreeCap = 12;

struct DegreeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Exponents = std::array<std::uint8_t, 4>;
using Point4 = std::array<Rational, 4>;

inline int total_degree(const Exponents& e) { return e[0] + e[1] + e[2] + e[3]; }

// Sparse polynomial in x0..x3 over an exact coefficient ring K
// (Rational, or Surd for the gauge sector). Zero coefficients are never stored.
template <class K>
class Poly {
 public:
  using Coeff = K;
  using Terms = std::map<Exponents, K>;

  Poly() = default;
  Poly(const K& c) {
    if (!fv::is_zero(c)) terms_[Exponents{}] = c;
  }
  Poly(int c) : Poly(K(c)) {}
  template <class Q = K, class = std::enable_if_t<!std::is_same_v<Q, Rational>>>
  Poly(const Rational& c) : Poly(K(c)) {}

  static Poly var(int i) {
    Exponents e{};
    e.at(static_cast<std::size_t>(i)) = 1;
    return monomial(e, K(1));
  }
  static Poly monomial(const Exponents& e, const K& c) {
    Poly p;
    if (!fv::is_zero(c)) p.terms_[e] = c;
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{}); }
  K constant_term() const {
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? K() : it->second;
  }
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  Poly operator-() const {
    Poly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }
  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    if (a.is_zero() || b.is_zero()) return out;
    if (a.degree() + b.degree() > kDegreeCap)
      throw DegreeCapError("polynomial product exceeds degree cap " + std::to_string(kDegreeCap));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < 4; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  // Evaluation at a point whose coordinates live in a ring accepting K.
  template <class V>
  V eval(const std::array<V, 4>& x) const {
    V total{};
    for (const auto& [e, c] : terms_) {
      V term = coeff_as<V>(c);
      for (std::size_t i = 0; i < 4; ++i)
        for (int k = 0; k < e[i]; ++k) term = term * x[i];
      total = total + term;
    }
    return total;
  }

  template <class K2, class F>
  Poly<K2> map_coeffs(F&& f) const {
    Poly<K2> out;
    for (const auto& [e, c] : terms_) out += Poly<K2>::monomial(e, f(c));
    return out;
  }

 private:
  template <class V>
  static V coeff_as(const K& c) {
    if constexpr (std::is_same_v<V, double>) {
      if constexpr (std::is_same_v<K, Rational>)
        return c.get_d();
      else
        return c.real_approx();
    } else {
      return V(c);
    }
  }

  void add_term(const Exponents& e, const K& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }
  static bool is_zero_coeff(const K& c) { return fv::is_zero(c); }

  Terms terms_;
};

using Poly4 = Poly<Rational>;
using PolyS = Poly<Surd>;

template <class K>
bool is_zero(const Poly<K>& p) {
  return p.is_zero();
}

// d/dx^mu for mu in 0..3; throws otherwise.
template <class K>
Poly<K> partial(const Poly<K>& f, int mu) {
  if (mu < 0 || mu > 3) throw std::out_of_range("partial: axis must be 0..3");
  Poly<K> out;
  for (const auto& [e, c] : f.terms()) {
    if (e[static_cast<std::size_t>(mu)] == 0) continue;
    Exponents d = e;
    auto k = d[static_cast<std::size_t>(mu)]--;
    out += Poly<K>::monomial(d, c * K(static_cast<int>(k)));
  }
  return out;
}

// Derivative along five-index direction A in 0..4, with the fifth (slot 4)
// direction algebraic, so the derivative along it vanishes.
template <class K>
Poly<K> partial5(const Poly<K>& f, int A) {
  if (A == 4) return {};
  return partial(f, A);
}

// f(x) with x^i replaced by subs[i].
template <class K>
Poly<K> compose(const Poly<K>& f, const std::array<Poly<K>, 4>& subs) {
  std::array<std::vector<Poly<K>>, 4> powers;
  Poly<K> out;
  for (const auto& [e, c] : f.terms()) {
    Poly<K> term(c);
    for (std::size_t i = 0; i < 4; ++i) {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Poly<K>(1));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * subs[i]);
      term = term * pw[e[i]];
    }
    out += term;
  }
  return out;
}

Poly4 parse_poly(std::string_view text);
// Same grammar plus the imaginary unit `i` as a factor.
PolyS parse_poly_complex(std::string_view text);

std::string to_string(const Poly4& p);
std::string to_string(const PolyS& p);
inline std::ostream& operator<<(std::ostream& os, const Poly4& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const PolyS& p) { return os << to_string(p); }

inline PolyS to_surd(const Poly4& p) {
  return p.map_coeffs<Surd>([](const Rational& c) { return Surd(c); });
}

}  // namespace fv

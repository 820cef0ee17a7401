#include "fivevec/surd.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fv {

namespace {

// n = square^2 * radicand with radicand squarefree.
std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t n) {
  std::uint64_t square = 1, radicand = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) square *= p;
    if (e % 2) radicand *= p;
  }
  radicand *= n;
  return {square, radicand};
}

std::set<std::uint64_t> prime_factors(std::uint64_t n) {
  std::set<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      out.insert(p);
      n /= p;
    }
  if (n > 1) out.insert(n);
  return out;
}

}  // namespace

Surd Surd::sqrt(const Rational& q) {
  if (sgn(q) < 0) throw std::domain_error("sqrt of negative rational");
  if (sgn(q) == 0) return {};
  mpz_class nd = q.get_num() * q.get_den();
  if (!nd.fits_ulong_p()) throw std::overflow_error("radicand too large");
  auto [square, radicand] = split_square(nd.get_ui());
  Surd s;
  Rational coeff(mpz_class(square), q.get_den());
  coeff.canonicalize();
  s.terms_[radicand] = Complex(coeff);
  return s;
}

Complex Surd::as_complex() const {
  if (terms_.empty()) return {};
  if (!is_rational_complex()) throw std::domain_error("surd is irrational");
  return terms_.begin()->second;
}

void Surd::add_term(std::uint64_t radicand, const Complex& c) {
  auto& slot = terms_[radicand];
  slot += c;
  if (fv::is_zero(slot)) terms_.erase(radicand);
}

Surd Surd::conj() const {
  Surd out;
  for (const auto& [r, c] : terms_) out.terms_[r] = c.conj();
  return out;
}

Surd Surd::operator-() const {
  Surd out;
  for (const auto& [r, c] : terms_) out.terms_[r] = -c;
  return out;
}

Surd& Surd::operator+=(const Surd& o) {
  for (const auto& [r, c] : o.terms_) add_term(r, c);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  for (const auto& [r, c] : o.terms_) add_term(r, -c);
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  Surd out;
  for (const auto& [ra, ca] : terms_)
    for (const auto& [rb, cb] : o.terms_) {
      std::uint64_t g = std::gcd(ra, rb);
      out.add_term((ra / g) * (rb / g), ca * cb * Complex(Rational(static_cast<unsigned long>(g))));
    }
  *this = std::move(out);
  return *this;
}

// Multiply by Galois conjugates (sqrt p -> -sqrt p for each prime, then
// complex conjugation) until the norm is rational.
Surd Surd::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero surd");
  std::set<std::uint64_t> primes;
  for (const auto& [r, c] : terms_)
    for (auto p : prime_factors(r)) primes.insert(p);
  Surd x = *this, y = 1;
  for (auto p : primes) {
    Surd flipped;
    for (const auto& [r, c] : x.terms_) flipped.terms_[r] = (r % p == 0) ? -c : c;
    y *= flipped;
    x *= flipped;
  }
  Surd cc = x.conj();
  y *= cc;
  x *= cc;
  Rational norm = x.as_complex().re;
  return y * Surd(Rational(1 / norm));
}

double Surd::real_approx() const {
  double v = 0;
  for (const auto& [r, c] : terms_) v += c.re.get_d() * std::sqrt(static_cast<double>(r));
  return v;
}

std::string to_string(const Surd& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [r, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    if (r != 1) out += "*sqrt(" + std::to_string(r) + ")";
  }
  return out;
}

}  // namespace fv

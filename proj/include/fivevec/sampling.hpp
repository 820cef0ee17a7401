#pragma once

#include <cstdint>
#include <random>

#include "fivevec/linalg.hpp"
#include "fivevec/poly.hpp"

namespace fv {

// Seeded generator of exact test inputs. Raw 64-bit draws are mapped to
// values by hand so sequences do not depend on the standard library's
// distribution implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return range(0, 1) == 1; }

  Rational rational(int num = 5, int den = 4) {
    return frac(static_cast<long>(range(-num, num)), static_cast<unsigned long>(range(1, den)));
  }
  Rational nonzero_rational(int num = 5, int den = 4) {
    Rational q;
    do q = rational(num, den); while (sgn(q) == 0);
    return q;
  }
  Point4 point() { return {rational(), rational(), rational(), rational()}; }

  Poly4 poly(int max_deg = 2, int terms = 3) {
    Poly4 p;
    for (int t = 0; t < terms; ++t) {
      Exponents e{};
      int budget = static_cast<int>(range(0, max_deg));
      for (int k = 0; k < budget; ++k) ++e[static_cast<std::size_t>(range(0, 3))];
      p += Poly4::monomial(e, rational());
    }
    return p;
  }

  // (cos, sin) with rational entries from a Pythagorean triple.
  std::pair<Rational, Rational> circle_pair() {
    long m = static_cast<long>(range(1, 4)), n = static_cast<long>(range(1, 4));
    Rational d(m * m + n * n);
    return {Rational(m * m - n * n) / d, Rational(2 * m * n) / d};
  }
  // (cosh, sinh) with rational entries, c^2 - s^2 = 1.
  std::pair<Rational, Rational> hyperbola_pair() {
    long m = static_cast<long>(range(1, 4)), n = static_cast<long>(range(1, 4));
    Rational d(2 * m * n);
    return {Rational(m * m + n * n) / d, Rational(m * m - n * n) / d};
  }

  // Random element of the pseudo-orthogonal group of diag(signs):
  // rotations in equal-sign planes, boosts in mixed planes, reflections.
  Matrix<Rational> pseudo_orthogonal(const std::vector<int>& signs, int factors = 4);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Elementary planar transforms on an n-dimensional index space.
Matrix<Rational> plane_rotation(std::size_t n, std::size_t i, std::size_t j, const Rational& c, const Rational& s);
Matrix<Rational> plane_boost(std::size_t n, std::size_t i, std::size_t j, const Rational& c, const Rational& s);

}  // namespace fv

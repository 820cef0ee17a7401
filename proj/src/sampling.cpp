#include "fivevec/sampling.hpp"

namespace fv {

Matrix<Rational> plane_rotation(std::size_t n, std::size_t i, std::size_t j, const Rational& c, const Rational& s) {
  auto m = Matrix<Rational>::identity(n);
  m(i, i) = c;
  m(j, j) = c;
  m(i, j) = -s;
  m(j, i) = s;
  return m;
}

Matrix<Rational> plane_boost(std::size_t n, std::size_t i, std::size_t j, const Rational& c, const Rational& s) {
  auto m = Matrix<Rational>::identity(n);
  m(i, i) = c;
  m(j, j) = c;
  m(i, j) = s;
  m(j, i) = s;
  return m;
}

Matrix<Rational> Sampler::pseudo_orthogonal(const std::vector<int>& signs, int factors) {
  const std::size_t n = signs.size();
  auto m = Matrix<Rational>::identity(n);
  for (int f = 0; f < factors; ++f) {
    std::size_t i = static_cast<std::size_t>(range(0, static_cast<std::int64_t>(n) - 1));
    std::size_t j = static_cast<std::size_t>(range(0, static_cast<std::int64_t>(n) - 2));
    if (j >= i) ++j;
    if (signs[i] == signs[j]) {
      auto [c, s] = circle_pair();
      m = m * plane_rotation(n, i, j, c, s);
    } else {
      auto [c, s] = hyperbola_pair();
      m = m * plane_boost(n, i, j, c, s);
    }
  }
  if (coin()) {
    auto r = Matrix<Rational>::identity(n);
    std::size_t k = static_cast<std::size_t>(range(0, static_cast<std::int64_t>(n) - 1));
    r(k, k) = -1;
    m = m * r;
  }
  return m;
}

}  // namespace fv

#include "fivevec/clifford.hpp"

#include <stdexcept>

namespace fv {

namespace {

CMat4 scaled(const CMat4& m, const Complex& c) {
  return m.map([&](const Complex& v) { return v * c; });
}

CMat4 anticommutator(const CMat4& a, const CMat4& b) { return a * b + b * a; }

// Standard Dirac representation.
std::array<CMat4, 4> dirac_gammas() {
  const Complex I = Complex::i();
  CMat4 g0{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}};
  CMat4 g1{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}};
  CMat4 g2{{0, 0, 0, -I}, {0, 0, I, 0}, {0, I, 0, 0}, {-I, 0, 0, 0}};
  CMat4 g3{{0, 0, 1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}};
  return {g0, g1, g2, g3};
}

}  // namespace

Matrix<Rational> eta5() {
  Matrix<Rational> m(5, 5);
  m(0, 0) = 1;
  m(1, 1) = -1;
  m(2, 2) = -1;
  m(3, 3) = -1;
  m(4, 4) = 1;
  return m;
}

Matrix<Rational> eta4() {
  Matrix<Rational> m(4, 4);
  m(0, 0) = 1;
  m(1, 1) = -1;
  m(2, 2) = -1;
  m(3, 3) = -1;
  return m;
}

GammaSet build_gamma_set() {
  const Complex I = Complex::i();
  auto g = dirac_gammas();
  CMat4 g5 = scaled(g[0] * g[1] * g[2] * g[3], I);
  // Gamma_5 = i gamma^5 squares to -1 and anticommutes with every gamma_mu;
  // the extra factor i in Gamma_mu = i gamma_mu Gamma_5 gives the -2 eta sign.
  CMat4 G5 = scaled(g5, I);
  GammaSet set;
  for (int mu = 0; mu < 4; ++mu) set.gammas[mu] = scaled(g[mu] * G5, I);
  set.gammas[4] = G5;
  set.eta5 = eta5();
  return set;
}

std::array<CMat4, 4> gamma4_from(const GammaSet& set) {
  const Complex half_i(0, Rational(1, 2));
  const CMat4& G5 = set.gammas[4];
  std::array<CMat4, 4> out;
  for (int mu = 0; mu < 4; ++mu) out[mu] = scaled(set.gammas[mu] * G5 - G5 * set.gammas[mu], half_i);
  return out;
}

GammaSet transform_o32(const GammaSet& set, const Matrix<Rational>& O) {
  if (O.rows() != 5 || O.cols() != 5) throw std::invalid_argument("O(3,2) matrix must be 5x5");
  Matrix<Rational> e = eta5();
  Matrix<Rational> check = O.transpose() * e * O;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (check(i, j) != e(i, j))
        throw std::invalid_argument("matrix is not pseudo-orthogonal: (O^T eta O)_" + std::to_string(i) +
                                    std::to_string(j) + " = " + to_string(check(i, j)));
  GammaSet out;
  out.eta5 = e;
  for (std::size_t a = 0; a < 5; ++a) {
    CMat4 acc(4, 4);
    for (std::size_t b = 0; b < 5; ++b)
      if (sgn(O(b, a)) != 0) acc = acc + scaled(set.gammas[b], Complex(O(b, a)));
    out.gammas[a] = acc;
  }
  return out;
}

bool satisfies_clifford_relations(const GammaSet& set) {
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a; b < 5; ++b) {
      CMat4 expect = scaled(CMat4::identity(4), Complex(Rational(-2 * set.eta5(a, b))));
      if (!(anticommutator(set.gammas[a], set.gammas[b]) == expect)) return false;
    }
  return true;
}

bool satisfies_dirac_algebra(const std::array<CMat4, 4>& gammas) {
  Matrix<Rational> e = eta4();
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a; b < 4; ++b) {
      CMat4 expect = scaled(CMat4::identity(4), Complex(Rational(2 * e(a, b))));
      if (!(anticommutator(gammas[a], gammas[b]) == expect)) return false;
    }
  return true;
}

}  // namespace fv

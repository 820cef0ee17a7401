#pragma once

#include <array>

#include "fivevec/core5.hpp"

namespace fv {

using Vec4Q = std::array<Rational, 4>;
using Vec5Q = std::array<Rational, 5>;

// x' = Lambda x + a with Lambda^T eta Lambda = eta.
struct LorentzChart {
  Matrix<Rational> Lambda = Matrix<Rational>::identity(4);
  Vec4Q a{};

  LorentzChart() = default;
  LorentzChart(Matrix<Rational> L, Vec4Q shift);
  // The chart reached by applying *this first and then next.
  LorentzChart then(const LorentzChart& next) const;
};

Vec4Q lower_eta(const Vec4Q& v);

// e'_a = e_b (Lambda^{-1})^b_a, e'_5 = e_5.
Matrix<Rational> o_basis_change(const LorentzChart& chart);
// p'_a = p_b (Lambda^{-1})^b_a + a_a p_5, p'_5 = p_5.
Matrix<Rational> p_basis_change(const LorentzChart& chart);

// Self-parallel P-basis over the O-basis of the same chart: p_a = e_a + x_a e_5.
BasisSpec p_basis_fields(const Rational& kappa);

Vec5Q p_component_transform(const Vec5Q& v, const LorentzChart& chart);
Vec5Q p_form_transform(const Vec5Q& w, const LorentzChart& chart);
// Same law applied pointwise to polynomial components; no coordinate substitution.
Vec5P p_form_transform(const Vec5P& w, const LorentzChart& chart);

// h(p_A, p_B) at x in the active normalization, h(p_5, p_5) = kappa^2 * h55_sign.
Matrix<Rational> h_matrix_p_basis(const Point4& x, const Rational& kappa, int h55_sign = 1);
// Contravariant x^a from x_a = kappa^{-2} h(p_a, p_5).
Point4 recover_coords(const Matrix<Rational>& hmat, const Rational& kappa);

// Components of x-tilde = x_a q^a + q^5 in the P-dual and O-dual bases.
Vec5P covariant_position_form_p();
Vec5P covariant_position_form_o();

struct PoincareParams {
  bool infinitesimal = false;
  Matrix<Rational> L = Matrix<Rational>::identity(4);  // finite part
  Matrix<Rational> omega = Matrix<Rational>(4, 4);     // omega^{mu nu}
  Vec4Q b{};  // b_a (finite) or b^mu (infinitesimal)

  static PoincareParams finite(Matrix<Rational> L, Vec4Q b_lower);
  static PoincareParams generator(Matrix<Rational> omega, Vec4Q b_upper);
  friend bool operator==(const PoincareParams&, const PoincareParams&) = default;
};

PoincareParams poincare_T_transform(const PoincareParams& p, const LorentzChart& chart);
PoincareParams poincare_R_transform(const PoincareParams& p, const LorentzChart& chart);

// T^a_b = L, T^5_b = b_b, T^a_5 = 0, T^5_5 = 1.
Matrix<Rational> poincare_T_tensor(const PoincareParams& p);
// R^{mu nu} = omega, R^{mu 5} = -R^{5 mu} = b^mu, R^{55} = 0.
Matrix<Rational> poincare_R_tensor(const PoincareParams& p);
// Rank-(1,1) and rank-(2,0) laws for a basis change e' = e P.
Matrix<Rational> transform_11(const Matrix<Rational>& T, const Matrix<Rational>& P);
Matrix<Rational> transform_20(const Matrix<Rational>& R, const Matrix<Rational>& P);

}  // namespace fv

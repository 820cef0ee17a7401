#pragma once

#include <array>

#include "fivevec/linalg.hpp"

namespace fv {

using CMat4 = Matrix<Complex>;

// Five constituents Gamma_A (slot 4 holds Gamma_5) obeying
// Gamma_A Gamma_B + Gamma_B Gamma_A = -2 eta_AB, eta = diag(+1,-1,-1,-1,+1).
struct GammaSet {
  std::array<CMat4, 5> gammas;
  Matrix<Rational> eta5;
};

Matrix<Rational> eta5();
Matrix<Rational> eta4();

GammaSet build_gamma_set();
// gamma_mu = (i/2)(Gamma_mu Gamma_5 - Gamma_5 Gamma_mu).
std::array<CMat4, 4> gamma4_from(const GammaSet& set);
// Gamma'_A = Gamma_B O^B_A; O must preserve eta5.
GammaSet transform_o32(const GammaSet& set, const Matrix<Rational>& O);

// Exact checks of the anticommutation relations over all pairs.
bool satisfies_clifford_relations(const GammaSet& set);
bool satisfies_dirac_algebra(const std::array<CMat4, 4>& gammas);

}  // namespace fv

#pragma once

#include <array>

#include "fivevec/bivder.hpp"
#include "fivevec/connection.hpp"
#include "fivevec/formal.hpp"

namespace fv {

// R^A_{BCD} = d_C H^A_{BD} - d_D H^A_{BC} + H^A_{KC} H^K_{BD} - H^A_{KD} H^K_{BC}, d_5 = 0.
struct CurvR {
  Table4<Poly4, 5, 5, 5, 5> c{};
  friend bool operator==(const CurvR&, const CurvR&) = default;
};

// K^{AB}_{CD}, antisymmetric in both pairs.
struct CurvK {
  Table4<Poly4, 5, 5, 5, 5> c{};
  friend bool operator==(const CurvK&, const CurvK&) = default;
};

CurvR curvature_from_H(const ConnectionH& H);
// Single-threaded reference for the OpenMP path.
CurvR curvature_from_H_serial(const ConnectionH& H);

// K^{Ab}_{CD} = g^{bw} R^A_{wCD}, K^{a5} = -K^{5a}.
CurvK build_K(const CurvR& R, const MetricG& g);
Poly4 curvature_scalar(const CurvK& K);

// g_{aw} R^w_{bCD} + g_{bw} R^w_{aCD} for every (a, b, C, D); zero for metric-compatible H.
bool curvature_metric_antisymmetric(const CurvR& R, const MetricG& g);

// Both readings of R^a_{b mu 5}: the expansion of the general formula (+ s H) and the printed one (- s H).
struct Eq65Probe {
  Table3<Poly4, 4, 4, 4> direct{};
  Table3<Poly4, 4, 4, 4> printed{};
  bool curvature_matches_direct = false;
  bool curvature_matches_printed = false;
  bool discrepancy = false;  // the two readings differ on this input
};
Eq65Probe eq65_probe(const CurvR& R, const ConnectionH& H, const SForm& S, const MetricG& g);

// Four-dimensional pieces of the torsionful connection.
Matrix<Poly4> ricci(const CurvR& R);  // R_{mn} = R^a_{m a n}
Poly4 scalar_curvature(const CurvR& R, const MetricG& g);
Matrix<Poly4> einstein(const CurvR& R, const MetricG& g);  // G_{mn} = R_{mn} - g_{mn} R / 2
// T^(mod) with all indices up, stored [mu][omega][nu].
Table3<Poly4, 4, 4, 4> t_mod(const SForm& S, const MetricG& g);
// g_{mp} g_{nq} (div* T^(mod))^{p q a}_{;a} - G_[mn].
Matrix<Poly4> divergence_identity_residual(const MetricG& g, const SForm& S);

struct FieldEqInputs {
  MetricG g = MetricG::minkowski();
  SForm S;                                       // X^{mn} = s^{mn}_5 with |h55| = 1
  Matrix<Poly4> Theta = Matrix<Poly4>(4, 4);     // Theta_{mn}
  Table3<Poly4, 4, 4, 4> Sigma{};                // Sigma^a_{mn}
  Matrix<Poly4> Xi = Matrix<Poly4>(4, 4);        // Xi_{mn}
  Rational k = 1;
  Rational varrho = 1;
  int h55_sign = 1;
  Rational epsilon() const { return varrho * h55_sign; }
};

struct FieldEqResiduals {
  Matrix<Poly4> R1 = Matrix<Poly4>(4, 4);
  Table3<Poly4, 4, 4, 4> R2{};  // [a][m][n]
  Matrix<Poly4> R3 = Matrix<Poly4>(4, 4);
  bool all_zero() const;
};

FieldEqResiduals field_eq_residuals(const FieldEqInputs& in);

// L_add = a h^55 g_{as} g_{bt} s^{ab}_5 s^{st}_5 with a = -varrho / (2k).
FormalPoly l_add_formal();
Poly4 l_add_value(const FieldEqInputs& in);

struct ConsistencyReport {
  Matrix<Poly4> eq81 = Matrix<Poly4>(4, 4);  // 2a h^55 s_{st5} - M5_{st}/2
  Matrix<Poly4> eq72 = Matrix<Poly4>(4, 4);  // dL_add/ds^{ab}_5 - M5_{ab}/2, formal
  Matrix<Poly4> eq78 = Matrix<Poly4>(4, 4);  // [M^{.5}, s_{.5}] commutator
  std::array<Poly4, 4> eq79{};               // d_mu L_add - (1/2){...} M5
  Matrix<Poly4> eq75 = Matrix<Poly4>(4, 4);  // dL_add/dg_{mn} + (1/2) g s^{s{m} M^{n}t5}
  bool eq81_ok() const { return eq81.is_zero_matrix(); }
  bool eq72_ok() const { return eq72.is_zero_matrix(); }
  bool eq78_ok() const { return eq78.is_zero_matrix(); }
  bool eq79_ok() const;
  bool eq75_ok() const { return eq75.is_zero_matrix(); }
  bool all_ok() const { return eq81_ok() && eq72_ok() && eq78_ok() && eq79_ok() && eq75_ok(); }
};

// M5 holds M^5_{st}.
ConsistencyReport check_consistency_identities(const FieldEqInputs& in, const Matrix<Poly4>& M5);
// M^5_{st} that satisfies the (81) relation for the given inputs.
Matrix<Poly4> m5_from_s(const FieldEqInputs& in);

// Spacetime directions of a pentad connection as a G table.
ConnectionG spacetime_part(const ConnectionH& H);

// Richardson-extrapolated (eps, eps/2, eps/4) -(Hol - I)/eps^2 for the loop +mu, +nu, -mu, -nu at base; estimates R^A_{B mu nu}.
std::array<std::array<double, 5>, 5> holonomy_oracle(const ConnectionG& G, int mu, int nu, double eps, const Point4& base);

}  // namespace fv

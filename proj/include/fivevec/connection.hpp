#pragma once

#include <array>
#include <functional>
#include <vector>

#include "fivevec/core5.hpp"

namespace fv {

template <typename T, std::size_t A, std::size_t B, std::size_t C>
using Table3 = std::array<std::array<std::array<T, C>, B>, A>;

// Gamma^a_{b mu}.
struct FourConnection {
  Table3<Poly4, 4, 4, 4> c{};
  Poly4& operator()(int a, int b, int mu) { return c[a][b][mu]; }
  const Poly4& operator()(int a, int b, int mu) const { return c[a][b][mu]; }
  friend bool operator==(const FourConnection&, const FourConnection&) = default;
};

// G^A_{B mu}: nabla_mu e_B = e_A G^A_{B mu}.
struct ConnectionG {
  Table3<Poly4, 5, 5, 4> c{};
  Poly4& operator()(int A, int B, int mu) { return c[A][B][mu]; }
  const Poly4& operator()(int A, int B, int mu) const { return c[A][B][mu]; }
  friend bool operator==(const ConnectionG&, const ConnectionG&) = default;
};

// H^A_{BC}: pentad derivative along e_C of e_B.
struct ConnectionH {
  Table3<Poly4, 5, 5, 5> c{};
  Poly4& operator()(int A, int B, int C) { return c[A][B][C]; }
  const Poly4& operator()(int A, int B, int C) const { return c[A][B][C]; }
  friend bool operator==(const ConnectionH&, const ConnectionH&) = default;
};

// s^{ab}_C, antisymmetric in the upper pair.
class SForm {
 public:
  SForm() = default;
  explicit SForm(const Table3<Poly4, 4, 4, 5>& comps);
  // Sets s^{ab}_C = v and s^{ba}_C = -v.
  void set(int a, int b, int C, const Poly4& v);
  const Poly4& up(int a, int b, int C) const { return s_[a][b][C]; }
  // s^a_{bC} = g_{bw} s^{aw}_C; zero when b is the fifth index.
  Poly4 mixed(int a, int b, int C, const MetricG& g) const;
  const Table3<Poly4, 4, 4, 5>& components() const { return s_; }
  bool is_zero() const;
  friend bool operator==(const SForm&, const SForm&) = default;

 private:
  Table3<Poly4, 4, 4, 5> s_{};
};

// Levi-Civita coefficients; requires a polynomial inverse metric.
FourConnection christoffel(const MetricG& g);
// Exact pointwise evaluation for metrics whose inverse is not polynomial.
Table3<Rational, 4, 4, 4> christoffel_at(const MetricG& g, const Point4& x);
Table3<double, 4, 4, 4> christoffel_numeric(const MetricG& g, const std::array<double, 4>& x);

enum class Normalization { Normalized, Active };

ConnectionG build_G(const MetricG& g, const Rational& kappa, const FourConnection& four,
                    Normalization norm = Normalization::Active);
ConnectionH build_H(const MetricG& g, const SForm& S, const FourConnection& levi_civita);
// H^A_{B mu} = G^A_{B mu}, H^A_{B5} = 0.
ConnectionH as_pentad(const ConnectionG& G);

// Mixed five-tensor with slot variances; components flattened row-major over 5^rank.
struct Tensor5 {
  std::vector<bool> upper;
  std::vector<Poly4> data;

  explicit Tensor5(std::vector<bool> variance);
  static Tensor5 from(const FiveVecField& u);
  static Tensor5 from(const FiveFormField& w);
  static Tensor5 metric(const MetricG& g);
  std::size_t rank() const { return upper.size(); }
  Poly4& at(const std::vector<int>& idx);
  const Poly4& at(const std::vector<int>& idx) const;
  bool is_zero() const;
  friend bool operator==(const Tensor5&, const Tensor5&) = default;
};

// (D_C T) = d_C T + H on upper slots - H on lower slots, with d_5 = 0.
Tensor5 pentad_derivative(const Tensor5& T, const ConnectionH& H, int C);
FiveVecField pentad_derivative(const FiveVecField& u, const ConnectionH& H, int C);
FiveFormField pentad_derivative(const FiveFormField& w, const ConnectionH& H, int C);
FiveVecField nabla_five(const FiveVecField& u, const ConnectionG& G, int mu);
Tensor5 nabla_five(const Tensor5& T, const ConnectionG& G, int mu);

// T^A_{BC} = H^A_{CB} - H^A_{BC}.
Table3<Poly4, 5, 5, 5> five_torsion(const ConnectionH& H);
// T_{ab}^m = -s^m_{[ab]}, stored as [a][b][m].
Table3<Poly4, 4, 4, 4> four_torsion(const SForm& S, const MetricG& g);

// H' for e'_A = e_B L^B_A, with L and H in the same coordinates and d_5 = 0.
ConnectionH transform_H(const ConnectionH& H, const Matrix<Poly4>& L);
// s'^{ab}_C for a standard basis change.
SForm transform_S(const SForm& S, const Matrix<Poly4>& L);

// x^a(t) as polynomials in x0, which plays the role of t.
struct Curve {
  std::array<Poly4, 4> x;
  double t0 = 0, t1 = 1;
};

using FiveTable = Table3<double, 5, 5, 4>;
using FiveCoeffs = std::function<FiveTable(const std::array<double, 4>&)>;

// RK4 for dV/dt + xdot^mu G^A_{B mu} V^B = 0 with one Richardson step.
std::array<double, 5> transport_along(const std::array<double, 5>& u0, const Curve& curve, const FiveCoeffs& G,
                                      int steps);
std::array<double, 5> transport_along(const std::array<Rational, 5>& u0, const Curve& curve, const ConnectionG& G, int steps);
FiveCoeffs numeric_coeffs(const ConnectionG& G);
// Same construction as build_G, evaluated pointwise from the metric alone.
FiveCoeffs numeric_coeffs(const MetricG& g, const Rational& kappa, Normalization norm = Normalization::Active);

}  // namespace fv

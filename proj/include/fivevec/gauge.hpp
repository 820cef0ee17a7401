#pragma once

#include <array>
#include <vector>

#include "fivevec/connection.hpp"

namespace fv {

using MatS = Matrix<Surd>;
using MatPS = Matrix<PolyS>;

PolyS conj(const PolyS& p);
bool is_real(const PolyS& p);
MatPS adjoint(const MatPS& m);

// Hermitian generators of SU(n) in the fundamental representation with Tr(t_a t_b) = 2 delta_ab:
// symmetric and antisymmetric off-diagonal families, then the diagonal ones.
std::vector<MatS> sun_generators(int n);
// eps^b_a from (t_a)^i_j = (t_b)^j_i eps^b_a, stored [b][a].
std::vector<std::vector<Surd>> conjugation_matrix(const std::vector<MatS>& t);

// The (n+1)-vector space W with index & = n + 1 stored at position n.
struct Np1Config {
  int n = 1;
  bool complex = true;
  MatS theta = MatS::identity(1);  // Hermitian inner product on the n-block
  MatS eta = MatS::identity(2);    // inner product on W

  Np1Config() = default;
  Np1Config(int n_, bool complex_, MatS theta_, MatS eta_);
  static Np1Config orthonormal(int n, bool complex = true);
  bool theta_orthonormal() const;
};

// C^X_{YA} as one (n+1)x(n+1) matrix [X][Y] per direction A = 0..3, 5.
struct GaugeC {
  int n = 1;
  std::array<MatPS, 5> c;

  explicit GaugeC(int n_ = 1);
  int amp() const { return n; }  // matrix position of the & index
  // C^i_{&A} = 0 for every i and A.
  bool standard() const;
  friend bool operator==(const GaugeC&, const GaugeC&) = default;
};

// d_A theta - C^dagger theta - theta C on the n-block; zero when theta is preserved.
std::array<MatPS, 5> hermitian_residual(const GaugeC& C, const MatPS& theta);
// C^Y_{YA} for each A.
std::array<PolyS, 5> gauge_trace(const GaugeC& C);
// C^&_{&A} vanishes (real W) or is imaginary (complex W).
bool e_norm_preserved(const GaugeC& C, const Np1Config& cfg);

// C' = L^{-1} C L + L^{-1} d_A L. L must have a nonzero constant determinant.
GaugeC transform_C(const GaugeC& C, const MatPS& L);

// Bivector gauge fields C^i_{jKL}: an n x n matrix per pair (K, L), antisymmetric in KL.
struct BivGaugeC {
  int n = 1;
  std::array<std::array<MatPS, 5>, 5> c;

  explicit BivGaugeC(int n_ = 1);
  void set(int K, int L, const MatPS& m);  // also fills (L, K)
  bool antisymmetric() const;
};

// B^i_{jA} = C^i_{jKL} s^{|KL|}_A with s^{a5}_C = delta^a_C.
std::array<MatPS, 5> compose_B(const BivGaugeC& C, const SForm& S);
// Change of the V-basis E' = E Lambda: C' = Lambda^{-1} C Lambda + Lambda^{-1} D_{KL} Lambda.
BivGaugeC transform_biv_C(const BivGaugeC& C, const MatPS& Lambda);
// Change of the five-vector basis e' = e L: C'_{AB} = C_{ST} L^S_A L^T_B.
BivGaugeC transform_biv_C_five(const BivGaugeC& C, const Matrix<Poly4>& L);

// SU(n) x U(1) fields of an orthonormal basis with eps_{1..n&} = 1.
struct SUnDecomposition {
  int n = 1;
  Rational g = 1;
  std::vector<MatS> t;
  std::array<std::vector<PolyS>, 5> Ca;  // [A][a], real
  std::array<PolyS, 5> C0;               // real
};

// X_{jA} = C^&_{jA} / g, stored [A][j].
using XFields = std::array<std::vector<PolyS>, 5>;

// [2n(n+1)]^{-1/2} and [n/2(n+1)]^{1/2}.
Surd u1_charge_z(int n);
Surd u1_charge_e(int n);

// Inverts C^i_{jA} = (i/2) g t_a C^a_A + i g [2n(n+1)]^{-1/2} delta C^0_A on the n-block.
// Rejects non-anti-Hermitian blocks and bases that are not orthonormal.
SUnDecomposition su_u1_decompose(const GaugeC& C, const Np1Config& cfg, const Rational& g);
XFields x_fields(const GaugeC& C, const Rational& g);
// Full C with C^&_& = -i g [n/2(n+1)]^{1/2} C^0, C^&_j = g X_j, C^i_& = 0.
GaugeC su_u1_recompose(const SUnDecomposition& d, const XFields& X);

using Np1Vec = std::vector<PolyS>;  // n + 1 components, & last

// Component formulas for D_A of an (n+1)-vector and of a linear form on W.
Np1Vec np1_derivative(const Np1Vec& u, const SUnDecomposition& d, const XFields& X, int A);
Np1Vec np1_form_derivative(const Np1Vec& v, const SUnDecomposition& d, const XFields& X, int A);
// The conjugated rewrites: vector derivative in lower-index form and form derivative in
// upper-index form, both driven by C~0 = -C0 and C~a = -eps^a_b C^b.
Np1Vec np1_derivative_conjugated(const Np1Vec& u, const SUnDecomposition& d, const XFields& X, int A);
Np1Vec np1_form_derivative_conjugated(const Np1Vec& v, const SUnDecomposition& d, const XFields& X, int A);
SUnDecomposition tilde(const SUnDecomposition& d);

// Conjugated formula minus the plain formula of the opposite kind, both taken with the
// tilde fields, on the probe field w for every A. Only X-dependent terms survive.
struct CViolation {
  std::array<Np1Vec, 5> vector_vs_form;  // conjugated vector derivative - form derivative
  std::array<Np1Vec, 5> form_vs_vector;  // conjugated form derivative - vector derivative
  bool invariant() const;
};
CViolation c_violation(const SUnDecomposition& d, const XFields& X, const Np1Vec& w);

}  // namespace fv

#pragma once

#include <array>
#include <string>
#include <vector>

#include "fivevec/connection.hpp"

namespace fv {

template <typename T, std::size_t A, std::size_t B, std::size_t C, std::size_t D>
using Table4 = std::array<Table3<T, B, C, D>, A>;

// (M_{mu nu})^a_b = delta^a_nu g_{mu b} - delta^a_mu g_{nu b}.
Matrix<Poly4> m_four(const MetricG& g, int mu, int nu);
// Five-index action with g_{A5} = 0.
Matrix<Poly4> m_five(const MetricG& g, int K, int L);

// Gamma^n_{m AB} for four-vector targets and G^A_{B KL} for five-vector targets.
struct BivCoeffs4 {
  Table4<Poly4, 4, 4, 5, 5> c{};
  friend bool operator==(const BivCoeffs4&, const BivCoeffs4&) = default;
};
struct BivCoeffs5 {
  Table4<Poly4, 5, 5, 5, 5> c{};
  friend bool operator==(const BivCoeffs5&, const BivCoeffs5&) = default;
};

// Active regular basis with four-connection `four`: Gamma^m_{n a5} = four, Gamma^m_{n ab} = M_{ab}.
BivCoeffs4 biv_coeffs_four(const MetricG& g, const FourConnection& four);
// G^a_{b mu 5} = four, G^5_{b mu 5} = -g, G^A_{5 mu 5} = 0, G^A_{B mu nu} = M_{mu nu}.
BivCoeffs5 biv_coeffs_five(const MetricG& g, const FourConnection& four);

// D_{KL} f: d_K when L = 5, -d_L when K = 5, else 0.
Poly4 D_basis_scalar(int K, int L, const Poly4& f);
Poly4 D_scalar(const Bivector5Field& A, const Poly4& f);
// Directly from the covariant derivative and M-hat.
FourVecField D_fourvec(const Bivector5Field& A, const FourVecField& U, const MetricG& g, const FourConnection& levi_civita);
FourVecField D_fourvec(const Bivector5Field& A, const FourVecField& U, const MetricG& g);
// Through connection coefficients.
FourVecField D_fourvec(const Bivector5Field& A, const FourVecField& U, const BivCoeffs4& coeffs);
FiveVecField D_fivevec(const Bivector5Field& A, const FiveVecField& u, const MetricG& g, const FourConnection& levi_civita);
FiveVecField D_fivevec(const Bivector5Field& A, const FiveVecField& u, const MetricG& g);
FiveVecField D_fivevec(const Bivector5Field& A, const FiveVecField& u, const BivCoeffs5& coeffs);

// Four-tensor with slot variances, components flattened over 4^rank.
struct Tensor4 {
  std::vector<bool> upper;
  std::vector<Poly4> data;

  explicit Tensor4(std::vector<bool> variance);
  static Tensor4 metric(const MetricG& g);
  Poly4& at(const std::vector<int>& idx);
  const Poly4& at(const std::vector<int>& idx) const;
  bool is_zero() const;
};

Tensor4 D_tensor(const Bivector5Field& A, const Tensor4& T, const BivCoeffs4& coeffs);
Tensor5 D_tensor(const Bivector5Field& A, const Tensor5& T, const BivCoeffs5& coeffs);

// sigma(u)^{AB} = s^{AB}_C u^C with s^{a5}_C = delta^a_C.
Bivector5Field sigma(const FiveVecField& u, const SForm& S);

struct Eq57Report {
  std::string field;
  int samples = 0;
  int failures = 0;
  bool ok() const { return failures == 0; }
};

enum class FieldKind { Scalar, Four, Five };

// Compares the pentad derivative along u with D along sigma(u) on random fields.
Eq57Report check_eq57(const ConnectionH& H, const MetricG& g, const SForm& S, const FourConnection& levi_civita,
                      FieldKind kind, std::uint64_t seed, int samples = 4);

// Gamma' for E' = E Lambda and e' = e L; D_{ST} acts on Lambda entries through D_basis_scalar.
BivCoeffs4 transform_biv_coeffs(const BivCoeffs4& coeffs, const Matrix<Poly4>& Lambda4, const Matrix<Poly4>& L5);

}  // namespace fv

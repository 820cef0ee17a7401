#pragma once

#include <string>
#include <vector>

#include "fivevec/curvature.hpp"
#include "fivevec/formal.hpp"
#include "fivevec/frames.hpp"

namespace fv {

// M^A_{BC}, antisymmetric in BC. Rows A = 0..3 carry the four-vector index of the
// flat-space currents; row 5 holds the extra M^5 components of the curved construction.
struct MTensor {
  Table3<Poly4, 5, 5, 5> c{};
  bool antisymmetric() const;
  Tensor5 as_tensor() const;  // variance (up, down, down)
  friend bool operator==(const MTensor&, const MTensor&) = default;
};

// P-basis components from Theta^mu_a ([mu][a]) and Sigma^mu_{ab}:
// M^mu_{ab} = x_a Theta^mu_b - x_b Theta^mu_a + Sigma^mu_{ab}, M^mu_{5a} = -M^mu_{a5} = Theta^mu_a.
MTensor assemble_M(const Matrix<Poly4>& Theta, const Table3<Poly4, 4, 4, 4>& Sigma);

// Lower indices re-expressed through q^5 = o^5 - x_a o^a; the upper index is a four-vector
// index and is left alone.
MTensor M_to_O_basis(const MTensor& M);
MTensor M_to_P_basis(const MTensor& M);

// Chart change of P-basis components at a fixed point: Lambda on the upper index,
// p_basis_change on both lower indices.
MTensor transform_M_p_basis(const MTensor& M, const LorentzChart& chart);

// Flat-space divergences M^mu_{BC;mu}: pure partials in the P-basis and the O-basis
// expansion with G^5_{a mu} = -eta_{a mu}. Entries with B = C = 5 are always zero.
struct FlatConservation {
  Matrix<Poly4> p_basis = Matrix<Poly4>(5, 5);
  Matrix<Poly4> o_basis = Matrix<Poly4>(5, 5);
};
FlatConservation flat_conservation(const MTensor& M_p);

// Modified divergence (D*_A M)^A_{BC} with D*_A = D_A + H^K_{KA} - H^K_{AK}.
Matrix<Poly4> modified_divergence(const MTensor& M, const ConnectionH& H);

// Both lines of the curved conservation law:
// mu5[m] = (D* M)^A_{m5} - M^A_{|ST|} K^{ST}_{mA}, munu = (D* M)^A_{mn}.
struct CurvedConservation {
  std::array<Poly4, 4> mu5{};
  Matrix<Poly4> munu = Matrix<Poly4>(4, 4);
  bool ok() const;
};
CurvedConservation conservation_residual(const MTensor& M, const ConnectionH& H, const MetricG& g);

// Matter fields for canonical currents. A scalar `phi` has the symbol `phi` and
// derivative symbols `D0_phi` .. `D3_phi`, `D5_phi`; a five-vector `u` has components
// `u_0` .. `u_3`, `u_5` and derivatives `D<A>_u_<B>`.
enum class FieldType { Scalar, FiveVector };

struct MatterField {
  std::string name;
  FieldType type = FieldType::Scalar;
};

class MatterModel {
 public:
  // Throws std::invalid_argument naming the first undeclared symbol in the Lagrangian.
  MatterModel(std::vector<MatterField> fields, FormalPoly lagrangian);

  const std::vector<MatterField>& fields() const { return fields_; }
  const FormalPoly& lagrangian() const { return lagrangian_; }
  std::vector<std::string> declared_symbols() const;

 private:
  std::vector<MatterField> fields_;
  FormalPoly lagrangian_;
};

// Field values: a scalar carries one polynomial, a five-vector carries five (index 4 is the 5 slot).
using FieldValues = std::vector<std::vector<Poly4>>;

// M^A_{m5} = delta^A_m L - sum dL/d(D_A U) D_m U and M^A_{mn} = -sum dL/d(D_A U) D_{mn} U.
MTensor canonical_currents(const MatterModel& model, const FieldValues& values, const ConnectionH& H, const MetricG& g);

}  // namespace fv

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "fivevec/linalg.hpp"
#include "fivevec/scalarfield.hpp"

namespace fv {

using Vec4P = std::array<Poly4, 4>;
using Vec5P = std::array<Poly4, 5>;
using Mat4P = std::array<std::array<Poly4, 4>, 4>;
using Mat5P = std::array<std::array<Poly4, 5>, 5>;

enum BasisTag : unsigned {
  kStandard = 1u << 0,
  kRegular = 1u << 1,
  kNormalized = 1u << 2,
  kActive = 1u << 3,
  kCoordinate = 1u << 4,
  kOBasis = 1u << 5,
  kPBasis = 1u << 6,
};

struct BasisLabel {
  std::string name = "O";
  unsigned tags = kStandard | kRegular | kNormalized | kActive | kCoordinate | kOBasis;
  bool has(unsigned t) const { return (tags & t) == t; }
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

// A basis as a matrix field N over the canonical O-basis: e'_A = e_B N^B_A.
struct BasisSpec {
  BasisLabel label;
  Matrix<Poly4> N = lift(Matrix<Rational>::identity(5));
};

struct FiveVecField {
  Vec5P c;
  BasisLabel basis;
  friend bool operator==(const FiveVecField&, const FiveVecField&) = default;
};

struct FourVecField {
  Vec4P c;
  std::string basis = "E";
  friend bool operator==(const FourVecField&, const FourVecField&) = default;
};

struct FiveFormField {
  Vec5P c;
  BasisLabel basis;
  friend bool operator==(const FiveFormField&, const FiveFormField&) = default;
};

class Bivector5Field {
 public:
  Bivector5Field() = default;
  explicit Bivector5Field(const Mat5P& comps);
  static Bivector5Field basis(int K, int L);
  const Poly4& operator()(int A, int B) const { return a_[A][B]; }
  const Mat5P& components() const { return a_; }
  Bivector5Field operator+(const Bivector5Field& o) const;
  friend bool operator==(const Bivector5Field&, const Bivector5Field&) = default;

 private:
  Mat5P a_{};
};

class MetricG {
 public:
  explicit MetricG(const Matrix<Poly4>& g);
  static MetricG minkowski();

  const Poly4& operator()(int a, int b) const { return g_(static_cast<std::size_t>(a), static_cast<std::size_t>(b)); }
  // Five-index extension with g_{A5} = g_{5A} = 0.
  Poly4 five(int A, int B) const;
  const Matrix<Poly4>& matrix() const { return g_; }
  bool has_polynomial_inverse() const { return inv_.has_value(); }
  // g^{ab}; throws when the inverse is not polynomial.
  const Matrix<Poly4>& inverse() const;

 private:
  Matrix<Poly4> g_;
  std::optional<Matrix<Poly4>> inv_;
};

struct ProductH {
  MetricG g;
  Rational xi = 1;
  ProductH(MetricG metric, Rational x);
  Poly4 operator()(int A, int B) const;
};

struct BasisMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Poly4 inner_g(const FiveVecField& u, const FiveVecField& v, const MetricG& g);
Poly4 inner_h(const FiveVecField& u, const FiveVecField& v, const ProductH& h);

enum class Lowering { G, H };
FiveFormField lower_with(const FiveVecField& u, Lowering which, const ProductH& h);
FiveVecField raise_h(const FiveFormField& w, const ProductH& h);
// Inverse of the g-lowering, defined only on the annihilator of e_5.
FiveVecField raise_g(const FiveFormField& w, const MetricG& g);
Poly4 contract(const FiveFormField& w, const FiveVecField& u);

std::pair<FiveVecField, FiveVecField> split_ZE(const FiveVecField& u);
FourVecField quotient_to_four(const FiveVecField& u);
Bivector5Field wedge(const FiveVecField& u, const FiveVecField& v);

struct BivectorSplit {
  Mat4P zpart;
  FourVecField epart;
};
BivectorSplit bivector_split(const Bivector5Field& A, const Rational& xi);
Bivector5Field bivector_join(const BivectorSplit& s);

// New basis e'_A = e_B L^B_A: vector components pick up L^{-1}, forms L.
FiveVecField change_basis(const FiveVecField& u, const Matrix<Poly4>& L, const BasisLabel& target);
FiveFormField change_basis(const FiveFormField& w, const Matrix<Poly4>& L, const BasisLabel& target);
// Four-vector shadow E'_a = E_b L^b_a.
FourVecField change_basis(const FourVecField& U, const Matrix<Poly4>& L4, const std::string& target);

}  // namespace fv

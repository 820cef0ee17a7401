#include "fivevec/core5.hpp"

namespace fv {

namespace {

void require_same_basis(const BasisLabel& a, const BasisLabel& b) {
  if (!(a == b)) throw BasisMismatch("basis mismatch: '" + a.name + "' vs '" + b.name + "'");
}

void require_tag(const BasisLabel& b, unsigned tag, const char* what) {
  if (!b.has(tag)) throw BasisMismatch(std::string("operation requires a ") + what + " basis, got '" + b.name + "'");
}

}  // namespace

Bivector5Field::Bivector5Field(const Mat5P& comps) : a_(comps) {
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B)
      if (!(a_[A][B] == -a_[B][A])) throw std::invalid_argument("bivector components are not antisymmetric");
}

Bivector5Field Bivector5Field::basis(int K, int L) {
  Mat5P m{};
  if (K != L) {
    m[K][L] = 1;
    m[L][K] = -1;
  }
  return Bivector5Field(m);
}

Bivector5Field Bivector5Field::operator+(const Bivector5Field& o) const {
  Mat5P m = a_;
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B) m[A][B] += o.a_[A][B];
  return Bivector5Field(m);
}

MetricG::MetricG(const Matrix<Poly4>& g) : g_(g) {
  if (g.rows() != 4 || g.cols() != 4) throw std::invalid_argument("metric must be 4x4");
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      if (!(g(a, b) == g(b, a))) throw std::invalid_argument("metric is not symmetric");
  Poly4 det = determinant(g);
  if (det.is_zero()) throw std::invalid_argument("metric is degenerate");
  if (det.is_constant()) inv_ = fv::inverse(g);
}

MetricG MetricG::minkowski() {
  Matrix<Poly4> m(4, 4);
  m(0, 0) = 1;
  m(1, 1) = -1;
  m(2, 2) = -1;
  m(3, 3) = -1;
  return MetricG(m);
}

Poly4 MetricG::five(int A, int B) const {
  if (A == kFive || B == kFive) return {};
  return (*this)(A, B);
}

const Matrix<Poly4>& MetricG::inverse() const {
  if (!inv_)
    throw std::domain_error("metric determinant " + to_string(determinant(g_)) +
                            " is not constant, so the inverse metric is not polynomial");
  return *inv_;
}

ProductH::ProductH(MetricG metric, Rational x) : g(std::move(metric)), xi(std::move(x)) {
  if (sgn(xi) == 0) throw std::invalid_argument("xi must be nonzero");
}

Poly4 ProductH::operator()(int A, int B) const {
  if (A == kFive && B == kFive) return Poly4(xi);
  return g.five(A, B);
}

Poly4 inner_g(const FiveVecField& u, const FiveVecField& v, const MetricG& g) {
  require_same_basis(u.basis, v.basis);
  require_tag(u.basis, kRegular, "regular");
  Poly4 out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (!g(a, b).is_zero()) out += g(a, b) * u.c[a] * v.c[b];
  return out;
}

Poly4 inner_h(const FiveVecField& u, const FiveVecField& v, const ProductH& h) {
  return inner_g(u, v, h.g) + Poly4(h.xi) * u.c[kFive] * v.c[kFive];
}

FiveFormField lower_with(const FiveVecField& u, Lowering which, const ProductH& h) {
  require_tag(u.basis, kRegular, "regular");
  FiveFormField w;
  w.basis = u.basis;
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B) {
      Poly4 m = which == Lowering::H ? h(A, B) : h.g.five(A, B);
      if (!m.is_zero()) w.c[A] += m * u.c[B];
    }
  return w;
}

FiveVecField raise_h(const FiveFormField& w, const ProductH& h) {
  require_tag(w.basis, kRegular, "regular");
  const Matrix<Poly4>& gi = h.g.inverse();
  FiveVecField u;
  u.basis = w.basis;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) u.c[a] += gi(a, b) * w.c[b];
  u.c[kFive] = Poly4(Rational(1 / h.xi)) * w.c[kFive];
  return u;
}

FiveVecField raise_g(const FiveFormField& w, const MetricG& g) {
  require_tag(w.basis, kRegular, "regular");
  if (!w.c[kFive].is_zero())
    throw std::domain_error("Raising indices with g_AB is possible only for 1-forms annihilating e_5");
  const Matrix<Poly4>& gi = g.inverse();
  FiveVecField u;
  u.basis = w.basis;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) u.c[a] += gi(a, b) * w.c[b];
  return u;
}

Poly4 contract(const FiveFormField& w, const FiveVecField& u) {
  require_same_basis(w.basis, u.basis);
  Poly4 out;
  for (int A = 0; A < 5; ++A) out += w.c[A] * u.c[A];
  return out;
}

std::pair<FiveVecField, FiveVecField> split_ZE(const FiveVecField& u) {
  require_tag(u.basis, kRegular, "regular");
  FiveVecField z = u, e;
  e.basis = u.basis;
  z.c[kFive] = Poly4();
  e.c[kFive] = u.c[kFive];
  return {z, e};
}

FourVecField quotient_to_four(const FiveVecField& u) {
  require_tag(u.basis, kStandard, "standard");
  FourVecField U;
  U.basis = "E(" + u.basis.name + ")";
  for (int a = 0; a < 4; ++a) U.c[a] = u.c[a];
  return U;
}

Bivector5Field wedge(const FiveVecField& u, const FiveVecField& v) {
  require_same_basis(u.basis, v.basis);
  Mat5P m{};
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B) m[A][B] = u.c[A] * v.c[B] - u.c[B] * v.c[A];
  return Bivector5Field(m);
}

BivectorSplit bivector_split(const Bivector5Field& A, const Rational& xi) {
  // With the xi^{-1} convention for the E-part the components are A^{a5} as is.
  if (sgn(xi) == 0) throw std::invalid_argument("xi must be nonzero");
  BivectorSplit s;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) s.zpart[a][b] = A(a, b);
    s.epart.c[a] = A(a, kFive);
  }
  return s;
}

Bivector5Field bivector_join(const BivectorSplit& s) {
  Mat5P m{};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) m[a][b] = s.zpart[a][b];
    m[a][kFive] = s.epart.c[a];
    m[kFive][a] = -s.epart.c[a];
  }
  return Bivector5Field(m);
}

namespace {

void check_change(const Matrix<Poly4>& L, const BasisLabel& from, const BasisLabel& to) {
  if (L.rows() != 5 || L.cols() != 5) throw std::invalid_argument("basis change must be 5x5");
  if (from.has(kStandard) && to.has(kStandard))
    for (std::size_t a = 0; a < 4; ++a)
      if (!L(a, 4).is_zero())
        throw std::invalid_argument("L^a_5 must vanish between standard bases");
}

}  // namespace

FiveVecField change_basis(const FiveVecField& u, const Matrix<Poly4>& L, const BasisLabel& target) {
  check_change(L, u.basis, target);
  Matrix<Poly4> Li = inverse(L);
  FiveVecField out;
  out.basis = target;
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B) out.c[A] += Li(A, B) * u.c[B];
  return out;
}

FiveFormField change_basis(const FiveFormField& w, const Matrix<Poly4>& L, const BasisLabel& target) {
  check_change(L, w.basis, target);
  inverse(L);  // rejects singular L
  FiveFormField out;
  out.basis = target;
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B) out.c[A] += w.c[B] * L(B, A);
  return out;
}

FourVecField change_basis(const FourVecField& U, const Matrix<Poly4>& L4, const std::string& target) {
  Matrix<Poly4> Li = inverse(L4);
  FourVecField out;
  out.basis = target;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out.c[a] += Li(a, b) * U.c[b];
  return out;
}

}  // namespace fv

#include "fivevec/frames.hpp"

#include "fivevec/clifford.hpp"

namespace fv {

namespace {

Matrix<Rational> block_with_row(const Matrix<Rational>& top, const Vec4Q& row) {
  Matrix<Rational> m(5, 5);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = top(i, j);
  for (std::size_t j = 0; j < 4; ++j) m(4, j) = row[j];
  m(4, 4) = 1;
  return m;
}

}  // namespace

LorentzChart::LorentzChart(Matrix<Rational> L, Vec4Q shift) : Lambda(std::move(L)), a(std::move(shift)) {
  if (Lambda.rows() != 4 || Lambda.cols() != 4) throw std::invalid_argument("Lambda must be 4x4");
  Matrix<Rational> e = eta4();
  Matrix<Rational> check = Lambda.transpose() * e * Lambda;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (check(i, j) != e(i, j))
        throw std::invalid_argument("Lambda is not a Lorentz matrix: (Lambda^T eta Lambda)_" + std::to_string(i) +
                                    std::to_string(j) + " = " + to_string(check(i, j)));
}

LorentzChart LorentzChart::then(const LorentzChart& next) const {
  Vec4Q shift = next.a;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) shift[i] += next.Lambda(i, j) * a[j];
  return LorentzChart(next.Lambda * Lambda, shift);
}

Vec4Q lower_eta(const Vec4Q& v) { return {v[0], -v[1], -v[2], -v[3]}; }

Matrix<Rational> o_basis_change(const LorentzChart& chart) {
  return block_with_row(inverse(chart.Lambda), Vec4Q{});
}

Matrix<Rational> p_basis_change(const LorentzChart& chart) {
  return block_with_row(inverse(chart.Lambda), lower_eta(chart.a));
}

BasisSpec p_basis_fields(const Rational& kappa) {
  if (sgn(kappa) == 0) throw std::invalid_argument("kappa must be nonzero");
  BasisSpec b;
  b.label = {"P", kStandard | kActive | kCoordinate | kPBasis};
  for (int a = 0; a < 4; ++a) b.N(4, static_cast<std::size_t>(a)) = (a == 0 ? Poly4(1) : Poly4(-1)) * Poly4::var(a);
  return b;
}

Vec5Q p_component_transform(const Vec5Q& v, const LorentzChart& chart) {
  Vec5Q out{};
  Vec4Q al = lower_eta(chart.a);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i] += chart.Lambda(i, j) * v[j];
  out[4] = v[4];
  for (std::size_t i = 0; i < 4; ++i) out[4] -= al[i] * out[i];
  return out;
}

Vec5Q p_form_transform(const Vec5Q& w, const LorentzChart& chart) {
  Matrix<Rational> Li = inverse(chart.Lambda);
  Vec4Q al = lower_eta(chart.a);
  Vec5Q out{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out[i] += w[j] * Li(j, i);
    out[i] += al[i] * w[4];
  }
  out[4] = w[4];
  return out;
}

Vec5P p_form_transform(const Vec5P& w, const LorentzChart& chart) {
  Matrix<Rational> Li = inverse(chart.Lambda);
  Vec4Q al = lower_eta(chart.a);
  Vec5P out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out[i] += w[j] * Poly4(Li(j, i));
    out[i] += Poly4(al[i]) * w[4];
  }
  out[4] = w[4];
  return out;
}

Matrix<Rational> h_matrix_p_basis(const Point4& x, const Rational& kappa, int h55_sign) {
  if (h55_sign != 1 && h55_sign != -1) throw std::invalid_argument("h55_sign must be +1 or -1");
  Vec4Q xl = lower_eta(x);
  Rational k2 = kappa * kappa;
  Matrix<Rational> h = block_with_row(eta4(), Vec4Q{});
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) h(a, b) += k2 * xl[a] * xl[b];
    h(a, 4) = k2 * xl[a];
    h(4, a) = k2 * xl[a];
  }
  h(4, 4) = k2 * h55_sign;
  return h;
}

Point4 recover_coords(const Matrix<Rational>& hmat, const Rational& kappa) {
  if (sgn(kappa) == 0) throw std::invalid_argument("kappa = 0: five-vectors are undefined");
  Rational k2 = kappa * kappa;
  Vec4Q xl;
  for (std::size_t a = 0; a < 4; ++a) xl[a] = hmat(a, 4) / k2;
  return lower_eta(xl);
}

Vec5P covariant_position_form_p() {
  Vec5P w;
  for (int a = 0; a < 4; ++a) w[a] = (a == 0 ? Poly4(1) : Poly4(-1)) * Poly4::var(a);
  w[4] = 1;
  return w;
}

Vec5P covariant_position_form_o() {
  // O-dual components are w^(O) = w^(P) N^{-1}.
  Matrix<Poly4> Ni = inverse(p_basis_fields(1).N);
  Vec5P wp = covariant_position_form_p(), wo;
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B) wo[A] += wp[B] * Ni(static_cast<std::size_t>(B), static_cast<std::size_t>(A));
  return wo;
}

PoincareParams PoincareParams::finite(Matrix<Rational> L, Vec4Q b_lower) {
  LorentzChart check(L, {});
  PoincareParams p;
  p.L = std::move(L);
  p.b = std::move(b_lower);
  return p;
}

PoincareParams PoincareParams::generator(Matrix<Rational> omega, Vec4Q b_upper) {
  if (omega.rows() != 4 || omega.cols() != 4) throw std::invalid_argument("omega must be 4x4");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (omega(i, j) != -omega(j, i)) throw std::invalid_argument("omega must be antisymmetric");
  PoincareParams p;
  p.infinitesimal = true;
  p.omega = std::move(omega);
  p.b = std::move(b_upper);
  return p;
}

PoincareParams poincare_T_transform(const PoincareParams& p, const LorentzChart& chart) {
  if (p.infinitesimal) throw std::invalid_argument("finite Poincare parameters required");
  const Matrix<Rational>& Lam = chart.Lambda;
  Matrix<Rational> Li = inverse(Lam);
  Vec4Q al = lower_eta(chart.a);
  PoincareParams out;
  out.L = Lam * p.L * Li;
  // b'_b = b_t (Li)^t_b + a_b - a_r Lam^r_s L^s_t (Li)^t_b
  Matrix<Rational> aLLLi = Lam * p.L * Li;
  for (std::size_t beta = 0; beta < 4; ++beta) {
    Rational v = al[beta];
    for (std::size_t t = 0; t < 4; ++t) v += p.b[t] * Li(t, beta);
    for (std::size_t r = 0; r < 4; ++r) v -= al[r] * aLLLi(r, beta);
    out.b[beta] = v;
  }
  return out;
}

PoincareParams poincare_R_transform(const PoincareParams& p, const LorentzChart& chart) {
  if (!p.infinitesimal) throw std::invalid_argument("infinitesimal Poincare parameters required");
  PoincareParams check = PoincareParams::generator(p.omega, p.b);
  const Matrix<Rational>& Lam = chart.Lambda;
  Vec4Q al = lower_eta(chart.a);
  PoincareParams out;
  out.infinitesimal = true;
  out.omega = Lam * p.omega * Lam.transpose();
  Vec4Q inner;
  for (std::size_t nu = 0; nu < 4; ++nu) {
    inner[nu] = p.b[nu];
    for (std::size_t al_i = 0; al_i < 4; ++al_i)
      for (std::size_t beta = 0; beta < 4; ++beta) inner[nu] -= al[al_i] * Lam(al_i, beta) * p.omega(nu, beta);
  }
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) out.b[mu] += Lam(mu, nu) * inner[nu];
  return out;
}

Matrix<Rational> poincare_T_tensor(const PoincareParams& p) {
  if (p.infinitesimal) throw std::invalid_argument("finite Poincare parameters required");
  return block_with_row(p.L, p.b);
}

Matrix<Rational> poincare_R_tensor(const PoincareParams& p) {
  if (!p.infinitesimal) throw std::invalid_argument("infinitesimal Poincare parameters required");
  Matrix<Rational> R(5, 5);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) R(i, j) = p.omega(i, j);
    R(i, 4) = p.b[i];
    R(4, i) = -p.b[i];
  }
  return R;
}

Matrix<Rational> transform_11(const Matrix<Rational>& T, const Matrix<Rational>& P) { return inverse(P) * T * P; }

Matrix<Rational> transform_20(const Matrix<Rational>& R, const Matrix<Rational>& P) {
  Matrix<Rational> Pi = inverse(P);
  return Pi * R * Pi.transpose();
}

}  // namespace fv

#include "fivevec/gauge.hpp"

#include <stdexcept>

namespace fv {

namespace {

constexpr int k5 = 4;

std::size_t z(int i) { return static_cast<std::size_t>(i); }

PolyS dA(const PolyS& f, int A) { return A == k5 ? PolyS() : partial(f, A); }

MatPS lift_s(const MatS& m) { return m.map([](const Surd& v) { return PolyS(v); }); }

MatPS partial_matrix(const MatPS& m, int A) { return m.map([&](const PolyS& p) { return dA(p, A); }); }

MatPS scale(const MatPS& m, const PolyS& f) { return m.map([&](const PolyS& p) { return p * f; }); }

// D_{KL} on a scalar entry: d_K when L = 5, -d_L when K = 5.
PolyS D_basis(int K, int L, const PolyS& f) {
  if (L == k5 && K != k5) return dA(f, K);
  if (K == k5 && L != k5) return -dA(f, L);
  return PolyS();
}

MatPS n_block(const MatPS& m, int n) {
  MatPS out(z(n), z(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(z(i), z(j)) = m(z(i), z(j));
  return out;
}

Surd trace(const MatS& m) {
  Surd s;
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

PolyS trace(const MatPS& m) {
  PolyS s;
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

PolyS times(const Surd& s, const PolyS& p) { return PolyS(s) * p; }

const Surd& I() {
  static const Surd i = Surd::i();
  return i;
}

}  // namespace

PolyS conj(const PolyS& p) {
  return p.map_coeffs<Surd>([](const Surd& c) { return c.conj(); });
}

bool is_real(const PolyS& p) { return conj(p) == p; }

MatPS adjoint(const MatPS& m) { return m.transpose().map([](const PolyS& p) { return conj(p); }); }

std::vector<MatS> sun_generators(int n) {
  if (n < 1) throw std::invalid_argument("SU(n) needs n >= 1");
  std::vector<MatS> out;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      MatS s(z(n), z(n)), a(z(n), z(n));
      s(z(j), z(k)) = s(z(k), z(j)) = Surd(1);
      a(z(j), z(k)) = -I();
      a(z(k), z(j)) = I();
      out.push_back(s);
      out.push_back(a);
    }
  for (int l = 1; l < n; ++l) {
    MatS d(z(n), z(n));
    Surd c = Surd::sqrt(Rational(2) / (l * (l + 1)));
    for (int j = 0; j < l; ++j) d(z(j), z(j)) = c;
    d(z(l), z(l)) = c * Surd(-l);
    out.push_back(d);
  }
  return out;
}

std::vector<std::vector<Surd>> conjugation_matrix(const std::vector<MatS>& t) {
  // Tr(t_a t_c^T) = 2 eps^c_a
  std::vector<std::vector<Surd>> eps(t.size(), std::vector<Surd>(t.size()));
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t c = 0; c < t.size(); ++c) eps[c][a] = trace(t[a] * t[c].transpose()) * Surd(frac(1, 2));
  return eps;
}

Np1Config::Np1Config(int n_, bool complex_, MatS theta_, MatS eta_)
    : n(n_), complex(complex_), theta(std::move(theta_)), eta(std::move(eta_)) {
  if (n < 1) throw std::invalid_argument("the Z-block dimension n must be at least 1");
  if (theta.rows() != z(n) || theta.cols() != z(n)) throw std::invalid_argument("theta must be n x n");
  if (eta.rows() != z(n + 1) || eta.cols() != z(n + 1)) throw std::invalid_argument("eta must be (n+1) x (n+1)");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Surd tji = complex ? theta(z(j), z(i)).conj() : theta(z(j), z(i));
      if (!(theta(z(i), z(j)) == tji)) throw std::invalid_argument("theta is not Hermitian");
    }
  if (determinant(eta).is_zero()) throw std::invalid_argument("eta is degenerate");
}

Np1Config Np1Config::orthonormal(int n, bool complex) {
  return Np1Config(n, complex, MatS::identity(z(n)), MatS::identity(z(n + 1)));
}

bool Np1Config::theta_orthonormal() const { return theta == MatS::identity(z(n)); }

GaugeC::GaugeC(int n_) : n(n_) {
  if (n < 1) throw std::invalid_argument("the Z-block dimension n must be at least 1");
  for (auto& m : c) m = MatPS(z(n + 1), z(n + 1));
}

bool GaugeC::standard() const {
  for (const auto& m : c)
    for (int i = 0; i < n; ++i)
      if (!m(z(i), z(n)).is_zero()) return false;
  return true;
}

std::array<MatPS, 5> hermitian_residual(const GaugeC& C, const MatPS& theta) {
  std::array<MatPS, 5> out;
  for (int A = 0; A < 5; ++A) {
    MatPS c = n_block(C.c[z(A)], C.n);
    out[z(A)] = partial_matrix(theta, A) - adjoint(c) * theta - theta * c;
  }
  return out;
}

std::array<PolyS, 5> gauge_trace(const GaugeC& C) {
  std::array<PolyS, 5> out;
  for (int A = 0; A < 5; ++A) out[z(A)] = trace(C.c[z(A)]);
  return out;
}

bool e_norm_preserved(const GaugeC& C, const Np1Config& cfg) {
  for (const auto& m : C.c) {
    const PolyS& v = m(z(C.n), z(C.n));
    if (!cfg.complex && !v.is_zero()) return false;
    if (cfg.complex && !(conj(v) == -v)) return false;
  }
  return true;
}

GaugeC transform_C(const GaugeC& C, const MatPS& L) {
  if (L.rows() != z(C.n + 1) || L.cols() != z(C.n + 1)) throw std::invalid_argument("L must be (n+1) x (n+1)");
  MatPS Li = inverse(L);
  GaugeC out(C.n);
  for (int A = 0; A < 5; ++A) out.c[z(A)] = Li * C.c[z(A)] * L + Li * partial_matrix(L, A);
  return out;
}

BivGaugeC::BivGaugeC(int n_) : n(n_) {
  if (n < 1) throw std::invalid_argument("the gauge dimension n must be at least 1");
  for (auto& row : c)
    for (auto& m : row) m = MatPS(z(n), z(n));
}

void BivGaugeC::set(int K, int L, const MatPS& m) {
  if (K == L) throw std::invalid_argument("bivector gauge fields vanish on the diagonal");
  c[z(K)][z(L)] = m;
  c[z(L)][z(K)] = m.map([](const PolyS& p) { return -p; });
}

bool BivGaugeC::antisymmetric() const {
  for (int K = 0; K < 5; ++K)
    for (int L = K; L < 5; ++L)
      if (!(c[z(K)][z(L)] + c[z(L)][z(K)]).is_zero_matrix()) return false;
  return true;
}

std::array<MatPS, 5> compose_B(const BivGaugeC& C, const SForm& S) {
  std::array<MatPS, 5> B;
  for (int A = 0; A < 5; ++A) {
    MatPS b(z(C.n), z(C.n));
    if (A < 4) b = C.c[z(A)][k5];
    for (int m = 0; m < 4; ++m)
      for (int q = m + 1; q < 4; ++q)
        if (!S.up(m, q, A).is_zero()) b = b + scale(C.c[z(m)][z(q)], to_surd(S.up(m, q, A)));
    B[z(A)] = b;
  }
  return B;
}

BivGaugeC transform_biv_C(const BivGaugeC& C, const MatPS& Lambda) {
  MatPS Li = inverse(Lambda);
  BivGaugeC out(C.n);
  for (int K = 0; K < 5; ++K)
    for (int L = 0; L < 5; ++L) {
      if (K == L) continue;
      MatPS d = Lambda.map([&](const PolyS& p) { return D_basis(K, L, p); });
      out.c[z(K)][z(L)] = Li * C.c[z(K)][z(L)] * Lambda + Li * d;
    }
  return out;
}

BivGaugeC transform_biv_C_five(const BivGaugeC& C, const Matrix<Poly4>& L) {
  BivGaugeC out(C.n);
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B) {
      MatPS m(z(C.n), z(C.n));
      for (int S = 0; S < 5; ++S)
        for (int T = 0; T < 5; ++T) {
          Poly4 f = L(z(S), z(A)) * L(z(T), z(B));
          if (!f.is_zero() && S != T) m = m + scale(C.c[z(S)][z(T)], to_surd(f));
        }
      out.c[z(A)][z(B)] = m;
    }
  return out;
}

Surd u1_charge_z(int n) { return Surd::sqrt(Rational(1) / (2 * n * (n + 1))); }
Surd u1_charge_e(int n) { return Surd::sqrt(frac(n, static_cast<unsigned long>(2 * (n + 1)))); }

SUnDecomposition su_u1_decompose(const GaugeC& C, const Np1Config& cfg, const Rational& g) {
  if (cfg.n != C.n) throw std::invalid_argument("configuration and gauge fields disagree on n");
  if (!cfg.complex || !cfg.theta_orthonormal())
    throw std::invalid_argument("the SU(n) x U(1) split needs a complex W in an orthonormal basis");
  if (sgn(g) == 0) throw std::invalid_argument("coupling g must be nonzero");
  const int n = C.n;
  SUnDecomposition d;
  d.n = n;
  d.g = g;
  d.t = sun_generators(n);
  Surd ig = I() * Surd(g);
  Surd inv_ig = ig.inverse();
  for (int A = 0; A < 5; ++A) {
    MatPS c = n_block(C.c[z(A)], n);
    if (!(adjoint(c) + c).is_zero_matrix())
      throw std::invalid_argument("C^i_j" + std::string(A == k5 ? "5" : std::to_string(A)) + " is not anti-Hermitian");
    // Tr C = i g n [2n(n+1)]^{-1/2} C0; Tr(t_b C) = i g C^b.
    d.C0[z(A)] = times((ig * Surd(n) * u1_charge_z(n)).inverse(), trace(c));
    d.Ca[z(A)].resize(d.t.size());
    for (std::size_t a = 0; a < d.t.size(); ++a) d.Ca[z(A)][a] = times(inv_ig, trace(lift_s(d.t[a]) * c));
  }
  return d;
}

XFields x_fields(const GaugeC& C, const Rational& g) {
  XFields X;
  Surd ginv(1 / g);
  for (int A = 0; A < 5; ++A) {
    X[z(A)].resize(z(C.n));
    for (int j = 0; j < C.n; ++j) X[z(A)][z(j)] = times(ginv, C.c[z(A)](z(C.n), z(j)));
  }
  return X;
}

GaugeC su_u1_recompose(const SUnDecomposition& d, const XFields& X) {
  const int n = d.n;
  GaugeC C(n);
  Surd ig = I() * Surd(d.g);
  Surd su = ig * Surd(frac(1, 2));
  Surd u1 = ig * u1_charge_z(n);
  Surd ee = -ig * u1_charge_e(n);
  for (int A = 0; A < 5; ++A) {
    MatPS& m = C.c[z(A)];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        for (std::size_t a = 0; a < d.t.size(); ++a)
          if (!d.t[a](z(i), z(j)).is_zero()) m(z(i), z(j)) += times(su * d.t[a](z(i), z(j)), d.Ca[z(A)][a]);
      m(z(i), z(i)) += times(u1, d.C0[z(A)]);
      m(z(n), z(i)) = times(Surd(d.g), X[z(A)][z(i)]);
    }
    m(z(n), z(n)) = times(ee, d.C0[z(A)]);
  }
  return C;
}

namespace {

// Shared pieces of the four component formulas. `sign` is +1 for the vector-type
// SU(n) x U(1) action and -1 for the form-type action; `x_row` selects where the X term sits.
Np1Vec su_u1_action(const Np1Vec& w, const SUnDecomposition& d, int A, int sign, bool transpose_t) {
  const int n = d.n;
  if (w.size() != z(n + 1)) throw std::invalid_argument("(n+1)-vector field has the wrong number of components");
  Surd ig = I() * Surd(d.g);
  Surd su = ig * Surd(frac(sign, 2));
  Surd u1 = ig * u1_charge_z(n) * Surd(sign);
  Surd ee = -ig * u1_charge_e(n) * Surd(sign);
  Np1Vec out(z(n + 1));
  for (int i = 0; i <= n; ++i) out[z(i)] = dA(w[z(i)], A);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      for (std::size_t a = 0; a < d.t.size(); ++a) {
        const Surd& t = transpose_t ? d.t[a](z(j), z(i)) : d.t[a](z(i), z(j));
        if (!t.is_zero() && !d.Ca[z(A)][a].is_zero()) out[z(i)] += times(su * t, d.Ca[z(A)][a] * w[z(j)]);
      }
    out[z(i)] += times(u1, d.C0[z(A)] * w[z(i)]);
  }
  out[z(n)] += times(ee, d.C0[z(A)] * w[z(n)]);
  return out;
}

}  // namespace

Np1Vec np1_derivative(const Np1Vec& u, const SUnDecomposition& d, const XFields& X, int A) {
  Np1Vec out = su_u1_action(u, d, A, 1, false);
  for (int j = 0; j < d.n; ++j) out[z(d.n)] += times(Surd(d.g), X[z(A)][z(j)] * u[z(j)]);
  return out;
}

Np1Vec np1_form_derivative(const Np1Vec& v, const SUnDecomposition& d, const XFields& X, int A) {
  Np1Vec out = su_u1_action(v, d, A, -1, true);
  for (int i = 0; i < d.n; ++i) out[z(i)] -= times(Surd(d.g), v[z(d.n)] * X[z(A)][z(i)]);
  return out;
}

SUnDecomposition tilde(const SUnDecomposition& d) {
  SUnDecomposition out = d;
  auto eps = conjugation_matrix(d.t);
  for (int A = 0; A < 5; ++A) {
    out.C0[z(A)] = -d.C0[z(A)];
    for (std::size_t a = 0; a < d.t.size(); ++a) {
      PolyS v;
      for (std::size_t b = 0; b < d.t.size(); ++b)
        if (!eps[a][b].is_zero()) v -= times(eps[a][b], d.Ca[z(A)][b]);
      out.Ca[z(A)][a] = v;
    }
  }
  return out;
}

Np1Vec np1_derivative_conjugated(const Np1Vec& u, const SUnDecomposition& d, const XFields& X, int A) {
  Np1Vec out = su_u1_action(u, tilde(d), A, -1, true);
  for (int j = 0; j < d.n; ++j) out[z(d.n)] += times(Surd(d.g), u[z(j)] * X[z(A)][z(j)]);
  return out;
}

Np1Vec np1_form_derivative_conjugated(const Np1Vec& v, const SUnDecomposition& d, const XFields& X, int A) {
  Np1Vec out = su_u1_action(v, tilde(d), A, 1, false);
  for (int i = 0; i < d.n; ++i) out[z(i)] -= times(Surd(d.g), X[z(A)][z(i)] * v[z(d.n)]);
  return out;
}

bool CViolation::invariant() const {
  for (const auto* side : {&vector_vs_form, &form_vs_vector})
    for (const auto& row : *side)
      for (const auto& p : row)
        if (!p.is_zero()) return false;
  return true;
}

CViolation c_violation(const SUnDecomposition& d, const XFields& X, const Np1Vec& w) {
  SUnDecomposition dt = tilde(d);
  CViolation out;
  for (int A = 0; A < 5; ++A) {
    Np1Vec a = np1_derivative_conjugated(w, d, X, A), b = np1_form_derivative(w, dt, X, A);
    Np1Vec c = np1_form_derivative_conjugated(w, d, X, A), e = np1_derivative(w, dt, X, A);
    out.vector_vs_form[z(A)].resize(w.size());
    out.form_vs_vector[z(A)].resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      out.vector_vs_form[z(A)][i] = a[i] - b[i];
      out.form_vs_vector[z(A)][i] = c[i] - e[i];
    }
  }
  return out;
}

}  // namespace fv

#include "fivevec/connection.hpp"

#include <cmath>
#include <stdexcept>

namespace fv {

namespace {

constexpr int kFiveIdx = 4;

Poly4 dC(const Poly4& f, int C) { return C == kFiveIdx ? Poly4() : partial(f, C); }

std::array<std::array<double, 4>, 4> invert4(std::array<std::array<double, 4>, 4> m) {
  std::array<std::array<double, 4>, 4> inv{};
  for (int i = 0; i < 4; ++i) inv[i][i] = 1;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (m[piv][col] == 0) throw std::domain_error("metric is singular at the evaluation point");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    double p = m[col][col];
    for (int j = 0; j < 4; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      double f = m[r][col];
      for (int j = 0; j < 4; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

SForm::SForm(const Table3<Poly4, 4, 4, 5>& comps) : s_(comps) {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int C = 0; C < 5; ++C)
        if (s_[a][b][C] != -s_[b][a][C])
          throw std::invalid_argument("S-form not antisymmetric at (" + std::to_string(a) + "," + std::to_string(b) +
                                      "," + std::to_string(C) + ")");
}

void SForm::set(int a, int b, int C, const Poly4& v) {
  if (a == b && !v.is_zero()) throw std::invalid_argument("S-form diagonal entries must vanish");
  s_[a][b][C] = v;
  s_[b][a][C] = -v;
}

Poly4 SForm::mixed(int a, int b, int C, const MetricG& g) const {
  if (b == kFiveIdx) return Poly4();
  Poly4 r;
  for (int w = 0; w < 4; ++w)
    if (!s_[a][w][C].is_zero()) r += g(b, w) * s_[a][w][C];
  return r;
}

bool SForm::is_zero() const {
  for (const auto& p : s_)
    for (const auto& q : p)
      for (const auto& v : q)
        if (!v.is_zero()) return false;
  return true;
}

FourConnection christoffel(const MetricG& g) {
  const Matrix<Poly4>& gi = g.inverse();
  Table3<Poly4, 4, 4, 4> dg;  // dg[n][m][b] = d_b g_{nm}
  for (int n = 0; n < 4; ++n)
    for (int m = 0; m < 4; ++m)
      for (int b = 0; b < 4; ++b) dg[n][m][b] = partial(g(n, m), b);
  FourConnection G;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int mu = b; mu < 4; ++mu) {
        Poly4 s;
        for (int n = 0; n < 4; ++n) {
          Poly4 bracket = dg[n][mu][b] + dg[n][b][mu] - dg[b][mu][n];
          if (!bracket.is_zero()) s += gi(static_cast<std::size_t>(a), static_cast<std::size_t>(n)) * bracket;
        }
        s *= Poly4(frac(1, 2));
        G(a, b, mu) = s;
        G(a, mu, b) = s;
      }
  return G;
}

Table3<Rational, 4, 4, 4> christoffel_at(const MetricG& g, const Point4& x) {
  Matrix<Rational> gx = eval_matrix(g.matrix(), x);
  if (sgn(determinant(gx)) == 0) throw std::domain_error("metric is singular at the evaluation point");
  Matrix<Rational> gi = inverse(gx);
  Table3<Rational, 4, 4, 4> dg;
  for (int n = 0; n < 4; ++n)
    for (int m = 0; m < 4; ++m)
      for (int b = 0; b < 4; ++b) dg[n][m][b] = partial(g(n, m), b).eval(x);
  Table3<Rational, 4, 4, 4> G;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int mu = 0; mu < 4; ++mu) {
        Rational s = 0;
        for (int n = 0; n < 4; ++n)
          s += gi(static_cast<std::size_t>(a), static_cast<std::size_t>(n)) * (dg[n][mu][b] + dg[n][b][mu] - dg[b][mu][n]);
        G[a][b][mu] = s / 2;
      }
  return G;
}

Table3<double, 4, 4, 4> christoffel_numeric(const MetricG& g, const std::array<double, 4>& x) {
  std::array<std::array<double, 4>, 4> gx;
  Table3<double, 4, 4, 4> dg;
  for (int n = 0; n < 4; ++n)
    for (int m = 0; m < 4; ++m) {
      gx[n][m] = g(n, m).eval(x);
      for (int b = 0; b < 4; ++b) dg[n][m][b] = partial(g(n, m), b).eval(x);
    }
  auto gi = invert4(gx);
  Table3<double, 4, 4, 4> G;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int mu = 0; mu < 4; ++mu) {
        double s = 0;
        for (int n = 0; n < 4; ++n) s += gi[a][n] * (dg[n][mu][b] + dg[n][b][mu] - dg[b][mu][n]);
        G[a][b][mu] = s / 2;
      }
  return G;
}

ConnectionG build_G(const MetricG& g, const Rational& kappa, const FourConnection& four, Normalization norm) {
  if (sgn(kappa) == 0) throw std::invalid_argument("kappa = 0: five-vectors are undefined");
  Poly4 scale(norm == Normalization::Normalized ? Rational(-kappa) : Rational(-1));
  ConnectionG G;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int mu = 0; mu < 4; ++mu) G(a, b, mu) = four(a, b, mu);
  for (int b = 0; b < 4; ++b)
    for (int mu = 0; mu < 4; ++mu) G(kFiveIdx, b, mu) = scale * g(b, mu);
  return G;
}

ConnectionH build_H(const MetricG& g, const SForm& S, const FourConnection& levi_civita) {
  ConnectionH H;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      for (int mu = 0; mu < 4; ++mu) H(a, b, mu) = levi_civita(a, b, mu) - S.mixed(a, b, mu, g);
      H(a, b, kFiveIdx) = -S.mixed(a, b, kFiveIdx, g);
    }
  for (int b = 0; b < 4; ++b)
    for (int mu = 0; mu < 4; ++mu) H(kFiveIdx, b, mu) = -g(b, mu);
  return H;
}

ConnectionH as_pentad(const ConnectionG& G) {
  ConnectionH H;
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B)
      for (int mu = 0; mu < 4; ++mu) H(A, B, mu) = G(A, B, mu);
  return H;
}

Tensor5::Tensor5(std::vector<bool> variance) : upper(std::move(variance)) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < upper.size(); ++i) n *= 5;
  data.assign(n, Poly4());
}

Tensor5 Tensor5::from(const FiveVecField& u) {
  Tensor5 t({true});
  for (int A = 0; A < 5; ++A) t.data[A] = u.c[A];
  return t;
}

Tensor5 Tensor5::from(const FiveFormField& w) {
  Tensor5 t({false});
  for (int A = 0; A < 5; ++A) t.data[A] = w.c[A];
  return t;
}

Tensor5 Tensor5::metric(const MetricG& g) {
  Tensor5 t({false, false});
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B) t.at({A, B}) = g.five(A, B);
  return t;
}

Poly4& Tensor5::at(const std::vector<int>& idx) {
  return const_cast<Poly4&>(static_cast<const Tensor5&>(*this).at(idx));
}

const Poly4& Tensor5::at(const std::vector<int>& idx) const {
  if (idx.size() != upper.size()) throw std::invalid_argument("tensor index rank mismatch");
  std::size_t flat = 0;
  for (int i : idx) {
    if (i < 0 || i > 4) throw std::out_of_range("five-index out of range");
    flat = flat * 5 + static_cast<std::size_t>(i);
  }
  return data[flat];
}

bool Tensor5::is_zero() const {
  for (const auto& p : data)
    if (!p.is_zero()) return false;
  return true;
}

Tensor5 pentad_derivative(const Tensor5& T, const ConnectionH& H, int C) {
  if (C < 0 || C > 4) throw std::out_of_range("derivative direction out of range");
  Tensor5 out(T.upper);
  const std::size_t r = T.rank();
  std::vector<int> idx(r, 0), src(r);
  for (std::size_t flat = 0; flat < T.data.size(); ++flat) {
    std::size_t rem = flat;
    for (std::size_t k = r; k-- > 0;) {
      idx[k] = static_cast<int>(rem % 5);
      rem /= 5;
    }
    Poly4 v = dC(T.data[flat], C);
    for (std::size_t k = 0; k < r; ++k) {
      src = idx;
      for (int K = 0; K < 5; ++K) {
        src[k] = K;
        const Poly4& t = T.at(src);
        if (t.is_zero()) continue;
        const Poly4& coeff = T.upper[k] ? H(idx[k], K, C) : H(K, idx[k], C);
        if (coeff.is_zero()) continue;
        if (T.upper[k])
          v += coeff * t;
        else
          v -= coeff * t;
      }
    }
    out.data[flat] = v;
  }
  return out;
}

FiveVecField pentad_derivative(const FiveVecField& u, const ConnectionH& H, int C) {
  Tensor5 d = pentad_derivative(Tensor5::from(u), H, C);
  FiveVecField out{{}, u.basis};
  for (int A = 0; A < 5; ++A) out.c[A] = d.data[A];
  return out;
}

FiveFormField pentad_derivative(const FiveFormField& w, const ConnectionH& H, int C) {
  Tensor5 d = pentad_derivative(Tensor5::from(w), H, C);
  FiveFormField out{{}, w.basis};
  for (int A = 0; A < 5; ++A) out.c[A] = d.data[A];
  return out;
}

FiveVecField nabla_five(const FiveVecField& u, const ConnectionG& G, int mu) {
  if (mu < 0 || mu > 3) throw std::out_of_range("nabla_five: axis must be 0..3");
  return pentad_derivative(u, as_pentad(G), mu);
}

Tensor5 nabla_five(const Tensor5& T, const ConnectionG& G, int mu) {
  if (mu < 0 || mu > 3) throw std::out_of_range("nabla_five: axis must be 0..3");
  return pentad_derivative(T, as_pentad(G), mu);
}

Table3<Poly4, 5, 5, 5> five_torsion(const ConnectionH& H) {
  Table3<Poly4, 5, 5, 5> T;
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B)
      for (int C = 0; C < 5; ++C) T[A][B][C] = H(A, C, B) - H(A, B, C);
  return T;
}

Table3<Poly4, 4, 4, 4> four_torsion(const SForm& S, const MetricG& g) {
  Table3<Poly4, 4, 4, 4> T;
  Poly4 half(frac(-1, 2));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int m = 0; m < 4; ++m) T[a][b][m] = half * (S.mixed(m, a, b, g) - S.mixed(m, b, a, g));
  return T;
}

ConnectionH transform_H(const ConnectionH& H, const Matrix<Poly4>& L) {
  if (L.rows() != 5 || L.cols() != 5) throw std::invalid_argument("basis change must be 5x5");
  Matrix<Poly4> Li = inverse(L);
  // First contract H^D_{EF} L^E_B L^F_C into M^D_{BC}, adding d_F L^D_B L^F_C.
  Table3<Poly4, 5, 5, 5> M;
  Table3<Poly4, 5, 5, 5> HL;  // HL[D][E][C] = H^D_{EF} L^F_C
  for (int D = 0; D < 5; ++D)
    for (int E = 0; E < 5; ++E)
      for (int C = 0; C < 5; ++C) {
        Poly4 s;
        for (int F = 0; F < 5; ++F) {
          const Poly4& l = L(static_cast<std::size_t>(F), static_cast<std::size_t>(C));
          if (!l.is_zero() && !H(D, E, F).is_zero()) s += H(D, E, F) * l;
        }
        HL[D][E][C] = s;
      }
  for (int D = 0; D < 5; ++D)
    for (int B = 0; B < 5; ++B)
      for (int C = 0; C < 5; ++C) {
        Poly4 s;
        for (int E = 0; E < 5; ++E) {
          const Poly4& l = L(static_cast<std::size_t>(E), static_cast<std::size_t>(B));
          if (!l.is_zero() && !HL[D][E][C].is_zero()) s += HL[D][E][C] * l;
        }
        for (int F = 0; F < 4; ++F) {
          const Poly4& l = L(static_cast<std::size_t>(F), static_cast<std::size_t>(C));
          if (l.is_zero()) continue;
          Poly4 d = partial(L(static_cast<std::size_t>(D), static_cast<std::size_t>(B)), F);
          if (!d.is_zero()) s += d * l;
        }
        M[D][B][C] = s;
      }
  ConnectionH out;
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B)
      for (int C = 0; C < 5; ++C) {
        Poly4 s;
        for (int D = 0; D < 5; ++D) {
          const Poly4& l = Li(static_cast<std::size_t>(A), static_cast<std::size_t>(D));
          if (!l.is_zero() && !M[D][B][C].is_zero()) s += l * M[D][B][C];
        }
        out(A, B, C) = s;
      }
  return out;
}

SForm transform_S(const SForm& S, const Matrix<Poly4>& L) {
  for (int a = 0; a < 4; ++a)
    if (!L(static_cast<std::size_t>(a), 4).is_zero()) throw std::invalid_argument("basis change is not standard");
  Matrix<Poly4> Li = inverse(L);
  auto li = [&](int a, int b) -> const Poly4& { return Li(static_cast<std::size_t>(a), static_cast<std::size_t>(b)); };
  auto l = [&](int a, int b) -> const Poly4& { return L(static_cast<std::size_t>(a), static_cast<std::size_t>(b)); };
  Table3<Poly4, 4, 4, 5> lowered;  // s^{cd}_E L^E_C
  Table3<Poly4, 4, 4, 5> out;
  for (int c = 0; c < 4; ++c)
    for (int d = 0; d < 4; ++d)
      for (int C = 0; C < 5; ++C) {
        Poly4 s;
        for (int E = 0; E < 5; ++E)
          if (!S.up(c, d, E).is_zero() && !l(E, C).is_zero()) s += S.up(c, d, E) * l(E, C);
        lowered[c][d][C] = s;
      }
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int C = 0; C < 5; ++C) {
        Poly4 s;
        for (int c = 0; c < 4; ++c) {
          if (li(a, c).is_zero()) continue;
          for (int d = 0; d < 4; ++d)
            if (!li(b, d).is_zero() && !lowered[c][d][C].is_zero()) s += li(a, c) * li(b, d) * lowered[c][d][C];
        }
        out[a][b][C] = s;
      }
  return SForm(out);
}

namespace {

std::array<double, 4> curve_point(const Curve& c, double t) {
  std::array<double, 4> arg{t, 0, 0, 0}, p;
  for (int i = 0; i < 4; ++i) p[i] = c.x[i].eval(arg);
  return p;
}

std::array<double, 4> curve_velocity(const Curve& c, double t) {
  std::array<double, 4> arg{t, 0, 0, 0}, v;
  for (int i = 0; i < 4; ++i) v[i] = partial(c.x[i], 0).eval(arg);
  return v;
}

std::array<double, 5> rhs(const Curve& c, const FiveCoeffs& G, double t, const std::array<double, 5>& V) {
  FiveTable table = G(curve_point(c, t));
  std::array<double, 4> xd = curve_velocity(c, t);
  std::array<double, 5> out{};
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B)
      for (int mu = 0; mu < 4; ++mu) out[A] -= xd[mu] * table[A][B][mu] * V[B];
  return out;
}

std::array<double, 5> rk4(const std::array<double, 5>& u0, const Curve& c, const FiveCoeffs& G, int steps) {
  std::array<double, 5> V = u0;
  double h = (c.t1 - c.t0) / steps;
  auto axpy = [](const std::array<double, 5>& a, double s, const std::array<double, 5>& b) {
    std::array<double, 5> r;
    for (int i = 0; i < 5; ++i) r[i] = a[i] + s * b[i];
    return r;
  };
  for (int n = 0; n < steps; ++n) {
    double t = c.t0 + n * h;
    auto k1 = rhs(c, G, t, V);
    auto k2 = rhs(c, G, t + h / 2, axpy(V, h / 2, k1));
    auto k3 = rhs(c, G, t + h / 2, axpy(V, h / 2, k2));
    auto k4 = rhs(c, G, t + h, axpy(V, h, k3));
    for (int i = 0; i < 5; ++i) V[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  }
  return V;
}

}  // namespace

std::array<double, 5> transport_along(const std::array<double, 5>& u0, const Curve& curve, const FiveCoeffs& G,
                                      int steps) {
  if (steps < 4) throw std::invalid_argument("transport needs at least 4 steps");
  auto coarse = rk4(u0, curve, G, steps);
  auto fine = rk4(u0, curve, G, 2 * steps);
  std::array<double, 5> out;
  for (int i = 0; i < 5; ++i) out[i] = (16 * fine[i] - coarse[i]) / 15;
  return out;
}

std::array<double, 5> transport_along(const std::array<Rational, 5>& u0, const Curve& curve, const ConnectionG& G,
                                      int steps) {
  std::array<double, 5> v;
  for (int i = 0; i < 5; ++i) v[i] = u0[i].get_d();
  return transport_along(v, curve, numeric_coeffs(G), steps);
}

FiveCoeffs numeric_coeffs(const ConnectionG& G) {
  return [G](const std::array<double, 4>& x) {
    FiveTable t;
    for (int A = 0; A < 5; ++A)
      for (int B = 0; B < 5; ++B)
        for (int mu = 0; mu < 4; ++mu) t[A][B][mu] = G(A, B, mu).eval(x);
    return t;
  };
}

FiveCoeffs numeric_coeffs(const MetricG& g, const Rational& kappa, Normalization norm) {
  if (sgn(kappa) == 0) throw std::invalid_argument("kappa = 0: five-vectors are undefined");
  double scale = norm == Normalization::Normalized ? -kappa.get_d() : -1.0;
  return [g, scale](const std::array<double, 4>& x) {
    auto gamma = christoffel_numeric(g, x);
    FiveTable t{};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int mu = 0; mu < 4; ++mu) t[a][b][mu] = gamma[a][b][mu];
    for (int b = 0; b < 4; ++b)
      for (int mu = 0; mu < 4; ++mu) t[4][b][mu] = scale * g(b, mu).eval(x);
    return t;
  };
}

}  // namespace fv

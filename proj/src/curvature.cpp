#include "fivevec/curvature.hpp"

#include <cmath>
#include <stdexcept>

namespace fv {

namespace {

constexpr int k5 = 4;

std::size_t z(int i) { return static_cast<std::size_t>(i); }

Poly4 dC(const Poly4& f, int C) { return C == k5 ? Poly4() : partial(f, C); }

void curvature_block(const ConnectionH& H, int A, int B, CurvR& R) {
  for (int C = 0; C < 5; ++C)
    for (int D = C + 1; D < 5; ++D) {
      Poly4 v = dC(H(A, B, D), C) - dC(H(A, B, C), D);
      for (int K = 0; K < 5; ++K) {
        if (!H(A, K, C).is_zero() && !H(K, B, D).is_zero()) v += H(A, K, C) * H(K, B, D);
        if (!H(A, K, D).is_zero() && !H(K, B, C).is_zero()) v -= H(A, K, D) * H(K, B, C);
      }
      R.c[A][B][D][C] = -v;
      R.c[A][B][C][D] = std::move(v);
    }
}

Poly4 lower_s(const SForm& S, const MetricG& g, int s, int t) {
  // s_{st5} = g_{sa} g_{tb} s^{ab}_5
  Poly4 r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (!S.up(a, b, k5).is_zero() && !g(s, a).is_zero() && !g(t, b).is_zero()) r += g(s, a) * g(t, b) * S.up(a, b, k5);
  return r;
}

std::string gsym(int a, int b) { return "g" + std::to_string(a) + std::to_string(b); }
std::string ssym(int a, int b) { return "s" + std::to_string(a) + std::to_string(b); }

std::map<std::string, Poly4> l_add_values(const FieldEqInputs& in) {
  std::map<std::string, Poly4> v;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      v[gsym(a, b)] = in.g(a, b);
      v[ssym(a, b)] = in.S.up(a, b, k5);
    }
  v["a"] = Poly4(-in.varrho / (2 * in.k));
  v["h55"] = Poly4(Rational(in.h55_sign));
  return v;
}

}  // namespace

CurvR curvature_from_H_serial(const ConnectionH& H) {
  CurvR R;
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B) curvature_block(H, A, B, R);
  return R;
}

CurvR curvature_from_H(const ConnectionH& H) {
  CurvR R;
#pragma omp parallel for schedule(dynamic)
  for (int AB = 0; AB < 25; ++AB) curvature_block(H, AB / 5, AB % 5, R);
  return R;
}

CurvK build_K(const CurvR& R, const MetricG& g) {
  const Matrix<Poly4>& gi = g.inverse();
  CurvK K;
  for (int A = 0; A < 5; ++A)
    for (int b = 0; b < 4; ++b)
      for (int C = 0; C < 5; ++C)
        for (int D = 0; D < 5; ++D) {
          Poly4 v;
          for (int w = 0; w < 4; ++w)
            if (!gi(z(b), z(w)).is_zero() && !R.c[A][w][C][D].is_zero()) v += gi(z(b), z(w)) * R.c[A][w][C][D];
          K.c[A][b][C][D] = v;
        }
  // The a5 column comes from the 5b row by antisymmetry.
  for (int a = 0; a < 4; ++a)
    for (int C = 0; C < 5; ++C)
      for (int D = 0; D < 5; ++D) K.c[a][k5][C][D] = -K.c[k5][a][C][D];
  return K;
}

Poly4 curvature_scalar(const CurvK& K) {
  Poly4 r;
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B) r += K.c[A][B][A][B];
  return r;
}

bool curvature_metric_antisymmetric(const CurvR& R, const MetricG& g) {
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b)
      for (int C = 0; C < 5; ++C)
        for (int D = C + 1; D < 5; ++D) {
          Poly4 v;
          for (int w = 0; w < 4; ++w) v += g(a, w) * R.c[w][b][C][D] + g(b, w) * R.c[w][a][C][D];
          if (!v.is_zero()) return false;
        }
  return true;
}

Eq65Probe eq65_probe(const CurvR& R, const ConnectionH& H, const SForm& S, const MetricG& g) {
  Eq65Probe p;
  p.curvature_matches_direct = p.curvature_matches_printed = true;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int mu = 0; mu < 4; ++mu) {
        Poly4 common = -partial(S.mixed(a, b, k5, g), mu);
        Poly4 sH;
        for (int w = 0; w < 4; ++w) {
          common -= H(a, w, mu) * S.mixed(w, b, k5, g);
          sH += S.mixed(a, w, k5, g) * H(w, b, mu);
        }
        p.direct[a][b][mu] = common + sH;
        p.printed[a][b][mu] = common - sH;
        const Poly4& actual = R.c[a][b][mu][k5];
        if (actual != p.direct[a][b][mu]) p.curvature_matches_direct = false;
        if (actual != p.printed[a][b][mu]) p.curvature_matches_printed = false;
        if (!sH.is_zero()) p.discrepancy = true;
      }
  return p;
}

Matrix<Poly4> ricci(const CurvR& R) {
  Matrix<Poly4> ric(4, 4);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int a = 0; a < 4; ++a) ric(z(m), z(n)) += R.c[a][m][a][n];
  return ric;
}

Poly4 scalar_curvature(const CurvR& R, const MetricG& g) {
  const Matrix<Poly4>& gi = g.inverse();
  Matrix<Poly4> ric = ricci(R);
  Poly4 s;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      if (!gi(z(m), z(n)).is_zero()) s += gi(z(m), z(n)) * ric(z(m), z(n));
  return s;
}

Matrix<Poly4> einstein(const CurvR& R, const MetricG& g) {
  Matrix<Poly4> G = ricci(R);
  Poly4 half = Poly4(frac(1, 2)) * scalar_curvature(R, g);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) G(z(m), z(n)) -= g(m, n) * half;
  return G;
}

Table3<Poly4, 4, 4, 4> t_mod(const SForm& S, const MetricG& g) {
  const Matrix<Poly4>& gi = g.inverse();
  auto T = four_torsion(S, g);
  std::array<Poly4, 4> tr;
  for (int a = 0; a < 4; ++a)
    for (int r = 0; r < 4; ++r) tr[a] += T[a][r][r];
  // Lower-pair form L_{st}^n = T_{st}^n + d^n_s tr_t - d^n_t tr_s.
  Table3<Poly4, 4, 4, 4> low;
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t)
      for (int n = 0; n < 4; ++n) {
        low[s][t][n] = T[s][t][n];
        if (n == s) low[s][t][n] += tr[t];
        if (n == t) low[s][t][n] -= tr[s];
      }
  Table3<Poly4, 4, 4, 4> half{};  // g^{ms} L_{st}^n
  for (int m = 0; m < 4; ++m)
    for (int t = 0; t < 4; ++t)
      for (int n = 0; n < 4; ++n)
        for (int s = 0; s < 4; ++s)
          if (!gi(z(m), z(s)).is_zero() && !low[s][t][n].is_zero()) half[m][t][n] += gi(z(m), z(s)) * low[s][t][n];
  Table3<Poly4, 4, 4, 4> out{};
  for (int m = 0; m < 4; ++m)
    for (int o = 0; o < 4; ++o)
      for (int n = 0; n < 4; ++n)
        for (int t = 0; t < 4; ++t)
          if (!gi(z(o), z(t)).is_zero() && !half[m][t][n].is_zero()) out[m][o][n] += gi(z(o), z(t)) * half[m][t][n];
  return out;
}

Matrix<Poly4> divergence_identity_residual(const MetricG& g, const SForm& S) {
  FourConnection lc = christoffel(g);
  ConnectionH H = build_H(g, S, lc);
  auto Tm = t_mod(S, g);
  auto T = four_torsion(S, g);
  std::array<Poly4, 4> tr;
  for (int a = 0; a < 4; ++a)
    for (int r = 0; r < 4; ++r) tr[a] += T[a][r][r];
  // Pad to a five-tensor so the pentad derivative can act on it.
  Tensor5 up({true, true, true});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) up.at({i, j, k}) = Tm[i][j][k];
  Matrix<Poly4> div(4, 4);  // (div* T)^{pq}
  for (int a = 0; a < 4; ++a) {
    Tensor5 d = pentad_derivative(up, H, a);
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q) {
        div(z(p), z(q)) += d.at({p, q, a});
        if (!tr[a].is_zero()) div(z(p), z(q)) -= Poly4(2) * tr[a] * Tm[p][q][a];
      }
  }
  Matrix<Poly4> lowered = g.matrix() * div * g.matrix().transpose();
  CurvR R = curvature_from_H(H);
  Matrix<Poly4> G = einstein(R, g);
  Matrix<Poly4> anti = (G - G.transpose()).map([](const Poly4& p) { return p * Poly4(frac(1, 2)); });
  return lowered - anti;
}

bool FieldEqResiduals::all_zero() const {
  if (!R1.is_zero_matrix() || !R3.is_zero_matrix()) return false;
  for (const auto& p : R2)
    for (const auto& q : p)
      for (const auto& v : q)
        if (!v.is_zero()) return false;
  return true;
}

FieldEqResiduals field_eq_residuals(const FieldEqInputs& in) {
  if (sgn(in.epsilon()) == 0) throw std::invalid_argument("epsilon = varrho * sign h55 must be nonzero");
  const MetricG& g = in.g;
  FourConnection lc = christoffel(g);
  ConnectionH H = build_H(g, in.S, lc);
  CurvR R = curvature_from_H(H);
  Matrix<Poly4> G = einstein(R, g);

  Matrix<Poly4> Xup(4, 4), Xlow(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Xup(z(a), z(b)) = in.S.up(a, b, k5);
      Xlow(z(a), z(b)) = lower_s(in.S, g, a, b);
    }
  Poly4 XX;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (!Xlow(z(a), z(b)).is_zero()) XX += Xlow(z(a), z(b)) * Xup(z(a), z(b));

  FieldEqResiduals out;
  Poly4 coeff = Poly4(in.epsilon() / 2) * XX;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      out.R1(z(m), z(n)) = G(z(m), z(n)) - g(m, n) * coeff - Poly4(in.k) * in.Theta(z(m), z(n));

  auto T = four_torsion(in.S, g);
  std::array<Poly4, 4> tr;
  for (int a = 0; a < 4; ++a)
    for (int r = 0; r < 4; ++r) tr[a] += T[a][r][r];
  Poly4 half_k(in.k / 2);
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        Poly4 v = T[m][n][a] + half_k * in.Sigma[a][m][n];
        if (a == m) v += tr[n];
        if (a == n) v -= tr[m];
        out.R2[a][m][n] = v;
      }

  Poly4 xi_coeff(in.k / (2 * in.epsilon()));
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) out.R3(z(m), z(n)) = Xlow(z(m), z(n)) + xi_coeff * in.Xi(z(m), z(n));
  return out;
}

FormalPoly l_add_formal() {
  FormalPoly sum;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t)
          sum += FormalPoly::symbol(gsym(a, s)) * FormalPoly::symbol(gsym(b, t)) * FormalPoly::symbol(ssym(a, b)) *
                 FormalPoly::symbol(ssym(s, t));
  return FormalPoly::symbol("a") * FormalPoly::symbol("h55") * sum;
}

Poly4 l_add_value(const FieldEqInputs& in) { return l_add_formal().substitute(l_add_values(in)); }

bool ConsistencyReport::eq79_ok() const {
  for (const auto& p : eq79)
    if (!p.is_zero()) return false;
  return true;
}

Matrix<Poly4> m5_from_s(const FieldEqInputs& in) {
  Rational a = -in.varrho / (2 * in.k);
  Matrix<Poly4> M(4, 4);
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) M(z(s), z(t)) = Poly4(4 * a * in.h55_sign) * lower_s(in.S, in.g, s, t);
  return M;
}

ConsistencyReport check_consistency_identities(const FieldEqInputs& in, const Matrix<Poly4>& M5) {
  const MetricG& g = in.g;
  const Matrix<Poly4>& gi = g.inverse();
  Rational a = -in.varrho / (2 * in.k);
  Poly4 half(frac(1, 2));
  ConsistencyReport rep;

  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t)
      rep.eq81(z(s), z(t)) = Poly4(2 * a * in.h55_sign) * lower_s(in.S, g, s, t) - half * M5(z(s), z(t));

  FormalPoly L = l_add_formal();
  auto values = l_add_values(in);
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t)
      rep.eq72(z(s), z(t)) = L.derivative(ssym(s, t)).substitute(values) - half * M5(z(s), z(t));

  // Commutator of A^m_n = g^{ms} M5_{sn} and B^m_n = s^m_{n5}.
  Matrix<Poly4> A = gi * M5, B(4, 4);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) B(z(m), z(n)) = in.S.mixed(m, n, k5, g);
  rep.eq78 = A * B - B * A;

  FourConnection lc = christoffel(g);
  ConnectionH H = build_H(g, in.S, lc);
  Poly4 Lv = L.substitute(values);
  for (int mu = 0; mu < 4; ++mu) {
    Poly4 rhs;
    for (int s = 0; s < 4; ++s)
      for (int t = 0; t < 4; ++t) {
        if (M5(z(s), z(t)).is_zero()) continue;
        Poly4 brace = partial(in.S.up(s, t, k5), mu);
        for (int w = 0; w < 4; ++w) {
          if (!H(s, w, mu).is_zero()) brace += H(s, w, mu) * in.S.up(w, t, k5);
          if (!H(t, w, mu).is_zero()) brace += H(t, w, mu) * in.S.up(s, w, k5);
        }
        rhs += brace * M5(z(s), z(t));
      }
    rep.eq79[mu] = partial(Lv, mu) - half * rhs;
  }

  // M^{nt5} = g^{na} g^{tb} M5_{ab}
  Matrix<Poly4> Mup = gi * M5 * gi.transpose();
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      Poly4 lhs = half * (L.derivative(gsym(m, n)).substitute(values) + L.derivative(gsym(n, m)).substitute(values));
      Poly4 rhs;  // -(1/2) g_{st} s^{s{m} M^{n}t5}
      for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t) {
          if (g(s, t).is_zero()) continue;
          Poly4 sym = in.S.up(s, m, k5) * Mup(z(n), z(t)) + in.S.up(s, n, k5) * Mup(z(m), z(t));
          if (!sym.is_zero()) rhs += g(s, t) * sym;
        }
      rep.eq75(z(m), z(n)) = lhs + Poly4(frac(1, 4)) * rhs;
    }
  return rep;
}

ConnectionG spacetime_part(const ConnectionH& H) {
  ConnectionG G;
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B)
      for (int mu = 0; mu < 4; ++mu) G(A, B, mu) = H(A, B, mu);
  return G;
}

namespace {

using Mat5d = std::array<std::array<double, 5>, 5>;

// Transport every column of M along the straight segment from p to q.
Mat5d transport_segment(const Mat5d& M, const std::array<double, 4>& p, const std::array<double, 4>& q,
                        const FiveCoeffs& G, int steps) {
  std::array<double, 4> dir;
  for (int i = 0; i < 4; ++i) dir[i] = q[i] - p[i];
  auto rhs = [&](double t, const Mat5d& V) {
    std::array<double, 4> x;
    for (int i = 0; i < 4; ++i) x[i] = p[i] + t * dir[i];
    FiveTable tab = G(x);
    Mat5d out{};
    for (int A = 0; A < 5; ++A)
      for (int B = 0; B < 5; ++B) {
        double c = 0;
        for (int mu = 0; mu < 4; ++mu) c += dir[mu] * tab[A][B][mu];
        if (c == 0) continue;
        for (int col = 0; col < 5; ++col) out[A][col] -= c * V[B][col];
      }
    return out;
  };
  auto axpy = [](const Mat5d& a, double s, const Mat5d& b) {
    Mat5d r;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) r[i][j] = a[i][j] + s * b[i][j];
    return r;
  };
  Mat5d V = M;
  double h = 1.0 / steps;
  for (int n = 0; n < steps; ++n) {
    double t = n * h;
    Mat5d k1 = rhs(t, V), k2 = rhs(t + h / 2, axpy(V, h / 2, k1)), k3 = rhs(t + h / 2, axpy(V, h / 2, k2)),
          k4 = rhs(t + h, axpy(V, h, k3));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) V[i][j] += h / 6 * (k1[i][j] + 2 * k2[i][j] + 2 * k3[i][j] + k4[i][j]);
  }
  return V;
}

Mat5d loop_estimate(const FiveCoeffs& G, int mu, int nu, double eps, const std::array<double, 4>& base) {
  Mat5d M{};
  for (int i = 0; i < 5; ++i) M[i][i] = 1;
  std::array<double, 4> p1 = base, p2, p3;
  p1[mu] += eps;
  p2 = p1;
  p2[nu] += eps;
  p3 = base;
  p3[nu] += eps;
  const int steps = 16;
  M = transport_segment(M, base, p1, G, steps);
  M = transport_segment(M, p1, p2, G, steps);
  M = transport_segment(M, p2, p3, G, steps);
  M = transport_segment(M, p3, base, G, steps);
  for (int i = 0; i < 5; ++i) {
    M[i][i] -= 1;
    for (int j = 0; j < 5; ++j) M[i][j] /= -(eps * eps);
  }
  return M;
}

}  // namespace

std::array<std::array<double, 5>, 5> holonomy_oracle(const ConnectionG& G, int mu, int nu, double eps, const Point4& base) {
  if (mu == nu || mu < 0 || mu > 3 || nu < 0 || nu > 3) throw std::invalid_argument("holonomy loop needs two distinct axes");
  if (!(eps > 0) || eps > 0.1) throw std::invalid_argument("holonomy eps must lie in (0, 0.1] for the convergence check");
  FiveCoeffs coeffs = numeric_coeffs(G);
  std::array<double, 4> b{base[0].get_d(), base[1].get_d(), base[2].get_d(), base[3].get_d()};
  // The loop estimate carries O(eps) and O(eps^2) errors; remove both.
  Mat5d e1 = loop_estimate(coeffs, mu, nu, eps, b), e2 = loop_estimate(coeffs, mu, nu, eps / 2, b),
        e4 = loop_estimate(coeffs, mu, nu, eps / 4, b);
  Mat5d out;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) out[i][j] = (e1[i][j] - 6 * e2[i][j] + 8 * e4[i][j]) / 3;
  return out;
}

}  // namespace fv

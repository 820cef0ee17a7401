#include "fivevec/bivder.hpp"

#include <stdexcept>

#include "fivevec/sampling.hpp"

namespace fv {

namespace {

constexpr int k5 = 4;

std::size_t z(int i) { return static_cast<std::size_t>(i); }

void require_four(const FourVecField& U) {
  if (U.basis != "E") throw BasisMismatch("bivector derivative expects the associated four-basis E, got " + U.basis);
}

}  // namespace

Matrix<Poly4> m_four(const MetricG& g, int mu, int nu) {
  Matrix<Poly4> m(4, 4);
  for (int b = 0; b < 4; ++b) {
    m(z(nu), z(b)) += g(mu, b);
    m(z(mu), z(b)) -= g(nu, b);
  }
  return m;
}

Matrix<Poly4> m_five(const MetricG& g, int K, int L) {
  Matrix<Poly4> m(5, 5);
  for (int B = 0; B < 5; ++B) {
    m(z(L), z(B)) += g.five(K, B);
    m(z(K), z(B)) -= g.five(L, B);
  }
  return m;
}

BivCoeffs4 biv_coeffs_four(const MetricG& g, const FourConnection& four) {
  BivCoeffs4 out;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int a = 0; a < 4; ++a) {
        out.c[m][n][a][k5] = four(m, n, a);
        out.c[m][n][k5][a] = -four(m, n, a);
      }
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == b) continue;
      Matrix<Poly4> M = m_four(g, a, b);
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) out.c[m][n][a][b] = M(z(m), z(n));
    }
  return out;
}

BivCoeffs5 biv_coeffs_five(const MetricG& g, const FourConnection& four) {
  BivCoeffs5 out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int mu = 0; mu < 4; ++mu) {
        out.c[a][b][mu][k5] = four(a, b, mu);
        out.c[a][b][k5][mu] = -four(a, b, mu);
      }
  for (int b = 0; b < 4; ++b)
    for (int mu = 0; mu < 4; ++mu) {
      out.c[k5][b][mu][k5] = -g(b, mu);
      out.c[k5][b][k5][mu] = g(b, mu);
    }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      if (mu == nu) continue;
      Matrix<Poly4> M = m_five(g, mu, nu);
      for (int A = 0; A < 5; ++A)
        for (int B = 0; B < 5; ++B) out.c[A][B][mu][nu] = M(z(A), z(B));
    }
  return out;
}

Poly4 D_basis_scalar(int K, int L, const Poly4& f) {
  if (L == k5 && K < k5) return partial(f, K);
  if (K == k5 && L < k5) return -partial(f, L);
  return Poly4();
}

Poly4 D_scalar(const Bivector5Field& A, const Poly4& f) {
  Poly4 r;
  for (int a = 0; a < 4; ++a)
    if (!A(a, k5).is_zero()) r += A(a, k5) * partial(f, a);
  return r;
}

FourVecField D_fourvec(const Bivector5Field& A, const FourVecField& U, const MetricG& g,
                       const FourConnection& levi_civita) {
  require_four(U);
  FourVecField out;
  for (int a = 0; a < 4; ++a) {
    Poly4 r;
    for (int mu = 0; mu < 4; ++mu) {
      if (A(mu, k5).is_zero()) continue;
      Poly4 cov = partial(U.c[a], mu);
      for (int b = 0; b < 4; ++b) cov += levi_civita(a, b, mu) * U.c[b];
      r += A(mu, k5) * cov;
    }
    out.c[a] = r;
  }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      if (A(mu, nu).is_zero()) continue;
      Matrix<Poly4> M = m_four(g, mu, nu);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          if (!M(z(a), z(b)).is_zero()) out.c[a] += A(mu, nu) * M(z(a), z(b)) * U.c[b];
    }
  return out;
}

FourVecField D_fourvec(const Bivector5Field& A, const FourVecField& U, const MetricG& g) {
  return D_fourvec(A, U, g, christoffel(g));
}

FourVecField D_fourvec(const Bivector5Field& A, const FourVecField& U, const BivCoeffs4& coeffs) {
  require_four(U);
  FourVecField out;
  for (int K = 0; K < 5; ++K)
    for (int L = K + 1; L < 5; ++L) {
      if (A(K, L).is_zero()) continue;
      for (int n = 0; n < 4; ++n) {
        Poly4 r = D_basis_scalar(K, L, U.c[n]);
        for (int m = 0; m < 4; ++m)
          if (!coeffs.c[n][m][K][L].is_zero()) r += coeffs.c[n][m][K][L] * U.c[m];
        out.c[n] += A(K, L) * r;
      }
    }
  return out;
}

FiveVecField D_fivevec(const Bivector5Field& A, const FiveVecField& u, const MetricG& g,
                       const FourConnection& levi_civita) {
  ConnectionG G = build_G(g, 1, levi_civita, Normalization::Active);
  FiveVecField out{{}, u.basis};
  for (int mu = 0; mu < 4; ++mu) {
    if (A(mu, k5).is_zero()) continue;
    FiveVecField d = nabla_five(u, G, mu);
    for (int B = 0; B < 5; ++B) out.c[B] += A(mu, k5) * d.c[B];
  }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      if (A(mu, nu).is_zero()) continue;
      Matrix<Poly4> M = m_five(g, mu, nu);
      for (int B = 0; B < 5; ++B)
        for (int C = 0; C < 5; ++C)
          if (!M(z(B), z(C)).is_zero()) out.c[B] += A(mu, nu) * M(z(B), z(C)) * u.c[C];
    }
  return out;
}

FiveVecField D_fivevec(const Bivector5Field& A, const FiveVecField& u, const MetricG& g) {
  return D_fivevec(A, u, g, christoffel(g));
}

FiveVecField D_fivevec(const Bivector5Field& A, const FiveVecField& u, const BivCoeffs5& coeffs) {
  FiveVecField out{{}, u.basis};
  for (int K = 0; K < 5; ++K)
    for (int L = K + 1; L < 5; ++L) {
      if (A(K, L).is_zero()) continue;
      for (int B = 0; B < 5; ++B) {
        Poly4 r = D_basis_scalar(K, L, u.c[B]);
        for (int C = 0; C < 5; ++C)
          if (!coeffs.c[B][C][K][L].is_zero()) r += coeffs.c[B][C][K][L] * u.c[C];
        out.c[B] += A(K, L) * r;
      }
    }
  return out;
}

Tensor4::Tensor4(std::vector<bool> variance) : upper(std::move(variance)) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < upper.size(); ++i) n *= 4;
  data.assign(n, Poly4());
}

Tensor4 Tensor4::metric(const MetricG& g) {
  Tensor4 t({false, false});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t.at({a, b}) = g(a, b);
  return t;
}

Poly4& Tensor4::at(const std::vector<int>& idx) {
  return const_cast<Poly4&>(static_cast<const Tensor4&>(*this).at(idx));
}

const Poly4& Tensor4::at(const std::vector<int>& idx) const {
  if (idx.size() != upper.size()) throw std::invalid_argument("tensor index rank mismatch");
  std::size_t flat = 0;
  for (int i : idx) {
    if (i < 0 || i > 3) throw std::out_of_range("four-index out of range");
    flat = flat * 4 + static_cast<std::size_t>(i);
  }
  return data[flat];
}

bool Tensor4::is_zero() const {
  for (const auto& p : data)
    if (!p.is_zero()) return false;
  return true;
}

namespace {

// Leibniz action of D along a bivector for a tensor with slot dimension dim.
template <typename Tensor, typename Coeff>
Tensor leibniz(const Bivector5Field& A, const Tensor& T, int dim, Coeff coeff) {
  Tensor out(T.upper);
  const std::size_t r = T.upper.size();
  std::vector<int> idx(r), src(r);
  for (std::size_t flat = 0; flat < T.data.size(); ++flat) {
    std::size_t rem = flat;
    for (std::size_t k = r; k-- > 0;) {
      idx[k] = static_cast<int>(rem % static_cast<std::size_t>(dim));
      rem /= static_cast<std::size_t>(dim);
    }
    Poly4 v;
    for (int K = 0; K < 5; ++K)
      for (int L = K + 1; L < 5; ++L) {
        if (A(K, L).is_zero()) continue;
        Poly4 term = D_basis_scalar(K, L, T.data[flat]);
        for (std::size_t k = 0; k < r; ++k) {
          src = idx;
          for (int m = 0; m < dim; ++m) {
            src[k] = m;
            const Poly4& t = T.at(src);
            if (t.is_zero()) continue;
            const Poly4& c = T.upper[k] ? coeff(idx[k], m, K, L) : coeff(m, idx[k], K, L);
            if (c.is_zero()) continue;
            if (T.upper[k])
              term += c * t;
            else
              term -= c * t;
          }
        }
        v += A(K, L) * term;
      }
    out.data[flat] = v;
  }
  return out;
}

}  // namespace

Tensor4 D_tensor(const Bivector5Field& A, const Tensor4& T, const BivCoeffs4& coeffs) {
  return leibniz(A, T, 4, [&](int a, int b, int K, int L) -> const Poly4& { return coeffs.c[a][b][K][L]; });
}

Tensor5 D_tensor(const Bivector5Field& A, const Tensor5& T, const BivCoeffs5& coeffs) {
  return leibniz(A, T, 5, [&](int a, int b, int K, int L) -> const Poly4& { return coeffs.c[a][b][K][L]; });
}

Bivector5Field sigma(const FiveVecField& u, const SForm& S) {
  Mat5P m{};
  for (int a = 0; a < 4; ++a) {
    m[a][k5] = u.c[a];
    m[k5][a] = -u.c[a];
    for (int b = 0; b < 4; ++b)
      for (int C = 0; C < 5; ++C)
        if (!S.up(a, b, C).is_zero()) m[a][b] += S.up(a, b, C) * u.c[C];
  }
  return Bivector5Field(m);
}

Eq57Report check_eq57(const ConnectionH& H, const MetricG& g, const SForm& S, const FourConnection& levi_civita,
                      FieldKind kind, std::uint64_t seed, int samples) {
  Sampler gen(seed);
  Eq57Report rep;
  rep.field = kind == FieldKind::Scalar ? "scalar" : kind == FieldKind::Four ? "four-vector" : "five-vector";
  for (int s = 0; s < samples; ++s) {
    FiveVecField u;
    for (auto& c : u.c) c = gen.poly(1, 2);
    Bivector5Field su = sigma(u, S);
    bool ok = true;
    if (kind == FieldKind::Scalar) {
      Poly4 f = gen.poly(2, 3), lhs;
      for (int mu = 0; mu < 4; ++mu) lhs += u.c[mu] * partial(f, mu);
      ok = lhs == D_scalar(su, f);
    } else {
      FiveVecField v;
      for (int A = 0; A < (kind == FieldKind::Four ? 4 : 5); ++A) v.c[A] = gen.poly(1, 2);
      FiveVecField lhs;
      for (int C = 0; C < 5; ++C) {
        if (u.c[C].is_zero()) continue;
        FiveVecField d = pentad_derivative(v, H, C);
        for (int A = 0; A < 5; ++A) lhs.c[A] += u.c[C] * d.c[A];
      }
      if (kind == FieldKind::Four) {
        FourVecField V;
        for (int a = 0; a < 4; ++a) V.c[a] = v.c[a];
        FourVecField rhs = D_fourvec(su, V, g, levi_civita);
        for (int a = 0; a < 4; ++a) ok = ok && lhs.c[a] == rhs.c[a];
      } else {
        ok = lhs == D_fivevec(su, v, g, levi_civita);
      }
    }
    ++rep.samples;
    if (!ok) ++rep.failures;
  }
  return rep;
}

BivCoeffs4 transform_biv_coeffs(const BivCoeffs4& coeffs, const Matrix<Poly4>& Lambda4, const Matrix<Poly4>& L5) {
  if (Lambda4.rows() != 4 || Lambda4.cols() != 4 || L5.rows() != 5 || L5.cols() != 5)
    throw std::invalid_argument("transform_biv_coeffs: expected 4x4 and 5x5 matrices");
  Matrix<Poly4> Li = inverse(Lambda4);
  inverse(L5);  // rejects singular five-basis changes
  // First transform the bivector pair: X^s_{t AB} = (Gamma^s_{t ST} + D_ST acting) L^S_A L^T_B.
  Table4<Poly4, 4, 4, 5, 5> inner{};
  for (int s = 0; s < 4; ++s)
    for (int n = 0; n < 4; ++n)
      for (int S = 0; S < 5; ++S)
        for (int T = 0; T < 5; ++T) {
          if (S == T) continue;
          Poly4 v;
          for (int t = 0; t < 4; ++t)
            if (!coeffs.c[s][t][S][T].is_zero() && !Lambda4(z(t), z(n)).is_zero())
              v += coeffs.c[s][t][S][T] * Lambda4(z(t), z(n));
          v += D_basis_scalar(S, T, Lambda4(z(s), z(n)));
          inner[s][n][S][T] = v;
        }
  Table4<Poly4, 4, 4, 5, 5> paired{};
  for (int s = 0; s < 4; ++s)
    for (int n = 0; n < 4; ++n)
      for (int A = 0; A < 5; ++A)
        for (int B = 0; B < 5; ++B) {
          Poly4 v;
          for (int S = 0; S < 5; ++S) {
            if (L5(z(S), z(A)).is_zero()) continue;
            for (int T = 0; T < 5; ++T)
              if (!inner[s][n][S][T].is_zero() && !L5(z(T), z(B)).is_zero())
                v += inner[s][n][S][T] * L5(z(S), z(A)) * L5(z(T), z(B));
          }
          paired[s][n][A][B] = v;
        }
  BivCoeffs4 out;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int A = 0; A < 5; ++A)
        for (int B = 0; B < 5; ++B) {
          Poly4 v;
          for (int s = 0; s < 4; ++s)
            if (!Li(z(m), z(s)).is_zero() && !paired[s][n][A][B].is_zero()) v += Li(z(m), z(s)) * paired[s][n][A][B];
          out.c[m][n][A][B] = v;
        }
  return out;
}

}  // namespace fv

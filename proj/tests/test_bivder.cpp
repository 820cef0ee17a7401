#include <gtest/gtest.h>

#include "fivevec/bivder.hpp"
#include "fivevec/frames.hpp"
#include "generators.hpp"

using namespace fv;
using fvtest::frame_metric;
using fvtest::Gen;
using fvtest::random_sform;

namespace {

Poly4 x(int i) { return Poly4::var(i); }
MetricG eta() { return MetricG::minkowski(); }
std::size_t z(int i) { return static_cast<std::size_t>(i); }

Bivector5Field eb(int K, int L) { return Bivector5Field::basis(K, L); }

Bivector5Field scaled(const Bivector5Field& A, const Poly4& f) {
  Mat5P m = A.components();
  for (auto& row : m)
    for (auto& v : row) v *= f;
  return Bivector5Field(m);
}

Bivector5Field random_biv(Gen& g) {
  Mat5P m{};
  for (int K = 0; K < 5; ++K)
    for (int L = K + 1; L < 5; ++L) {
      m[K][L] = g.poly(1, 2);
      m[L][K] = -m[K][L];
    }
  return Bivector5Field(m);
}

FourVecField random_four(Gen& g) {
  FourVecField U;
  for (auto& c : U.c) c = g.poly(2, 3);
  return U;
}

FiveVecField random_five(Gen& g) {
  FiveVecField u;
  for (auto& c : u.c) c = g.poly(2, 3);
  return u;
}

FourVecField E(int a) {
  FourVecField U;
  U.c[a] = 1;
  return U;
}

FiveVecField e(int A) {
  FiveVecField u;
  u.c[A] = 1;
  return u;
}

// p_A expressed in the O-basis.
FiveVecField p(int A) {
  FiveVecField u = e(A);
  if (A < 4) u.c[kFive] = (A == 0 ? Poly4(1) : Poly4(-1)) * x(A);
  return u;
}

Poly4 pair_g(const MetricG& g, const FourVecField& U, const FourVecField& V) {
  Poly4 r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (!g(a, b).is_zero()) r += g(a, b) * U.c[a] * V.c[b];
  return r;
}

}  // namespace

TEST(Bivder, MHatAntisymmetry) {
  MetricG g = frame_metric();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Matrix<Poly4> M = m_four(g, mu, nu), Mt = m_four(g, nu, mu);
      EXPECT_EQ(M + Mt, Matrix<Poly4>(4, 4));
      Matrix<Poly4> low = g.matrix() * M;
      EXPECT_EQ(low + low.transpose(), Matrix<Poly4>(4, 4));
      Matrix<Poly4> M5 = m_five(g, mu, nu);
      for (int A = 0; A < 5; ++A) EXPECT_TRUE(M5(z(A), 4).is_zero());
    }
  Matrix<Poly4> M5 = m_five(eta(), 0, kFive);
  EXPECT_EQ(M5(4, 0), Poly4(1));
}

TEST(Bivder, Scalar) {
  Gen g(61);
  Poly4 f = g.poly(3, 4);
  for (int mu = 0; mu < 4; ++mu) {
    EXPECT_EQ(D_scalar(eb(mu, kFive), f), partial(f, mu));
    for (int nu = 0; nu < 4; ++nu) EXPECT_TRUE(D_scalar(eb(mu, nu), f).is_zero());
    EXPECT_EQ(D_scalar(wedge(p(mu), p(kFive)), f), partial(f, mu));
  }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Poly4 xl_mu = (mu == 0 ? Poly4(1) : Poly4(-1)) * x(mu), xl_nu = (nu == 0 ? Poly4(1) : Poly4(-1)) * x(nu);
      EXPECT_EQ(D_scalar(wedge(p(mu), p(nu)), f), xl_nu * partial(f, mu) - xl_mu * partial(f, nu));
    }
}

TEST(Bivder, FourVectorFlat) {
  for (int mu = 0; mu < 4; ++mu)
    for (int a = 0; a < 4; ++a) {
      FourVecField d = D_fourvec(eb(mu, kFive), E(a), eta());
      for (const auto& c : d.c) EXPECT_TRUE(c.is_zero());
      for (int nu = 0; nu < 4; ++nu) {
        Matrix<Poly4> M = m_four(eta(), mu, nu);
        FourVecField r = D_fourvec(eb(mu, nu), E(a), eta());
        for (int b = 0; b < 4; ++b) EXPECT_EQ(r.c[b], M(z(b), z(a)));
        // p-basis bivectors act on constant Lorentz frames as the e-basis ones.
        EXPECT_EQ(D_fourvec(wedge(p(mu), p(nu)), E(a), eta()), r);
      }
      EXPECT_EQ(D_fourvec(wedge(p(mu), p(kFive)), E(a), eta()), d);
    }
  // Rotation and translation generators on a general field.
  Gen g(62);
  for (int trial = 0; trial < 3; ++trial) {
    FourVecField U = random_four(g);
    for (int mu = 0; mu < 4; ++mu) {
      FourVecField P = D_fourvec(wedge(p(mu), p(kFive)), U, eta());
      for (int a = 0; a < 4; ++a) EXPECT_EQ(P.c[a], partial(U.c[a], mu));
      for (int nu = 0; nu < 4; ++nu) {
        FourVecField Mu = D_fourvec(wedge(p(mu), p(nu)), U, eta());
        Matrix<Poly4> M = m_four(eta(), mu, nu);
        Poly4 xl_mu = (mu == 0 ? Poly4(1) : Poly4(-1)) * x(mu), xl_nu = (nu == 0 ? Poly4(1) : Poly4(-1)) * x(nu);
        for (int a = 0; a < 4; ++a) {
          Poly4 expect = xl_nu * partial(U.c[a], mu) - xl_mu * partial(U.c[a], nu);
          for (int b = 0; b < 4; ++b) expect += M(z(a), z(b)) * U.c[b];
          EXPECT_EQ(Mu.c[a], expect);
        }
      }
    }
  }
}

TEST(Bivder, FourVectorFormalProperties) {
  Gen g(63);
  MetricG metric = frame_metric();
  FourConnection lc = christoffel(metric);
  BivCoeffs4 coeffs = biv_coeffs_four(metric, lc);
  for (int trial = 0; trial < 3; ++trial) {
    Bivector5Field A = random_biv(g), B = random_biv(g);
    FourVecField U = random_four(g), V = random_four(g);
    Poly4 f = g.poly(1, 2), h = g.poly(1, 2);
    EXPECT_EQ(D_fourvec(A, U, metric, lc), D_fourvec(A, U, coeffs));
    // Linearity in the bivector over functions.
    FourVecField lhs = D_fourvec(scaled(A, f) + scaled(B, h), U, metric, lc);
    FourVecField a = D_fourvec(A, U, metric, lc), b = D_fourvec(B, U, metric, lc);
    for (int i = 0; i < 4; ++i) EXPECT_EQ(lhs.c[i], f * a.c[i] + h * b.c[i]);
    // Additivity in the field.
    FourVecField sum;
    for (int i = 0; i < 4; ++i) sum.c[i] = U.c[i] + V.c[i];
    FourVecField ds = D_fourvec(A, sum, metric, lc), dv = D_fourvec(A, V, metric, lc);
    for (int i = 0; i < 4; ++i) EXPECT_EQ(ds.c[i], a.c[i] + dv.c[i]);
    // Leibniz over f U.
    FourVecField fU;
    for (int i = 0; i < 4; ++i) fU.c[i] = f * U.c[i];
    FourVecField dfU = D_fourvec(A, fU, metric, lc);
    Poly4 df = D_scalar(A, f);
    for (int i = 0; i < 4; ++i) EXPECT_EQ(dfU.c[i], df * U.c[i] + f * a.c[i]);
    // Compatibility with g.
    EXPECT_EQ(D_scalar(A, pair_g(metric, U, V)), pair_g(metric, a, V) + pair_g(metric, U, dv));
  }
  FourVecField other = E(0);
  other.basis = "F";
  EXPECT_THROW(D_fourvec(eb(0, 1), other, eta()), BasisMismatch);
}

TEST(Bivder, MetricIsBivectorConstant) {
  Gen g(64);
  for (const MetricG& metric : {eta(), frame_metric()}) {
    FourConnection lc = christoffel(metric);
    BivCoeffs4 c4 = biv_coeffs_four(metric, lc);
    BivCoeffs5 c5 = biv_coeffs_five(metric, lc);
    for (int trial = 0; trial < 3; ++trial) {
      Bivector5Field A = random_biv(g);
      EXPECT_TRUE(D_tensor(A, Tensor4::metric(metric), c4).is_zero());
      EXPECT_TRUE(D_tensor(A, Tensor5::metric(metric), c5).is_zero());
    }
  }
}

TEST(Bivder, FiveVector) {
  BivCoeffs5 flat = biv_coeffs_five(eta(), christoffel(eta()));
  for (int mu = 0; mu < 4; ++mu) {
    Matrix<Poly4> M = m_five(eta(), mu, kFive);
    for (int A = 0; A < 5; ++A)
      for (int B = 0; B < 5; ++B) EXPECT_EQ(flat.c[A][B][mu][kFive], -M(z(A), z(B)));
    for (int b = 0; b < 4; ++b) EXPECT_EQ(flat.c[kFive][b][mu][kFive], -eta()(b, mu));
    for (int nu = 0; nu < 4; ++nu) {
      FiveVecField r = D_fivevec(eb(mu, nu), e(kFive), eta());
      for (const auto& c : r.c) EXPECT_TRUE(c.is_zero());
    }
  }
  Gen g(65);
  MetricG metric = frame_metric();
  FourConnection lc = christoffel(metric);
  BivCoeffs5 c5 = biv_coeffs_five(metric, lc);
  for (int A = 0; A < 5; ++A)
    for (int mu = 0; mu < 4; ++mu) EXPECT_TRUE(c5.c[A][kFive][mu][kFive].is_zero());
  for (int trial = 0; trial < 3; ++trial) {
    Bivector5Field A = random_biv(g);
    FiveVecField u = random_five(g);
    EXPECT_EQ(D_fivevec(A, u, metric, lc), D_fivevec(A, u, c5));
  }
}

TEST(Bivder, Sigma) {
  SForm S;
  for (int mu = 0; mu < 4; ++mu) EXPECT_EQ(sigma(e(mu), S), eb(mu, kFive));
  EXPECT_EQ(sigma(e(kFive), S), Bivector5Field());
  S.set(0, 1, 2, Poly4(1));
  EXPECT_EQ(sigma(e(2), S), eb(0, 1) + eb(2, kFive));
}

TEST(Bivder, Eq57) {
  Gen g(66);
  FourConnection flat_lc = christoffel(eta());
  ConnectionH flatH = build_H(eta(), SForm(), flat_lc);
  for (FieldKind k : {FieldKind::Scalar, FieldKind::Four, FieldKind::Five})
    EXPECT_TRUE(check_eq57(flatH, eta(), SForm(), flat_lc, k, 1).ok());

  MetricG metric = frame_metric();
  FourConnection lc = christoffel(metric);
  EXPECT_TRUE(check_eq57(build_H(metric, SForm(), lc), metric, SForm(), lc, FieldKind::Four, 2).ok());
  SForm S = random_sform(g, 1, 2);
  ConnectionH H = build_H(metric, S, lc);
  for (FieldKind k : {FieldKind::Scalar, FieldKind::Four, FieldKind::Five}) {
    Eq57Report r = check_eq57(H, metric, S, lc, k, 3);
    EXPECT_TRUE(r.ok()) << r.field;
    EXPECT_EQ(r.samples, 4);
  }
  // A mismatched S-form breaks the bridge.
  SForm wrong = random_sform(g, 1, 2);
  EXPECT_FALSE(check_eq57(H, metric, wrong, lc, FieldKind::Four, 4).ok());
}

TEST(Bivder, TransformCoefficients) {
  BivCoeffs4 flat = biv_coeffs_four(eta(), christoffel(eta()));
  Matrix<Poly4> I4 = lift(Matrix<Rational>::identity(4)), I5 = lift(Matrix<Rational>::identity(5));
  EXPECT_EQ(transform_biv_coeffs(flat, I4, I5), flat);

  Gen g(67);
  for (int trial = 0; trial < 3; ++trial) {
    LorentzChart c(g.pseudo_orthogonal({1, -1, -1, -1}), g.point());
    Matrix<Rational> L = o_basis_change(c);
    Matrix<Rational> Li(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) Li(i, j) = L(i, j);
    EXPECT_EQ(transform_biv_coeffs(flat, lift(Li), lift(L)), flat);
  }

  // A non-holonomic four-basis E' = E Lambda(x) with the matching active regular five-basis.
  Matrix<Poly4> Lam = I4;
  Lam(0, 1) = x(2);
  Lam(3, 2) = x(0);
  Matrix<Poly4> L5 = I5;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) L5(i, j) = Lam(i, j);
  MetricG gp(Lam.transpose() * eta().matrix() * Lam);
  Matrix<Poly4> Lami = inverse(Lam);
  FourConnection conn;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int a = 0; a < 4; ++a) {
        Poly4 v;
        for (int s = 0; s < 4; ++s)
          for (int r = 0; r < 4; ++r) v += Lami(z(m), z(s)) * Lam(z(r), z(a)) * partial(Lam(z(s), z(n)), r);
        conn(m, n, a) = v;
      }
  EXPECT_EQ(transform_biv_coeffs(flat, Lam, L5), biv_coeffs_four(gp, conn));
  EXPECT_THROW(transform_biv_coeffs(flat, Matrix<Poly4>(4, 4), I5), std::domain_error);
}

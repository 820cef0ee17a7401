#include <gtest/gtest.h>

#include <cmath>

#include "fivevec/connection.hpp"
#include "fivevec/frames.hpp"
#include "generators.hpp"

using namespace fv;
using fvtest::frame_metric;
using fvtest::Gen;
using fvtest::random_sform;

namespace {

Poly4 x(int i) { return Poly4::var(i); }

MetricG eta() { return MetricG::minkowski(); }

FiveVecField e(int A) {
  FiveVecField u;
  u.c[A] = 1;
  return u;
}

bool metricity_holds(const MetricG& g, const FourConnection& G) {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int mu = 0; mu < 4; ++mu) {
        Poly4 r = partial(g(a, b), mu);
        for (int n = 0; n < 4; ++n) r -= G(n, a, mu) * g(n, b) + G(n, b, mu) * g(a, n);
        if (!r.is_zero()) return false;
      }
  return true;
}

// x = phi(y) with x1 = y1 + y0^2/2; the Jacobian is unipotent.
std::array<Poly4, 4> phi() { return {x(0), x(1) + Poly4(frac(1, 2)) * x(0) * x(0), x(2), x(3)}; }

Matrix<Poly4> phi_jacobian() {
  Matrix<Poly4> L = lift(Matrix<Rational>::identity(5));
  L(1, 0) = x(0);
  return L;
}

ConnectionH substitute(const ConnectionH& H, const std::array<Poly4, 4>& subs) {
  ConnectionH out;
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B)
      for (int C = 0; C < 5; ++C) out(A, B, C) = compose(H(A, B, C), subs);
  return out;
}

SForm substitute(const SForm& S, const std::array<Poly4, 4>& subs) {
  Table3<Poly4, 4, 4, 5> t;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int C = 0; C < 5; ++C) t[a][b][C] = compose(S.up(a, b, C), subs);
  return SForm(t);
}

MetricG pulled_back(const MetricG& g, const std::array<Poly4, 4>& subs, const Matrix<Poly4>& J5) {
  Matrix<Poly4> J(4, 4), gs(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      J(i, j) = compose(J5(i, j), subs);
      gs(i, j) = compose(g.matrix()(i, j), subs);
    }
  return MetricG(J.transpose() * gs * J);
}

}  // namespace

TEST(Connection, ChristoffelFlatAndCurved) {
  FourConnection flat = christoffel(eta());
  EXPECT_EQ(flat, FourConnection{});
  MetricG g = frame_metric();
  FourConnection G = christoffel(g);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int mu = 0; mu < 4; ++mu) EXPECT_EQ(G(a, b, mu), G(a, mu, b));
  EXPECT_TRUE(metricity_holds(g, G));
  EXPECT_FALSE(G == FourConnection{});
}

TEST(Connection, ChristoffelNonPolynomialInverse) {
  Matrix<Poly4> m = lift(Matrix<Rational>{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});
  m(1, 1) = Poly4(-1) - x(0) * x(0);
  MetricG g(m);
  EXPECT_THROW(christoffel(g), std::domain_error);
  Gen gen(51);
  for (int trial = 0; trial < 5; ++trial) {
    Point4 p = gen.point();
    auto G = christoffel_at(g, p);
    Rational t = p[0];
    EXPECT_EQ(G[1][1][0], t / (1 + t * t));
    EXPECT_EQ(G[1][0][1], G[1][1][0]);
    EXPECT_EQ(G[0][1][1], t);
    // Finite-difference metricity at a floating point.
    std::array<double, 4> xd{p[0].get_d(), p[1].get_d(), p[2].get_d(), p[3].get_d()};
    auto Gd = christoffel_numeric(g, xd);
    double eps = 1e-6, worst = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int mu = 0; mu < 4; ++mu) {
          auto xp = xd, xm = xd;
          xp[mu] += eps;
          xm[mu] -= eps;
          double r = (g(a, b).eval(xp) - g(a, b).eval(xm)) / (2 * eps);
          for (int n = 0; n < 4; ++n) r -= Gd[n][a][mu] * g(n, b).eval(xd) + Gd[n][b][mu] * g(a, n).eval(xd);
          worst = std::max(worst, std::abs(r));
        }
    EXPECT_LT(worst, 1e-6);
  }
}

TEST(Connection, BuildG) {
  ConnectionG G = build_G(eta(), 1, christoffel(eta()));
  for (int b = 0; b < 4; ++b)
    for (int mu = 0; mu < 4; ++mu) {
      EXPECT_EQ(G(kFive, b, mu), Poly4(b == mu ? (b == 0 ? -1 : 1) : 0));
      for (int a = 0; a < 4; ++a) EXPECT_TRUE(G(a, b, mu).is_zero());
    }
  ConnectionG N2 = build_G(eta(), 2, christoffel(eta()), Normalization::Normalized);
  EXPECT_EQ(N2(kFive, 0, 0), Poly4(-2));
  EXPECT_EQ(N2(kFive, 3, 3), Poly4(2));
  EXPECT_THROW(build_G(eta(), 0, FourConnection{}), std::invalid_argument);

  MetricG g = frame_metric();
  FourConnection four = christoffel(g);
  ConnectionG Gc = build_G(g, Rational(3, 2), four, Normalization::Normalized);
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu) {
      EXPECT_TRUE(Gc(a, kFive, mu).is_zero());
      EXPECT_TRUE(Gc(kFive, kFive, mu).is_zero());
      for (int b = 0; b < 4; ++b) EXPECT_EQ(Gc(a, b, mu), four(a, b, mu));
    }
  const std::pair<const ConnectionG*, MetricG> cases[] = {{&G, eta()}, {&N2, eta()}, {&Gc, g}};
  for (const auto& [table, metric] : cases) {
    Tensor5 gm = Tensor5::metric(metric);
    for (int mu = 0; mu < 4; ++mu) EXPECT_TRUE(nabla_five(gm, *table, mu).is_zero());
  }
}

TEST(Connection, NablaFiveFlat) {
  ConnectionG G = build_G(eta(), 1, christoffel(eta()));
  FiveVecField d = nabla_five(e(0), G, 0);
  EXPECT_EQ(d.c[kFive], Poly4(-1));
  for (int A = 0; A < 4; ++A) EXPECT_TRUE(d.c[A].is_zero());
  // P-basis columns are self-parallel.
  BasisSpec P = p_basis_fields(1);
  for (int B = 0; B < 5; ++B) {
    FiveVecField col;
    for (int A = 0; A < 5; ++A) col.c[A] = P.N(static_cast<std::size_t>(A), static_cast<std::size_t>(B));
    for (int mu = 0; mu < 4; ++mu) {
      FiveVecField r = nabla_five(col, G, mu);
      for (const auto& c : r.c) EXPECT_TRUE(c.is_zero());
    }
  }
  EXPECT_THROW(nabla_five(e(0), G, 4), std::out_of_range);
}

TEST(Connection, BuildH) {
  ConnectionH H0 = build_H(eta(), SForm(), christoffel(eta()));
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B)
      for (int C = 0; C < 5; ++C) {
        bool expected_nonzero = A == kFive && B < 4 && C < 4 && B == C;
        EXPECT_EQ(!H0(A, B, C).is_zero(), expected_nonzero);
      }
  SForm S;
  S.set(0, 1, 0, Poly4(1));
  ConnectionH H = build_H(eta(), S, christoffel(eta()));
  EXPECT_EQ(H(0, 1, 0), Poly4(1));  // -g_{11} s^{01}_0
  EXPECT_EQ(H(1, 0, 0), Poly4(1));  // -g_{00} s^{10}_0
  EXPECT_TRUE(H(0, 0, 0).is_zero());
  Gen gen(52);
  MetricG g = frame_metric();
  ConnectionH Hc = build_H(g, random_sform(gen, 1, 2), christoffel(g));
  for (int a = 0; a < 4; ++a)
    for (int B = 0; B < 5; ++B) EXPECT_TRUE(Hc(a, kFive, B).is_zero());
}

TEST(Connection, PentadDerivative) {
  Gen gen(53);
  MetricG g = frame_metric();
  FourConnection four = christoffel(g);
  ConnectionG G = build_G(g, 1, four);
  ConnectionH Hflat = build_H(g, SForm(), four);
  ConnectionH H = build_H(g, random_sform(gen, 1, 2), four);
  FiveVecField u;
  for (auto& c : u.c) c = gen.poly(1, 2);
  for (int mu = 0; mu < 4; ++mu) EXPECT_EQ(pentad_derivative(u, Hflat, mu), nabla_five(u, G, mu));
  // Along e_5 only the -s^a_{b5} u^b terms survive.
  FiveVecField d5 = pentad_derivative(u, H, kFive);
  for (int a = 0; a < 4; ++a) {
    Poly4 expect;
    for (int b = 0; b < 4; ++b) expect += H(a, b, kFive) * u.c[b];
    EXPECT_EQ(d5.c[a], expect);
  }
  EXPECT_TRUE(d5.c[kFive].is_zero());
  for (int trial = 0; trial < 3; ++trial) {
    Poly4 f = gen.poly(2, 3);
    FiveVecField fu = u;
    for (auto& c : fu.c) c *= f;
    FiveVecField lhs = pentad_derivative(fu, H, kFive), rhs = pentad_derivative(u, H, kFive);
    for (auto& c : rhs.c) c *= f;
    EXPECT_EQ(lhs, rhs);
  }
  // Metricity of the pentad derivative.
  Tensor5 gm = Tensor5::metric(g);
  for (int C = 0; C < 5; ++C) EXPECT_TRUE(pentad_derivative(gm, H, C).is_zero());
  // Leibniz on the pairing of a form with a vector.
  FiveFormField w;
  for (auto& c : w.c) c = gen.poly(1, 2);
  for (int C = 0; C < 5; ++C) {
    Poly4 lhs = C == kFive ? Poly4() : partial(contract(w, u), C);
    EXPECT_EQ(lhs, contract(pentad_derivative(w, H, C), u) + contract(w, pentad_derivative(u, H, C)));
  }
}

TEST(Connection, Torsion) {
  MetricG g = frame_metric();
  FourConnection four = christoffel(g);
  auto T0 = five_torsion(build_H(g, SForm(), four));
  for (const auto& p : T0)
    for (const auto& q : p)
      for (const auto& v : q) EXPECT_TRUE(v.is_zero());

  Gen gen(54);
  SForm S = random_sform(gen, 1, 2);
  auto T = five_torsion(build_H(g, S, four));
  auto T4 = four_torsion(S, g);
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B)
      for (int C = 0; C < 5; ++C) EXPECT_EQ(T[A][B][C], -T[A][C][B]);
  for (int m = 0; m < 4; ++m)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        EXPECT_EQ(T4[a][b][m], Poly4(frac(-1, 2)) * (S.mixed(m, a, b, g) - S.mixed(m, b, a, g)));
        EXPECT_EQ(T[m][a][b], Poly4(-2) * T4[a][b][m]);
      }
}

TEST(Connection, HTransformLorentzChart) {
  Gen gen(55);
  SForm S = random_sform(gen, 1, 2);
  ConnectionH H = build_H(eta(), S, christoffel(eta()));
  for (int trial = 0; trial < 3; ++trial) {
    LorentzChart c(gen.pseudo_orthogonal({1, -1, -1, -1}), gen.point());
    Matrix<Poly4> L = lift(o_basis_change(c));
    ConnectionH moved = transform_H(H, L);
    SForm Sm = transform_S(S, L);
    Table3<Poly4, 4, 4, 5> t;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int C = 0; C < 5; ++C) t[a][b][C] = substitute_chart(Sm.up(a, b, C), c.Lambda, c.a);
    ConnectionH rebuilt = build_H(eta(), SForm(t), christoffel(eta()));
    for (int A = 0; A < 5; ++A)
      for (int B = 0; B < 5; ++B)
        for (int C = 0; C < 5; ++C) EXPECT_EQ(substitute_chart(moved(A, B, C), c.Lambda, c.a), rebuilt(A, B, C));
  }
}

TEST(Connection, HTransformCurvilinear) {
  Gen gen(56);
  for (const MetricG& g : {eta(), frame_metric()}) {
    SForm S = random_sform(gen, 1, 1);
    ConnectionH H = build_H(g, S, christoffel(g));
    Matrix<Poly4> L = phi_jacobian();
    ConnectionH moved = substitute(transform_H(H, L), phi());
    MetricG gp = pulled_back(g, phi(), L);
    ConnectionH rebuilt = build_H(gp, substitute(transform_S(S, L), phi()), christoffel(gp));
    EXPECT_EQ(moved, rebuilt);
  }
}

TEST(Connection, HFiveSlotIsTensorial) {
  Gen gen(57);
  MetricG g = frame_metric();
  ConnectionH H = build_H(g, random_sform(gen, 1, 2), christoffel(g));
  Matrix<Poly4> L = lift(Matrix<Rational>::identity(5));
  L(4, 0) = gen.poly(1, 2);
  L(4, 2) = gen.poly(1, 2);
  L(0, 1) = x(3);
  L(4, 4) = 2;
  ConnectionH moved = transform_H(H, L);
  Matrix<Poly4> H5(5, 5);
  for (std::size_t A = 0; A < 5; ++A)
    for (std::size_t B = 0; B < 5; ++B) H5(A, B) = H(static_cast<int>(A), static_cast<int>(B), kFive);
  Matrix<Poly4> expect = inverse(L) * H5 * L;
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B)
      EXPECT_EQ(moved(A, B, kFive), expect(static_cast<std::size_t>(A), static_cast<std::size_t>(B)) * Poly4(2));
}

TEST(Connection, TransportFlat) {
  ConnectionG G = build_G(eta(), 1, christoffel(eta()));
  Curve axis{{x(0), Poly4(), Poly4(), Poly4()}, 0, 1};
  auto V = transport_along(std::array<Rational, 5>{1, 0, 0, 0, 0}, axis, G, 1000);
  std::array<double, 5> expect{1, 0, 0, 0, 1};
  for (int A = 0; A < 5; ++A) EXPECT_NEAR(V[A], expect[A], 1e-9);

  Curve bent{{x(0), x(0) * x(0), Poly4(frac(1, 2)) * x(0), Poly4()}, 0, 1};
  auto W = transport_along(std::array<Rational, 5>{0, 0, 0, 0, 1}, bent, G, 100);
  for (int A = 0; A < 5; ++A) EXPECT_NEAR(W[A], A == kFive ? 1.0 : 0.0, 1e-12);
  EXPECT_THROW(transport_along(std::array<Rational, 5>{}, axis, G, 3), std::invalid_argument);

  // Transporting p_0 from its value at the origin reproduces p_0 along any curve.
  auto U = transport_along(std::array<Rational, 5>{1, 0, 0, 0, 0}, bent, G, 1000);
  EXPECT_NEAR(U[0], 1.0, 1e-9);
  EXPECT_NEAR(U[kFive], 1.0, 1e-9);  // x_0 at t = 1
}

TEST(Connection, TransportCurvedClosedForm) {
  Matrix<Poly4> m = lift(Matrix<Rational>{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});
  m(1, 1) = Poly4(-1) - x(0) * x(0);
  MetricG g(m);
  FiveCoeffs G = numeric_coeffs(g, 1);
  Curve axis{{x(0), Poly4(), Poly4(), Poly4()}, 0, 1};
  auto V = transport_along(std::array<double, 5>{1, 1, 0, 0, 0}, axis, G, 1000);
  std::array<double, 5> expect{1, 1 / std::sqrt(2.0), 0, 0, 1};
  for (int A = 0; A < 5; ++A) EXPECT_NEAR(V[A], expect[A], 1e-9);

  // The quotient follows the four-vector transport.
  FiveCoeffs four_only = [&](const std::array<double, 4>& p) {
    FiveTable t = G(p);
    for (auto& row : t[4])
      for (auto& v : row) v = 0;
    return t;
  };
  Curve bent{{x(0), x(0) * x(0), x(0), Poly4()}, 0, 1};
  auto full = transport_along(std::array<double, 5>{1, 2, 0, 1, 3}, bent, G, 500);
  auto quot = transport_along(std::array<double, 5>{1, 2, 0, 1, 0}, bent, four_only, 500);
  for (int a = 0; a < 4; ++a) EXPECT_NEAR(full[a], quot[a], 1e-12);
}

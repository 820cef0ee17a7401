#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "fivevec/bivder.hpp"
#include "fivevec/cli.hpp"
#include "fivevec/clifford.hpp"
#include "fivevec/noether.hpp"
#include "fivevec/sampling.hpp"
#include "fivevec/scalarfield.hpp"

namespace fv {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }
const Rational kEta[4] = {1, -1, -1, -1};

// Per-check seed: FNV-1a of the id mixed with the run seed, so a check draws the
// same inputs whatever else runs and in whatever order.
std::uint64_t check_seed(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : id) h = (h ^ c) * 1099511628211ull;
  std::uint64_t x = h ^ (seed + 0x9e3779b97f4a7c15ull);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::string idx(std::initializer_list<int> is) {
  std::string s = "(";
  for (int i : is) {
    if (s.size() > 1) s += ",";
    s += std::to_string(i == kFive ? 5 : i);
  }
  return s + ")";
}

// Exact identity: every residual must be the zero polynomial. Keeps the first offender.
class Exact {
 public:
  explicit Exact(std::string what) : what_(std::move(what)) {}
  template <typename P>
  void zero(const P& p, const std::string& where) {
    ++checked_;
    if (p.is_zero()) return;
    if (bad_++ == 0) {
      first_ = to_string(p);
      where_ = where;
    }
  }
  void truth(bool ok, const std::string& where, const std::string& residual = "nonzero") {
    ++checked_;
    if (ok) return;
    if (bad_++ == 0) {
      first_ = residual;
      where_ = where;
    }
  }
  Check finish(const std::string& id) const {
    Check c{id, CheckStatus::Pass, "0", what_ + "; " + std::to_string(checked_) + (checked_ == 1 ? " component" : " components")};
    if (bad_) {
      c.status = CheckStatus::Fail;
      c.max_residual = first_;
      c.details = what_ + "; " + std::to_string(bad_) + " of " + std::to_string(checked_) + " nonzero, first at " + where_;
    }
    return c;
  }

 private:
  std::string what_, first_, where_;
  int checked_ = 0, bad_ = 0;
};

std::string decimal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Float oracle compared against a tolerance.
class Numeric {
 public:
  Numeric(std::string what, double tol) : what_(std::move(what)), tol_(tol) {}
  void diff(double d, const std::string& where) {
    d = std::fabs(d);
    if (!(d <= max_)) {
      max_ = d;
      where_ = where;
    }
  }
  Check finish(const std::string& id) const {
    bool ok = max_ <= tol_;
    std::string d = what_ + "; max at " + (where_.empty() ? "-" : where_);
    return {id, ok ? CheckStatus::Pass : CheckStatus::Fail, decimal(max_), d};
  }

 private:
  std::string what_, where_;
  double tol_, max_ = 0;
};

struct Job {
  std::string id;
  std::function<Check(Sampler&)> run;
};

// ---------------------------------------------------------------- clifford

CMat4 anticommutator(const CMat4& a, const CMat4& b) { return a * b + b * a; }

CMat4 scalar_identity(const Rational& q) {
  CMat4 m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = Complex(q, 0);
  return m;
}

void clifford_residuals(Exact& e, const GammaSet& s, const std::string& tag) {
  for (int A = 0; A < 5; ++A)
    for (int B = A; B < 5; ++B) {
      CMat4 r = anticommutator(s.gammas[z(A)], s.gammas[z(B)]) + scalar_identity(2 * s.eta5(z(A), z(B)));
      bool ok = r.is_zero_matrix();
      std::string first;
      for (std::size_t i = 0; i < 16 && first.empty(); ++i)
        if (!is_zero(r(i / 4, i % 4))) first = to_string(r(i / 4, i % 4));
      e.truth(ok, tag + idx({A, B}), first);
    }
}

void add_clifford(std::vector<Job>& jobs) {
  jobs.push_back({"clifford.anticommutation", [](Sampler&) {
                    Exact e("{G_A, G_B} + 2 eta_AB I over all 15 pairs");
                    clifford_residuals(e, build_gamma_set(), "pair");
                    return e.finish("clifford.anticommutation");
                  }});
  jobs.push_back({"clifford.dirac_algebra", [](Sampler&) {
                    Exact e("{g_mu, g_nu} - 2 eta_mu_nu I for the recovered four gammas");
                    auto g = gamma4_from(build_gamma_set());
                    for (int m = 0; m < 4; ++m)
                      for (int n = m; n < 4; ++n) {
                        CMat4 r = anticommutator(g[z(m)], g[z(n)]) - scalar_identity(m == n ? 2 * kEta[m] : Rational(0));
                        e.truth(r.is_zero_matrix(), idx({m, n}));
                      }
                    return e.finish("clifford.dirac_algebra");
                  }});
  jobs.push_back({"clifford.o32_invariance", [](Sampler& gen) {
                    Exact e("relations after 5 seeded O(3,2) transforms");
                    GammaSet s = build_gamma_set();
                    for (int t = 0; t < 5; ++t)
                      clifford_residuals(e, transform_o32(s, gen.pseudo_orthogonal({1, -1, -1, -1, 1})),
                                         "transform " + std::to_string(t) + " pair");
                    return e.finish("clifford.o32_invariance");
                  }});
}

// ---------------------------------------------------------------- flat

Table3<Poly4, 4, 4, 4> random_sigma(Sampler& g, int degree) {
  Table3<Poly4, 4, 4, 4> S{};
  for (int m = 0; m < 4; ++m)
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        S[m][a][b] = g.poly(degree, 2);
        S[m][b][a] = -S[m][a][b];
      }
  return S;
}

Matrix<Rational> random_omega(Sampler& g) {
  Matrix<Rational> w(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      w(i, j) = g.rational();
      w(j, i) = -w(i, j);
    }
  return w;
}

void add_flat(std::vector<Job>& jobs, const ModelFile& m, std::uint64_t seed, double tol) {
  // Model charts first, then five seeded ones so the battery never runs empty.
  std::vector<LorentzChart> charts = m.charts;
  Sampler cg(check_seed(seed, "frames.charts"));
  for (int i = 0; i < 5; ++i) charts.emplace_back(cg.pseudo_orthogonal({1, -1, -1, -1}), cg.point());
  const std::string nch = std::to_string(m.charts.size()) + " model + 5 seeded charts";

  jobs.push_back({"frames.h_matrix", [&m](Sampler& gen) {
                    Exact e("h in the P-basis equals N^T diag(eta, h55) N at 10 seeded points");
                    Matrix<Rational> hO = Matrix<Rational>::identity(5);
                    for (std::size_t a = 1; a < 4; ++a) hO(a, a) = -1;
                    hO(4, 4) = m.kappa * m.kappa * m.h55_sign;
                    for (int t = 0; t < 10; ++t) {
                      Point4 x = gen.point();
                      Matrix<Rational> N = eval_matrix(p_basis_fields(m.kappa).N, x);
                      Matrix<Rational> r = h_matrix_p_basis(x, m.kappa, m.h55_sign) - N.transpose() * hO * N;
                      e.truth(r.is_zero_matrix(), "point " + std::to_string(t));
                    }
                    return e.finish("frames.h_matrix");
                  }});
  jobs.push_back({"frames.recover_coords", [&m](Sampler& gen) {
                    Exact e("x recovered from h(x) at 10 seeded points");
                    for (int t = 0; t < 10; ++t) {
                      Point4 x = gen.point();
                      e.truth(recover_coords(h_matrix_p_basis(x, m.kappa), m.kappa) == x, "point " + std::to_string(t));
                    }
                    return e.finish("frames.recover_coords");
                  }});
  jobs.push_back({"frames.position_form", [charts, nch](Sampler&) {
                    Exact e("covariant position form invariant along the chart sequence, " + nch);
                    Vec5P w0 = covariant_position_form_p(), w = w0;
                    for (std::size_t c = 0; c < charts.size(); ++c) {
                      w = p_form_transform(w, charts[c]);
                      for (auto& comp : w) comp = substitute_chart(comp, charts[c].Lambda, charts[c].a);
                      for (int A = 0; A < 5; ++A) e.zero(w[z(A)] - w0[z(A)], "chart " + std::to_string(c) + " component " + idx({A}));
                    }
                    return e.finish("frames.position_form");
                  }});
  jobs.push_back({"frames.functoriality", [charts, nch](Sampler&) {
                    Exact e("O- and P-basis changes compose over all ordered chart pairs, " + nch);
                    for (std::size_t i = 0; i < charts.size(); ++i)
                      for (std::size_t j = 0; j < charts.size(); ++j) {
                        LorentzChart both = charts[i].then(charts[j]);
                        std::string w = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
                        e.truth(o_basis_change(both) == o_basis_change(charts[i]) * o_basis_change(charts[j]), w + " O");
                        e.truth(p_basis_change(both) == p_basis_change(charts[i]) * p_basis_change(charts[j]), w + " P");
                      }
                    return e.finish("frames.functoriality");
                  }});
  jobs.push_back({"frames.poincare_finite", [charts, nch](Sampler& gen) {
                    Exact e("finite Poincare parameters follow the (1,1) five-tensor law, " + nch);
                    for (std::size_t c = 0; c < charts.size(); ++c) {
                      PoincareParams q = PoincareParams::finite(gen.pseudo_orthogonal({1, -1, -1, -1}), gen.point());
                      Matrix<Rational> r = poincare_T_tensor(poincare_T_transform(q, charts[c])) -
                                           transform_11(poincare_T_tensor(q), p_basis_change(charts[c]));
                      e.truth(r.is_zero_matrix(), "chart " + std::to_string(c));
                    }
                    return e.finish("frames.poincare_finite");
                  }});
  jobs.push_back({"frames.poincare_generator", [charts, nch](Sampler& gen) {
                    Exact e("infinitesimal Poincare parameters follow the (2,0) five-tensor law, " + nch);
                    for (std::size_t c = 0; c < charts.size(); ++c) {
                      PoincareParams q = PoincareParams::generator(random_omega(gen), gen.point());
                      Matrix<Rational> r = poincare_R_tensor(poincare_R_transform(q, charts[c])) -
                                           transform_20(poincare_R_tensor(q), p_basis_change(charts[c]));
                      e.truth(r.is_zero_matrix(), "chart " + std::to_string(c));
                    }
                    return e.finish("frames.poincare_generator");
                  }});
  jobs.push_back({"connection.five_coefficients", [&m](Sampler&) {
                    Exact e("flat G^a_{b mu} = 0 and G^5_{b mu} = -eta (active), -kappa eta (normalized)");
                    MetricG eta = MetricG::minkowski();
                    FourConnection four = christoffel(eta);
                    ConnectionG act = build_G(eta, m.kappa, four), nrm = build_G(eta, m.kappa, four, Normalization::Normalized);
                    for (int A = 0; A < 5; ++A)
                      for (int B = 0; B < 5; ++B)
                        for (int mu = 0; mu < 4; ++mu) {
                          Rational d = A == kFive && B == mu ? kEta[mu] : Rational(0);
                          e.zero(act(A, B, mu) + Poly4(d), "active " + idx({A, B, mu}));
                          e.zero(nrm(A, B, mu) + Poly4(m.kappa * d), "normalized " + idx({A, B, mu}));
                        }
                    return e.finish("connection.five_coefficients");
                  }});
  jobs.push_back({"connection.p_basis_parallel", [](Sampler&) {
                    Exact e("nabla_mu of every P-basis column on flat spacetime");
                    MetricG eta = MetricG::minkowski();
                    ConnectionG G = build_G(eta, 1, christoffel(eta));
                    BasisSpec P = p_basis_fields(1);
                    for (int B = 0; B < 5; ++B) {
                      FiveVecField col;
                      for (int A = 0; A < 5; ++A) col.c[z(A)] = P.N(z(A), z(B));
                      for (int mu = 0; mu < 4; ++mu) {
                        FiveVecField r = nabla_five(col, G, mu);
                        for (int A = 0; A < 5; ++A) e.zero(r.c[z(A)], "p_" + std::to_string(B == kFive ? 5 : B) + " mu=" + std::to_string(mu) + " comp " + idx({A}));
                      }
                    }
                    return e.finish("connection.p_basis_parallel");
                  }});
  jobs.push_back({"connection.transport_closed_form", [&m, tol](Sampler& gen) {
                    Numeric e("RK4 transport of P-basis columns against their closed form, step 1e-3", tol);
                    MetricG eta = MetricG::minkowski();
                    ConnectionG G = build_G(eta, 1, christoffel(eta));
                    BasisSpec P = p_basis_fields(1);
                    std::vector<Curve> curves;
                    for (const auto& c : m.curves) curves.push_back(c.curve);
                    Poly4 t = Poly4::var(0);
                    std::array<Poly4, 4> seeded;
                    for (auto& x : seeded) x = Poly4(gen.rational()) * t + Poly4(gen.rational()) * t * t;
                    curves.push_back({seeded, 0, 1});
                    for (std::size_t c = 0; c < curves.size(); ++c) {
                      const Curve& cv = curves[c];
                      Point4 start, end;
                      for (int i = 0; i < 4; ++i) {
                        start[z(i)] = cv.x[z(i)].eval(Point4{Rational(cv.t0), 0, 0, 0});
                        end[z(i)] = cv.x[z(i)].eval(Point4{Rational(cv.t1), 0, 0, 0});
                      }
                      int steps = std::max(1, static_cast<int>(std::lround((cv.t1 - cv.t0) / 1e-3)));
                      for (int B = 0; B < 5; ++B) {
                        std::array<Rational, 5> u0;
                        for (int A = 0; A < 5; ++A) u0[z(A)] = P.N(z(A), z(B)).eval(start);
                        auto u = transport_along(u0, cv, G, steps);
                        for (int A = 0; A < 5; ++A)
                          e.diff(u[z(A)] - P.N(z(A), z(B)).eval(end).get_d(),
                                 "curve " + std::to_string(c) + " p_" + std::to_string(B == kFive ? 5 : B));
                      }
                    }
                    return e.finish("connection.transport_closed_form");
                  }});
  jobs.push_back({"noether.chart_law", [charts, nch](Sampler& gen) {
                    Exact e("chart formula for (Theta', Sigma') equals the P-basis transform of M, " + nch);
                    for (std::size_t c = 0; c < charts.size(); ++c) {
                      const LorentzChart& ch = charts[c];
                      Matrix<Poly4> Th(4, 4);
                      for (std::size_t i = 0; i < 16; ++i) Th(i / 4, i % 4) = Poly4(gen.rational());
                      auto Sg = random_sigma(gen, 0);
                      Matrix<Poly4> Lam = lift(ch.Lambda), Li = lift(inverse(ch.Lambda));
                      Matrix<Poly4> Th2 = Lam * Th * Li;
                      Table3<Poly4, 4, 4, 4> Sg2{};
                      for (int mu = 0; mu < 4; ++mu)
                        for (int a = 0; a < 4; ++a)
                          for (int b = 0; b < 4; ++b)
                            for (int n = 0; n < 4; ++n)
                              for (int s = 0; s < 4; ++s)
                                for (int t = 0; t < 4; ++t)
                                  Sg2[mu][a][b] += Lam(z(mu), z(n)) * Sg[n][s][t] * Li(z(s), z(a)) * Li(z(t), z(b));
                      std::array<Poly4, 4> xprime;
                      for (int i = 0; i < 4; ++i) {
                        xprime[z(i)] = Poly4(ch.a[z(i)]);
                        for (int j = 0; j < 4; ++j) xprime[z(i)] += Poly4(ch.Lambda(z(i), z(j))) * Poly4::var(j);
                      }
                      MTensor lhs = assemble_M(Th2, Sg2), rhs = transform_M_p_basis(assemble_M(Th, Sg), ch);
                      for (int A = 0; A < 5; ++A)
                        for (int B = 0; B < 5; ++B)
                          for (int C = 0; C < 5; ++C)
                            e.zero(compose(lhs.c[A][B][C], xprime) - rhs.c[A][B][C], "chart " + std::to_string(c) + " " + idx({A, B, C}));
                    }
                    return e.finish("noether.chart_law");
                  }});
  jobs.push_back({"noether.flat_conservation", [](Sampler& gen) {
                    Exact e("constant symmetric Theta with constant Sigma is conserved in both bases");
                    for (int t = 0; t < 4; ++t) {
                      Matrix<Poly4> Th(4, 4);
                      for (int a = 0; a < 4; ++a)
                        for (int b = a; b < 4; ++b) {
                          Rational v = gen.rational();
                          Th(z(a), z(b)) = Poly4(kEta[a] * v);
                          Th(z(b), z(a)) = Poly4(kEta[b] * v);
                        }
                      FlatConservation r = flat_conservation(assemble_M(Th, random_sigma(gen, 0)));
                      for (int A = 0; A < 5; ++A)
                        for (int B = 0; B < 5; ++B) {
                          e.zero(r.p_basis(z(A), z(B)), "trial " + std::to_string(t) + " P " + idx({A, B}));
                          e.zero(r.o_basis(z(A), z(B)), "trial " + std::to_string(t) + " O " + idx({A, B}));
                        }
                    }
                    return e.finish("noether.flat_conservation");
                  }});
  jobs.push_back({"curvature.flat_vanishes", [](Sampler&) {
                    Exact e("curvature of flat spacetime with S = 0");
                    MetricG eta = MetricG::minkowski();
                    CurvR R = curvature_from_H(build_H(eta, SForm(), christoffel(eta)));
                    for (int A = 0; A < 5; ++A)
                      for (int B = 0; B < 5; ++B)
                        for (int C = 0; C < 5; ++C)
                          for (int D = 0; D < 5; ++D) e.zero(R.c[A][B][C][D], idx({A, B, C, D}));
                    return e.finish("curvature.flat_vanishes");
                  }});
  jobs.push_back({"curvature.vacuum_residuals", [](Sampler&) {
                    Exact e("field-equation residuals of the flat vacuum");
                    FieldEqResiduals r = field_eq_residuals(FieldEqInputs{});
                    for (int a = 0; a < 4; ++a)
                      for (int b = 0; b < 4; ++b) {
                        e.zero(r.R1(z(a), z(b)), "R1 " + idx({a, b}));
                        e.zero(r.R3(z(a), z(b)), "R3 " + idx({a, b}));
                        for (int c = 0; c < 4; ++c) e.zero(r.R2[a][b][c], "R2 " + idx({a, b, c}));
                      }
                    return e.finish("curvature.vacuum_residuals");
                  }});
}

// ---------------------------------------------------------------- curved

struct CurvedContext {
  FourConnection lc;
  ConnectionG G;
  ConnectionH H;
  CurvR R;
};

void add_curved(std::vector<Job>& jobs, const ModelFile& m, const CurvedContext& cx, double tol) {
  jobs.push_back({"connection.metricity", [&m, &cx](Sampler&) {
                    Exact e("nabla_mu of the five-metric under the model connection");
                    Tensor5 gm = Tensor5::metric(m.metric);
                    for (int mu = 0; mu < 4; ++mu) {
                      Tensor5 r = nabla_five(gm, cx.G, mu);
                      for (std::size_t i = 0; i < r.data.size(); ++i)
                        e.zero(r.data[i], "mu=" + std::to_string(mu) + " slot " + std::to_string(i));
                    }
                    return e.finish("connection.metricity");
                  }});
  jobs.push_back({"connection.quotient_transport", [&m, tol](Sampler& gen) {
                    Numeric e("four-part of the five-vector transport equals the four-vector transport", tol);
                    FiveCoeffs G = numeric_coeffs(m.metric, m.kappa);
                    FiveCoeffs four_only = [&](const std::array<double, 4>& p) {
                      FiveTable t = G(p);
                      for (auto& row : t[kFive])
                        for (auto& v : row) v = 0;
                      return t;
                    };
                    std::vector<TransportCurve> curves = m.curves;
                    Poly4 t = Poly4::var(0);
                    for (int k = 0; k < 2; ++k) {
                      TransportCurve c;
                      for (auto& x : c.curve.x) x = Poly4(gen.rational(2, 4)) * t + Poly4(gen.rational(2, 4)) * t * t;
                      for (auto& u : c.u0) u = gen.rational();
                      curves.push_back(c);
                    }
                    for (std::size_t c = 0; c < curves.size(); ++c) {
                      std::array<double, 5> u0, q0;
                      for (int A = 0; A < 5; ++A) u0[z(A)] = q0[z(A)] = curves[c].u0[z(A)].get_d();
                      q0[kFive] = 0;
                      auto full = transport_along(u0, curves[c].curve, G, 500);
                      auto quot = transport_along(q0, curves[c].curve, four_only, 500);
                      for (int a = 0; a < 4; ++a) e.diff(full[z(a)] - quot[z(a)], "curve " + std::to_string(c) + " comp " + idx({a}));
                    }
                    return e.finish("connection.quotient_transport");
                  }});
  const std::pair<const char*, FieldKind> kinds[] = {
      {"bivder.bridge_scalar", FieldKind::Scalar}, {"bivder.bridge_fourvec", FieldKind::Four}, {"bivder.bridge_fivevec", FieldKind::Five}};
  for (const auto& [id, kind] : kinds)
    jobs.push_back({id, [&m, &cx, id, kind](Sampler& gen) {
                      Eq57Report r = check_eq57(cx.H, m.metric, m.S, cx.lc, kind, gen.range(0, 1 << 30), 4);
                      Exact e("pentad derivative along u equals the bivector derivative along sigma(u), " + r.field);
                      e.truth(r.ok(), std::to_string(r.failures) + " of " + std::to_string(r.samples) + " seeded samples");
                      return e.finish(id);
                    }});
  jobs.push_back({"curvature.parallel_matches_serial", [&cx](Sampler&) {
                    Exact e("OpenMP curvature kernel against the serial reference");
                    CurvR s = curvature_from_H_serial(cx.H);
                    for (int A = 0; A < 5; ++A)
                      for (int B = 0; B < 5; ++B)
                        for (int C = 0; C < 5; ++C)
                          for (int D = 0; D < 5; ++D) e.zero(s.c[A][B][C][D] - cx.R.c[A][B][C][D], idx({A, B, C, D}));
                    return e.finish("curvature.parallel_matches_serial");
                  }});
  jobs.push_back({"curvature.antisymmetry", [&m, &cx](Sampler&) {
                    Exact e("R^A_{BCD} + R^A_{BDC}, R^A_{5CD} and g_{aw} R^w_{bCD} + g_{bw} R^w_{aCD}");
                    for (int A = 0; A < 5; ++A)
                      for (int B = 0; B < 5; ++B)
                        for (int C = 0; C < 5; ++C)
                          for (int D = C; D < 5; ++D) e.zero(cx.R.c[A][B][C][D] + cx.R.c[A][B][D][C], "pair " + idx({A, B, C, D}));
                    for (int A = 0; A < 5; ++A)
                      for (int C = 0; C < 5; ++C)
                        for (int D = 0; D < 5; ++D) e.zero(cx.R.c[A][kFive][C][D], "five column " + idx({A, kFive, C, D}));
                    for (int a = 0; a < 4; ++a)
                      for (int b = a; b < 4; ++b)
                        for (int C = 0; C < 5; ++C)
                          for (int D = C + 1; D < 5; ++D) {
                            Poly4 v;
                            for (int w = 0; w < 4; ++w) v += m.metric(a, w) * cx.R.c[w][b][C][D] + m.metric(b, w) * cx.R.c[w][a][C][D];
                            e.zero(v, "metric " + idx({a, b, C, D}));
                          }
                    return e.finish("curvature.antisymmetry");
                  }});
  jobs.push_back({"curvature.five_row_torsion", [&m, &cx](Sampler&) {
                    Exact e("R^5_{b mu nu} + 2 g_{bw} s^w_{[mu nu]}");
                    for (int b = 0; b < 4; ++b)
                      for (int mu = 0; mu < 4; ++mu)
                        for (int nu = 0; nu < 4; ++nu) {
                          Poly4 v = cx.R.c[kFive][b][mu][nu];
                          for (int w = 0; w < 4; ++w)
                            v += m.metric(b, w) * (m.S.mixed(w, mu, nu, m.metric) - m.S.mixed(w, nu, mu, m.metric));
                          e.zero(v, idx({kFive, b, mu, nu}));
                        }
                    return e.finish("curvature.five_row_torsion");
                  }});
  jobs.push_back({"curvature.k_trace", [&m, &cx](Sampler&) {
                    Exact e("trace of K against the Ricci contraction of the Riemann-Cartan tensor");
                    e.zero(curvature_scalar(build_K(cx.R, m.metric)) - scalar_curvature(cx.R, m.metric), "scalar");
                    return e.finish("curvature.k_trace");
                  }});
  jobs.push_back({"curvature.mixed_five_slot", [&m, &cx](Sampler&) {
                    Eq65Probe p = eq65_probe(cx.R, cx.H, m.S, m.metric);
                    const std::string id = "curvature.mixed_five_slot";
                    for (int a = 0; a < 4; ++a)
                      for (int b = 0; b < 4; ++b)
                        for (int mu = 0; mu < 4; ++mu) {
                          const Poly4 &d = p.direct[a][b][mu], &q = p.printed[a][b][mu], &r = cx.R.c[a][b][mu][kFive];
                          std::string at = "R^a_{b mu 5} at " + idx({a, b, mu});
                          if (r != d)
                            return Check{id, CheckStatus::Fail, to_string(r - d),
                                         at + ": curvature differs from the +sH expansion " + to_string(d)};
                          if (d != q)
                            return Check{id, CheckStatus::Flagged, to_string(d - q),
                                         at + ": +sH reading " + to_string(d) + " (matches curvature); -sH reading " +
                                             to_string(q)};
                        }
                    return Check{id, CheckStatus::Pass, "0", "both sign readings agree on this model"};
                  }});
  jobs.push_back({"curvature.divergence_identity", [&m](Sampler&) {
                    Exact e("modified divergence of T^(mod) minus G_[mu nu]");
                    Matrix<Poly4> r = divergence_identity_residual(m.metric, m.S);
                    for (int a = 0; a < 4; ++a)
                      for (int b = 0; b < 4; ++b) e.zero(r(z(a), z(b)), idx({a, b}));
                    return e.finish("curvature.divergence_identity");
                  }});
  jobs.push_back({"curvature.holonomy", [&cx](Sampler& gen) {
                    Numeric e("-(Hol - I)/eps^2 at eps = 1e-3 against R^A_{B mu nu} at a seeded point", 1e-6);
                    Point4 base{gen.rational(1, 4), gen.rational(1, 4), gen.rational(1, 4), gen.rational(1, 4)};
                    ConnectionG G = spacetime_part(cx.H);
                    for (int mu = 0; mu < 4; ++mu)
                      for (int nu = mu + 1; nu < 4; ++nu) {
                        auto est = holonomy_oracle(G, mu, nu, 1e-3, base);
                        for (int A = 0; A < 5; ++A)
                          for (int B = 0; B < 5; ++B)
                            e.diff(est[z(A)][z(B)] - cx.R.c[A][B][mu][nu].eval(base).get_d(), idx({A, B, mu, nu}));
                      }
                    return e.finish("curvature.holonomy");
                  }});
  jobs.push_back({"curvature.consistency", [&m](Sampler&) {
                    Exact e("consistency identities with M^5 matched to L_add");
                    FieldEqInputs in = m.field_inputs();
                    ConsistencyReport r = check_consistency_identities(in, m5_from_s(in));
                    for (int a = 0; a < 4; ++a) {
                      e.zero(r.eq79[z(a)], "gradient of L_add " + idx({a}));
                      for (int b = 0; b < 4; ++b) {
                        e.zero(r.eq81(z(a), z(b)), "M5 relation " + idx({a, b}));
                        e.zero(r.eq72(z(a), z(b)), "L_add derivative " + idx({a, b}));
                        e.zero(r.eq78(z(a), z(b)), "commutator " + idx({a, b}));
                      }
                    }
                    e.truth(r.eq75_ok(), "M5 field equation");
                    return e.finish("curvature.consistency");
                  }});
  if (m.matter)
    jobs.push_back({"curvature.field_equations", [&m](Sampler&) {
                      Exact e("field-equation residuals with the model's matter tables");
                      FieldEqResiduals r = field_eq_residuals(m.field_inputs());
                      for (int a = 0; a < 4; ++a)
                        for (int b = 0; b < 4; ++b) {
                          e.zero(r.R1(z(a), z(b)), "R1 " + idx({a, b}));
                          e.zero(r.R3(z(a), z(b)), "R3 " + idx({a, b}));
                          for (int c = 0; c < 4; ++c) e.zero(r.R2[a][b][c], "R2 " + idx({a, b, c}));
                        }
                      return e.finish("curvature.field_equations");
                    }});
  jobs.push_back({"noether.five_spin_cancels", [&m, &cx](Sampler& gen) {
                    Exact e("M^5_{s5} leaves the mu-5 conservation residual unchanged");
                    Matrix<Poly4> Th(4, 4);
                    for (std::size_t i = 0; i < 16; ++i) Th(i / 4, i % 4) = gen.poly(1, 2);
                    MTensor M = assemble_M(Th, random_sigma(gen, 1));
                    MTensor M5 = M;
                    for (int s = 0; s < 4; ++s) {
                      Poly4 v = gen.poly(1, 2);
                      M5.c[kFive][s][kFive] += v;
                      M5.c[kFive][kFive][s] -= v;
                    }
                    CurvedConservation r = conservation_residual(M, cx.H, m.metric), r5 = conservation_residual(M5, cx.H, m.metric);
                    for (int mu = 0; mu < 4; ++mu) e.zero(r5.mu5[z(mu)] - r.mu5[z(mu)], idx({mu}));
                    return e.finish("noether.five_spin_cancels");
                  }});
}

// ---------------------------------------------------------------- gauge

MatPS unitary_on_block(Sampler& g, int n) {
  auto [c, s] = g.circle_pair();
  auto [p, q] = g.circle_pair();
  MatS R = MatS::identity(z(n + 1)), P = MatS::identity(z(n + 1));
  if (n >= 2) {
    R(0, 0) = Surd(c);
    R(0, 1) = Surd(-s);
    R(1, 0) = Surd(s);
    R(1, 1) = Surd(c);
  }
  P(0, 0) = Surd(Complex(p, q));
  return (R * P).map([](const Surd& v) { return PolyS(v); });
}

void hermitian_zero(Exact& e, const GaugeC& C, const std::string& tag) {
  auto r = hermitian_residual(C, MatPS::identity(z(C.n)));
  for (int A = 0; A < 5; ++A)
    for (std::size_t i = 0; i < r[z(A)].rows(); ++i)
      for (std::size_t j = 0; j < r[z(A)].cols(); ++j)
        e.zero(r[z(A)](i, j), tag + idx({A, static_cast<int>(i), static_cast<int>(j)}));
}

void add_gauge(std::vector<Job>& jobs, const GaugeSection& gs) {
  const int n = gs.C.n;
  jobs.push_back({"gauge.standard_form", [&gs, n](Sampler&) {
                    Exact e("C^i_{& A} vanishes");
                    for (int A = 0; A < 5; ++A)
                      for (int i = 0; i < n; ++i) e.zero(gs.C.c[z(A)](z(i), z(n)), idx({A, i}));
                    return e.finish("gauge.standard_form");
                  }});
  jobs.push_back({"gauge.hermitian", [&gs](Sampler&) {
                    Exact e("theta C + C^dagger theta on the n-block");
                    hermitian_zero(e, gs.C, "");
                    return e.finish("gauge.hermitian");
                  }});
  jobs.push_back({"gauge.trace_free", [&gs](Sampler&) {
                    Exact e("trace of C_A");
                    auto tr = gauge_trace(gs.C);
                    for (int A = 0; A < 5; ++A) e.zero(tr[z(A)], idx({A}));
                    return e.finish("gauge.trace_free");
                  }});
  jobs.push_back({"gauge.unitary_change", [&gs, n](Sampler& gen) {
                    Exact e("Hermitian constraint after 5 seeded unitary changes of the Z-basis");
                    for (int t = 0; t < 5; ++t) hermitian_zero(e, transform_C(gs.C, unitary_on_block(gen, n)), "change " + std::to_string(t) + " ");
                    return e.finish("gauge.unitary_change");
                  }});
  jobs.push_back({"gauge.generators", [n](Sampler&) {
                    Exact e("Tr(t_a t_b) - 2 delta_ab, Tr t_a and t_a - t_a^dagger");
                    auto t = sun_generators(n);
                    for (std::size_t a = 0; a < t.size(); ++a) {
                      Surd tr;
                      for (int i = 0; i < n; ++i) tr += t[a](z(i), z(i));
                      e.truth(tr.is_zero(), "trace " + std::to_string(a), to_string(tr));
                      MatS h = t[a] - t[a].transpose().map([](const Surd& v) { return v.conj(); });
                      e.truth(h.is_zero_matrix(), "hermitian " + std::to_string(a));
                      for (std::size_t b = 0; b < t.size(); ++b) {
                        MatS p = t[a] * t[b];
                        Surd s = a == b ? Surd(-2) : Surd();
                        for (int i = 0; i < n; ++i) s += p(z(i), z(i));
                        e.truth(s.is_zero(), "pair (" + std::to_string(a) + "," + std::to_string(b) + ")", to_string(s));
                      }
                    }
                    return e.finish("gauge.generators");
                  }});
  jobs.push_back({"gauge.u1_charge", [n](Sampler&) {
                    Exact e("C^&_& coefficient squared equals n / 2(n+1), and n z = e");
                    Surd ce = u1_charge_e(n);
                    Surd d = ce * ce - Surd(frac(n, static_cast<unsigned long>(2 * (n + 1))));
                    e.truth(d.is_zero(), "e coefficient", to_string(d));
                    Surd d2 = u1_charge_z(n) * Surd(n) - ce;
                    e.truth(d2.is_zero(), "z coefficient", to_string(d2));
                    return e.finish("gauge.u1_charge");
                  }});
  jobs.push_back({"gauge.decompose_round_trip", [&gs, n](Sampler&) {
                    Exact e("SU(n) x U(1) decomposition recomposes to C; real coefficients");
                    Np1Config cfg = Np1Config::orthonormal(n);
                    SUnDecomposition d = su_u1_decompose(gs.C, cfg, gs.coupling);
                    for (int A = 0; A < 5; ++A) {
                      e.truth(is_real(d.C0[z(A)]), "C0 " + idx({A}), to_string(d.C0[z(A)]));
                      for (std::size_t a = 0; a < d.Ca[z(A)].size(); ++a)
                        e.truth(is_real(d.Ca[z(A)][a]), "Ca " + idx({A, static_cast<int>(a)}), to_string(d.Ca[z(A)][a]));
                    }
                    GaugeC back = su_u1_recompose(d, x_fields(gs.C, d.g));
                    for (int A = 0; A < 5; ++A)
                      for (int i = 0; i <= n; ++i)
                        for (int j = 0; j <= n; ++j)
                          e.zero(back.c[z(A)](z(i), z(j)) - gs.C.c[z(A)](z(i), z(j)), idx({A, i, j}));
                    e.truth(e_norm_preserved(back, cfg), "e-norm");
                    return e.finish("gauge.decompose_round_trip");
                  }});
  jobs.push_back({"gauge.charge_conjugation", [&gs, n](Sampler& gen) {
                    SUnDecomposition d = su_u1_decompose(gs.C, Np1Config::orthonormal(n), gs.coupling);
                    XFields X = x_fields(gs.C, d.g);
                    bool x_zero = true;
                    for (const auto& row : X)
                      for (const auto& v : row) x_zero = x_zero && v.is_zero();
                    Np1Vec w(z(n + 1));
                    for (auto& c : w) c = to_surd(gen.poly(1, 2)) + PolyS(Surd::i()) * to_surd(gen.poly(1, 2));
                    CViolation v = c_violation(d, X, w);
                    const std::string id = "gauge.charge_conjugation";
                    if (v.invariant() == x_zero)
                      return Check{id, CheckStatus::Pass, "0",
                                   x_zero ? "X = 0 and the conjugated derivatives agree"
                                          : "X != 0 and the conjugated derivatives differ by the X terms"};
                    return Check{id, CheckStatus::Fail, "nonzero",
                                 x_zero ? "X = 0 but the conjugated derivatives differ" : "X != 0 but no violation found"};
                  }});
}

}  // namespace

bool Report::any(CheckStatus s) const {
  return std::any_of(checks.begin(), checks.end(), [&](const Check& c) { return c.status == s; });
}

Report run_suite(const ModelFile& model, const std::string& suite, std::uint64_t seed, const std::string& tol) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw SuiteError("unknown suite '" + suite + "'");
  double tol_v;
  try {
    std::size_t used = 0;
    tol_v = std::stod(tol, &used);
    if (used != tol.size() || !(tol_v > 0)) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw SuiteError("tolerance must be a positive decimal, got '" + tol + "'");
  }
  const bool all = suite == "all";
  if (suite == "gauge" && !model.gauge) throw SuiteError("suite 'gauge' needs a [gauge] section in the model");

  std::vector<Job> jobs;
  if (all || suite == "clifford") add_clifford(jobs);
  if (all || suite == "flat") add_flat(jobs, model, seed, tol_v);
  std::optional<CurvedContext> cx;
  if (all || suite == "curved") {
    if (!model.metric.has_polynomial_inverse())
      throw SuiteError("suite 'curved' needs a metric with a polynomial inverse (constant determinant)");
    CurvedContext c;
    try {
      c.lc = christoffel(model.metric);
      c.G = build_G(model.metric, model.kappa, c.lc);
      c.H = build_H(model.metric, model.S, c.lc);
      c.R = curvature_from_H(c.H);
    } catch (const DegreeCapError& e) {
      throw SuiteError(std::string("model exceeds the polynomial degree cap: ") + e.what());
    }
    cx = std::move(c);
    add_curved(jobs, model, *cx, tol_v);
  }
  if (model.gauge && (all || suite == "gauge")) add_gauge(jobs, *model.gauge);

  std::vector<Check> out(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Sampler gen(check_seed(seed, jobs[i].id));
    try {
      out[i] = jobs[i].run(gen);
    } catch (const std::exception& e) {
      out[i] = {jobs[i].id, CheckStatus::Fail, "error", e.what()};
    }
  }
  std::sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return {suite, seed, tol, "1e-6", std::move(out)};
}

int exit_code(const Report& r, bool strict) {
  if (r.any(CheckStatus::Fail)) return 1;
  if (strict && r.any(CheckStatus::Flagged)) return 1;
  return 0;
}

}  // namespace fv

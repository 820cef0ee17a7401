#include <fstream>
#include <set>
#include <sstream>

#include <toml.hpp>

#include "fivevec/cli.hpp"

namespace fv {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

std::string at(const toml::node& n, const std::string& field) {
  const auto& src = n.source();
  if (src.begin.line == 0) return field;
  return "line " + std::to_string(src.begin.line) + ": " + field;
}

[[noreturn]] void fail(const toml::node& n, const std::string& field, const std::string& what) {
  throw ModelError(at(n, field) + ": " + what);
}

void known_keys(const toml::table& t, const std::string& field, std::initializer_list<std::string_view> keys) {
  std::set<std::string_view> ok(keys);
  for (const auto& [k, v] : t)
    if (!ok.count(k.str())) fail(v, field.empty() ? std::string(k.str()) : field + "." + std::string(k.str()), "unknown key");
}

const toml::node& require(const toml::table& t, std::string_view key, const std::string& field) {
  const toml::node* n = t.get(key);
  if (!n) fail(t, field, "missing key '" + std::string(key) + "'");
  return *n;
}

// Exact numbers come as integers or strings such as "3/2"; floats would lose exactness.
Rational rational_of(const toml::node& n, const std::string& field) {
  if (auto i = n.as_integer()) return Rational(static_cast<long>(i->get()));
  if (auto s = n.as_string()) {
    try {
      return parse_rational(s->get());
    } catch (const std::exception& e) {
      fail(n, field, e.what());
    }
  }
  fail(n, field, "expected an integer or a rational string");
}

double real_of(const toml::node& n, const std::string& field) {
  if (auto f = n.as_floating_point()) return f->get();
  return rational_of(n, field).get_d();
}

int int_of(const toml::node& n, const std::string& field, int lo, int hi) {
  auto i = n.as_integer();
  if (!i) fail(n, field, "expected an integer");
  if (i->get() < lo || i->get() > hi)
    fail(n, field, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(i->get());
}

// Five-index as written in the file: 0..3 or 5. Returns the storage slot.
int index5_of(const toml::node& n, const std::string& field) {
  int v = int_of(n, field, 0, 5);
  if (v == 4) fail(n, field, "five-index is 0..3 or 5");
  return v == 5 ? kFive : v;
}

template <typename P, typename Parse>
P poly_with(const toml::node& n, const std::string& field, Parse parse) {
  if (auto i = n.as_integer()) return P(static_cast<long>(i->get()));
  auto s = n.as_string();
  if (!s) fail(n, field, "expected a polynomial string");
  try {
    return parse(s->get());
  } catch (const DegreeCapError& e) {
    fail(n, field, e.what());
  } catch (const std::invalid_argument& e) {
    fail(n, field, e.what());
  }
}

Poly4 poly_of(const toml::node& n, const std::string& field) {
  return poly_with<Poly4>(n, field, [](const std::string& s) { return parse_poly(s); });
}

PolyS cpoly_of(const toml::node& n, const std::string& field) {
  return poly_with<PolyS>(n, field, [](const std::string& s) { return parse_poly_complex(s); });
}

const toml::array& array_of(const toml::node& n, const std::string& field, std::size_t len) {
  auto a = n.as_array();
  if (!a) fail(n, field, "expected an array");
  if (len && a->size() != len) fail(n, field, "expected " + std::to_string(len) + " entries, got " + std::to_string(a->size()));
  return *a;
}

template <typename F>
Matrix<Poly4> poly_matrix(const toml::node& n, const std::string& field, F&& entry) {
  Matrix<Poly4> m(4, 4);
  const auto& rows = array_of(n, field, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    std::string rf = field + "[" + std::to_string(i) + "]";
    const auto& row = array_of(rows[i], rf, 4);
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = entry(row[j], rf + "[" + std::to_string(j) + "]");
  }
  return m;
}

void read_constants(const toml::table& t, ModelFile& m) {
  known_keys(t, "constants", {"kappa", "xi", "k", "varrho", "h55_sign"});
  auto nonzero = [&](std::string_view key, Rational& out) {
    if (const toml::node* n = t.get(key)) {
      std::string f = "constants." + std::string(key);
      out = rational_of(*n, f);
      if (sgn(out) == 0) fail(*n, f, "must be nonzero");
    }
  };
  nonzero("kappa", m.kappa);
  nonzero("xi", m.xi);
  nonzero("k", m.k);
  nonzero("varrho", m.varrho);
  if (const toml::node* n = t.get("h55_sign")) {
    m.h55_sign = int_of(*n, "constants.h55_sign", -1, 1);
    if (m.h55_sign == 0) fail(*n, "constants.h55_sign", "must be +1 or -1");
  }
}

void read_metric(const toml::node& n, ModelFile& m) {
  Matrix<Poly4> g = poly_matrix(n, "metric", poly_of);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (g(i, j) != g(j, i))
        fail(n, "metric[" + std::to_string(i) + "][" + std::to_string(j) + "]", "metric is not symmetric");
  try {
    m.metric = MetricG(g);
  } catch (const std::exception& e) {
    fail(n, "metric", e.what());
  }
}

void read_sform(const toml::node& n, ModelFile& m) {
  auto arr = n.as_array();
  if (!arr) fail(n, "sform", "expected an array of tables");
  std::set<std::array<int, 3>> seen;
  for (std::size_t i = 0; i < arr->size(); ++i) {
    std::string f = "sform[" + std::to_string(i) + "]";
    auto e = (*arr)[i].as_table();
    if (!e) fail((*arr)[i], f, "expected a table");
    known_keys(*e, f, {"alpha", "beta", "A", "poly"});
    int a = int_of(require(*e, "alpha", f), f + ".alpha", 0, 3);
    int b = int_of(require(*e, "beta", f), f + ".beta", 0, 3);
    int C = index5_of(require(*e, "A", f), f + ".A");
    if (a == b) fail(*e, f, "alpha = beta: S^{ab}_A is antisymmetric in its upper pair");
    if (!seen.insert({std::min(a, b), std::max(a, b), C}).second) fail(*e, f, "duplicate entry for this component");
    m.S.set(a, b, C, poly_of(require(*e, "poly", f), f + ".poly"));
  }
}

void read_matter(const toml::table& t, ModelFile& m) {
  known_keys(t, "matter", {"Theta", "Xi", "sigma"});
  MatterTables mt;
  if (const toml::node* n = t.get("Theta")) mt.Theta = poly_matrix(*n, "matter.Theta", poly_of);
  if (const toml::node* n = t.get("Xi")) mt.Xi = poly_matrix(*n, "matter.Xi", poly_of);
  if (const toml::node* n = t.get("sigma")) {
    auto arr = n->as_array();
    if (!arr) fail(*n, "matter.sigma", "expected an array of tables");
    for (std::size_t i = 0; i < arr->size(); ++i) {
      std::string f = "matter.sigma[" + std::to_string(i) + "]";
      auto e = (*arr)[i].as_table();
      if (!e) fail((*arr)[i], f, "expected a table");
      known_keys(*e, f, {"a", "m", "n", "poly"});
      int a = int_of(require(*e, "a", f), f + ".a", 0, 3);
      int mu = int_of(require(*e, "m", f), f + ".m", 0, 3);
      int nu = int_of(require(*e, "n", f), f + ".n", 0, 3);
      if (mu == nu) fail(*e, f, "m = n: Sigma^a_{mn} is antisymmetric in its lower pair");
      Poly4 v = poly_of(require(*e, "poly", f), f + ".poly");
      mt.Sigma[a][mu][nu] = v;
      mt.Sigma[a][nu][mu] = -v;
    }
  }
  m.matter = std::move(mt);
}

void read_charts(const toml::node& n, ModelFile& m) {
  auto arr = n.as_array();
  if (!arr) fail(n, "charts", "expected an array of tables");
  const Rational eta_d[4] = {1, -1, -1, -1};
  for (std::size_t c = 0; c < arr->size(); ++c) {
    std::string f = "charts[" + std::to_string(c) + "]";
    auto e = (*arr)[c].as_table();
    if (!e) fail((*arr)[c], f, "expected a table");
    known_keys(*e, f, {"Lambda", "a"});
    const toml::node& ln = require(*e, "Lambda", f);
    Matrix<Rational> L(4, 4);
    const auto& rows = array_of(ln, f + ".Lambda", 4);
    for (std::size_t i = 0; i < 4; ++i) {
      std::string rf = f + ".Lambda[" + std::to_string(i) + "]";
      const auto& row = array_of(rows[i], rf, 4);
      for (std::size_t j = 0; j < 4; ++j) L(i, j) = rational_of(row[j], rf + "[" + std::to_string(j) + "]");
    }
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        Rational v;
        for (std::size_t r = 0; r < 4; ++r) v += L(r, i) * eta_d[r] * L(r, j);
        Rational want = i == j ? eta_d[i] : Rational(0);
        if (v != want)
          fail(ln, f + ".Lambda",
               "not a Lorentz matrix: (Lambda^T eta Lambda)[" + std::to_string(i) + "][" + std::to_string(j) +
                   "] = " + to_string(v) + ", expected " + to_string(want));
      }
    Vec4Q a{};
    if (const toml::node* an = e->get("a")) {
      const auto& arr4 = array_of(*an, f + ".a", 4);
      for (std::size_t i = 0; i < 4; ++i) a[i] = rational_of(arr4[i], f + ".a[" + std::to_string(i) + "]");
    }
    m.charts.emplace_back(L, a);
  }
}

void read_gauge(const toml::table& t, ModelFile& m) {
  known_keys(t, "gauge", {"n", "coupling", "C"});
  int n = int_of(require(t, "n", "gauge"), "gauge.n", 1, 8);
  GaugeSection gs{GaugeC(n), 1};
  if (const toml::node* c = t.get("coupling")) {
    gs.coupling = rational_of(*c, "gauge.coupling");
    if (sgn(gs.coupling) == 0) fail(*c, "gauge.coupling", "must be nonzero");
  }
  if (const toml::node* cn = t.get("C")) {
    auto arr = cn->as_array();
    if (!arr) fail(*cn, "gauge.C", "expected an array of tables");
    std::set<std::array<int, 3>> seen;
    for (std::size_t i = 0; i < arr->size(); ++i) {
      std::string f = "gauge.C[" + std::to_string(i) + "]";
      auto e = (*arr)[i].as_table();
      if (!e) fail((*arr)[i], f, "expected a table");
      known_keys(*e, f, {"A", "row", "col", "poly"});
      int A = index5_of(require(*e, "A", f), f + ".A");
      int r = int_of(require(*e, "row", f), f + ".row", 0, n);
      int c = int_of(require(*e, "col", f), f + ".col", 0, n);
      if (!seen.insert({A, r, c}).second) fail(*e, f, "duplicate entry for this component");
      gs.C.c[z(A)](z(r), z(c)) = cpoly_of(require(*e, "poly", f), f + ".poly");
    }
  }
  m.gauge = std::move(gs);
}

void read_curves(const toml::node& n, ModelFile& m) {
  auto arr = n.as_array();
  if (!arr) fail(n, "curves", "expected an array of tables");
  for (std::size_t c = 0; c < arr->size(); ++c) {
    std::string f = "curves[" + std::to_string(c) + "]";
    auto e = (*arr)[c].as_table();
    if (!e) fail((*arr)[c], f, "expected a table");
    known_keys(*e, f, {"x", "t0", "t1", "u0"});
    TransportCurve tc;
    const auto& xs = array_of(require(*e, "x", f), f + ".x", 4);
    for (std::size_t i = 0; i < 4; ++i) {
      std::string xf = f + ".x[" + std::to_string(i) + "]";
      tc.curve.x[i] = poly_of(xs[i], xf);
      for (int v = 1; v < 4; ++v)
        if (!partial(tc.curve.x[i], v).is_zero()) fail(xs[i], xf, "curve components may only use x0 as the parameter");
    }
    if (const toml::node* t0 = e->get("t0")) tc.curve.t0 = real_of(*t0, f + ".t0");
    if (const toml::node* t1 = e->get("t1")) tc.curve.t1 = real_of(*t1, f + ".t1");
    if (!(tc.curve.t1 > tc.curve.t0)) fail(*e, f, "t1 must exceed t0");
    const auto& us = array_of(require(*e, "u0", f), f + ".u0", 5);
    for (std::size_t i = 0; i < 5; ++i) tc.u0[i] = rational_of(us[i], f + ".u0[" + std::to_string(i) + "]");
    m.curves.push_back(std::move(tc));
  }
}

}  // namespace

FieldEqInputs ModelFile::field_inputs() const {
  FieldEqInputs in;
  in.g = metric;
  in.S = S;
  in.k = k;
  in.varrho = varrho;
  in.h55_sign = h55_sign;
  if (matter) {
    in.Theta = matter->Theta;
    in.Sigma = matter->Sigma;
    in.Xi = matter->Xi;
  }
  return in;
}

ModelFile parse_model(std::string_view text, const std::string& source) {
  toml::table root;
  try {
    root = toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    throw ModelError("line " + std::to_string(e.source().begin.line) + ": syntax error: " + std::string(e.description()));
  }
  known_keys(root, "", {"name", "constants", "metric", "sform", "matter", "charts", "gauge", "curves"});
  ModelFile m;
  if (const toml::node* n = root.get("name")) {
    auto s = n->as_string();
    if (!s) fail(*n, "name", "expected a string");
    m.name = s->get();
  }
  if (const toml::node* n = root.get("constants")) {
    auto t = n->as_table();
    if (!t) fail(*n, "constants", "expected a table");
    read_constants(*t, m);
  }
  if (const toml::node* n = root.get("metric")) read_metric(*n, m);
  if (const toml::node* n = root.get("sform")) read_sform(*n, m);
  if (const toml::node* n = root.get("matter")) {
    auto t = n->as_table();
    if (!t) fail(*n, "matter", "expected a table");
    read_matter(*t, m);
  }
  if (const toml::node* n = root.get("charts")) read_charts(*n, m);
  if (const toml::node* n = root.get("gauge")) {
    auto t = n->as_table();
    if (!t) fail(*n, "gauge", "expected a table");
    read_gauge(*t, m);
  }
  if (const toml::node* n = root.get("curves")) read_curves(*n, m);
  return m;
}

ModelFile load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_model(buf.str(), path);
  } catch (const ModelError& e) {
    throw ModelError(path + ": " + e.what());
  }
}

}  // namespace fv

#include "fivevec/noether.hpp"

#include <set>
#include <stdexcept>

namespace fv {

namespace {

constexpr int k5 = 4;

std::size_t z(int i) { return static_cast<std::size_t>(i); }

std::string index_name(int A) { return A == k5 ? "5" : std::to_string(A); }

// Symbol for component `comp` of field f (comp < 0 for scalars), optionally differentiated along A.
std::string field_symbol(const MatterField& f, int comp, int A = -1) {
  std::string s = f.name;
  if (f.type == FieldType::FiveVector) s += "_" + index_name(comp);
  if (A >= 0) s = "D" + index_name(A) + "_" + s;
  return s;
}

int components(const MatterField& f) { return f.type == FieldType::Scalar ? 1 : 5; }

MTensor from_tensor(const Tensor5& t) {
  MTensor M;
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B)
      for (int C = 0; C < 5; ++C) M.c[A][B][C] = t.at({A, B, C});
  return M;
}

// q^A = B^A_C o^C with B^5_a = sign * x_a.
MTensor change_lower(const MTensor& M, int sign) {
  std::array<Poly4, 5> xl;
  for (int a = 0; a < 4; ++a) xl[a] = Poly4(sign * (a == 0 ? 1 : -1)) * Poly4::var(a);
  MTensor out;
  for (int A = 0; A < 5; ++A)
    for (int C = 0; C < 5; ++C)
      for (int D = 0; D < 5; ++D) {
        // M'_{CD} = M_{PQ} B^P_C B^Q_D, B^P_C = delta^P_C + delta^P_5 xl_C.
        Poly4 v = M.c[A][C][D];
        if (C < 4) v += xl[C] * M.c[A][k5][D];
        if (D < 4) v += xl[D] * M.c[A][C][k5];
        if (C < 4 && D < 4) v += xl[C] * xl[D] * M.c[A][k5][k5];
        out.c[A][C][D] = v;
      }
  return out;
}

}  // namespace

bool MTensor::antisymmetric() const {
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B)
      for (int C = B; C < 5; ++C)
        if (c[A][B][C] != -c[A][C][B]) return false;
  return true;
}

Tensor5 MTensor::as_tensor() const {
  Tensor5 t({true, false, false});
  for (int A = 0; A < 5; ++A)
    for (int B = 0; B < 5; ++B)
      for (int C = 0; C < 5; ++C) t.at({A, B, C}) = c[A][B][C];
  return t;
}

MTensor assemble_M(const Matrix<Poly4>& Theta, const Table3<Poly4, 4, 4, 4>& Sigma) {
  for (int m = 0; m < 4; ++m)
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b)
        if (Sigma[m][a][b] != -Sigma[m][b][a])
          throw std::invalid_argument("Sigma^" + std::to_string(m) + "_{" + std::to_string(a) + std::to_string(b) +
                                      "} breaks antisymmetry in its lower indices");
  std::array<Poly4, 4> xl;
  for (int a = 0; a < 4; ++a) xl[a] = Poly4(a == 0 ? 1 : -1) * Poly4::var(a);
  MTensor M;
  for (int m = 0; m < 4; ++m) {
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b)
        M.c[m][a][b] = xl[a] * Theta(z(m), z(b)) - xl[b] * Theta(z(m), z(a)) + Sigma[m][a][b];
      M.c[m][k5][a] = Theta(z(m), z(a));
      M.c[m][a][k5] = -Theta(z(m), z(a));
    }
  }
  return M;
}

MTensor M_to_O_basis(const MTensor& M) { return change_lower(M, -1); }
MTensor M_to_P_basis(const MTensor& M) { return change_lower(M, 1); }

MTensor transform_M_p_basis(const MTensor& M, const LorentzChart& chart) {
  Matrix<Poly4> P = lift(p_basis_change(chart));
  Matrix<Poly4> Lam = lift(chart.Lambda);
  MTensor low;  // lower indices first
  for (int A = 0; A < 5; ++A)
    for (int C = 0; C < 5; ++C)
      for (int D = 0; D < 5; ++D) {
        Poly4 v;
        for (int p = 0; p < 5; ++p)
          for (int q = 0; q < 5; ++q)
            if (!P(z(p), z(C)).is_zero() && !P(z(q), z(D)).is_zero()) v += M.c[A][p][q] * P(z(p), z(C)) * P(z(q), z(D));
        low.c[A][C][D] = v;
      }
  MTensor out;
  for (int C = 0; C < 5; ++C)
    for (int D = 0; D < 5; ++D) {
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) out.c[m][C][D] += Lam(z(m), z(n)) * low.c[n][C][D];
      out.c[k5][C][D] = low.c[k5][C][D];
    }
  return out;
}

FlatConservation flat_conservation(const MTensor& M_p) {
  FlatConservation r;
  for (int B = 0; B < 5; ++B)
    for (int C = 0; C < 5; ++C)
      for (int m = 0; m < 4; ++m) r.p_basis(z(B), z(C)) += partial(M_p.c[m][B][C], m);

  MTensor M = M_to_O_basis(M_p);
  // Only G^5_{a mu} = -eta_{a mu} is nonzero, so only M^mu_{5C} and M^mu_{B5} enter.
  auto eta = [](int a, int m) { return a != m ? Rational(0) : Rational(a == 0 ? 1 : -1); };
  for (int B = 0; B < 5; ++B)
    for (int C = 0; C < 5; ++C) {
      Poly4 v;
      for (int m = 0; m < 4; ++m) {
        v += partial(M.c[m][B][C], m);
        if (B < 4 && sgn(eta(B, m)) != 0) v += Poly4(eta(B, m)) * M.c[m][k5][C];
        if (C < 4 && sgn(eta(C, m)) != 0) v += Poly4(eta(C, m)) * M.c[m][B][k5];
      }
      r.o_basis(z(B), z(C)) = v;
    }
  return r;
}

Matrix<Poly4> modified_divergence(const MTensor& M, const ConnectionH& H) {
  Tensor5 T = M.as_tensor();
  Matrix<Poly4> out(5, 5);
  for (int A = 0; A < 5; ++A) {
    Tensor5 d = pentad_derivative(T, H, A);
    Poly4 trace;
    for (int K = 0; K < 5; ++K) trace += H(K, K, A) - H(K, A, K);
    for (int B = 0; B < 5; ++B)
      for (int C = 0; C < 5; ++C) {
        out(z(B), z(C)) += d.at({A, B, C});
        if (!trace.is_zero()) out(z(B), z(C)) += trace * M.c[A][B][C];
      }
  }
  return out;
}

bool CurvedConservation::ok() const {
  for (const auto& p : mu5)
    if (!p.is_zero()) return false;
  return munu.is_zero_matrix();
}

CurvedConservation conservation_residual(const MTensor& M, const ConnectionH& H, const MetricG& g) {
  CurvK K = build_K(curvature_from_H(H), g);
  Matrix<Poly4> div = modified_divergence(M, H);
  CurvedConservation r;
  for (int m = 0; m < 4; ++m) {
    Poly4 src;
    for (int A = 0; A < 5; ++A)
      for (int S = 0; S < 5; ++S)
        for (int T = S + 1; T < 5; ++T)
          if (!M.c[A][S][T].is_zero() && !K.c[S][T][m][A].is_zero()) src += M.c[A][S][T] * K.c[S][T][m][A];
    r.mu5[m] = div(z(m), z(k5)) - src;
    for (int n = 0; n < 4; ++n) r.munu(z(m), z(n)) = div(z(m), z(n));
  }
  return r;
}

MatterModel::MatterModel(std::vector<MatterField> fields, FormalPoly lagrangian)
    : fields_(std::move(fields)), lagrangian_(std::move(lagrangian)) {
  std::set<std::string> names;
  for (const auto& f : fields_)
    if (!names.insert(f.name).second) throw std::invalid_argument("field '" + f.name + "' declared twice");
  std::vector<std::string> declared = declared_symbols();
  std::set<std::string> known(declared.begin(), declared.end());
  for (const auto& s : lagrangian_.symbols())
    if (!known.count(s)) throw std::invalid_argument("Lagrangian uses undeclared symbol '" + s + "'");
}

std::vector<std::string> MatterModel::declared_symbols() const {
  std::vector<std::string> out;
  for (const auto& f : fields_) {
    int n = components(f);
    for (int i = 0; i < n; ++i) {
      int comp = f.type == FieldType::Scalar ? -1 : i;
      out.push_back(field_symbol(f, comp));
      for (int A = 0; A < 5; ++A) out.push_back(field_symbol(f, comp, A));
    }
  }
  return out;
}

MTensor canonical_currents(const MatterModel& model, const FieldValues& values, const ConnectionH& H, const MetricG& g) {
  const auto& fields = model.fields();
  if (values.size() != fields.size()) throw std::invalid_argument("one value list per declared field is required");
  BivCoeffs5 coeffs = biv_coeffs_five(g, christoffel(g));

  // Covariant derivatives D_A U (all five directions) and D_{mn} U for every field component.
  std::map<std::string, Poly4> subs;
  std::vector<std::vector<std::array<Poly4, 5>>> dA(fields.size());  // [field][comp][A]
  std::vector<std::vector<Table3<Poly4, 1, 4, 4>>> dmn(fields.size());
  for (std::size_t l = 0; l < fields.size(); ++l) {
    const MatterField& f = fields[l];
    int n = components(f);
    if (static_cast<int>(values[l].size()) != n)
      throw std::invalid_argument("field '" + f.name + "' expects " + std::to_string(n) + " components");
    dA[l].resize(z(n));
    dmn[l].resize(z(n));
    if (f.type == FieldType::Scalar) {
      for (int A = 0; A < 5; ++A) dA[l][0][z(A)] = A == k5 ? Poly4() : partial(values[l][0], A);
      // D_{mn} of a scalar vanishes for spacetime pairs.
    } else {
      FiveVecField u;
      for (int B = 0; B < 5; ++B) u.c[z(B)] = values[l][z(B)];
      for (int A = 0; A < 5; ++A) {
        FiveVecField d = pentad_derivative(u, H, A);
        for (int B = 0; B < 5; ++B) dA[l][z(B)][z(A)] = d.c[z(B)];
      }
      for (int m = 0; m < 4; ++m)
        for (int q = 0; q < 4; ++q) {
          FiveVecField d = D_fivevec(Bivector5Field::basis(m, q), u, coeffs);
          for (int B = 0; B < 5; ++B) dmn[l][z(B)][0][m][q] = d.c[z(B)];
        }
    }
    for (int i = 0; i < n; ++i) {
      int comp = f.type == FieldType::Scalar ? -1 : i;
      subs[field_symbol(f, comp)] = values[l][z(i)];
      for (int A = 0; A < 5; ++A) subs[field_symbol(f, comp, A)] = dA[l][z(i)][z(A)];
    }
  }

  const FormalPoly& L = model.lagrangian();
  Poly4 Lval = L.substitute(subs);
  MTensor M;
  for (int A = 0; A < 5; ++A) {
    for (int m = 0; m < 4; ++m) {
      Poly4 v = A == m ? Lval : Poly4();
      for (std::size_t l = 0; l < fields.size(); ++l)
        for (int i = 0; i < components(fields[l]); ++i) {
          int comp = fields[l].type == FieldType::Scalar ? -1 : i;
          FormalPoly dL = L.derivative(field_symbol(fields[l], comp, A));
          if (dL.is_zero()) continue;
          Poly4 p = dL.substitute(subs);
          v -= p * dA[l][z(i)][z(m)];
          for (int q = 0; q < 4; ++q) M.c[A][m][q] -= p * dmn[l][z(i)][0][m][q];
        }
      M.c[A][m][k5] = v;
      M.c[A][k5][m] = -v;
    }
  }
  return M;
}

}  // namespace fv

#include "fivevec/scalarfield.hpp"

namespace fv {

Poly4 apply_fiveop(const FiveOpField& u, const Poly4& f) {
  Poly4 out = u.u[kFive] * f;
  for (int a = 0; a < 4; ++a) out += u.u[a] * partial(f, a);
  return out;
}

FiveOpField commutator(const FiveOpField& u, const FiveOpField& v) {
  FiveOpField w;
  for (int b = 0; b < 5; ++b)
    for (int a = 0; a < 4; ++a) w.u[b] += u.u[a] * partial(v.u[b], a) - v.u[a] * partial(u.u[b], a);
  return w;
}

Poly4 substitute_chart(const Poly4& f, const Matrix<Rational>& Lambda, const std::array<Rational, 4>& a) {
  if (Lambda.rows() != 4 || Lambda.cols() != 4) throw std::invalid_argument("chart matrix must be 4x4");
  Matrix<Rational> inv = inverse(Lambda);
  std::array<Poly4, 4> subs;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) subs[i] += Poly4(inv(i, j)) * (Poly4::var(static_cast<int>(j)) - Poly4(a[j]));
  return compose(f, subs);
}

}  // namespace fv

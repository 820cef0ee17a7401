#pragma once

#include <array>

#include "fivevec/linalg.hpp"
#include "fivevec/poly.hpp"

namespace fv {

// Slot holding the paper's index 5.
inline constexpr int kFive = 4;

// u^alpha d_alpha + u^5 * 1 in a coordinate five-vector basis.
struct FiveOpField {
  std::array<Poly4, 5> u;
  friend bool operator==(const FiveOpField&, const FiveOpField&) = default;
};

Poly4 apply_fiveop(const FiveOpField& u, const Poly4& f);
FiveOpField commutator(const FiveOpField& u, const FiveOpField& v);

// f expressed in primed coordinates x' = Lambda x + a.
Poly4 substitute_chart(const Poly4& f, const Matrix<Rational>& Lambda, const std::array<Rational, 4>& a);

}  // namespace fv

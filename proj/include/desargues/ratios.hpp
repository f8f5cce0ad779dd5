#pragma once

// Ratios of points of ℓ^{OI}, identified with their skew-field coordinates.
// Factor order is exactly as displayed in the definitions; nothing here may
// be rearranged as if multiplication commuted.

#include "desargues/error.hpp"
#include "desargues/field.hpp"

namespace desargues {

/// r(A:B) = B⁻¹·A
template <SkewScalar S>
S ratio2(const S& a, const S& b) {
  if (is_zero(b)) throw Error(ErrorKind::ZeroDenominatorPoint, "r(A:B) with B = O, A = " + to_string(a));
  return inv(b) * a;
}

/// r(A,B;C) = (B−C)⁻¹·(A−C), the R with (B−C)·R = A−C.
template <SkewScalar S>
S ratio3(const S& a, const S& b, const S& c) {
  const S bc = b - c;
  if (is_zero(bc)) throw Error(ErrorKind::CoincidentPoints, "r(A,B;C) with B = C = " + to_string(b));
  return inv(bc) * (a - c);
}

/// c_r(A,B;C,D) = [(A−D)⁻¹(B−D)]·[(B−C)⁻¹(A−C)]
///
/// Defined whenever the two inverted differences are nonzero. The error
/// names the vanishing difference, (A−D) checked first.
template <SkewScalar S>
S cross_ratio(const S& a, const S& b, const S& c, const S& d) {
  const S ad = a - d;
  if (is_zero(ad)) {
    throw Error(ErrorKind::SingularCrossRatio, "(A-D) = 0 with A = D = " + to_string(a));
  }
  const S bc = b - c;
  if (is_zero(bc)) {
    throw Error(ErrorKind::SingularCrossRatio, "(B-C) = 0 with B = C = " + to_string(b));
  }
  const S left = inv(ad) * (b - d);
  const S right = inv(bc) * (a - c);
  return left * right;
}

/// The stricter classical hypothesis: no three of the four points equal.
template <SkewScalar S>
bool no_three_equal(const S& a, const S& b, const S& c, const S& d) {
  auto three = [](const S& x, const S& y, const S& z) { return x == y && y == z; };
  return !(three(a, b, c) || three(a, b, d) || three(a, c, d) || three(b, c, d));
}

}  // namespace desargues

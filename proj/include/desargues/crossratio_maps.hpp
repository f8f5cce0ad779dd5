#pragma once

// The four cross-ratio map families. Family A frees the first slot of
// c_r(·,·;·,·), family B the second, and so on:
//
//   A: μ(X)   = c_r(X,B;C,D)      B: f_B(X) = c_r(A,X;C,D)
//   C: f_C(X) = c_r(A,B;X,D)      D: f_D(X) = c_r(A,B;C,X)
//
// All four share one engine indexed by the free slot k ∈ {0,1,2,3}. Since
// c_r(A,B;C,D) = [(A−D)⁻¹(B−D)][(B−C)⁻¹(A−C)], the slot of X pairs with a
// fixed slot in three ways:
//   k ^ 3  the inverted difference vanishes   -> singular point
//   k ^ 2  a numerator difference vanishes    -> zero point   (value O)
//   k ^ 1  both brackets collapse to I        -> unit point   (value I)
// and the inverse of c_r(A,B;C,D) is c_r(A,B;D,C) for every family.

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "desargues/error.hpp"
#include "desargues/field.hpp"
#include "desargues/ratios.hpp"
#include "desargues/sylvester.hpp"

namespace desargues {

enum class MapFamily { A = 0, B = 1, C = 2, D = 3 };

constexpr char family_letter(MapFamily f) noexcept { return "ABCD"[static_cast<int>(f)]; }

constexpr std::size_t free_slot(MapFamily f) noexcept { return static_cast<std::size_t>(f); }

/// Names of the three fixed points in slot order, e.g. "B,C,D" for family A.
inline std::string base_slot_names(MapFamily f) {
  std::string names;
  for (std::size_t slot = 0; slot < 4; ++slot) {
    if (slot == free_slot(f)) continue;
    if (!names.empty()) names += ',';
    names += "ABCD"[slot];
  }
  return names;
}

/// A family together with its three fixed points, stored in slot order.
/// Construction enforces the standing hypotheses: pairwise distinct, none O.
template <SkewScalar S>
class CrossRatioBase {
 public:
  static CrossRatioBase make(MapFamily family, S p, S q, S r) {
    const std::array<S, 3> pts{std::move(p), std::move(q), std::move(r)};
    const std::string names = base_slot_names(family);
    for (std::size_t i = 0; i < 3; ++i) {
      if (is_zero(pts[i])) {
        throw Error(ErrorKind::InvalidBase, std::string("base point ") + names[2 * i] + " is O");
      }
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (pts[i] == pts[j]) {
          throw Error(ErrorKind::InvalidBase, std::string("base points ") + names[2 * i] + " and " +
                                                  names[2 * j] + " coincide at " + to_string(pts[i]));
        }
      }
    }
    return CrossRatioBase(family, pts);
  }

  MapFamily family() const noexcept { return family_; }
  const std::array<S, 3>& points() const noexcept { return points_; }

  /// The fixed point sitting in cross-ratio slot `slot` (≠ the free slot).
  const S& at_slot(std::size_t slot) const {
    const std::size_t k = free_slot(family_);
    return points_[slot < k ? slot : slot - 1];
  }

  /// The four cross-ratio arguments with X in the free slot.
  std::array<S, 4> slots(const S& x) const {
    const std::size_t k = free_slot(family_);
    std::array<S, 4> out{x, x, x, x};
    for (std::size_t slot = 0, i = 0; slot < 4; ++slot) {
      if (slot != k) out[slot] = points_[i++];
    }
    return out;
  }

  std::string describe() const {
    return std::string("family ") + family_letter(family_) + " (" + base_slot_names(family_) +
           ")=(" + to_string(points_[0]) + ", " + to_string(points_[1]) + ", " +
           to_string(points_[2]) + ")";
  }

 private:
  CrossRatioBase(MapFamily family, std::array<S, 3> points)
      : family_(family), points_(std::move(points)) {}

  MapFamily family_;
  std::array<S, 3> points_;
};

/// The argument at which evaluation is undefined.
template <SkewScalar S>
const S& singular_point(const CrossRatioBase<S>& base) {
  return base.at_slot(free_slot(base.family()) ^ 3U);
}

/// The X with evaluate(base, X) = O: C, D, A, B for families A, B, C, D.
template <SkewScalar S>
S zero_point(const CrossRatioBase<S>& base) {
  return base.at_slot(free_slot(base.family()) ^ 2U);
}

/// The X with evaluate(base, X) = I: B, A, D, C for families A, B, C, D.
template <SkewScalar S>
S unit_point(const CrossRatioBase<S>& base) {
  return base.at_slot(free_slot(base.family()) ^ 1U);
}

template <SkewScalar S>
S evaluate(const CrossRatioBase<S>& base, const S& x) {
  if (x == singular_point(base)) {
    throw Error(ErrorKind::SingularArgument, std::string("X = ") + to_string(x) + " equals " +
                                                 "ABCD"[free_slot(base.family()) ^ 3U] +
                                                 " for " + base.describe());
  }
  const auto s = base.slots(x);
  return cross_ratio(s[0], s[1], s[2], s[3]);
}

/// {value at X}⁻¹, computed as the cross-ratio with its last two slots
/// swapped. Defined when X is neither the singular nor the zero point.
template <SkewScalar S>
S inverse_value(const CrossRatioBase<S>& base, const S& x) {
  if (x == singular_point(base)) {
    throw Error(ErrorKind::SingularArgument, "X = " + to_string(x) + " for " + base.describe());
  }
  if (x == zero_point(base)) {
    throw Error(ErrorKind::ZeroValueNotInvertible,
                "value at X = " + to_string(x) + " is O for " + base.describe());
  }
  const auto s = base.slots(x);
  return cross_ratio(s[0], s[1], s[3], s[2]);
}

namespace detail {

// I, obtained from any nonzero element without a field context.
template <SkewScalar S>
S one_from(const S& nonzero) {
  return inv(nonzero) * nonzero;
}

}  // namespace detail

/// Some X ≠ singular point with evaluate(base, X) = v, if one exists and can
/// be found. Families B, C and D invert in closed form; family A reduces to
/// K·X − X·v = K·C − D·v with K = (B−D)(B−C)⁻¹.
template <SkewScalar S>
std::optional<S> preimage(const CrossRatioBase<S>& base, const S& v) {
  const auto fixed = [&](std::size_t slot) -> const S& { return base.at_slot(slot); };
  std::optional<S> candidate;
  switch (base.family()) {
    case MapFamily::A: {
      const S& b = fixed(1);
      const S& c = fixed(2);
      const S& d = fixed(3);
      const S k = (b - d) * inv(b - c);
      candidate = solve_sylvester(k, v, k * c - d * v);
      break;
    }
    case MapFamily::B: {
      // (X−D)(X−C)⁻¹ = w := (A−D)·v·(A−C)⁻¹, so (1−w)·X = D − w·C.
      const S& a = fixed(0);
      const S& c = fixed(2);
      const S& d = fixed(3);
      const S w = (a - d) * v * inv(a - c);
      const S one_minus_w = detail::one_from(a) - w;
      if (!is_zero(one_minus_w)) candidate = inv(one_minus_w) * (d - w * c);
      break;
    }
    case MapFamily::C: {
      // (B−X)⁻¹(A−X) = w := (B−D)⁻¹(A−D)·v, so X·(w−1) = B·w − A.
      const S& a = fixed(0);
      const S& b = fixed(1);
      const S& d = fixed(3);
      const S w = inv(b - d) * (a - d) * v;
      const S w_minus_one = w - detail::one_from(a);
      if (!is_zero(w_minus_one)) candidate = (b * w - a) * inv(w_minus_one);
      break;
    }
    case MapFamily::D: {
      // (A−X)⁻¹(B−X) = w := v·(A−C)⁻¹(B−C), so X·(w−1) = A·w − B.
      const S& a = fixed(0);
      const S& b = fixed(1);
      const S& c = fixed(2);
      const S w = v * inv(a - c) * (b - c);
      const S w_minus_one = w - detail::one_from(a);
      if (!is_zero(w_minus_one)) candidate = (a * w - b) * inv(w_minus_one);
      break;
    }
  }
  if (!candidate || *candidate == singular_point(base)) return std::nullopt;
  if (!(evaluate(base, *candidate) == v)) return std::nullopt;
  return candidate;
}

}  // namespace desargues

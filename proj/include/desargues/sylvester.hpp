#pragma once

// Solves K·X − X·V = R for X, per backend. Only needed to decide whether a
// value is attained by the first cross-ratio family, whose defining equation
// is of this two-sided form.

#include <array>
#include <optional>
#include <utility>

#include "desargues/prime_field.hpp"
#include "desargues/quaternion.hpp"
#include "desargues/rational.hpp"

namespace desargues {

namespace detail {

// Commutative case: X·(K − V) = R. When K = V and R = 0 every X solves it
// and 0 is returned as the representative.
template <class S>
std::optional<S> sylvester_commutative(const S& k, const S& v, const S& r) {
  const S diff = k - v;
  if (is_zero(diff)) {
    if (is_zero(r)) return r;
    return std::nullopt;
  }
  return r * inv(diff);
}

}  // namespace detail

inline std::optional<Rational> solve_sylvester(const Rational& k, const Rational& v,
                                               const Rational& r) {
  return detail::sylvester_commutative(k, v, r);
}

inline std::optional<PrimeFieldElement> solve_sylvester(const PrimeFieldElement& k,
                                                        const PrimeFieldElement& v,
                                                        const PrimeFieldElement& r) {
  return detail::sylvester_commutative(k, v, r);
}

/// X ↦ K·X − X·V is ℚ-linear on ℚ⁴; solve the 4×4 system by Gauss-Jordan
/// elimination. With a singular system, free unknowns are set to zero and the
/// resulting particular solution is returned if consistent.
inline std::optional<Quaternion> solve_sylvester(const Quaternion& k, const Quaternion& v,
                                                 const Quaternion& r) {
  const std::array<Quaternion, 4> basis{Quaternion(1), Quaternion::i(), Quaternion::j(),
                                        Quaternion::k()};
  auto components = [](const Quaternion& q) {
    return std::array<Rational, 4>{q.w(), q.x(), q.y(), q.z()};
  };
  // Augmented matrix, column c = image of basis[c], last column = R.
  std::array<std::array<Rational, 5>, 4> m;
  for (std::size_t c = 0; c < 4; ++c) {
    const auto col = components(k * basis[c] - basis[c] * v);
    for (std::size_t row = 0; row < 4; ++row) m[row][c] = col[row];
  }
  const auto rhs = components(r);
  for (std::size_t row = 0; row < 4; ++row) m[row][4] = rhs[row];

  std::array<int, 4> pivot_col{-1, -1, -1, -1};
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 4 && rank < 4; ++col) {
    std::size_t p = rank;
    while (p < 4 && m[p][col].is_zero()) ++p;
    if (p == 4) continue;
    std::swap(m[p], m[rank]);
    const Rational scale = m[rank][col].reciprocal();
    for (auto& x : m[rank]) x *= scale;
    for (std::size_t row = 0; row < 4; ++row) {
      if (row == rank || m[row][col].is_zero()) continue;
      const Rational f = m[row][col];
      for (std::size_t c = 0; c < 5; ++c) m[row][c] -= f * m[rank][c];
    }
    pivot_col[rank] = static_cast<int>(col);
    ++rank;
  }
  for (std::size_t row = rank; row < 4; ++row) {
    if (!m[row][4].is_zero()) return std::nullopt;
  }
  std::array<Rational, 4> x{};
  for (std::size_t row = 0; row < rank; ++row) x[pivot_col[row]] = m[row][4];
  return Quaternion(x[0], x[1], x[2], x[3]);
}

}  // namespace desargues

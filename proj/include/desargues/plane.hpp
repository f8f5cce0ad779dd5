#pragma once

// Coordinate affine plane over a skew field.
//
// Scalars act on the LEFT of vectors: the line through `base` with direction
// d is { base + t·d : t }. Directions are stored left-normalized so that the
// leading nonzero coordinate is 1, which turns parallelism into equality.

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "desargues/error.hpp"
#include "desargues/field.hpp"

namespace desargues {

template <SkewScalar S>
struct Point {
  S x;
  S y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
};

/// t·P, scalar on the left.
template <SkewScalar S>
Point<S> scale(const S& t, const Point<S>& p) {
  return {t * p.x, t * p.y};
}

template <SkewScalar S>
std::string to_string(const Point<S>& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

template <SkewScalar S>
class Line {
 public:
  /// Throws ZeroDirection when (dx, dy) = (0, 0).
  static Line through_direction(Point<S> base, const S& dx, const S& dy) {
    if (is_zero(dx) && is_zero(dy)) {
      throw Error(ErrorKind::ZeroDirection, "direction (0, 0) at " + to_string(base));
    }
    if (!is_zero(dx)) {
      const S k = inv(dx);
      return Line(std::move(base), Point<S>{k * dx, k * dy});
    }
    const S k = inv(dy);
    return Line(std::move(base), Point<S>{dx, k * dy});
  }

  const Point<S>& base() const noexcept { return base_; }
  const Point<S>& direction() const noexcept { return dir_; }

  /// base + t·direction
  Point<S> at(const S& t) const { return base_ + scale(t, dir_); }

  /// The parameter t with at(t) = p, when p is on the line.
  std::optional<S> parameter_of(const Point<S>& p) const {
    const Point<S> offset = p - base_;
    if (!is_zero(dir_.x)) {
      S t = offset.x;  // dir_.x == 1
      if (t * dir_.y == offset.y) return t;
      return std::nullopt;
    }
    if (!is_zero(offset.x)) return std::nullopt;
    return offset.y;  // dir_ == (0, 1)
  }

  bool contains(const Point<S>& p) const { return parameter_of(p).has_value(); }

  /// Same point set: equal directions and each base lies on the other line.
  friend bool operator==(const Line& a, const Line& b) {
    return a.dir_ == b.dir_ && a.contains(b.base_) && b.contains(a.base_);
  }

 private:
  Line(Point<S> base, Point<S> dir) : base_(std::move(base)), dir_(std::move(dir)) {}

  Point<S> base_;
  Point<S> dir_;
};

template <SkewScalar S>
std::string to_string(const Line<S>& l) {
  const auto& b = l.base();
  const auto& d = l.direction();
  return "{base=(" + to_string(b.x) + "," + to_string(b.y) + "), dir=(" + to_string(d.x) + "," +
         to_string(d.y) + ")}";
}

/// The unique line through two distinct points.
template <SkewScalar S>
Line<S> line_through(const Point<S>& p, const Point<S>& q) {
  if (p == q) throw Error(ErrorKind::CoincidentPoints, "line through " + to_string(p) + " twice");
  const Point<S> d = q - p;
  return Line<S>::through_direction(p, d.x, d.y);
}

/// The unique line through p parallel to l (l itself when p ∈ l).
template <SkewScalar S>
Line<S> parallel_through(const Point<S>& p, const Line<S>& l) {
  if (l.contains(p)) return l;
  return Line<S>::through_direction(p, l.direction().x, l.direction().y);
}

template <SkewScalar S>
bool is_parallel(const Line<S>& a, const Line<S>& b) {
  return a.direction() == b.direction();
}

template <SkewScalar S>
bool on_line(const Point<S>& p, const Line<S>& l) {
  return l.contains(p);
}

template <SkewScalar S>
bool collinear(const Point<S>& p, const Point<S>& q, const Point<S>& r) {
  if (p == q || p == r || q == r) return true;
  return on_line(r, line_through(p, q));
}

/// t·d − s·e = r, read componentwise, with the unknowns t and s multiplying
/// from the left.
template <SkewScalar S>
struct Linear2System {
  Point<S> d;
  Point<S> e;
  Point<S> r;
};

template <SkewScalar S>
struct Solution2 {
  S t;
  S s;
};

struct NoSolution {};
struct Underdetermined {};

template <SkewScalar S>
using Solve2Result = std::variant<Solution2<S>, NoSolution, Underdetermined>;

namespace detail {

// Pivot on component `p` of d (nonzero), eliminate component `q`. Because t
// and s sit on the left, elimination right-multiplies by d_p⁻¹:
//   t = (r_p + s·e_p)·d_p⁻¹
//   s·(e_p·d_p⁻¹·d_q − e_q) = r_q − r_p·d_p⁻¹·d_q
template <SkewScalar S>
Solve2Result<S> solve2_pivot(const S& dp, const S& dq, const S& ep, const S& eq, const S& rp,
                             const S& rq) {
  const S dp_inv = inv(dp);
  const S ratio = dp_inv * dq;
  const S coeff = ep * ratio - eq;
  const S rhs = rq - rp * ratio;
  if (is_zero(coeff)) {
    if (is_zero(rhs)) return Underdetermined{};
    return NoSolution{};
  }
  S s = rhs * inv(coeff);
  S t = (rp + s * ep) * dp_inv;
  return Solution2<S>{std::move(t), std::move(s)};
}

}  // namespace detail

template <SkewScalar S>
Solve2Result<S> solve2(const Linear2System<S>& sys) {
  const auto& [d, e, r] = sys;
  Solve2Result<S> result = [&]() -> Solve2Result<S> {
    if (!is_zero(d.x)) return detail::solve2_pivot(d.x, d.y, e.x, e.y, r.x, r.y);
    if (!is_zero(d.y)) return detail::solve2_pivot(d.y, d.x, e.y, e.x, r.y, r.x);
    // d = 0: t is free, so at best the system is underdetermined.
    if (!is_zero(e.x)) {
      const S s = -(r.x * inv(e.x));
      return s * e.y == -r.y ? Solve2Result<S>{Underdetermined{}} : Solve2Result<S>{NoSolution{}};
    }
    if (!is_zero(e.y)) {
      const S s = -(r.y * inv(e.y));
      return s * e.x == -r.x ? Solve2Result<S>{Underdetermined{}} : Solve2Result<S>{NoSolution{}};
    }
    return is_zero(r.x) && is_zero(r.y) ? Solve2Result<S>{Underdetermined{}}
                                        : Solve2Result<S>{NoSolution{}};
  }();
  if (const auto* sol = std::get_if<Solution2<S>>(&result)) {
    if (!(sol->t * d.x - sol->s * e.x == r.x && sol->t * d.y - sol->s * e.y == r.y)) {
      throw std::logic_error("solve2: back-substitution failed");
    }
  }
  return result;
}

/// The unique common point of two non-parallel lines.
template <SkewScalar S>
Point<S> intersect(const Line<S>& a, const Line<S>& b) {
  if (a == b) throw Error(ErrorKind::IdenticalLines, to_string(a));
  if (is_parallel(a, b)) {
    throw Error(ErrorKind::ParallelLines, to_string(a) + " and " + to_string(b));
  }
  // base_a + t·dir_a = base_b + s·dir_b
  const auto result = solve2(Linear2System<S>{a.direction(), b.direction(), b.base() - a.base()});
  const auto* sol = std::get_if<Solution2<S>>(&result);
  if (sol == nullptr) throw std::logic_error("intersect: non-parallel lines without a unique meet");
  Point<S> p = a.at(sol->t);
  if (!a.contains(p) || !b.contains(p)) throw std::logic_error("intersect: containment check failed");
  return p;
}

}  // namespace desargues

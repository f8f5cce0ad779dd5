#pragma once

// Point addition and multiplication on the line OI by parallel-line
// constructions, the coordinatization of OI, and Desargues configurations.
//
// Notation in comments: ℓ^{XY} is the line through X and Y; ℓ_{XY}^{Z} is the
// line through Z parallel to ℓ^{XY}.
//
// Product convention: with scalars acting on the left, the multiplication
// construction on points a, b of OI lands on the coordinate a·b (never b·a).
// This was calibrated on the quaternions with (a, b) = (i, j), where the
// construction yields k = i·j; tests pin it for all backends.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "desargues/error.hpp"
#include "desargues/field.hpp"
#include "desargues/plane.hpp"
#include "desargues/random.hpp"

namespace desargues {

/// Zero point O and unit point I of the distinguished line ℓ^{OI}.
template <SkewScalar S>
class LineFrame {
 public:
  LineFrame(Point<S> origin, Point<S> unit)
      : origin_(std::move(origin)), unit_(std::move(unit)), line_(line_through(origin_, unit_)) {}

  /// O = (0, 0), I = (1, 0): ℓ^{OI} is the x-axis.
  template <SkewField F>
    requires std::same_as<scalar_t<F>, S>
  static LineFrame canonical(const F& field) {
    return LineFrame({field.zero(), field.zero()}, {field.one(), field.zero()});
  }

  const Point<S>& origin() const noexcept { return origin_; }
  const Point<S>& unit() const noexcept { return unit_; }
  const Line<S>& line() const noexcept { return line_; }

  /// O + c·(I − O)
  Point<S> embed(const S& c) const { return origin_ + scale(c, unit_ - origin_); }

  /// Inverse of embed; PointOffBaseLine when p ∉ ℓ^{OI}.
  S extract(const Point<S>& p) const {
    const Point<S> d = unit_ - origin_;
    const Point<S> off = p - origin_;
    // off = c·d, solved on whichever coordinate of d is nonzero.
    const bool use_x = !is_zero(d.x);
    const S c = use_x ? off.x * inv(d.x) : off.y * inv(d.y);
    if (!(c * d.x == off.x && c * d.y == off.y)) {
      throw Error(ErrorKind::PointOffBaseLine, to_string(p) + " is not on the base line");
    }
    return c;
  }

 private:
  Point<S> origin_;
  Point<S> unit_;
  Line<S> line_;
};

enum class ConstructionOp { Add, Mul };

/// Every intermediate object of one run of the addition or multiplication
/// algorithm, kept for printing and drawing.
template <SkewScalar S>
struct ConstructionTrace {
  ConstructionOp op;
  Point<S> origin, unit;
  Point<S> a, b;
  Point<S> aux;     // B₁
  Point<S> p1;      // P₁
  Point<S> result;  // C
  std::vector<Line<S>> lines;  // every line drawn, ℓ^{OI} first
};

namespace detail {

template <SkewScalar S>
void check_construction_inputs(const LineFrame<S>& frame, const Point<S>& a, const Point<S>& b,
                               const Point<S>& aux) {
  if (!frame.line().contains(a)) throw Error(ErrorKind::PointOffBaseLine, "A = " + to_string(a));
  if (!frame.line().contains(b)) throw Error(ErrorKind::PointOffBaseLine, "B = " + to_string(b));
  if (frame.line().contains(aux)) throw Error(ErrorKind::AuxOnBaseLine, "B1 = " + to_string(aux));
}

template <class Fn>
auto degenerate_guard(const char* step, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(ErrorKind::DegenerateConstruction, std::string(step) + ": " + e.what());
  }
}

}  // namespace detail

/// Addition: P₁ = ℓ_{OI}^{B₁} ∩ ℓ_{OB₁}^{A}, then C = ℓ_{BB₁}^{P₁} ∩ ℓ^{OI}.
template <SkewScalar S>
ConstructionTrace<S> trace_add(const LineFrame<S>& frame, const Point<S>& a, const Point<S>& b,
                               const Point<S>& aux) {
  detail::check_construction_inputs(frame, a, b, aux);
  const Line<S>& base = frame.line();
  const Line<S> through_aux = parallel_through(aux, base);
  const Line<S> o_aux = line_through(frame.origin(), aux);
  const Line<S> through_a = parallel_through(a, o_aux);
  Point<S> p1 = detail::degenerate_guard("step 2", [&] { return intersect(through_aux, through_a); });
  const Line<S> b_aux = line_through(b, aux);
  const Line<S> through_p1 = parallel_through(p1, b_aux);
  Point<S> c = detail::degenerate_guard("step 3", [&] { return intersect(through_p1, base); });
  return {ConstructionOp::Add, frame.origin(), frame.unit(), a, b, aux, std::move(p1), std::move(c),
          {base, through_aux, o_aux, through_a, b_aux, through_p1}};
}

/// Multiplication: P₁ = ℓ_{IB₁}^{A} ∩ ℓ^{OB₁}, then C = ℓ_{BB₁}^{P₁} ∩ ℓ^{OI}.
template <SkewScalar S>
ConstructionTrace<S> trace_mul(const LineFrame<S>& frame, const Point<S>& a, const Point<S>& b,
                               const Point<S>& aux) {
  detail::check_construction_inputs(frame, a, b, aux);
  const Line<S>& base = frame.line();
  const Line<S> i_aux = line_through(frame.unit(), aux);
  const Line<S> through_a = parallel_through(a, i_aux);
  const Line<S> o_aux = line_through(frame.origin(), aux);
  Point<S> p1 = detail::degenerate_guard("step 2", [&] { return intersect(through_a, o_aux); });
  const Line<S> b_aux = line_through(b, aux);
  const Line<S> through_p1 = parallel_through(p1, b_aux);
  Point<S> c = detail::degenerate_guard("step 3", [&] { return intersect(through_p1, base); });
  return {ConstructionOp::Mul, frame.origin(), frame.unit(), a, b, aux, std::move(p1), std::move(c),
          {base, i_aux, through_a, o_aux, b_aux, through_p1}};
}

template <SkewScalar S>
Point<S> geometric_add(const LineFrame<S>& frame, const Point<S>& a, const Point<S>& b,
                       const Point<S>& aux) {
  return trace_add(frame, a, b, aux).result;
}

template <SkewScalar S>
Point<S> geometric_mul(const LineFrame<S>& frame, const Point<S>& a, const Point<S>& b,
                       const Point<S>& aux) {
  return trace_mul(frame, a, b, aux).result;
}

/// A random point off the frame's base line.
template <SkewField F>
Point<scalar_t<F>> sample_aux(const F& field, const LineFrame<scalar_t<F>>& frame, Rng& rng) {
  for (;;) {
    Point<scalar_t<F>> p{field.sample(rng), field.sample(rng)};
    if (!frame.line().contains(p)) return p;
  }
}

// ---------------------------------------------------------------------------
// Desargues configurations

struct ParallelAxes {};

template <SkewScalar S>
struct ConcurrentAxes {
  Point<S> center;
};

template <SkewScalar S>
using DesarguesVariant = std::variant<ParallelAxes, ConcurrentAxes<S>>;

template <SkewScalar S>
struct DesarguesConfig {
  Point<S> a, b, c;
  Point<S> a2, b2, c2;  // A', B', C'
  DesarguesVariant<S> variant;
};

struct HypothesisCheck {
  std::string name;
  bool holds;
};

/// Evaluates every hypothesis of Desargues' axiom separately. Checks that
/// need a line through coincident points are reported as failing without
/// attempting the dependent checks.
template <SkewScalar S>
std::vector<HypothesisCheck> desargues_hypotheses(const DesarguesConfig<S>& cfg) {
  std::vector<HypothesisCheck> out;
  const std::array<std::pair<const char*, std::pair<const Point<S>*, const Point<S>*>>, 9> pairs{{
      {"A != A'", {&cfg.a, &cfg.a2}},
      {"B != B'", {&cfg.b, &cfg.b2}},
      {"C != C'", {&cfg.c, &cfg.c2}},
      {"A != B", {&cfg.a, &cfg.b}},
      {"B != C", {&cfg.b, &cfg.c}},
      {"A != C", {&cfg.a, &cfg.c}},
      {"A' != B'", {&cfg.a2, &cfg.b2}},
      {"B' != C'", {&cfg.b2, &cfg.c2}},
      {"A' != C'", {&cfg.a2, &cfg.c2}},
  }};
  bool all_distinct = true;
  for (const auto& [name, pts] : pairs) {
    const bool ok = !(*pts.first == *pts.second);
    all_distinct = all_distinct && ok;
    out.push_back({name, ok});
  }
  if (!all_distinct) return out;

  const Line<S> aa = line_through(cfg.a, cfg.a2);
  const Line<S> bb = line_through(cfg.b, cfg.b2);
  const Line<S> cc = line_through(cfg.c, cfg.c2);
  const Line<S> ab = line_through(cfg.a, cfg.b);
  const Line<S> bc = line_through(cfg.b, cfg.c);
  const Line<S> ac = line_through(cfg.a, cfg.c);
  const Line<S> ab2 = line_through(cfg.a2, cfg.b2);
  const Line<S> bc2 = line_through(cfg.b2, cfg.c2);
  const Line<S> ac2 = line_through(cfg.a2, cfg.c2);

  const std::array<std::pair<const char*, const Line<S>*>, 5> distinct{{
      {"AA'", &aa}, {"BB'", &bb}, {"CC'", &cc}, {"AC", &ac}, {"A'C'", &ac2}}};
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = i + 1; j < distinct.size(); ++j) {
      out.push_back({std::string("line ") + distinct[i].first + " != line " + distinct[j].first,
                     !(*distinct[i].second == *distinct[j].second)});
    }
  }
  out.push_back({"line AB != line A'B'", !(ab == ab2)});
  out.push_back({"line BC != line B'C'", !(bc == bc2)});
  out.push_back({"AB || A'B'", is_parallel(ab, ab2)});
  out.push_back({"BC || B'C'", is_parallel(bc, bc2)});

  if (std::holds_alternative<ParallelAxes>(cfg.variant)) {
    out.push_back({"AA' || BB'", is_parallel(aa, bb)});
    out.push_back({"BB' || CC'", is_parallel(bb, cc)});
  } else {
    const Point<S>& p = std::get<ConcurrentAxes<S>>(cfg.variant).center;
    out.push_back({"P on AA'", aa.contains(p)});
    out.push_back({"P on BB'", bb.contains(p)});
    out.push_back({"P on CC'", cc.contains(p)});
  }
  return out;
}

template <SkewScalar S>
bool desargues_hypotheses_hold(const DesarguesConfig<S>& cfg) {
  for (const auto& h : desargues_hypotheses(cfg)) {
    if (!h.holds) return false;
  }
  return true;
}

/// The conclusion ℓ^{AC} ∥ ℓ^{A'C'}. InvalidConfiguration names the first
/// failed hypothesis. Over a skew-field coordinate plane a false return
/// means a bug somewhere below.
template <SkewScalar S>
bool check_desargues(const DesarguesConfig<S>& cfg) {
  for (const auto& h : desargues_hypotheses(cfg)) {
    if (!h.holds) throw Error(ErrorKind::InvalidConfiguration, "hypothesis fails: " + h.name);
  }
  return is_parallel(line_through(cfg.a, cfg.c), line_through(cfg.a2, cfg.c2));
}

enum class AxesKind { Parallel, Concurrent };

/// Builds A'B'C' from a random triangle by a translation (parallel axes) or a
/// central dilation X ↦ P + λ(X − P) with λ ∉ {0, 1} (concurrent axes), then
/// rejects until every hypothesis holds. Deterministic in the seed.
template <SkewField F>
DesarguesConfig<scalar_t<F>> generate_desargues_config(const F& field, std::uint64_t seed,
                                                       AxesKind kind, int max_attempts = 10000) {
  using S = scalar_t<F>;
  Rng rng(seed);
  auto random_point = [&] { return Point<S>{field.sample(rng), field.sample(rng)}; };
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Point<S> a = random_point();
    Point<S> b = random_point();
    Point<S> c = random_point();
    if (collinear(a, b, c)) continue;
    DesarguesConfig<S> cfg{a, b, c, a, b, c, ParallelAxes{}};
    if (kind == AxesKind::Parallel) {
      const Point<S> v = random_point();
      cfg.a2 = a + v;
      cfg.b2 = b + v;
      cfg.c2 = c + v;
    } else {
      const Point<S> p = random_point();
      const S lambda = field.sample(rng);
      if (is_zero(lambda) || lambda == field.one()) continue;
      auto dilate = [&](const Point<S>& x) { return p + scale(lambda, x - p); };
      cfg.a2 = dilate(a);
      cfg.b2 = dilate(b);
      cfg.c2 = dilate(c);
      cfg.variant = ConcurrentAxes<S>{p};
    }
    if (desargues_hypotheses_hold(cfg)) return cfg;
  }
  throw Error(ErrorKind::InvalidConfiguration,
              "no admissible configuration found over " + field.name());
}

}  // namespace desargues

#pragma once

// Identities of the cross-ratio map families, checked pointwise and
// exactly on sampled arguments, with structured per-identity reports.
//
// Arguments that hit a forbidden point (singular point, or the zero point
// where an inverse is needed) are rejected and redrawn; the rejection count
// is part of the report. Closure of a family under + and · is never asserted;
// whether sums and products of values are attained by the map is recorded as
// an observation line that does not affect pass/fail.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "desargues/crossratio_maps.hpp"
#include "desargues/field.hpp"
#include "desargues/random.hpp"

namespace desargues {

struct SampleSpec {
  std::uint64_t seed = 0;
  std::size_t count = 100;
  bool exhaustive = false;  // finite fields only: every admissible tuple
};

struct IdentityResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t rejected = 0;
  bool passed = true;
  std::string counterexample;  // first failure, empty when passed
  bool observation = false;    // reported only, never fails the report
  std::size_t attained = 0;    // observations: how many values were attained
};

struct Report {
  std::string title;
  std::vector<IdentityResult> lines;

  bool passed() const {
    for (const auto& l : lines) {
      if (!l.observation && !l.passed) return false;
    }
    return true;
  }

  void append(const Report& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }
};

inline std::string format_line(const IdentityResult& r) {
  std::ostringstream os;
  os << r.name << ": samples=" << r.samples << " rejected=" << r.rejected;
  if (r.observation) {
    os << " OBSERVED attained=" << r.attained << "/" << r.samples;
  } else if (r.passed) {
    os << " PASS";
  } else {
    os << " FAIL counterexample: " << r.counterexample;
  }
  return os.str();
}

inline std::string format_report(const Report& report) {
  std::string out;
  if (!report.title.empty()) out += "# " + report.title + "\n";
  for (const auto& l : report.lines) out += format_line(l) + "\n";
  return out;
}

namespace detail {

template <std::size_t N, SkewField F>
struct TupleDraw {
  std::vector<std::array<scalar_t<F>, N>> tuples;
  std::size_t rejected = 0;
};

template <std::size_t N, SkewField F, class Valid>
TupleDraw<N, F> draw_tuples(const F& field, const SampleSpec& spec, std::uint64_t salt,
                            Valid&& valid) {
  using S = scalar_t<F>;
  TupleDraw<N, F> out;
  if (spec.exhaustive) {
    if constexpr (FiniteSkewField<F>) {
      std::vector<S> admissible;
      for (const auto& x : field.elements()) {
        if (valid(x)) {
          admissible.push_back(x);
        } else {
          ++out.rejected;
        }
      }
      std::array<std::size_t, N> idx{};
      if (admissible.empty()) return out;
      for (;;) {
        out.tuples.push_back([&]<std::size_t... I>(std::index_sequence<I...>) {
          return std::array<S, N>{admissible[idx[I]]...};
        }(std::make_index_sequence<N>{}));
        std::size_t pos = 0;
        while (pos < N && ++idx[pos] == admissible.size()) idx[pos++] = 0;
        if (pos == N) break;
      }
      return out;
    } else {
      throw Error(ErrorKind::UnsupportedBackend, "exhaustive sampling over " + field.name());
    }
  }
  Rng rng(spec.seed * 0x9E3779B97F4A7C15ULL + salt);
  auto draw_one = [&] {
    for (;;) {
      S x = field.sample(rng);
      if (valid(x)) return x;
      ++out.rejected;
    }
  };
  out.tuples.reserve(spec.count);
  for (std::size_t n = 0; n < spec.count; ++n) {
    // Braced initializers evaluate left to right, so draws stay in order.
    out.tuples.push_back([&]<std::size_t... I>(std::index_sequence<I...>) {
      return std::array<S, N>{((void)I, draw_one())...};
    }(std::make_index_sequence<N>{}));
  }
  return out;
}

template <SkewScalar S, std::size_t N>
std::string describe_args(const std::array<S, N>& args) {
  static constexpr const char* names[] = {"X", "Y", "Z"};
  std::string out;
  for (std::size_t i = 0; i < N; ++i) {
    if (i) out += ", ";
    out += std::string(names[i]) + "=" + to_string(args[i]);
  }
  return out;
}

template <std::size_t N, SkewField F, class Valid, class Check>
IdentityResult run_identity(std::string name, const F& field, const SampleSpec& spec,
                            std::uint64_t salt, Valid&& valid, Check&& check) {
  auto draw = draw_tuples<N>(field, spec, salt, valid);
  IdentityResult r;
  r.name = std::move(name);
  r.samples = draw.tuples.size();
  r.rejected = draw.rejected;
  for (const auto& t : draw.tuples) {
    if (!check(t)) {
      r.passed = false;
      r.counterexample = describe_args(t);
      break;
    }
  }
  return r;
}

template <std::size_t N, SkewField F, class Valid, class Attained>
IdentityResult run_observation(std::string name, const F& field, const SampleSpec& spec,
                               std::uint64_t salt, Valid&& valid, Attained&& attained) {
  auto draw = draw_tuples<N>(field, spec, salt, valid);
  IdentityResult r;
  r.name = std::move(name);
  r.observation = true;
  r.samples = draw.tuples.size();
  r.rejected = draw.rejected;
  for (const auto& t : draw.tuples) {
    if (attained(t)) ++r.attained;
  }
  return r;
}

}  // namespace detail

/// Additive structure of the family's values: associativity, commutativity,
/// the zero point evaluating to O, and O acting as a two-sided neutral.
template <SkewField F>
Report verify_addition_structure(const F& field, const CrossRatioBase<scalar_t<F>>& base,
                                 const SampleSpec& spec) {
  using S = scalar_t<F>;
  const S zero = field.zero();
  const S& bad = singular_point(base);
  auto admissible = [&](const S& x) { return !(x == bad); };
  auto f = [&](const S& x) { return evaluate(base, x); };

  Report report{"addition " + base.describe(), {}};
  {
    IdentityResult r{"add.zero_point", 1, 0, true, "", false, 0};
    const S z = zero_point(base);
    if (!(f(z) == zero)) {
      r.passed = false;
      r.counterexample = "value at " + to_string(z) + " is " + to_string(f(z));
    }
    report.lines.push_back(r);
  }
  report.lines.push_back(detail::run_identity<3>(
      "add.associative", field, spec, 1, admissible, [&](const std::array<S, 3>& t) {
        const S x = f(t[0]), y = f(t[1]), z = f(t[2]);
        return (x + y) + z == x + (y + z);
      }));
  report.lines.push_back(detail::run_identity<2>(
      "add.commutative", field, spec, 2, admissible,
      [&](const std::array<S, 2>& t) { return f(t[0]) + f(t[1]) == f(t[1]) + f(t[0]); }));
  report.lines.push_back(detail::run_identity<1>(
      "add.zero_neutral", field, spec, 3, admissible, [&](const std::array<S, 1>& t) {
        const S x = f(t[0]);
        const S o = f(zero_point(base));
        return x + o == x && o + x == x;
      }));
  report.lines.push_back(detail::run_observation<2>(
      "add.sum_attained", field, spec, 4, admissible,
      [&](const std::array<S, 2>& t) { return preimage(base, f(t[0]) + f(t[1])).has_value(); }));
  return report;
}

/// Multiplicative group laws of the values: associativity, the unit point
/// evaluating to I, I as a two-sided neutral, and the two-sided inverse law
/// through inverse_value.
template <SkewField F>
Report verify_multiplicative_group(const F& field, const CrossRatioBase<scalar_t<F>>& base,
                                   const SampleSpec& spec) {
  using S = scalar_t<F>;
  const S one = field.one();
  const S& bad = singular_point(base);
  const S zp = zero_point(base);
  auto admissible = [&](const S& x) { return !(x == bad); };
  auto invertible = [&](const S& x) { return !(x == bad) && !(x == zp); };
  auto f = [&](const S& x) { return evaluate(base, x); };

  Report report{"multiplication " + base.describe(), {}};
  {
    IdentityResult r{"mul.unit_point", 1, 0, true, "", false, 0};
    const S e = unit_point(base);
    if (!(f(e) == one)) {
      r.passed = false;
      r.counterexample = "value at " + to_string(e) + " is " + to_string(f(e));
    }
    report.lines.push_back(r);
  }
  report.lines.push_back(detail::run_identity<3>(
      "mul.associative", field, spec, 11, admissible, [&](const std::array<S, 3>& t) {
        const S x = f(t[0]), y = f(t[1]), z = f(t[2]);
        return (x * y) * z == x * (y * z);
      }));
  report.lines.push_back(detail::run_identity<1>(
      "mul.unit_neutral", field, spec, 12, admissible, [&](const std::array<S, 1>& t) {
        const S x = f(t[0]);
        const S e = f(unit_point(base));
        return x * e == x && e * x == x;
      }));
  report.lines.push_back(detail::run_identity<1>(
      "mul.two_sided_inverse", field, spec, 13, invertible, [&](const std::array<S, 1>& t) {
        const S x = f(t[0]);
        const S y = inverse_value(base, t[0]);
        return x * y == one && y * x == one;
      }));
  report.lines.push_back(detail::run_observation<2>(
      "mul.product_attained", field, spec, 14, admissible,
      [&](const std::array<S, 2>& t) { return preimage(base, f(t[0]) * f(t[1])).has_value(); }));
  return report;
}

/// Both distributive identities on sampled triples (X, Y, Z).
template <SkewField F>
Report verify_distributive(const F& field, const CrossRatioBase<scalar_t<F>>& base,
                           const SampleSpec& spec) {
  using S = scalar_t<F>;
  const S& bad = singular_point(base);
  auto admissible = [&](const S& x) { return !(x == bad); };
  auto f = [&](const S& x) { return evaluate(base, x); };

  Report report{"distributivity " + base.describe(), {}};
  report.lines.push_back(detail::run_identity<3>(
      "distrib.left", field, spec, 21, admissible, [&](const std::array<S, 3>& t) {
        const S x = f(t[0]), y = f(t[1]), z = f(t[2]);
        return x * (y + z) == x * y + x * z;
      }));
  report.lines.push_back(detail::run_identity<3>(
      "distrib.right", field, spec, 22, admissible, [&](const std::array<S, 3>& t) {
        const S x = f(t[0]), y = f(t[1]), z = f(t[2]);
        return (x + y) * z == x * z + y * z;
      }));
  return report;
}

/// All three reports for one base.
template <SkewField F>
Report verify_family(const F& field, const CrossRatioBase<scalar_t<F>>& base,
                     const SampleSpec& spec) {
  Report all{base.describe() + " over " + field.name(), {}};
  all.append(verify_addition_structure(field, base, spec));
  all.append(verify_multiplicative_group(field, base, spec));
  all.append(verify_distributive(field, base, spec));
  return all;
}

/// A uniformly drawn base satisfying the standing hypotheses.
template <SkewField F>
CrossRatioBase<scalar_t<F>> sample_base(const F& field, MapFamily family, Rng& rng) {
  for (;;) {
    auto p = field.sample(rng), q = field.sample(rng), r = field.sample(rng);
    if (is_zero(p) || is_zero(q) || is_zero(r) || p == q || q == r || p == r) continue;
    return CrossRatioBase<scalar_t<F>>::make(family, std::move(p), std::move(q), std::move(r));
  }
}

}  // namespace desargues

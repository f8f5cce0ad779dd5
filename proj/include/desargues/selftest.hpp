#pragma once

// The invariant suite behind `desargues selftest`: skew-field axioms,
// coordinatization of the constructions, Desargues instances and the
// cross-ratio family identities, over every backend.

#include <array>
#include <cstdint>
#include <ostream>
#include <string>

#include "desargues/constructions.hpp"
#include "desargues/crossratio_maps.hpp"
#include "desargues/field.hpp"
#include "desargues/verify.hpp"

namespace desargues {

/// Skew-field axioms on sampled (or, for finite fields, all) triples.
template <SkewField F>
Report check_field_axioms(const F& field, const SampleSpec& spec) {
  using S = scalar_t<F>;
  const S zero = field.zero();
  const S one = field.one();
  auto any = [](const S&) { return true; };
  Report r{"skew-field axioms over " + field.name(), {}};
  auto law3 = [&](const char* name, std::uint64_t salt, auto check) {
    r.lines.push_back(detail::run_identity<3>(name, field, spec, salt, any, check));
  };
  using T = std::array<S, 3>;
  law3("field.add_associative", 101, [](const T& t) { return (t[0] + t[1]) + t[2] == t[0] + (t[1] + t[2]); });
  law3("field.add_commutative", 102, [](const T& t) { return t[0] + t[1] == t[1] + t[0]; });
  law3("field.mul_associative", 103, [](const T& t) { return (t[0] * t[1]) * t[2] == t[0] * (t[1] * t[2]); });
  law3("field.left_distributive", 104, [](const T& t) { return t[0] * (t[1] + t[2]) == t[0] * t[1] + t[0] * t[2]; });
  law3("field.right_distributive", 105, [](const T& t) { return (t[0] + t[1]) * t[2] == t[0] * t[2] + t[1] * t[2]; });
  law3("field.neutrals", 106, [&](const T& t) {
    return t[0] + zero == t[0] && zero + t[0] == t[0] && t[0] * one == t[0] && one * t[0] == t[0];
  });
  law3("field.additive_inverse", 107, [&](const T& t) { return t[0] + (-t[0]) == zero && t[0] - t[0] == zero; });
  law3("field.multiplicative_inverse", 108, [&](const T& t) {
    return is_zero(t[0]) || (inv(t[0]) * t[0] == one && t[0] * inv(t[0]) == one);
  });
  law3("field.no_zero_divisors", 109, [](const T& t) {
    return !is_zero(t[0] * t[1]) || is_zero(t[0]) || is_zero(t[1]);
  });
  law3("field.inverse_involution", 110, [](const T& t) { return is_zero(t[0]) || inv(inv(t[0])) == t[0]; });
  law3("field.inverse_antihomomorphism", 111, [](const T& t) {
    return is_zero(t[0]) || is_zero(t[1]) || inv(t[0] * t[1]) == inv(t[1]) * inv(t[0]);
  });
  return r;
}

/// geometric_add / geometric_mul against + and · for sampled a, b and
/// several auxiliary points each.
template <SkewField F>
Report check_constructions(const F& field, const LineFrame<scalar_t<F>>& frame,
                           const SampleSpec& spec, std::size_t aux_per_pair) {
  using S = scalar_t<F>;
  auto any = [](const S&) { return true; };
  Report r{"constructions over " + field.name(), {}};
  Rng aux_rng(spec.seed + 7);
  auto check = [&](ConstructionOp op) {
    return [&, op](const std::array<S, 2>& t) {
      const S expected = op == ConstructionOp::Add ? t[0] + t[1] : t[0] * t[1];
      for (std::size_t k = 0; k < aux_per_pair; ++k) {
        const auto aux = sample_aux(field, frame, aux_rng);
        const auto a = frame.embed(t[0]);
        const auto b = frame.embed(t[1]);
        const auto c = op == ConstructionOp::Add ? geometric_add(frame, a, b, aux)
                                                 : geometric_mul(frame, a, b, aux);
        if (!(frame.extract(c) == expected)) return false;
      }
      return true;
    };
  };
  r.lines.push_back(detail::run_identity<2>("construct.add_matches_sum", field, spec, 201, any,
                                            check(ConstructionOp::Add)));
  r.lines.push_back(detail::run_identity<2>("construct.mul_matches_product", field, spec, 202, any,
                                            check(ConstructionOp::Mul)));
  return r;
}

template <SkewField F>
Report check_desargues_instances(const F& field, std::uint64_t seed, std::size_t count) {
  Report r{"Desargues instances over " + field.name(), {}};
  for (AxesKind kind : {AxesKind::Parallel, AxesKind::Concurrent}) {
    IdentityResult line;
    line.name = kind == AxesKind::Parallel ? "desargues.parallel_axes" : "desargues.concurrent_axes";
    for (std::size_t i = 0; i < count; ++i) {
      const auto cfg = generate_desargues_config(field, seed * 1000003ULL + i, kind);
      ++line.samples;
      if (!check_desargues(cfg)) {
        line.passed = false;
        line.counterexample = "seed " + std::to_string(seed * 1000003ULL + i);
        break;
      }
    }
    r.lines.push_back(line);
  }
  return r;
}

template <SkewField F>
Report check_all_families(const F& field, const SampleSpec& spec) {
  Report r{"cross-ratio families over " + field.name(), {}};
  Rng rng(spec.seed + 31);
  for (MapFamily family : {MapFamily::A, MapFamily::B, MapFamily::C, MapFamily::D}) {
    const auto base = sample_base(field, family, rng);
    Report one = verify_family(field, base, spec);
    for (auto& line : one.lines) line.name = std::string(1, family_letter(family)) + "." + line.name;
    r.append(one);
  }
  return r;
}

/// Runs everything, printing one line per identity. Returns overall pass.
inline bool run_selftest(std::uint64_t seed, std::size_t count, std::ostream& out) {
  bool ok = true;
  auto emit = [&](const Report& r) {
    out << format_report(r);
    ok = ok && r.passed();
  };
  const RationalField q;
  const QuaternionField h;
  const PrimeField gf5(5);
  const SampleSpec random{seed, count, false};
  const SampleSpec all{seed, 0, true};

  emit(check_field_axioms(q, random));
  emit(check_field_axioms(h, random));
  emit(check_field_axioms(gf5, all));
  {
    Report witness{"non-commutativity", {}};
    IdentityResult w{"quaternion.ij_ne_ji", 1, 0, true, "", false, 0};
    const Quaternion ij = Quaternion::i() * Quaternion::j();
    const Quaternion ji = Quaternion::j() * Quaternion::i();
    w.passed = ij == Quaternion::k() && ji == -Quaternion::k() && !(ij == ji);
    if (!w.passed) w.counterexample = "ij=" + ij.str() + " ji=" + ji.str();
    witness.lines.push_back(w);
    emit(witness);
  }
  emit(check_constructions(q, LineFrame<Rational>::canonical(q), random, 3));
  emit(check_constructions(h, LineFrame<Quaternion>::canonical(h), random, 3));
  emit(check_constructions(gf5, LineFrame<PrimeFieldElement>::canonical(gf5), all, 3));
  emit(check_desargues_instances(q, seed, count));
  emit(check_desargues_instances(h, seed, count));
  emit(check_desargues_instances(gf5, seed, count));
  emit(check_all_families(q, random));
  emit(check_all_families(h, random));
  emit(check_all_families(gf5, all));
  out << (ok ? "selftest: PASS" : "selftest: FAIL") << "\n";
  return ok;
}

}  // namespace desargues

#pragma once

// The skew-field abstraction every geometric module is written against.
//
// A scalar type S supplies exact ring operations plus inv / is_zero /
// to_string as free functions. A field context F owns whatever a bare value
// cannot know by itself (constants, sampling, enumeration for finite fields),
// and is chosen once for a whole plane. Mixing backends is a type error;
// mixing two prime moduli is a BackendMismatch at the first operation.

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "desargues/error.hpp"
#include "desargues/prime_field.hpp"
#include "desargues/quaternion.hpp"
#include "desargues/random.hpp"
#include "desargues/rational.hpp"

namespace desargues {

template <class S>
concept SkewScalar = std::copyable<S> && requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { inv(a) } -> std::convertible_to<S>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

template <class F>
concept SkewField = SkewScalar<typename F::value_type> &&
    requires(const F& f, Rng& rng, long long n) {
      { f.zero() } -> std::same_as<typename F::value_type>;
      { f.one() } -> std::same_as<typename F::value_type>;
      { f.from_int(n) } -> std::same_as<typename F::value_type>;
      { f.sample(rng) } -> std::same_as<typename F::value_type>;
      { f.name() } -> std::convertible_to<std::string>;
      { F::commutative } -> std::convertible_to<bool>;
    };

template <class F>
concept FiniteSkewField = SkewField<F> && requires(const F& f) {
  { f.elements() } -> std::same_as<std::vector<typename F::value_type>>;
};

template <SkewField F>
using scalar_t = typename F::value_type;

/// ℚ. Samples are small fractions n/d with |n| ≤ 6 and 1 ≤ d ≤ 4 so that
/// compound cross-ratio expressions stay cheap while still hitting plenty of
/// non-integers.
class RationalField {
 public:
  using value_type = Rational;
  static constexpr bool commutative = true;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long long n) const { return Rational(n); }
  Rational sample(Rng& rng) const {
    const long long n = rng.between(-6, 6);
    const long long d = rng.between(1, 4);
    return Rational(BigInt(n), BigInt(d));
  }
  std::string name() const { return "rational"; }
};

/// Rational quaternions. Each sampled component is n/d with |n| ≤ 3, d ∈ {1, 2}.
class QuaternionField {
 public:
  using value_type = Quaternion;
  static constexpr bool commutative = false;

  Quaternion zero() const { return Quaternion(0); }
  Quaternion one() const { return Quaternion(1); }
  Quaternion from_int(long long n) const { return Quaternion(n); }
  Quaternion sample(Rng& rng) const {
    auto component = [&rng] {
      const long long n = rng.between(-3, 3);
      const long long d = rng.between(1, 2);
      return Rational(BigInt(n), BigInt(d));
    };
    Rational w = component();
    Rational x = component();
    Rational y = component();
    Rational z = component();
    return {std::move(w), std::move(x), std::move(y), std::move(z)};
  }
  std::string name() const { return "quaternion"; }
};

/// GF(p). The modulus is validated here, once, for the whole plane.
class PrimeField {
 public:
  using value_type = PrimeFieldElement;
  static constexpr bool commutative = true;
  static constexpr std::uint64_t max_modulus = 1ULL << 32;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p > max_modulus || !is_prime(p)) {
      throw Error(ErrorKind::InvalidModulus, std::to_string(p) + " is not a supported prime");
    }
  }

  std::uint64_t modulus() const noexcept { return p_; }

  PrimeFieldElement zero() const { return {0, p_}; }
  PrimeFieldElement one() const { return {1, p_}; }
  PrimeFieldElement from_int(long long n) const {
    const long long p = static_cast<long long>(p_);
    return {static_cast<std::uint64_t>(((n % p) + p) % p), p_};
  }
  PrimeFieldElement sample(Rng& rng) const { return {rng.below(p_), p_}; }
  std::string name() const { return "gfp(" + std::to_string(p_) + ")"; }

  std::vector<PrimeFieldElement> elements() const {
    std::vector<PrimeFieldElement> all;
    all.reserve(p_);
    for (std::uint64_t r = 0; r < p_; ++r) all.emplace_back(r, p_);
    return all;
  }

 private:
  std::uint64_t p_;
};

template <SkewField F>
scalar_t<F> sample_nonzero(const F& field, Rng& rng) {
  for (;;) {
    auto v = field.sample(rng);
    if (!is_zero(v)) return v;
  }
}

}  // namespace desargues

#pragma once

#include <cstdint>
#include <random>

namespace desargues {

/// Seeded generator whose output sequence is identical on every platform:
/// mt19937_64 is fully specified, and bounded draws avoid the
/// implementation-defined std:: distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant for the
  /// tiny ranges used here.
  long long between(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(engine_() % span);
  }

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace desargues

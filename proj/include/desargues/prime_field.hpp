#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "desargues/error.hpp"

namespace desargues {

/// Residue class modulo a prime. The modulus travels with the value so that
/// mixing elements of GF(p) and GF(q) is caught at the first operation.
class PrimeFieldElement {
 public:
  PrimeFieldElement(std::uint64_t residue, std::uint64_t modulus)
      : residue_(residue % modulus), modulus_(modulus) {}

  std::uint64_t residue() const noexcept { return residue_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return residue_ == 0; }

  PrimeFieldElement operator-() const {
    return {residue_ == 0 ? 0 : modulus_ - residue_, modulus_};
  }

  friend PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    check_same(a, b);
    const auto s = static_cast<unsigned __int128>(a.residue_) + b.residue_;
    return {static_cast<std::uint64_t>(s % a.modulus_), a.modulus_};
  }

  friend PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return a + (-b);
  }

  friend PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    check_same(a, b);
    const auto p = static_cast<unsigned __int128>(a.residue_) * b.residue_;
    return {static_cast<std::uint64_t>(p % a.modulus_), a.modulus_};
  }

  PrimeFieldElement& operator+=(const PrimeFieldElement& b) { return *this = *this + b; }
  PrimeFieldElement& operator-=(const PrimeFieldElement& b) { return *this = *this - b; }
  PrimeFieldElement& operator*=(const PrimeFieldElement& b) { return *this = *this * b; }

  friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    check_same(a, b);
    return a.residue_ == b.residue_;
  }

  /// a^(p-2) by square-and-multiply.
  PrimeFieldElement inverse() const {
    if (is_zero()) throw Error(ErrorKind::ZeroInverse, "inverse of 0 mod " + std::to_string(modulus_));
    PrimeFieldElement result{1, modulus_};
    PrimeFieldElement base = *this;
    for (std::uint64_t e = modulus_ - 2; e != 0; e >>= 1) {
      if (e & 1U) result = result * base;
      base = base * base;
    }
    return result;
  }

  std::string str() const { return std::to_string(residue_) + " mod " + std::to_string(modulus_); }

 private:
  static void check_same(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    if (a.modulus_ != b.modulus_) {
      throw Error(ErrorKind::BackendMismatch,
                  "GF(" + std::to_string(a.modulus_) + ") vs GF(" + std::to_string(b.modulus_) + ")");
    }
  }

  std::uint64_t residue_;
  std::uint64_t modulus_;
};

inline PrimeFieldElement inv(const PrimeFieldElement& a) { return a.inverse(); }
inline bool is_zero(const PrimeFieldElement& a) { return a.is_zero(); }
inline std::string to_string(const PrimeFieldElement& a) { return a.str(); }

inline std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& a) { return os << a.str(); }

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace desargues

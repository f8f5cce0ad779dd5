#pragma once

// Exact rationals over arbitrary-precision integers.
//
// Values are always stored reduced: the denominator is positive, the
// numerator carries the sign, gcd(|num|, den) = 1, and zero is 0/1. With that
// canonical form structural equality is value equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "desargues/error.hpp"

namespace desargues {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design of literals
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw Error(ErrorKind::ZeroInverse, "rational with zero denominator");
    normalize();
  }

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ - b.num_, a.den_);
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroInverse, "division of " + a.str() + " by 0");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational reciprocal() const {
    if (is_zero()) throw Error(ErrorKind::ZeroInverse, "reciprocal of 0");
    return Rational(den_, num_);
  }

  /// `n` for integers, `n/d` otherwise.
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  /// Nearest double; used only for drawing.
  double approx() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

 private:
  void normalize() {
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline Rational inv(const Rational& a) { return a.reciprocal(); }
inline bool is_zero(const Rational& a) { return a.is_zero(); }
inline std::string to_string(const Rational& a) { return a.str(); }

inline std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

}  // namespace desargues

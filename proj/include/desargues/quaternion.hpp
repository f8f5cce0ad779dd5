#pragma once

// Rational quaternions w + x i + y j + z k, the non-commutative backend.
//
// The norm w² + x² + y² + z² of a rational quaternion vanishes only at zero,
// so every nonzero element has the exact two-sided inverse conj(q) / norm(q).

#include <ostream>
#include <string>
#include <utility>

#include "desargues/error.hpp"
#include "desargues/rational.hpp"

namespace desargues {

class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(Rational w) : w_(std::move(w)) {}  // NOLINT: reals embed implicitly
  Quaternion(long long w) : w_(w) {}             // NOLINT
  Quaternion(Rational w, Rational x, Rational y, Rational z)
      : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  const Rational& w() const noexcept { return w_; }
  const Rational& x() const noexcept { return x_; }
  const Rational& y() const noexcept { return y_; }
  const Rational& z() const noexcept { return z_; }

  bool is_zero() const noexcept {
    return w_.is_zero() && x_.is_zero() && y_.is_zero() && z_.is_zero();
  }

  Quaternion conjugate() const { return {w_, -x_, -y_, -z_}; }

  Rational norm() const { return w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_; }

  Quaternion inverse() const {
    if (is_zero()) throw Error(ErrorKind::ZeroInverse, "inverse of quaternion 0");
    const Rational n = norm().reciprocal();
    return {w_ * n, -x_ * n, -y_ * n, -z_ * n};
  }

  Quaternion operator-() const { return {-w_, -x_, -y_, -z_}; }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w_ + b.w_, a.x_ + b.x_, a.y_ + b.y_, a.z_ + b.z_};
  }

  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w_ - b.w_, a.x_ - b.x_, a.y_ - b.y_, a.z_ - b.z_};
  }

  // Hamilton product: i² = j² = k² = ijk = -1.
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_,
            a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_,
            a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_,
            a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_};
  }

  Quaternion& operator+=(const Quaternion& b) { return *this = *this + b; }
  Quaternion& operator-=(const Quaternion& b) { return *this = *this - b; }
  Quaternion& operator*=(const Quaternion& b) { return *this = *this * b; }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w_ == b.w_ && a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
  }

  std::string str() const {
    return "(" + w_.str() + "," + x_.str() + "," + y_.str() + "," + z_.str() + ")";
  }

 private:
  Rational w_, x_, y_, z_;
};

inline Quaternion inv(const Quaternion& q) { return q.inverse(); }
inline bool is_zero(const Quaternion& q) { return q.is_zero(); }
inline std::string to_string(const Quaternion& q) { return q.str(); }

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << q.str(); }

}  // namespace desargues

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace frdr {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Absolute tolerance below which an inexact coefficient is snapped to zero.
inline constexpr double kZeroSnap = 1e-12;

/// A scalar that stays an exact rational for as long as the computation
/// allows it.  Every finite double is a dyadic rational, so construction
/// from double is exact; only operations with no rational result (square
/// roots of non-squares) degrade a value to floating point.  Mixed
/// arithmetic degrades the result.
class Scalar {
 public:
  Scalar() : exact_(true), q_(0), d_(0.0) {}
  Scalar(int v) : exact_(true), q_(v), d_(double(v)) {}
  Scalar(long long v) : exact_(true), q_(BigInt(v)), d_(double(v)) {}
  Scalar(double v) : exact_(true), q_(), d_(v) {
    if (!std::isfinite(v)) throw std::invalid_argument("Scalar: non-finite value");
    q_ = BigRat(v);  // exact: doubles are dyadic rationals
  }
  Scalar(BigRat q) : exact_(true), q_(std::move(q)), d_(q_.convert_to<double>()) {}

  static Scalar ratio(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Scalar::ratio: zero denominator");
    return Scalar(BigRat(BigInt(num), BigInt(den)));
  }
  static Scalar inexact(double v) {
    Scalar s;
    s.exact_ = false;
    s.d_ = v;
    return s;
  }

  bool exact() const { return exact_; }
  double value() const { return exact_ ? q_.convert_to<double>() : d_; }
  const BigRat& rat() const {
    if (!exact_) throw std::logic_error("Scalar::rat: value is not exact");
    return q_;
  }

  bool is_zero(double tol = kZeroSnap) const {
    return exact_ ? q_.is_zero() : std::abs(d_) <= tol;
  }

  Scalar operator-() const {
    if (exact_) return Scalar(BigRat(-q_));
    return inexact(-d_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(BigRat(a.q_ + b.q_));
    return inexact(a.value() + b.value());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(BigRat(a.q_ - b.q_));
    return inexact(a.value() - b.value());
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(BigRat(a.q_ * b.q_));
    return inexact(a.value() * b.value());
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero(0.0)) throw std::domain_error("Scalar: division by zero");
    if (a.exact_ && b.exact_) return Scalar(BigRat(a.q_ / b.q_));
    return inexact(a.value() / b.value());
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  /// Exact equality for exact pairs, tolerance comparison otherwise.
  bool same_as(const Scalar& o, double tol = kZeroSnap) const {
    if (exact_ && o.exact_) return q_ == o.q_;
    return std::abs(value() - o.value()) <= tol;
  }

  /// Square root; exact when the operand is a perfect rational square.
  Scalar sqrt() const {
    double v = value();
    if (v < 0) throw std::domain_error("Scalar::sqrt of negative value");
    if (exact_) {
      BigInt num = boost::multiprecision::numerator(q_);
      BigInt den = boost::multiprecision::denominator(q_);
      BigInt rn = boost::multiprecision::sqrt(num);
      BigInt rd = boost::multiprecision::sqrt(den);
      if (rn * rn == num && rd * rd == den) return Scalar(BigRat(rn, rd));
    }
    return inexact(std::sqrt(v));
  }

  std::string str() const {
    if (exact_) {
      BigInt num = boost::multiprecision::numerator(q_);
      BigInt den = boost::multiprecision::denominator(q_);
      if (den == 1) return num.str();
      return num.str() + "/" + den.str();
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", d_);
    return buf;
  }

 private:
  bool exact_;
  BigRat q_;  // meaningful when exact_
  double d_;  // meaningful when !exact_
};

}  // namespace frdr

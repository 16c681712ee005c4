#pragma once

#include <cmath>
#include <limits>
#include <utility>

namespace pqdeform {

/// A real number stored as sign * exp(log_abs). Zero is sign 0, log_abs = -inf.
struct SignedLog {
  int sign = 0;
  double log_abs = -std::numeric_limits<double>::infinity();

  static SignedLog from_value(double x) {
    if (x == 0.0) return {};
    return {x > 0.0 ? 1 : -1, std::log(std::abs(x))};
  }

  static SignedLog from_log(int sign, double log_abs) {
    if (sign == 0) return {};
    return {sign > 0 ? 1 : -1, log_abs};
  }

  /// exp(log_abs) with sign; may be +-inf or 0 when outside double range.
  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

  bool fits_double() const {
    return sign == 0 || log_abs < std::log(std::numeric_limits<double>::max());
  }

  SignedLog operator-() const { return {-sign, log_abs}; }

  friend SignedLog operator*(SignedLog a, SignedLog b) {
    if (a.sign == 0 || b.sign == 0) return {};
    return {a.sign * b.sign, a.log_abs + b.log_abs};
  }
};

/// a + b evaluated without leaving log space.
inline SignedLog add(SignedLog a, SignedLog b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  if (b.log_abs > a.log_abs) std::swap(a, b);
  const double ratio = std::exp(b.log_abs - a.log_abs);  // in (0, 1]
  if (a.sign == b.sign) return {a.sign, a.log_abs + std::log1p(ratio)};
  if (ratio == 1.0) return {};
  return {a.sign, a.log_abs + std::log1p(-ratio)};
}

}  // namespace pqdeform

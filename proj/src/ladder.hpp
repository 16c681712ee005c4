#pragma once

// Quotients of powers shared by the structure function, the brackets and the
// representation lambda-sequences. Bases are kept as (base, exponent) so that integer
// cases like 2^3 come out exact.

#include <cmath>

#include "pqdeform/params.hpp"
#include "pqdeform/signed_log.hpp"

namespace pqdeform::detail {

/// b1 = x^ex and b2 = y^ey.
struct PowerPair {
  double x = 1.0, ex = 0.0;
  double y = 1.0, ey = 0.0;

  double log1() const { return ex * std::log(x); }
  double log2() const { return ey * std::log(y); }
  double b1() const { return std::pow(x, ex); }
  double b2() const { return std::pow(y, ey); }
  double b1_pow(long n) const { return std::pow(x, static_cast<double>(n) * ex); }
  double b2_pow(long n) const { return std::pow(y, static_cast<double>(n) * ey); }
  PowerPair swapped() const { return {y, ey, x, ex}; }
};

/// (p^nu, q^alpha).
inline PowerPair ladder_bases(const DeformationParams& params) {
  return {params.p, params.nu, params.q, params.alpha};
}

inline bool is_odd(long n) { return n % 2 != 0; }
inline double parity(long n) { return is_odd(n) ? -1.0 : 1.0; }

/// True when b1^n or b2^n would leave the comfortable double range.
inline bool needs_log_space(const PowerPair& bases, long n) {
  const double nn = static_cast<double>(n);
  return std::abs(nn * bases.log1()) > 700.0 || std::abs(nn * bases.log2()) > 700.0;
}

/// (b1^n - b2^n) / (b1 - b2), continuous through b1 = b2 where it equals n b2^(n-1).
double diff_quotient(const PowerPair& bases, long n);

/// (b1^n - (-1)^n b2^n) / (b1 + b2).
double alt_quotient(const PowerPair& bases, long n);

SignedLog log_diff_quotient(const PowerPair& bases, long n);
SignedLog log_alt_quotient(const PowerPair& bases, long n);

}  // namespace pqdeform::detail

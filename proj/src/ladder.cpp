#include "ladder.hpp"

#include <algorithm>

namespace pqdeform::detail {

namespace {

// ln|e^x - 1| for x != 0.
double log_abs_expm1(double x) {
  return x > 0.0 ? x + std::log(-std::expm1(-x)) : std::log(-std::expm1(x));
}

}  // namespace

double diff_quotient(const PowerPair& bases, long n) {
  if (n == 0) return 0.0;
  const double d = bases.log1() - bases.log2();
  if (d == 0.0) return static_cast<double>(n) * bases.b2_pow(n - 1);
  const double em = std::expm1(d);
  if (std::abs(em) >= 0.25) {
    return (bases.b1_pow(n) - bases.b2_pow(n)) / (bases.b1() - bases.b2());
  }
  // b2^(n-1) (e^(nd) - 1) / (e^d - 1): no cancellation near b1 = b2.
  return bases.b2_pow(n - 1) * std::expm1(static_cast<double>(n) * d) / em;
}

double alt_quotient(const PowerPair& bases, long n) {
  return (bases.b1_pow(n) - parity(n) * bases.b2_pow(n)) / (bases.b1() + bases.b2());
}

SignedLog log_diff_quotient(const PowerPair& bases, long n) {
  if (n == 0) return {};
  const double nn = static_cast<double>(n);
  const double l2 = bases.log2();
  const double d = bases.log1() - l2;
  const int sign = n > 0 ? 1 : -1;
  if (d == 0.0) return SignedLog::from_log(sign, std::log(std::abs(nn)) + (nn - 1.0) * l2);
  return SignedLog::from_log(sign, (nn - 1.0) * l2 + log_abs_expm1(nn * d) - log_abs_expm1(d));
}

SignedLog log_alt_quotient(const PowerPair& bases, long n) {
  const double nn = static_cast<double>(n);
  const double l1 = bases.log1();
  const double l2 = bases.log2();
  const SignedLog num =
      add(SignedLog::from_log(1, nn * l1), SignedLog::from_log(is_odd(n) ? 1 : -1, nn * l2));
  const double log_den = std::max(l1, l2) + std::log1p(std::exp(-std::abs(l1 - l2)));
  if (num.sign == 0) return {};
  return SignedLog::from_log(num.sign, num.log_abs - log_den);
}

}  // namespace pqdeform::detail

#pragma once

// Test-side reference implementations. They deliberately avoid the library's closed
// forms so that agreement means something.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "pqdeform/params.hpp"

namespace pqtest {

using pqdeform::DeformationParams;

inline double rel_dev(double value, double reference) {
  return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

// f(0) = 0, f(k+1) = p^nu f(k) + (1 + 2 gamma (-1)^k) q^(alpha k + beta), in long double.
inline std::vector<long double> f_oracle(const DeformationParams& params, int n_max) {
  const long double P = std::pow(static_cast<long double>(params.p), static_cast<long double>(params.nu));
  std::vector<long double> f(static_cast<std::size_t>(n_max) + 1, 0.0L);
  for (int k = 0; k < n_max; ++k) {
    const long double parity = (k % 2 == 0) ? 1.0L : -1.0L;
    const long double power = std::pow(static_cast<long double>(params.q),
                                       static_cast<long double>(params.alpha) * k + params.beta);
    f[k + 1] = P * f[k] + (1.0L + 2.0L * params.gamma * parity) * power;
  }
  return f;
}

// Bracket number as the finite sum  sum_j P^(n-1-j) Q^j (1 + 2 gamma kappa (-1)^(n-1-j)).
inline double bracket_oracle(const DeformationParams& params, int n, int kappa) {
  const long double P = std::pow(static_cast<long double>(params.p), static_cast<long double>(params.nu));
  const long double Q = std::pow(static_cast<long double>(params.q), static_cast<long double>(params.alpha));
  long double sum = 0.0L;
  for (int j = 0; j < n; ++j) {
    const int e = n - 1 - j;
    const long double sign = (e % 2 == 0) ? 1.0L : -1.0L;
    sum += std::pow(P, e) * std::pow(Q, j) * (1.0L + 2.0L * params.gamma * kappa * sign);
  }
  return static_cast<double>(sum);
}

// Open interval for 2 gamma, written from p^nu and q^alpha directly.
struct Interval {
  double lower;
  double upper;
};

inline Interval gamma_interval_oracle(const DeformationParams& params) {
  const double P = std::pow(params.p, params.nu);
  const double Q = std::pow(params.q, params.alpha);
  if (P >= Q) return {-1.0, std::numeric_limits<double>::infinity()};
  return {-1.0, -(P + Q) / (P - Q)};
}

class Draws {
 public:
  explicit Draws(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  // p, q in [0.5, 2], alpha, nu in [-2, 2], beta in [-1, 1], 2 gamma well inside its interval.
  DeformationParams admissible() {
    DeformationParams params;
    params.p = uniform(0.5, 2.0);
    params.q = uniform(0.5, 2.0);
    params.alpha = uniform(-2.0, 2.0);
    params.beta = uniform(-1.0, 1.0);
    params.nu = uniform(-2.0, 2.0);
    const Interval interval = gamma_interval_oracle(params);
    const double upper = std::min(interval.upper, 3.0);
    params.gamma = 0.5 * (interval.lower + (upper - interval.lower) * uniform(0.05, 0.95));
    return params;
  }

  // Same ranges with nu chosen so that p^nu = q^alpha.
  DeformationParams degenerate() {
    DeformationParams params = admissible();
    if (std::abs(std::log(params.p)) < 0.2) params.p = 1.5;
    params.nu = params.alpha * std::log(params.q) / std::log(params.p);
    params.gamma = 0.5 * uniform(-0.95, 2.0);
    return params;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace pqtest

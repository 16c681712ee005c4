#pragma once

#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "pqdeform/params.hpp"

namespace pqdeform {

/// Open interval of admissible values of 2 gamma. Either end may be infinite.
struct GammaInterval {
  double lower = -1.0;
  double upper = std::numeric_limits<double>::infinity();

  bool contains(double two_gamma) const { return two_gamma > lower && two_gamma < upper; }
};

enum class Verdict { PositiveOnScan, ViolationAt };

std::string_view to_string(Verdict verdict);

struct Violation {
  int n = 0;
  bool is_zero = false;  ///< f(n) == 0 rather than negative
};

struct PositivityReport {
  GammaInterval interval;
  RegimeSign regime_sign = RegimeSign::Zero;
  double empirical_min = 0.0;  ///< min of f(1..n_max)
  int n_argmin = 1;
  Verdict verdict = Verdict::PositiveOnScan;
  std::optional<Violation> violation;
  bool gamma_in_interval = true;
  /// False when 2 gamma lies strictly inside the analytic interval but the scan found a
  /// violation; the analytic condition is sufficient, so this should never happen.
  bool consistent = true;
};

/// Interval of 2 gamma for which f(n) > 0 for all n >= 1:
///   nu ln p > alpha ln q:  (-1, +inf)
///   nu ln p < alpha ln q:  (-1, -(p^nu + q^alpha)/(p^nu - q^alpha))
///   degenerate:            (-1, +inf)
GammaInterval admissible_gamma(const DeformationParams& params,
                               double tol_regime = kDefaultRegimeTol);

/// Scans f(1..n_max), records the minimum and the first n with f(n) <= 0.
PositivityReport check_positivity(const DeformationParams& params, int n_max,
                                  double tol_regime = kDefaultRegimeTol);

/// u_n = u (p^(n nu) - q^(n alpha)) / (p^(n nu) + q^(n alpha)) with u = (p^nu + q^alpha)/(p^nu - q^alpha),
/// for n = 1..n_max. Nondecreasing with u_1 = 1 in the generic regime.
std::vector<double> monotone_bound_sequence(const DeformationParams& params, int n_max);

}  // namespace pqdeform

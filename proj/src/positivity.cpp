#include "pqdeform/positivity.hpp"

#include <cmath>
#include <string>

#include "pqdeform/errors.hpp"
#include "pqdeform/structure.hpp"

namespace pqdeform {

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::PositiveOnScan ? "positive_on_scan" : "violation_at";
}

GammaInterval admissible_gamma(const DeformationParams& params, double tol_regime) {
  const RegimeInfo regime = classify_regime(params, tol_regime);
  GammaInterval interval;
  if (regime.sign == RegimeSign::Negative) {
    const double p_nu = params.p_nu();
    const double q_alpha = params.q_alpha();
    interval.upper = -(p_nu + q_alpha) / (p_nu - q_alpha);
  }
  return interval;
}

PositivityReport check_positivity(const DeformationParams& params, int n_max, double tol_regime) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  PositivityReport report;
  report.interval = admissible_gamma(params, tol_regime);
  report.regime_sign = classify_regime(params, tol_regime).sign;
  report.gamma_in_interval = report.interval.contains(2.0 * params.gamma);

  report.empirical_min = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= n_max; ++n) {
    const int sign = f_sign(params, n, tol_regime);
    const double value = sign == 0 ? 0.0 : f_log(params, n, tol_regime).value();
    if (value < report.empirical_min) {
      report.empirical_min = value;
      report.n_argmin = n;
    }
    if (sign <= 0 && !report.violation) report.violation = Violation{n, sign == 0};
  }
  report.verdict = report.violation ? Verdict::ViolationAt : Verdict::PositiveOnScan;
  report.consistent = !(report.gamma_in_interval && report.violation);
  return report;
}

std::vector<double> monotone_bound_sequence(const DeformationParams& params, int n_max) {
  params.validate();
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  // With m = (nu ln p - alpha ln q)/2 the ratio (P^n - Q^n)/(P^n + Q^n) is tanh(n m), so
  // u_n = tanh(n m) / tanh(m); evaluating it that way avoids overflow for large n.
  const double half = 0.5 * (params.log_p_nu() - params.log_q_alpha());
  if (half == 0.0) {
    throw DomainError("monotone bound is undefined in the degenerate regime (p^nu = q^alpha)");
  }
  std::vector<double> u(n_max);
  const double scale = 1.0 / std::tanh(half);
  for (int n = 1; n <= n_max; ++n) u[n - 1] = scale * std::tanh(n * half);
  return u;
}

}  // namespace pqdeform

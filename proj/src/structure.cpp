#include "pqdeform/structure.hpp"

#include <algorithm>
#include <string>

#include "ladder.hpp"
#include "pqdeform/errors.hpp"

namespace pqdeform {

using detail::is_odd;
using detail::parity;

namespace {

// Magnitudes below this fraction of the competing terms are treated as zero.
constexpr double kZeroRelTol = 1e-12;

void require_nonnegative(int n) {
  if (n < 0) throw DomainError("structure function is defined for n >= 0, got " + std::to_string(n));
}

bool is_degenerate(const DeformationParams& params, double tol_regime) {
  return classify_regime(params, tol_regime).regime == Regime::Degenerate;
}

struct LogTerms {
  SignedLog first;
  SignedLog second;
};

// f(n) = first + second, both in log space.
LogTerms f_log_terms(const DeformationParams& params, int n, bool degenerate) {
  const double log_q = std::log(params.q);
  if (degenerate) {
    const double log_power = ((n - 1.0) * params.alpha + params.beta) * log_q;
    const SignedLog power = SignedLog::from_log(1, log_power);
    return {SignedLog::from_value(static_cast<double>(n)) * power,
            SignedLog::from_value(is_odd(n) ? 2.0 * params.gamma : 0.0) * power};
  }
  const auto bases = detail::ladder_bases(params);
  const SignedLog q_beta = SignedLog::from_log(1, params.beta * log_q);
  return {detail::log_diff_quotient(bases, n) * q_beta,
          SignedLog::from_value(2.0 * params.gamma) * detail::log_alt_quotient(bases, n) * q_beta};
}

}  // namespace

std::string_view to_string(Branch branch) {
  return branch == Branch::Generic ? "generic" : "degenerate";
}

double f_generic(const DeformationParams& params, int n) {
  params.validate();
  require_nonnegative(n);
  if (n == 0) return 0.0;
  const auto bases = detail::ladder_bases(params);
  return std::pow(params.q, params.beta) *
         (detail::diff_quotient(bases, n) + 2.0 * params.gamma * detail::alt_quotient(bases, n));
}

double f_degenerate(const DeformationParams& params, int n) {
  params.validate();
  require_nonnegative(n);
  if (n == 0) return 0.0;
  const double odd_part = is_odd(n) ? 2.0 * params.gamma : 0.0;
  return (n + odd_part) * std::pow(params.q, (n - 1.0) * params.alpha + params.beta);
}

SignedLog f_log(const DeformationParams& params, int n, double tol_regime) {
  params.validate();
  require_nonnegative(n);
  if (n == 0) return {};
  const LogTerms terms = f_log_terms(params, n, is_degenerate(params, tol_regime));
  return add(terms.first, terms.second);
}

int f_sign(const DeformationParams& params, int n, double tol_regime) {
  params.validate();
  require_nonnegative(n);
  if (n == 0) return 0;
  const LogTerms terms = f_log_terms(params, n, is_degenerate(params, tol_regime));
  const SignedLog total = add(terms.first, terms.second);
  if (total.sign == 0) return 0;
  const double largest = std::max(terms.first.log_abs, terms.second.log_abs);
  if (total.log_abs - largest < std::log(kZeroRelTol)) return 0;
  return total.sign;
}

StructureValue f_closed(const DeformationParams& params, int n, const EvalOptions& options) {
  params.validate();
  require_nonnegative(n);

  StructureValue result;
  result.n = n;
  const bool degenerate = is_degenerate(params, options.tol_regime);
  result.branch = degenerate ? Branch::Degenerate : Branch::Generic;
  if (n == 0) {
    if (options.with_log) result.log_scaled = SignedLog{}.log_abs;
    return result;
  }

  const auto bases = detail::ladder_bases(params);
  if (!detail::needs_log_space(bases, n)) {
    result.value = degenerate ? f_degenerate(params, n) : f_generic(params, n);
  } else {
    result.value = std::numeric_limits<double>::infinity();
  }

  if (!std::isfinite(result.value)) {
    const SignedLog logged = f_log(params, n, options.tol_regime);
    if (!logged.fits_double()) {
      throw OutOfRangeError("f(" + std::to_string(n) + ") overflows a double (ln|f| = " +
                                std::to_string(logged.log_abs) + ")",
                            logged);
    }
    result.value = logged.value();
  }
  if (options.with_log) result.log_scaled = SignedLog::from_value(result.value).log_abs;
  return result;
}

double f_recurrence(const DeformationParams& params, int n) {
  params.validate();
  require_nonnegative(n);
  const double p_nu = params.p_nu();
  double f = 0.0;
  for (int k = 0; k < n; ++k) {
    const double source = (1.0 + 2.0 * params.gamma * parity(k)) *
                          std::pow(params.q, params.alpha * k + params.beta);
    f = p_nu * f + source;
  }
  if (std::isfinite(f)) return f;

  // Redo the iteration in log space to report the magnitude.
  const double log_p_nu = params.log_p_nu();
  const double log_q = std::log(params.q);
  SignedLog logged;
  for (int k = 0; k < n; ++k) {
    const SignedLog source =
        SignedLog::from_value(1.0 + 2.0 * params.gamma * parity(k)) *
        SignedLog::from_log(1, (params.alpha * k + params.beta) * log_q);
    logged = add(logged * SignedLog::from_log(1, log_p_nu), source);
  }
  throw OutOfRangeError("recurrence value f(" + std::to_string(n) + ") overflows a double",
                        logged);
}

namespace detail {

double bracket_value(const DeformationParams& params, int n, double kappa, double tol_regime) {
  params.validate();
  if (n < 1) throw DomainError("bracket is defined for n >= 1, got " + std::to_string(n));

  const auto bases = ladder_bases(params);
  const double weight = 2.0 * params.gamma * kappa;
  const bool degenerate = is_degenerate(params, tol_regime);
  double value;
  if (needs_log_space(bases, n)) {
    value = std::numeric_limits<double>::infinity();
  } else if (degenerate) {
    value = (n + (is_odd(n) ? weight : 0.0)) * std::pow(params.q, (n - 1.0) * params.alpha);
  } else {
    value = diff_quotient(bases, n) + weight * alt_quotient(bases.swapped(), n);
  }
  if (std::isfinite(value)) return value;

  SignedLog logged;
  if (degenerate) {
    logged = SignedLog::from_value(n + (is_odd(n) ? weight : 0.0)) *
             SignedLog::from_log(1, (n - 1.0) * params.log_q_alpha());
  } else {
    logged = add(log_diff_quotient(bases, n),
                 SignedLog::from_value(weight) * log_alt_quotient(bases.swapped(), n));
  }
  if (!logged.fits_double()) {
    throw OutOfRangeError("bracket [" + std::to_string(n) + "] overflows a double", logged);
  }
  return logged.value();
}

}  // namespace detail

BracketValue bracket(const DeformationParams& params, int n, int kappa, double tol_regime) {
  if (kappa != 1 && kappa != -1) throw InvalidParameterError("kappa must be +1 or -1");
  return {n, kappa, detail::bracket_value(params, n, kappa, tol_regime)};
}

namespace {

std::vector<double> geometric_series(double ratio, int order) {
  std::vector<double> c(order + 1);
  double term = 1.0;
  for (int j = 0; j <= order; ++j) {
    c[j] = term;
    term *= ratio;
  }
  return c;
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b,
                             int order) {
  std::vector<double> c(order + 1, 0.0);
  for (int i = 0; i <= order; ++i) {
    for (int j = 0; j <= order - i; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace

std::vector<double> genfunc_coeffs(const DeformationParams& params, int kappa, int order,
                                   double tol_regime) {
  params.validate();
  if (kappa != 1 && kappa != -1) throw InvalidParameterError("kappa must be +1 or -1");
  if (order < 1) throw DomainError("generating-function order must be >= 1");

  const double weight = 2.0 * params.gamma * kappa;
  const double p_nu = params.p_nu();
  const double q_alpha = params.q_alpha();
  const int inner_order = order - 1;  // the overall factor z shifts everything by one

  std::vector<double> inner;
  if (is_degenerate(params, tol_regime)) {
    // 1/(1 - q^a z)^2 + 2 gamma kappa / (1 - q^(2a) z^2)
    const auto g = geometric_series(q_alpha, inner_order);
    inner = convolve(g, g, inner_order);
    const auto even = geometric_series(q_alpha * q_alpha, inner_order / 2);
    for (int j = 0; 2 * j <= inner_order; ++j) inner[2 * j] += weight * even[j];
  } else {
    // 1/(1 - q^a z) * (1/(1 - p^nu z) + 2 gamma kappa / (1 + p^nu z))
    auto mixed = geometric_series(p_nu, inner_order);
    const auto alternating = geometric_series(-p_nu, inner_order);
    for (int j = 0; j <= inner_order; ++j) mixed[j] += weight * alternating[j];
    inner = convolve(geometric_series(q_alpha, inner_order), mixed, inner_order);
  }

  std::vector<double> coeffs(order + 1, 0.0);
  std::copy(inner.begin(), inner.end(), coeffs.begin() + 1);
  return coeffs;
}

}  // namespace pqdeform

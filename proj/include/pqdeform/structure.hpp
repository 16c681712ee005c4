#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "pqdeform/params.hpp"
#include "pqdeform/signed_log.hpp"

namespace pqdeform {

enum class Branch { Generic, Degenerate };

std::string_view to_string(Branch branch);

/// f(n), the eigenvalue of a^+ a on |n>.
struct StructureValue {
  int n = 0;
  double value = 0.0;
  Branch branch = Branch::Generic;
  std::optional<double> log_scaled;  ///< ln|value|, filled on request
};

/// [n; alpha, beta, nu; gamma K] with K replaced by its eigenvalue kappa.
struct BracketValue {
  int n = 1;
  int kappa = 1;
  double value = 0.0;
};

struct EvalOptions {
  double tol_regime = kDefaultRegimeTol;
  bool with_log = false;
};

/// Closed form of the structure function on the branch picked by classify_regime.
/// Throws OutOfRangeError (carrying the log-scaled value) when f(n) overflows a double.
StructureValue f_closed(const DeformationParams& params, int n, const EvalOptions& options = {});

/// Generic closed form, evaluated regardless of the regime. Used for continuity checks.
double f_generic(const DeformationParams& params, int n);

/// Degenerate closed form (n + 2 gamma [n odd]) q^((n-1) alpha + beta), regardless of regime.
double f_degenerate(const DeformationParams& params, int n);

/// f(n) as (sign, ln|f|); never overflows.
SignedLog f_log(const DeformationParams& params, int n, double tol_regime = kDefaultRegimeTol);

/// Sign of f(n): -1, 0 or +1. Values whose magnitude is below 1e-12 of the competing
/// terms count as zero.
int f_sign(const DeformationParams& params, int n, double tol_regime = kDefaultRegimeTol);

/// f(n) by iterating f(k+1) = p^nu f(k) + (1 + 2 gamma (-1)^k) q^(alpha k + beta) from f(0) = 0.
double f_recurrence(const DeformationParams& params, int n);

BracketValue bracket(const DeformationParams& params, int n, int kappa,
                     double tol_regime = kDefaultRegimeTol);

/// Coefficients c_0..c_order of the bracket generating function, obtained by convolving
/// geometric series. c_n equals bracket(n, kappa) for n >= 1.
std::vector<double> genfunc_coeffs(const DeformationParams& params, int kappa, int order,
                                   double tol_regime = kDefaultRegimeTol);

namespace detail {

/// Bracket with K replaced by an arbitrary real eigenvalue. Representations whose K
/// eigenvalue is c0 (-1)^n need this.
double bracket_value(const DeformationParams& params, int n, double kappa, double tol_regime);

}  // namespace detail

}  // namespace pqdeform

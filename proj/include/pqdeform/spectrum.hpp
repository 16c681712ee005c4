#pragma once

#include <vector>

#include "pqdeform/params.hpp"

namespace pqdeform {

/// Below this |mu| the parametrized energies switch to the mu = 0 reduction and the
/// spacing to direct differencing (1/sinh(mu) amplifies rounding).
inline constexpr double kDefaultTolMu = 1e-6;

struct SpectrumConfig {
  double hbar_omega = 1.0;
  DeformationParams params;

  void validate() const;
};

/// p = e^tau, q = e^rho, tau nu = k + mu, rho alpha = k - mu.
struct SpectrumParams {
  double tau = 0.0;
  double rho = 0.0;
  double k = 0.0;
  double mu = 0.0;
};

SpectrumParams reparametrize(const DeformationParams& params);

/// e_n = (hbar w / 2) (f(n) + f(n+1)). Throws PositivityError if f(n) or f(n+1) is negative.
double energy(const SpectrumConfig& cfg, int n);

/// e_n from the (tau, rho, k, mu) form split by the parity of n; the mu = 0 reduction
///   (hbar w / 2) e^(rho beta + k n) [(n + gamma)(1 + e^-k) + gamma (-1)^n (1 - e^-k) + 1]
/// is used when |mu| <= tol_mu.
double energy_parametrized(const SpectrumParams& sp, double gamma, double rho_beta,
                           double hbar_omega, int n, double tol_mu = kDefaultTolMu);

/// e_(2n+1) - e_(2n) from the closed sinh form, or by differencing when |mu| <= tol_mu.
double spacing(const SpectrumConfig& cfg, int n, double tol_mu = kDefaultTolMu);

struct EnergyEntry {
  int n = 0;
  double e_n = 0.0;
  double e_n_parametrized = 0.0;
  double spacing = 0.0;  ///< e_(2n+1) - e_(2n)
};

struct EnergyTable {
  SpectrumParams sp;
  std::vector<EnergyEntry> entries;
  /// Largest relative gap between e_n and its parametrized evaluation.
  double max_rel_mismatch = 0.0;
};

EnergyTable energy_table(const SpectrumConfig& cfg, int n_max, double tol_mu = kDefaultTolMu);

}  // namespace pqdeform

#include "pqdeform/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pqdeform/errors.hpp"
#include "pqdeform/structure.hpp"

namespace pqdeform {

namespace {

double checked_f(const DeformationParams& params, int n) {
  if (n == 0) return 0.0;
  const int sign = f_sign(params, n);
  if (sign < 0) {
    throw PositivityError("f(" + std::to_string(n) + ") < 0: spectrum undefined for these parameters", n);
  }
  return sign == 0 ? 0.0 : f_closed(params, n).value;
}

void require_level(int n) {
  if (n < 0) throw DomainError("energy level must be >= 0, got " + std::to_string(n));
}

}  // namespace

void SpectrumConfig::validate() const {
  params.validate();
  if (!(std::isfinite(hbar_omega) && hbar_omega > 0.0)) {
    throw InvalidParameterError("hbar_omega must be positive");
  }
}

SpectrumParams reparametrize(const DeformationParams& params) {
  params.validate();
  SpectrumParams sp;
  sp.tau = std::log(params.p);
  sp.rho = std::log(params.q);
  const double tau_nu = sp.tau * params.nu;
  const double rho_alpha = sp.rho * params.alpha;
  sp.k = 0.5 * (tau_nu + rho_alpha);
  sp.mu = 0.5 * (tau_nu - rho_alpha);
  return sp;
}

double energy(const SpectrumConfig& cfg, int n) {
  cfg.validate();
  require_level(n);
  return 0.5 * cfg.hbar_omega * (checked_f(cfg.params, n) + checked_f(cfg.params, n + 1));
}

double energy_parametrized(const SpectrumParams& sp, double gamma, double rho_beta,
                           double hbar_omega, int n, double tol_mu) {
  require_level(n);
  const double nn = static_cast<double>(n);
  const double half = 0.5 * hbar_omega;
  const double sign = n % 2 == 0 ? 1.0 : -1.0;

  if (std::abs(sp.mu) <= tol_mu) {
    const double decay = std::exp(-sp.k);
    return half * std::exp(rho_beta + sp.k * nn) *
           ((nn + gamma) * (1.0 + decay) + gamma * sign * (1.0 - decay) + 1.0);
  }

  const double up = sp.k + sp.mu;    // ln p^nu
  const double down = sp.k - sp.mu;  // ln q^alpha
  const double grow_up = 0.5 * (1.0 + std::exp(up)) * std::exp(up * nn);
  const double grow_down = 0.5 * (1.0 + std::exp(down)) * std::exp(down * nn);
  const double parity_part = 0.5 * (1.0 - std::exp(down)) * std::exp(down * nn);
  // Odd n adds the q^alpha term in the gamma part, even n subtracts it.
  const double gamma_part = grow_up - sign * parity_part;
  return half * std::exp(rho_beta - sp.k) *
         ((grow_up - grow_down) / std::sinh(sp.mu) + 2.0 * gamma * gamma_part / std::cosh(sp.mu));
}

double spacing(const SpectrumConfig& cfg, int n, double tol_mu) {
  cfg.validate();
  require_level(n);
  const SpectrumParams sp = reparametrize(cfg.params);
  if (std::abs(sp.mu) <= tol_mu) return energy(cfg, 2 * n + 1) - energy(cfg, 2 * n);

  const double nn = static_cast<double>(n);
  const double rho_beta = sp.rho * cfg.params.beta;
  return 0.5 * cfg.hbar_omega * std::exp(rho_beta + (2.0 * nn - 1.0) * sp.k) *
         (1.0 / std::sinh(sp.mu) + 2.0 * cfg.params.gamma / std::cosh(sp.mu)) *
         (std::exp(2.0 * sp.k) * std::sinh(2.0 * (nn + 1.0) * sp.mu) - std::sinh(2.0 * nn * sp.mu));
}

EnergyTable energy_table(const SpectrumConfig& cfg, int n_max, double tol_mu) {
  cfg.validate();
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  EnergyTable table;
  table.sp = reparametrize(cfg.params);
  const double rho_beta = table.sp.rho * cfg.params.beta;
  for (int n = 0; n <= n_max; ++n) {
    EnergyEntry entry;
    entry.n = n;
    entry.e_n = energy(cfg, n);
    entry.e_n_parametrized =
        energy_parametrized(table.sp, cfg.params.gamma, rho_beta, cfg.hbar_omega, n, tol_mu);
    entry.spacing = spacing(cfg, n, tol_mu);
    table.max_rel_mismatch =
        std::max(table.max_rel_mismatch, std::abs(entry.e_n - entry.e_n_parametrized) /
                                             std::max(1.0, std::abs(entry.e_n)));
    table.entries.push_back(entry);
  }
  return table;
}

}  // namespace pqdeform

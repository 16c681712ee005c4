#include <doctest.h>

#include <cmath>

#include "pqdeform/errors.hpp"
#include "pqdeform/spectrum.hpp"
#include "pqdeform/structure.hpp"
#include "support.hpp"

using namespace pqdeform;
using pqtest::rel_dev;

TEST_CASE("frozen energies") {
  const SpectrumConfig cfg{1.0, {2, 3, 1, 0, 1, 0}};
  CHECK(energy(cfg, 0) == doctest::Approx(0.5));
  CHECK(energy(cfg, 1) == doctest::Approx(3.0));
  CHECK(energy(cfg, 2) == doctest::Approx(12.0));
  CHECK(energy(cfg, 3) == doctest::Approx(42.0));
  const SpectrumConfig scaled{2.5, cfg.params};
  CHECK(energy(scaled, 3) == doctest::Approx(105.0));
}

TEST_CASE("mu = 0 energies") {
  const SpectrumConfig cfg{1.0, {2, 2, 1, 0, 1, 0.25}};
  const SpectrumParams sp = reparametrize(cfg.params);
  CHECK(sp.mu == doctest::Approx(0.0));
  CHECK(sp.k == doctest::Approx(std::log(2.0)));
  CHECK(energy(cfg, 0) == doctest::Approx(0.75));
  CHECK(energy_parametrized(sp, 0.25, 0.0, 1.0, 0) == doctest::Approx(0.75));
  CHECK(energy(cfg, 1) == doctest::Approx(2.75));
  CHECK(energy_parametrized(sp, 0.25, 0.0, 1.0, 1) == doctest::Approx(2.75));
}

TEST_CASE("harmonic limit") {
  const SpectrumConfig cfg{1.0, {}};
  for (int n = 0; n <= 20; ++n) {
    CHECK(std::abs(energy(cfg, n) - (n + 0.5)) <= 1e-12);
    CHECK(std::abs(energy_parametrized({}, 0.0, 0.0, 1.0, n) - (n + 0.5)) <= 1e-12);
  }
}

TEST_CASE("parametrized form and spacing on random draws") {
  pqtest::Draws draws(0x5eed09);
  for (int trial = 0; trial < 60; ++trial) {
    const DeformationParams params = trial % 3 == 0 ? draws.degenerate() : draws.admissible();
    const SpectrumConfig cfg{draws.uniform(0.5, 2.0), params};
    const SpectrumParams sp = reparametrize(params);
    for (int n = 0; n <= 30; ++n) {
      const double direct = energy(cfg, n);
      // independent: (hbar w / 2)(f(n) + f(n+1)) from the long double recurrence
      const auto f = pqtest::f_oracle(params, n + 1);
      CHECK(rel_dev(direct, 0.5 * cfg.hbar_omega * static_cast<double>(f[n] + f[n + 1])) <= 1e-9);
      const double param = energy_parametrized(sp, params.gamma, sp.rho * params.beta, cfg.hbar_omega, n);
      CHECK(std::abs(param - direct) <= 1e-9 * std::abs(direct));
    }
    if (std::abs(sp.mu) > kDefaultTolMu) {
      for (int n = 0; n <= 14; ++n) {
        const double diff = energy(cfg, 2 * n + 1) - energy(cfg, 2 * n);
        CHECK(std::abs(spacing(cfg, n) - diff) <= 1e-9 * std::max(std::abs(diff), 1e-300));
      }
    }
  }
}

TEST_CASE("deformed spectra are not equidistant") {
  const SpectrumConfig cfg{1.0, {1.1, 0.9, 1, 0, 1, 0.1}};
  bool uneven = false;
  for (int n = 1; n < 10; ++n) {
    const double second = energy(cfg, n + 1) - 2.0 * energy(cfg, n) + energy(cfg, n - 1);
    uneven = uneven || std::abs(second) > 1e-9;
  }
  CHECK(uneven);
}

TEST_CASE("gamma condition in the reparametrized variables") {
  pqtest::Draws draws(0x5eed0a);
  for (int trial = 0; trial < 50; ++trial) {
    const DeformationParams params = draws.admissible();
    const SpectrumParams sp = reparametrize(params);
    if (std::abs(sp.mu) < 1e-6) continue;
    const double P = std::pow(params.p, params.nu);
    const double Q = std::pow(params.q, params.alpha);
    CHECK(rel_dev(-1.0 / std::tanh(sp.mu), -(P + Q) / (P - Q)) <= 1e-10);
  }
}

TEST_CASE("spectrum errors") {
  CHECK_THROWS_AS(energy({1.0, {2, 3, 1, 0, 1, 3.0}}, 1), PositivityError);
  CHECK_THROWS_AS(energy({0.0, {}}, 1), InvalidParameterError);
  CHECK_THROWS_AS(energy({1.0, {}}, -1), DomainError);
  const EnergyTable table = energy_table({1.0, {2, 3, 1, 0, 1, 0.3}}, 10);
  CHECK(table.entries.size() == 11);
  CHECK(table.max_rel_mismatch <= 1e-9);
}

// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pqdeform/cli.hpp"
#include "pqdeform/errors.hpp"
#include "pqdeform/fock.hpp"
#include "pqdeform/positivity.hpp"
#include "pqdeform/representations.hpp"
#include "pqdeform/spectrum.hpp"
#include "pqdeform/structure.hpp"
#include "support.hpp"

using namespace pqdeform;
using pqtest::Draws;
using pqtest::rel_dev;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string sci(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3g", x);
  return buffer;
}

double strict_rel(double value, double reference) {
  if (value == reference) return 0.0;
  return std::abs(value - reference) / std::abs(reference);
}

Outcome structure_oracle() {
  Draws draws(20260101);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const DeformationParams params = draws.admissible();
    for (int n = 1; n <= 40; ++n) worst = std::max(worst, strict_rel(f_closed(params, n).value, f_recurrence(params, n)));
  }
  return {worst <= 1e-9, "200 draws, n <= 40, max rel dev " + sci(worst) + " (tol 1e-9)"};
}

Outcome degenerate_continuity() {
  Draws draws(20260102);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    DeformationParams params = draws.degenerate();
    const double sign = trial % 2 == 0 ? 1.0 : -1.0;
    params.nu = (params.alpha * std::log(params.q) + sign * 1e-8) / std::log(params.p);
    for (int n = 1; n <= 20; ++n) worst = std::max(worst, strict_rel(f_generic(params, n), f_degenerate(params, n)));
  }
  return {worst <= 1e-6, "50 draws at |nu ln p - alpha ln q| = 1e-8, n <= 20, max rel dev " + sci(worst) +
                             " (tol 1e-6)"};
}

Outcome relation_verification() {
  Draws draws(20260103);
  int passed = 0;
  int caught = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const DeformationParams params = draws.admissible();
    OperatorQuadruple ops = build_fock(params, 32);
    const ResidualReport report = verify_relations(ops, params, 1e-10);
    if (report.pass && report.checked_block == 31) ++passed;
    for (const auto& [name, value] : report.residuals) worst = std::max(worst, value);

    ops.a(4, 5) *= 1.0 + 1e-6;
    ops.adag = ops.a.adjoint();
    if (!verify_relations(ops, params, 1e-10).pass) ++caught;
  }
  return {passed == 50 && caught == 50, std::to_string(passed) + "/50 draws pass at D=32 (max residual " +
                                            sci(worst) + "), " + std::to_string(caught) +
                                            "/50 corrupted realizations rejected"};
}

Outcome bracket_identity() {
  std::vector<DeformationParams> cases{{2, 3, 1, 0, 1, 0.4}, {3, 2, 1, 0.2, 1, -0.3}, {2, 2, 1, 0, 1, 0.25}};
  Draws draws(20260104);
  for (int i = 0; i < 7; ++i) cases.push_back(draws.admissible());
  int failures = 0;
  double worst_gen = 0.0;
  for (const auto& params : cases) {
    const OperatorQuadruple ops = build_fock(params, 16);
    for (int n = 1; n <= 5; ++n) failures += verify_bracket_identity(ops, params, n, 1e-10).pass ? 0 : 1;
    for (int kappa : {-1, 1}) {
      const auto coeffs = genfunc_coeffs(params, kappa, 20);
      for (int n = 1; n <= 20; ++n) worst_gen = std::max(worst_gen, rel_dev(coeffs[n], bracket(params, n, kappa).value));
    }
  }
  return {failures == 0 && worst_gen <= 1e-10,
          std::to_string(failures) + " operator identity failures over n = 1..5 at D=16; generating function max dev " +
              sci(worst_gen) + " (tol 1e-10)"};
}

Outcome classification_fixtures() {
  std::vector<std::string> failed;

  {  // (a)
    const DeformationParams params{3, 2, 1, 0, 1, 0.5};
    const auto desc = classify_representation(params, RepParams::from_b(params, 0.0, -1.0));
    const auto real = build_rep_matrices(desc, default_window(desc));
    if (desc.cls != RepClass::OneDimensional || real.ops.a.norm() != 0.0 || real.ops.adag.norm() != 0.0) {
      failed.push_back("a");
    }
  }
  {  // (b)
    const DeformationParams params{2, 3, 1, 0, 1, 0.5};
    const auto desc = classify_representation(params, RepParams::from_b(params, 0.0, -5.0));
    const auto real = build_rep_matrices(desc, default_window(desc));
    const bool ok = desc.cls == RepClass::TwoDimensional && real.ops.dim == 2 &&
                    std::abs(LambdaSequence(desc)(0) - 2.0) <= 1e-12 &&
                    std::abs(real.ops.a(0, 1).real() - std::sqrt(2.0)) <= 1e-12;
    if (!ok) failed.push_back("b");
  }
  {  // (c)
    Draws draws(20260105);
    double worst = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
      const DeformationParams params = trial % 4 == 0 ? draws.degenerate() : draws.admissible();
      const auto desc = classify_representation(params, RepParams::from_c0(params, 0.0, 1.0, 0.0));
      const auto values = lambda_sequence(desc, 0, 30);
      for (int n = 0; n <= 30; ++n) worst = std::max(worst, rel_dev(values[n], f_closed(params, n).value));
    }
    if (worst > 1e-10) failed.push_back("c");
  }
  {  // (d)
    Draws draws(20260106);
    int produced = 0;
    bool ok = true;
    for (int trial = 0; trial < 400 && produced < 100; ++trial) {
      const DeformationParams params = trial % 5 == 0 ? draws.degenerate() : draws.admissible();
      if (std::abs(params.gamma) < 1e-3) continue;
      const double B = draws.uniform(-8.0, 8.0);
      const std::optional<double> lambda0 =
          trial % 2 == 0 ? std::optional<double>(draws.uniform(0.0, 3.0)) : std::nullopt;
      RepresentationDescriptor desc;
      try {
        desc = classify_representation(params, RepParams::from_b(params, draws.uniform(-1.0, 1.0), B, lambda0));
      } catch (const ClassificationError&) {
        continue;
      }
      ++produced;
      const IndexWindow window = default_window(desc, 20);
      const auto values = lambda_sequence(desc, window.lo, window.hi);
      for (long n = window.lo; n <= window.hi; ++n) {
        const double value = values[n - window.lo];
        if (value < -1e-12) ok = false;
        const double next = lambda_recurrence_oracle(params, desc.rep, value, n);
        if (n < window.hi && rel_dev(values[n + 1 - window.lo], next) > 1e-10) ok = false;
        if (n == window.hi && desc.support.bounded_above() && n == desc.support.upper &&
            std::abs(next) > 1e-10 * std::max(1.0, value)) {
          ok = false;
        }
      }
    }
    if (!ok || produced < 50) failed.push_back("d");
  }

  std::string detail = "fixtures a-d";
  if (!failed.empty()) {
    detail += ", failed:";
    for (const auto& f : failed) detail += " " + f;
  }
  return {failed.empty(), detail};
}

Outcome known_deformations() {
  double worst = 0.0;
  for (const auto& [p0, q0] : std::vector<std::pair<double, double>>{{2.0, 3.0}, {0.8, 1.3}}) {
    const auto cj = from_preset(DeformationPreset::chakrabarty_jagannathan(p0, q0));
    const auto qu = from_preset(DeformationPreset::quesne(p0, q0));
    for (int n = 0; n <= 30; ++n) {
      const double textbook_cj = (std::pow(p0, -n) - std::pow(q0, n)) / (1.0 / p0 - q0);
      const double textbook_qu = (std::pow(p0, n) - std::pow(q0, -n)) / (q0 - 1.0 / p0);
      worst = std::max({worst, rel_dev(f_closed(cj, n).value, textbook_cj), rel_dev(f_closed(qu, n).value, textbook_qu)});
    }
  }
  bool burban_exact = true;
  for (const auto& preset : {DeformationPreset::burban(1.7, 0.5, 0.25, 0.5, 0.1),
                             DeformationPreset::burban(0.6, -1.5, 0.0, -1.5, 0.4)}) {
    const auto params = from_preset(preset);
    for (int n = 0; n <= 30; ++n) {
      const auto f = f_closed(params, n);
      burban_exact = burban_exact && f.branch == Branch::Degenerate && f.value == f_degenerate(params, n);
    }
  }
  return {worst <= 1e-10 && burban_exact, "textbook max rel dev " + sci(worst) + " (tol 1e-10), Burban " +
                                              (burban_exact ? "exact" : "not exact")};
}

Outcome spectrum_checks() {
  double harmonic = 0.0;
  for (int n = 0; n <= 20; ++n) {
    harmonic = std::max(harmonic, std::abs(energy({1.0, {}}, n) - (n + 0.5)));
    harmonic = std::max(harmonic, std::abs(energy_parametrized({}, 0.0, 0.0, 1.0, n) - (n + 0.5)));
  }

  Draws draws(20260107);
  double param_dev = 0.0;
  double spacing_dev = 0.0;
  for (int trial = 0; trial < 60; ++trial) {
    const DeformationParams params = trial % 2 == 0 ? draws.degenerate() : draws.admissible();
    const SpectrumConfig cfg{1.0, params};
    const SpectrumParams sp = reparametrize(params);
    for (int n = 0; n <= 30; ++n) {
      param_dev = std::max(param_dev, strict_rel(energy_parametrized(sp, params.gamma, sp.rho * params.beta, 1.0, n),
                                                 energy(cfg, n)));
    }
    if (std::abs(sp.mu) > 1e-6) {
      for (int n = 0; n <= 14; ++n) {
        spacing_dev = std::max(spacing_dev, strict_rel(spacing(cfg, n), energy(cfg, 2 * n + 1) - energy(cfg, 2 * n)));
      }
    }
  }

  double gamma_dev = 0.0;
  int counted = 0;
  while (counted < 50) {
    const DeformationParams params = draws.admissible();
    const SpectrumParams sp = reparametrize(params);
    if (std::abs(sp.mu) < 1e-6) continue;
    const double u = (params.p_nu() + params.q_alpha()) / (params.p_nu() - params.q_alpha());
    gamma_dev = std::max(gamma_dev, rel_dev(-1.0 / std::tanh(sp.mu), -u));
    // The upper end of the admissible interval is the same number when mu < 0.
    if (sp.mu < 0.0) gamma_dev = std::max(gamma_dev, rel_dev(admissible_gamma(params).upper, -1.0 / std::tanh(sp.mu)));
    ++counted;
  }

  const bool pass = harmonic <= 1e-12 && param_dev <= 1e-9 && spacing_dev <= 1e-9 && gamma_dev <= 1e-10;
  return {pass, "(a) " + sci(harmonic) + " (b) " + sci(param_dev) + " (c) " + sci(spacing_dev) + " (d) " +
                    sci(gamma_dev)};
}

Outcome cli_contract() {
  const auto run = [](const std::vector<std::string>& args, std::string& out) {
    std::ostringstream o;
    std::ostringstream e;
    const int code = cli::run(args, o, e);
    out = o.str();
    return code;
  };
  std::vector<std::string> failed;
  std::string out;

  int code = run({"eval", "--p", "2", "--q", "3", "--alpha", "1", "--nu", "1", "--beta", "0", "--gamma", "0",
                  "--n-max", "3", "--format", "csv"},
                 out);
  if (code != 0 || out.find("\nn,f\n0,0\n1,1\n2,5\n3,19\n") == std::string::npos) failed.push_back("eval");

  code = run({"verify", "--preset", "undeformed", "--dim", "8", "--format", "csv"}, out);
  bool residuals_small = true;
  std::istringstream lines(out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("check,", 0) == 0) continue;
    std::vector<std::string> fields;
    std::stringstream ls(line);
    for (std::string field; std::getline(ls, field, ',');) fields.push_back(field);
    if (fields.size() != 5 || std::stod(fields[2]) > 1e-12) residuals_small = false;
    ++rows;
  }
  if (code != 0 || !residuals_small || rows == 0) failed.push_back("verify");

  code = run({"positivity", "--p", "2", "--q", "3", "--alpha", "1", "--nu", "1", "--gamma", "3.0", "--format", "csv"},
             out);
  if (code != 2 || out.find("verdict,violation_at\n") == std::string::npos ||
      out.find("interval_upper,5\n") == std::string::npos) {
    failed.push_back("positivity");
  }

  std::string detail = "eval, verify and positivity examples";
  for (const auto& f : failed) detail += (f == failed.front() ? ", failed: " : " ") + f;
  return {failed.empty(), detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 structure-function oracle equivalence", structure_oracle},
      {"2 degenerate continuity", degenerate_continuity},
      {"3 relation verification", relation_verification},
      {"4 bracket identity", bracket_identity},
      {"5 classification fixtures", classification_fixtures},
      {"6 known-deformation recovery", known_deformations},
      {"7 spectrum", spectrum_checks},
      {"8 CLI contract", cli_contract},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str());
    failures += outcome.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

#include "pqdeform/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include "pqdeform/errors.hpp"
#include "pqdeform/fock.hpp"
#include "pqdeform/params.hpp"
#include "pqdeform/positivity.hpp"
#include "pqdeform/representations.hpp"
#include "pqdeform/spectrum.hpp"
#include "pqdeform/structure.hpp"

namespace pqdeform::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kParametrizedAgreementTol = 1e-9;
constexpr double kPresetRecoveryTol = 1e-10;
constexpr double kHarmonicLimitTol = 1e-12;
constexpr double kGammaConditionTol = 1e-10;

struct Options {
  std::optional<double> p, q, alpha, beta, nu, gamma;
  std::string preset;
  std::optional<double> p0, q0;
  std::string params_json;
  double tol_regime = kDefaultRegimeTol;
  std::string format;
  std::string out_file;

  std::optional<int> n_max;
  bool log = false;

  int dim = 8;
  double tol = kDefaultResidualTol;
  std::optional<int> bracket_n;

  double nu0 = 0.0;
  std::optional<double> c0;
  std::optional<double> b_value;
  std::optional<double> lambda0;
  std::string window;

  double hbar_omega = 1.0;
  bool parametrized = false;
  double tol_mu = kDefaultTolMu;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  json body;
  CsvTable csv;
  int exit_code = kSuccess;
};

// ---------------------------------------------------------------------------
// Formatting

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

json jnum(double x) {
  if (std::isfinite(x)) return x;
  return num(x);
}

json params_json(const DeformationParams& params) {
  return json{{"p", params.p},         {"q", params.q},   {"alpha", params.alpha},
              {"beta", params.beta},   {"nu", params.nu}, {"gamma", params.gamma}};
}

json regime_json(const RegimeInfo& regime) {
  return json{{"tag", std::string(to_string(regime.regime))},
              {"sign", std::string(to_string(regime.sign))},
              {"discriminant", regime.discriminant}};
}

json residual_json(const ResidualReport& report) {
  json residuals = json::object();
  for (const auto& [name, value] : report.residuals) residuals[name] = jnum(value);
  return json{{"residuals", residuals},
              {"checked_block", report.checked_block},
              {"tol", report.tol},
              {"pass", report.pass}};
}

void append_residual_rows(CsvTable& csv, const std::string& check, const ResidualReport& report) {
  for (const auto& [name, value] : report.residuals) {
    csv.rows.push_back({check, name, num(value), num(report.tol), value <= report.tol ? "true" : "false"});
  }
}

void emit_csv(const Report& report, const std::string& command, const DeformationParams& params,
              const RegimeInfo& regime, std::ostream& out) {
  out << "# pqdeform " << command << '\n';
  out << "# params: p=" << num(params.p) << ",q=" << num(params.q) << ",alpha=" << num(params.alpha)
      << ",beta=" << num(params.beta) << ",nu=" << num(params.nu) << ",gamma=" << num(params.gamma)
      << '\n';
  out << "# regime: " << to_string(regime.regime) << ",sign=" << to_string(regime.sign)
      << ",discriminant=" << num(regime.discriminant) << '\n';
  const auto write_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  };
  write_row(report.csv.header);
  for (const auto& row : report.csv.rows) write_row(row);
}

std::string scalar_text(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_float()) return num(value.get<double>());
  return value.dump();
}

void emit_text_node(const json& node, const std::string& prefix, std::ostream& out) {
  for (const auto& [key, value] : node.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      emit_text_node(value, name, out);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << name << ":\n";
      std::vector<std::string> columns;
      for (const auto& [column, unused] : value.front().items()) columns.push_back(column);
      out << " ";
      for (const auto& column : columns) out << ' ' << std::setw(24) << column;
      out << '\n';
      for (const auto& row : value) {
        out << " ";
        for (const auto& column : columns) {
          out << ' ' << std::setw(24) << (row.contains(column) ? scalar_text(row[column]) : "");
        }
        out << '\n';
      }
    } else if (value.is_array()) {
      out << name << ":";
      for (const auto& item : value) out << ' ' << scalar_text(item);
      out << '\n';
    } else {
      out << name << ": " << scalar_text(value) << '\n';
    }
  }
}

// ---------------------------------------------------------------------------
// Parameter resolution

double read_number(const json& object, const char* key, double fallback) {
  if (!object.contains(key)) return fallback;
  const json& value = object[key];
  if (!value.is_number()) {
    throw InvalidParameterError(std::string("params JSON field '") + key + "' must be a number");
  }
  return value.get<double>();
}

DeformationParams params_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameterError("cannot open params JSON file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidParameterError("malformed params JSON in '" + path + "': " + e.what());
  }
  const json& object = doc.contains("params") ? doc["params"] : doc;
  if (!object.is_object()) throw InvalidParameterError("params JSON must be an object");
  DeformationParams params;
  params.p = read_number(object, "p", params.p);
  params.q = read_number(object, "q", params.q);
  params.alpha = read_number(object, "alpha", params.alpha);
  params.beta = read_number(object, "beta", params.beta);
  params.nu = read_number(object, "nu", params.nu);
  params.gamma = read_number(object, "gamma", params.gamma);
  return params;
}

DeformationParams resolve_params(const Options& o, json& preset_echo) {
  DeformationParams params;
  if (!o.params_json.empty()) params = params_from_json_file(o.params_json);

  if (!o.preset.empty()) {
    const auto name = parse_preset_name(o.preset);
    if (!name) throw InvalidParameterError("--preset: unknown preset '" + o.preset + "'");
    if (o.p || o.q) throw InvalidParameterError("--p/--q cannot be combined with --preset");
    const bool free_given = o.alpha || o.beta || o.nu || o.gamma;
    const auto need = [&](const std::optional<double>& value, const char* flag) {
      if (!value) {
        throw InvalidParameterError(std::string("--preset ") + std::string(to_string(*name)) +
                                    " needs " + flag);
      }
      return *value;
    };
    DeformationPreset preset;
    switch (*name) {
      case PresetName::Undeformed:
        preset = DeformationPreset::undeformed();
        break;
      case PresetName::Burban:
        preset = DeformationPreset::burban(need(o.q0, "--q0"), o.alpha.value_or(0.0),
                                           o.beta.value_or(0.0), o.nu.value_or(0.0),
                                           o.gamma.value_or(0.0));
        break;
      case PresetName::ChakrabartyJagannathan:
        preset = DeformationPreset::chakrabarty_jagannathan(need(o.p0, "--p0"), need(o.q0, "--q0"));
        break;
      case PresetName::Quesne:
        preset = DeformationPreset::quesne(need(o.p0, "--p0"), need(o.q0, "--q0"));
        break;
    }
    if (*name != PresetName::Burban && free_given) {
      throw InvalidParameterError("--preset " + std::string(to_string(*name)) +
                                  " fixes alpha, beta, nu and gamma");
    }
    params = from_preset(preset);
    preset_echo = json{{"name", std::string(to_string(*name))}, {"base", preset.base}};
    return params;
  }

  if (o.p) params.p = *o.p;
  if (o.q) params.q = *o.q;
  if (o.alpha) params.alpha = *o.alpha;
  if (o.beta) params.beta = *o.beta;
  if (o.nu) params.nu = *o.nu;
  if (o.gamma) params.gamma = *o.gamma;
  params.validate();
  return params;
}

IndexWindow parse_window(const std::string& text) {
  static const std::regex pattern(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) {
    throw InvalidParameterError("--window: expected LO..HI, got '" + text + "'");
  }
  return {std::stol(match[1].str()), std::stol(match[2].str())};
}

// ---------------------------------------------------------------------------
// Subcommands

Report do_eval(const Options& o, const DeformationParams& params) {
  const int n_max = o.n_max.value_or(10);
  if (n_max < 0) throw InvalidParameterError("--n-max must be >= 0");
  Report report;
  report.body["options"] = json{{"n_max", n_max}, {"log", o.log}};
  report.csv.header = {"n", "f"};
  if (o.log) report.csv.header.push_back("ln_abs_f");

  json rows = json::array();
  for (int n = 0; n <= n_max; ++n) {
    double value;
    double log_abs;
    std::string branch;
    try {
      const StructureValue f = f_closed(params, n, {o.tol_regime, true});
      value = f.value;
      log_abs = *f.log_scaled;
      branch = to_string(f.branch);
    } catch (const OutOfRangeError& e) {
      value = e.log_value().sign * std::numeric_limits<double>::infinity();
      log_abs = e.log_value().log_abs;
      branch = to_string(classify_regime(params, o.tol_regime).regime == Regime::Generic
                             ? Branch::Generic
                             : Branch::Degenerate);
    }
    json row{{"n", n}, {"f", jnum(value)}, {"branch", branch}};
    std::vector<std::string> csv_row{std::to_string(n), num(value)};
    if (o.log) {
      row["ln_abs_f"] = jnum(log_abs);
      csv_row.push_back(num(log_abs));
    }
    rows.push_back(row);
    report.csv.rows.push_back(csv_row);
  }
  report.body["rows"] = rows;
  return report;
}

Report do_positivity(const Options& o, const DeformationParams& params) {
  const int n_max = o.n_max.value_or(40);
  if (n_max < 1) throw InvalidParameterError("--n-max must be >= 1");
  const PositivityReport pos = check_positivity(params, n_max, o.tol_regime);

  Report report;
  report.body["options"] = json{{"n_max", n_max}};
  report.body["interval"] = json{{"lower", jnum(pos.interval.lower)}, {"upper", jnum(pos.interval.upper)}};
  report.body["two_gamma"] = 2.0 * params.gamma;
  report.body["gamma_in_interval"] = pos.gamma_in_interval;
  report.body["empirical_min"] = jnum(pos.empirical_min);
  report.body["n_argmin"] = pos.n_argmin;
  report.body["verdict"] = std::string(to_string(pos.verdict));
  report.body["violation"] =
      pos.violation ? json{{"n", pos.violation->n}, {"kind", pos.violation->is_zero ? "zero" : "negative"}}
                    : json(nullptr);
  report.body["consistent"] = pos.consistent;

  report.csv.header = {"key", "value"};
  report.csv.rows = {
      {"interval_lower", num(pos.interval.lower)},
      {"interval_upper", num(pos.interval.upper)},
      {"two_gamma", num(2.0 * params.gamma)},
      {"gamma_in_interval", pos.gamma_in_interval ? "true" : "false"},
      {"empirical_min", num(pos.empirical_min)},
      {"n_argmin", std::to_string(pos.n_argmin)},
      {"verdict", std::string(to_string(pos.verdict))},
  };
  if (pos.violation) {
    report.csv.rows.push_back({"violation_n", std::to_string(pos.violation->n)});
    report.csv.rows.push_back({"violation_kind", pos.violation->is_zero ? "zero" : "negative"});
  }
  report.csv.rows.push_back({"consistent", pos.consistent ? "true" : "false"});
  report.exit_code = pos.verdict == Verdict::PositiveOnScan ? kSuccess : kCheckFailed;
  return report;
}

Report do_verify(const Options& o, const DeformationParams& params) {
  Report report;
  json options{{"dim", o.dim}, {"tol", o.tol}};
  if (o.bracket_n) options["bracket_n"] = *o.bracket_n;
  report.body["options"] = options;
  report.csv.header = {"check", "name", "residual", "tol", "pass"};

  const OperatorQuadruple ops = build_fock(params, o.dim);
  const ResidualReport relations = verify_relations(ops, params, o.tol);
  const ResidualReport casimir = casimir_check(ops, o.tol);
  bool pass = relations.pass && casimir.pass;
  report.body["relations"] = residual_json(relations);
  report.body["casimir"] = residual_json(casimir);
  append_residual_rows(report.csv, "relations", relations);
  append_residual_rows(report.csv, "casimir", casimir);
  if (o.bracket_n) {
    const ResidualReport br = verify_bracket_identity(ops, params, *o.bracket_n, o.tol);
    pass = pass && br.pass;
    report.body["bracket"] = residual_json(br);
    append_residual_rows(report.csv, "bracket", br);
  }
  report.body["pass"] = pass;
  report.exit_code = pass ? kSuccess : kCheckFailed;
  return report;
}

Report do_classify(const Options& o, const DeformationParams& params) {
  if (o.c0 && o.b_value) throw InvalidParameterError("--c0 and --B are mutually exclusive");
  const RepParams rep = o.b_value ? RepParams::from_b(params, o.nu0, *o.b_value, o.lambda0)
                                  : RepParams::from_c0(params, o.nu0, o.c0.value_or(1.0), o.lambda0);
  Report report;
  json options{{"nu0", rep.nu0}, {"c0", rep.c0}, {"B", rep.B}, {"tol", o.tol}};
  options["lambda0"] = rep.lambda0 ? json(*rep.lambda0) : json(nullptr);
  report.body["options"] = options;
  report.csv.header = {"n", "lambda", "oracle_residual"};

  RepresentationDescriptor desc;
  try {
    desc = classify_representation(params, rep, {o.tol_regime, 1e-10});
  } catch (const ClassificationError& e) {
    if (e.kind() == ClassificationError::Kind::MissingParameter) throw;
    report.body["class"] = "none";
    report.body["error"] = e.what();
    report.exit_code = kCheckFailed;
    return report;
  }

  const IndexWindow window = o.window.empty() ? default_window(desc) : parse_window(o.window);
  report.body["class"] = std::string(to_string(desc.cls));
  report.body["case_tag"] = std::string(to_string(desc.case_tag));
  report.body["support"] = desc.support.describe();
  report.body["window"] = json{{"lo", window.lo}, {"hi", window.hi}};
  report.body["lambda0_effective"] = desc.lambda0_effective;
  report.body["boundary_distance"] = jnum(desc.boundary_distance);
  report.body["notes"] = desc.notes;

  const auto values = lambda_sequence(desc, window.lo, window.hi);
  const LambdaSequence lambda(desc);
  json table = json::array();
  double worst_oracle = 0.0;
  double min_lambda = std::numeric_limits<double>::infinity();
  for (long n = window.lo; n <= window.hi; ++n) {
    const double value = values[static_cast<std::size_t>(n - window.lo)];
    min_lambda = std::min(min_lambda, value);
    // lambda_(n+1) against the recurrence; past the upper support boundary it must vanish.
    std::optional<double> next;
    if (desc.support.contains(n + 1) && n + 1 <= window.hi) {
      next = values[static_cast<std::size_t>(n + 1 - window.lo)];
    } else if (desc.support.bounded_above() && n == desc.support.upper) {
      next = 0.0;
    }
    std::optional<double> residual;
    if (next) {
      const double predicted = lambda_recurrence_oracle(params, rep, value, n);
      residual = std::abs(*next - predicted) / std::max(1.0, std::abs(*next));
      worst_oracle = std::max(worst_oracle, *residual);
    }
    table.push_back(json{{"n", n}, {"lambda", value},
                         {"oracle_residual", residual ? json(*residual) : json(nullptr)}});
    report.csv.rows.push_back({std::to_string(n), num(value), residual ? num(*residual) : ""});
  }
  report.body["lambda"] = table;
  report.body["oracle_max_residual"] = worst_oracle;

  bool pass = worst_oracle <= o.tol && min_lambda >= -1e-12;
  try {
    const RepRealization real = build_rep_matrices(desc, window);
    const ResidualReport relations = verify_relations(real.ops, params, o.tol, real.interior);
    const ResidualReport casimir = casimir_check(real.ops, o.tol, real.casimir_w, real.interior);
    report.body["relations"] = residual_json(relations);
    report.body["casimir"] = residual_json(casimir);
    report.body["casimir_w"] = json{{"re", real.casimir_w.real()}, {"im", real.casimir_w.imag()}};
    pass = pass && relations.pass && casimir.pass;
  } catch (const ClassificationError& e) {
    report.body["realization_error"] = e.what();
    pass = false;
  } catch (const PositivityError& e) {
    report.body["realization_error"] = e.what();
    pass = false;
  }
  report.body["pass"] = pass;
  report.exit_code = pass ? kSuccess : kCheckFailed;
  return report;
}

Report do_spectrum(const Options& o, const DeformationParams& params) {
  const int n_max = o.n_max.value_or(10);
  if (n_max < 0) throw InvalidParameterError("--n-max must be >= 0");
  const SpectrumConfig cfg{o.hbar_omega, params};
  const EnergyTable table = energy_table(cfg, n_max, o.tol_mu);

  Report report;
  report.body["options"] = json{{"n_max", n_max},
                                {"hbar_omega", o.hbar_omega},
                                {"parametrized", o.parametrized},
                                {"tol_mu", o.tol_mu}};
  report.body["spectrum_params"] =
      json{{"tau", table.sp.tau}, {"rho", table.sp.rho}, {"k", table.sp.k}, {"mu", table.sp.mu}};
  report.csv.header = {"n", "e_n"};
  if (o.parametrized) report.csv.header.push_back("e_n_parametrized");
  report.csv.header.push_back("spacing");

  json rows = json::array();
  for (const auto& entry : table.entries) {
    json row{{"n", entry.n}, {"e_n", jnum(entry.e_n)}};
    std::vector<std::string> csv_row{std::to_string(entry.n), num(entry.e_n)};
    if (o.parametrized) {
      row["e_n_parametrized"] = jnum(entry.e_n_parametrized);
      csv_row.push_back(num(entry.e_n_parametrized));
    }
    row["spacing"] = jnum(entry.spacing);
    csv_row.push_back(num(entry.spacing));
    rows.push_back(row);
    report.csv.rows.push_back(csv_row);
  }
  report.body["rows"] = rows;
  if (o.parametrized) {
    report.body["max_rel_mismatch"] = table.max_rel_mismatch;
    if (table.max_rel_mismatch > kParametrizedAgreementTol) report.exit_code = kCheckFailed;
  }
  return report;
}

// Textbook structure functions of the two (p,q) deformations, written out directly.
double textbook_chakrabarty_jagannathan(double p0, double q0, int n) {
  return (std::pow(p0, -n) - std::pow(q0, n)) / (1.0 / p0 - q0);
}

double textbook_quesne(double p0, double q0, int n) {
  return (std::pow(p0, n) - std::pow(q0, -n)) / (q0 - 1.0 / p0);
}

Report do_limits(const Options& o, const DeformationParams& params) {
  const int n_max = o.n_max.value_or(30);
  if (n_max < 0) throw InvalidParameterError("--n-max must be >= 0");
  const double p0 = o.p0.value_or(2.0);
  const double q0 = o.q0.value_or(3.0);

  Report report;
  report.body["options"] = json{{"n_max", n_max}, {"p0", p0}, {"q0", q0}, {"hbar_omega", o.hbar_omega}};
  report.csv.header = {"check", "deviation", "tol", "pass"};
  json checks = json::array();
  bool all_pass = true;
  const auto record = [&](const std::string& name, double deviation, double tol) {
    const bool pass = deviation <= tol;
    all_pass = all_pass && pass;
    checks.push_back(json{{"check", name}, {"deviation", jnum(deviation)}, {"tol", tol}, {"pass", pass}});
    report.csv.rows.push_back({name, num(deviation), num(tol), pass ? "true" : "false"});
  };
  const auto relative = [](double value, double reference) {
    return std::abs(value - reference) / std::max(1.0, std::abs(reference));
  };

  {
    const auto cj = from_preset(DeformationPreset::chakrabarty_jagannathan(p0, q0));
    const auto qu = from_preset(DeformationPreset::quesne(p0, q0));
    double dev_cj = 0.0;
    double dev_qu = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      dev_cj = std::max(dev_cj, relative(f_closed(cj, n).value, textbook_chakrabarty_jagannathan(p0, q0, n)));
      dev_qu = std::max(dev_qu, relative(f_closed(qu, n).value, textbook_quesne(p0, q0, n)));
    }
    record("chakrabarty_jagannathan_recovery", dev_cj, kPresetRecoveryTol);
    record("quesne_recovery", dev_qu, kPresetRecoveryTol);
  }
  {
    // p -> q with nu = alpha lands on the degenerate branch.
    const double exponent = params.alpha != 0.0 ? params.alpha : 1.0;
    const auto burban = from_preset(
        DeformationPreset::burban(q0, exponent, params.beta, exponent, params.gamma));
    double dev = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      const auto f = f_closed(burban, n);
      if (f.branch != Branch::Degenerate) dev = std::numeric_limits<double>::infinity();
      dev = std::max(dev, std::abs(f.value - f_degenerate(burban, n)));
    }
    record("burban_degenerate_branch", dev, 0.0);
  }
  {
    double dev = 0.0;
    const auto undeformed = from_preset(DeformationPreset::undeformed());
    for (int n = 0; n <= std::min(n_max, 20); ++n) {
      const double exact = o.hbar_omega * (n + 0.5);
      dev = std::max(dev, relative(energy_parametrized({}, 0.0, 0.0, o.hbar_omega, n), exact));
      dev = std::max(dev, relative(energy({o.hbar_omega, undeformed}, n), exact));
    }
    record("harmonic_limit", dev, kHarmonicLimitTol);
  }

  const SpectrumParams sp = reparametrize(params);
  report.body["spectrum_params"] = json{{"tau", sp.tau}, {"rho", sp.rho}, {"k", sp.k}, {"mu", sp.mu}};
  if (classify_regime(params, o.tol_regime).regime == Regime::Generic) {
    const double p_nu = params.p_nu();
    const double q_alpha = params.q_alpha();
    const double from_mu = -1.0 / std::tanh(sp.mu);
    const double from_bases = -(p_nu + q_alpha) / (p_nu - q_alpha);
    record("gamma_condition_identity", relative(from_mu, from_bases), kGammaConditionTol);
  }
  report.body["checks"] = checks;
  report.body["pass"] = all_pass;
  report.exit_code = all_pass ? kSuccess : kCheckFailed;
  return report;
}

// ---------------------------------------------------------------------------

void add_param_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "deformation base p > 0");
  cmd->add_option("--q", o.q, "deformation base q > 0");
  cmd->add_option("--alpha", o.alpha, "exponent alpha");
  cmd->add_option("--beta", o.beta, "exponent beta");
  cmd->add_option("--nu", o.nu, "exponent nu");
  cmd->add_option("--gamma", o.gamma, "parity coupling gamma");
  cmd->add_option("--preset", o.preset,
                  "undeformed | burban | chakrabarty-jagannathan | quesne");
  cmd->add_option("--p0", o.p0, "preset base p0");
  cmd->add_option("--q0", o.q0, "preset base q0");
  cmd->add_option("--params-json", o.params_json,
                  "read parameters from a JSON object (or a previous report)");
  cmd->add_option("--tol-regime", o.tol_regime, "relative band for p^nu = q^alpha");
  cmd->add_option("--format", o.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", o.out_file, "write the report to FILE instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deformed oscillator algebra toolkit", "pqdeform"};
  app.require_subcommand(1, 1);
  Options o;

  auto* eval = app.add_subcommand("eval", "tabulate the structure function f(n)");
  add_param_options(eval, o);
  eval->add_option("--n-max", o.n_max, "largest n (default 10)");
  eval->add_flag("--log", o.log, "add ln|f(n)| column");

  auto* positivity = app.add_subcommand("positivity", "admissible gamma interval and positivity scan");
  add_param_options(positivity, o);
  positivity->add_option("--n-max", o.n_max, "scan f(1..n_max) (default 40)");

  auto* classify = app.add_subcommand("classify", "classify an irreducible representation");
  add_param_options(classify, o);
  classify->add_option("--nu0", o.nu0, "eigenvalue of N on psi_0");
  classify->add_option("--c0", o.c0, "eigenvalue of K on psi_0 (default 1)");
  classify->add_option("--B", o.b_value, "prescribe B = 2 gamma c0 instead of c0");
  classify->add_option("--lambda0", o.lambda0, "eigenvalue of a^+ a on psi_0 (case B3)");
  classify->add_option("--window", o.window, "index window LO..HI (use --window=LO..HI for negative LO)");
  classify->add_option("--tol", o.tol, "residual tolerance (default 1e-10)");

  auto* spectrum = app.add_subcommand("spectrum", "energy levels of the deformed oscillator");
  add_param_options(spectrum, o);
  spectrum->add_option("--n-max", o.n_max, "largest level (default 10)");
  spectrum->add_option("--hbar-omega", o.hbar_omega, "energy unit (default 1)");
  spectrum->add_flag("--parametrized", o.parametrized,
                     "add the (tau, rho, k, mu) evaluation and require agreement to 1e-9");
  spectrum->add_option("--tol-mu", o.tol_mu, "|mu| below which the mu = 0 forms are used");

  auto* verify = app.add_subcommand("verify", "check the defining relations on a truncated Fock space");
  add_param_options(verify, o);
  verify->add_option("--dim", o.dim, "cutoff dimension D (default 8)");
  verify->add_option("--tol", o.tol, "residual tolerance (default 1e-10)");
  verify->add_option("--bracket-n", o.bracket_n, "also check the degree-n bracket identity");

  auto* limits = app.add_subcommand("limits", "known-deformation and harmonic-oscillator limits");
  add_param_options(limits, o);
  limits->add_option("--n-max", o.n_max, "largest n compared (default 30)");
  limits->add_option("--hbar-omega", o.hbar_omega, "energy unit (default 1)");

  std::vector<const char*> argv{"pqdeform"};
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kValidationError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  const std::map<std::string, std::function<Report(const Options&, const DeformationParams&)>>
      handlers{{"eval", do_eval},         {"positivity", do_positivity}, {"classify", do_classify},
               {"spectrum", do_spectrum}, {"verify", do_verify},         {"limits", do_limits}};
  const bool csv_default = command == "eval" || command == "spectrum";
  const std::string format = o.format.empty() ? (csv_default ? "csv" : "json") : o.format;

  try {
    json preset_echo;
    const DeformationParams params = resolve_params(o, preset_echo);
    const RegimeInfo regime = classify_regime(params, o.tol_regime);
    Report report = handlers.at(command)(o, params);

    json body{{"command", command}, {"params", params_json(params)}};
    if (!preset_echo.is_null()) body["preset"] = preset_echo;
    body["regime"] = regime_json(regime);
    for (auto& [key, value] : report.body.items()) body[key] = value;

    std::ofstream file;
    if (!o.out_file.empty()) {
      file.open(o.out_file);
      if (!file) {
        err << "error: cannot write '" << o.out_file << "'\n";
        return kValidationError;
      }
    }
    std::ostream& sink = o.out_file.empty() ? out : file;
    if (format == "csv") {
      emit_csv(report, command, params, regime, sink);
    } else if (format == "text") {
      emit_text_node(body, "", sink);
    } else {
      sink << body.dump(2) << '\n';
    }
    return report.exit_code;
  } catch (const PositivityError& e) {
    err << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const ClassificationError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ClassificationError::Kind::MissingParameter ? kValidationError : kCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::range_error& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
}

}  // namespace pqdeform::cli

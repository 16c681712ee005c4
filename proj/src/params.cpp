#include "pqdeform/params.hpp"

#include <algorithm>
#include <cctype>

#include "pqdeform/errors.hpp"

namespace pqdeform {

namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw InvalidParameterError(std::string("parameter '") + name + "' must be finite");
  }
}

void require_positive(double value, const char* name) {
  require_finite(value, name);
  if (!(value > 0.0)) {
    throw InvalidParameterError(std::string("parameter '") + name + "' must be positive");
  }
}

}  // namespace

void DeformationParams::validate() const {
  require_positive(p, "p");
  require_positive(q, "q");
  require_finite(alpha, "alpha");
  require_finite(beta, "beta");
  require_finite(nu, "nu");
  require_finite(gamma, "gamma");
}

RegimeInfo classify_regime(const DeformationParams& params, double tol_regime) {
  params.validate();
  if (!(tol_regime > 0.0)) throw InvalidParameterError("tol_regime must be positive");

  const double lp = params.log_p_nu();
  const double lq = params.log_q_alpha();
  RegimeInfo info;
  info.discriminant = lp - lq;
  const double scale = std::max({1.0, std::abs(lp), std::abs(lq)});
  if (std::abs(info.discriminant) <= tol_regime * scale) {
    info.regime = Regime::Degenerate;
    info.sign = RegimeSign::Zero;
  } else {
    info.regime = Regime::Generic;
    info.sign = info.discriminant > 0.0 ? RegimeSign::Positive : RegimeSign::Negative;
  }
  return info;
}

DeformationPreset DeformationPreset::undeformed() { return {}; }

DeformationPreset DeformationPreset::burban(double q0, double alpha, double beta, double nu,
                                            double gamma) {
  DeformationPreset preset;
  preset.name = PresetName::Burban;
  preset.base = {q0};
  preset.alpha = alpha;
  preset.beta = beta;
  preset.nu = nu;
  preset.gamma = gamma;
  return preset;
}

DeformationPreset DeformationPreset::chakrabarty_jagannathan(double p0, double q0) {
  DeformationPreset preset;
  preset.name = PresetName::ChakrabartyJagannathan;
  preset.base = {p0, q0};
  return preset;
}

DeformationPreset DeformationPreset::quesne(double p0, double q0) {
  DeformationPreset preset;
  preset.name = PresetName::Quesne;
  preset.base = {p0, q0};
  return preset;
}

DeformationParams from_preset(const DeformationPreset& preset) {
  const auto expect_bases = [&](std::size_t count) {
    if (preset.base.size() != count) {
      throw InvalidParameterError(std::string(to_string(preset.name)) + " preset takes " +
                                  std::to_string(count) + " base parameter(s)");
    }
    for (double b : preset.base) require_positive(b, "preset base");
  };

  DeformationParams params;
  switch (preset.name) {
    case PresetName::Undeformed:
      expect_bases(0);
      break;
    case PresetName::Burban:
      // The p -> q limit is taken parameterwise: both bases equal q0.
      expect_bases(1);
      params = {preset.base[0], preset.base[0], preset.alpha, preset.beta, preset.nu,
                preset.gamma};
      break;
    case PresetName::ChakrabartyJagannathan: {
      expect_bases(2);
      const double p0 = preset.base[0];
      const double q0 = preset.base[1];
      params = {q0, p0, -1.0, 0.0, 1.0, 0.0};
      break;
    }
    case PresetName::Quesne: {
      expect_bases(2);
      const double p0 = preset.base[0];
      const double q0 = preset.base[1];
      if (q0 == 1.0) throw InvalidParameterError("Quesne preset needs q0 != 1 (logarithm base)");
      params = {p0, q0, -1.0, std::log(p0) / std::log(q0) - 1.0, 1.0, 0.0};
      break;
    }
  }
  params.validate();
  return params;
}

std::string_view to_string(Regime regime) {
  return regime == Regime::Generic ? "generic" : "degenerate";
}

std::string_view to_string(RegimeSign sign) {
  switch (sign) {
    case RegimeSign::Positive: return "positive";
    case RegimeSign::Negative: return "negative";
    case RegimeSign::Zero: return "zero";
  }
  return "zero";
}

std::string_view to_string(PresetName name) {
  switch (name) {
    case PresetName::Undeformed: return "undeformed";
    case PresetName::Burban: return "burban";
    case PresetName::ChakrabartyJagannathan: return "chakrabarty-jagannathan";
    case PresetName::Quesne: return "quesne";
  }
  return "undeformed";
}

std::optional<PresetName> parse_preset_name(std::string_view text) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::replace(lowered.begin(), lowered.end(), '_', '-');
  for (auto name : {PresetName::Undeformed, PresetName::Burban,
                    PresetName::ChakrabartyJagannathan, PresetName::Quesne}) {
    if (lowered == to_string(name)) return name;
  }
  if (lowered == "cj") return PresetName::ChakrabartyJagannathan;
  return std::nullopt;
}

}  // namespace pqdeform

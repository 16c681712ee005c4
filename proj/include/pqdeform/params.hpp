#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pqdeform {

/// Relative width of the band |nu ln p - alpha ln q| <= tol * max(1, |nu ln p|, |alpha ln q|)
/// inside which p^nu and q^alpha are treated as equal.
inline constexpr double kDefaultRegimeTol = 1e-12;

/// The six real parameters of the deformed relation
///
///   a a^+ - p^nu a^+ a = (1 + 2 gamma K) q^(alpha N + beta).
///
/// Defaults give the undeformed boson (f(n) = n).
struct DeformationParams {
  double p = 1.0;
  double q = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
  double nu = 0.0;
  double gamma = 0.0;

  /// Throws InvalidParameterError unless p > 0, q > 0 and every field is finite.
  void validate() const;

  double log_p_nu() const { return nu * std::log(p); }
  double log_q_alpha() const { return alpha * std::log(q); }
  double p_nu() const { return std::pow(p, nu); }
  double q_alpha() const { return std::pow(q, alpha); }

  friend bool operator==(const DeformationParams&, const DeformationParams&) = default;
};

enum class Regime { Generic, Degenerate };
enum class RegimeSign { Positive, Negative, Zero };

struct RegimeInfo {
  double discriminant = 0.0;  ///< nu ln p - alpha ln q
  Regime regime = Regime::Degenerate;
  RegimeSign sign = RegimeSign::Zero;
};

/// Generic when p^nu != q^alpha, Degenerate inside the tolerance band.
RegimeInfo classify_regime(const DeformationParams& params, double tol_regime = kDefaultRegimeTol);

enum class PresetName { Undeformed, Burban, ChakrabartyJagannathan, Quesne };

/// A known deformation expressed through its own parameters.
///
/// Burban carries a single base q0 and keeps alpha, beta, nu, gamma free; the two
/// (p,q) presets carry (p0, q0).
struct DeformationPreset {
  PresetName name = PresetName::Undeformed;
  std::vector<double> base;
  double alpha = 0.0;
  double beta = 0.0;
  double nu = 0.0;
  double gamma = 0.0;

  static DeformationPreset undeformed();
  static DeformationPreset burban(double q0, double alpha, double beta, double nu, double gamma);
  static DeformationPreset chakrabarty_jagannathan(double p0, double q0);
  static DeformationPreset quesne(double p0, double q0);
};

DeformationParams from_preset(const DeformationPreset& preset);

std::string_view to_string(Regime regime);
std::string_view to_string(RegimeSign sign);
std::string_view to_string(PresetName name);
std::optional<PresetName> parse_preset_name(std::string_view text);

}  // namespace pqdeform

#include "pqdeform/representations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ladder.hpp"
#include "pqdeform/errors.hpp"

namespace pqdeform {

using detail::is_odd;
using detail::parity;

namespace {

constexpr long kLongMin = std::numeric_limits<long>::min();
constexpr long kLongMax = std::numeric_limits<long>::max();
constexpr double kLambdaFloor = -1e-12;

// Quantities shared by the classification and the lambda formulas.
struct Ladder {
  double p_nu;
  double q_alpha;
  double weight;     // A = q^(alpha nu0 + beta)
  double inv_diff;   // 1/(p^nu - q^alpha)
  double inv_sum;    // 1/(p^nu + q^alpha)
  double ratio;      // u = (p^nu + q^alpha)/(p^nu - q^alpha)

  Ladder(const DeformationParams& params, const RepParams& rep)
      : p_nu(params.p_nu()),
        q_alpha(params.q_alpha()),
        weight(std::pow(params.q, params.alpha * rep.nu0 + params.beta)),
        inv_diff(1.0 / (p_nu - q_alpha)),
        inv_sum(1.0 / (p_nu + q_alpha)),
        ratio((p_nu + q_alpha) / (p_nu - q_alpha)) {}

  // S = lambda0 q^-(alpha nu0 + beta) + 1/(p^nu - q^alpha) + B/(p^nu + q^alpha)
  double s_value(double lambda0, double B) const { return lambda0 / weight + inv_diff + B * inv_sum; }
  double s_scale(double lambda0, double B) const {
    return std::max({std::abs(lambda0 / weight), std::abs(inv_diff), std::abs(B * inv_sum)});
  }
};

bool near(double x, double target, double tol) {
  return std::abs(x - target) <= tol * std::max(1.0, std::abs(target));
}

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

[[noreturn]] void no_representation(const std::string& why) {
  throw ClassificationError(ClassificationError::Kind::NoRepresentation,
                            "no irreducible representation: " + why);
}

void validate_rep(const RepParams& rep) {
  if (!std::isfinite(rep.nu0) || !std::isfinite(rep.c0) || !std::isfinite(rep.B)) {
    throw InvalidParameterError("nu0, c0 and B must be finite");
  }
  if (rep.lambda0 && !(std::isfinite(*rep.lambda0) && *rep.lambda0 >= 0.0)) {
    throw InvalidParameterError("lambda0 must be finite and >= 0");
  }
}

}  // namespace

RepParams RepParams::from_c0(const DeformationParams& params, double nu0, double c0,
                             std::optional<double> lambda0) {
  params.validate();
  RepParams rep{nu0, c0, 2.0 * params.gamma * c0, lambda0};
  validate_rep(rep);
  return rep;
}

RepParams RepParams::from_b(const DeformationParams& params, double nu0, double B,
                            std::optional<double> lambda0) {
  params.validate();
  if (params.gamma == 0.0) {
    throw InvalidParameterError("B = 2 gamma c0 cannot be prescribed when gamma = 0");
  }
  RepParams rep{nu0, B / (2.0 * params.gamma), B, lambda0};
  validate_rep(rep);
  return rep;
}

std::string_view to_string(RepClass cls) {
  switch (cls) {
    case RepClass::FockLowestWeight: return "fock_lowest_weight";
    case RepClass::OneDimensional: return "one_dimensional";
    case RepClass::TwoDimensional: return "two_dimensional";
    case RepClass::HighestWeight: return "highest_weight";
    case RepClass::TwoSidedInfinite: return "two_sided_infinite";
  }
  return "";
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::A: return "A";
    case CaseTag::B1: return "B1";
    case CaseTag::B2: return "B2";
    case CaseTag::B3a: return "B3a";
    case CaseTag::B3b: return "B3b";
    case CaseTag::B3c: return "B3c";
  }
  return "";
}

std::string_view to_string(LambdaFormula formula) {
  switch (formula) {
    case LambdaFormula::Degenerate: return "degenerate";
    case LambdaFormula::LowestWeight: return "lowest_weight";
    case LambdaFormula::HighestWeight: return "highest_weight";
    case LambdaFormula::TwoSided: return "two_sided";
    case LambdaFormula::TwoSidedZeroS: return "two_sided_zero_s";
    case LambdaFormula::TwoDimensional: return "two_dimensional";
    case LambdaFormula::OneDimensional: return "one_dimensional";
  }
  return "";
}

long Support::size() const {
  if (!bounded_below() || !bounded_above()) return -1;
  return upper - lower + 1;
}

std::string Support::describe() const {
  const std::string lo = bounded_below() ? std::to_string(lower) : "-inf";
  const std::string hi = bounded_above() ? std::to_string(upper) : "+inf";
  return "[" + lo + ", " + hi + "]";
}

RepresentationDescriptor classify_representation(const DeformationParams& params,
                                                 const RepParams& rep,
                                                 const ClassifyOptions& options) {
  params.validate();
  validate_rep(rep);
  if (!near(rep.B, 2.0 * params.gamma * rep.c0, 1e-14)) {
    throw InvalidParameterError("B must equal 2 gamma c0");
  }

  RepresentationDescriptor desc;
  desc.params = params;
  desc.rep = rep;
  const double B = rep.B;
  const double tol = options.tol_boundary;

  const auto lowest_weight = [&](CaseTag tag) {
    desc.case_tag = tag;
    desc.cls = RepClass::FockLowestWeight;
    desc.support = {0, kLongMax};
    desc.lambda0_effective = 0.0;
  };
  const auto one_dimensional = [&](CaseTag tag) {
    desc.case_tag = tag;
    desc.cls = RepClass::OneDimensional;
    desc.support = {0, 0};
    desc.lambda0_effective = 0.0;
  };

  const RegimeInfo regime = classify_regime(params, options.tol_regime);
  if (regime.regime == Regime::Degenerate) {
    desc.boundary_distance = std::abs(B + 1.0);
    if (near(B, -1.0, tol)) {
      one_dimensional(CaseTag::A);
    } else if (B > -1.0) {
      lowest_weight(CaseTag::A);
      if (B < 0.0) desc.notes.push_back("B in [-1, 0) lies outside the B >= 0 range stated for case A");
    } else {
      no_representation("case A requires B >= -1 (B = " + fmt(B) + ")");
    }
    if (rep.lambda0 && *rep.lambda0 != 0.0) {
      desc.notes.push_back("lambda0 ignored: basis renumbered so that a psi_0 = 0");
    }
    return desc;
  }

  const Ladder ladder(params, rep);
  const double u = ladder.ratio;
  desc.boundary_distance = std::min({std::abs(B + 1.0), std::abs(B - u), std::abs(B + u)});

  if (regime.sign == RegimeSign::Positive) {
    if (near(B, -1.0, tol)) {
      one_dimensional(CaseTag::B1);
    } else if (B > -1.0) {
      lowest_weight(CaseTag::B1);
    } else {
      no_representation("case B1 requires B >= -1 (B = " + fmt(B) + ")");
    }
    if (rep.lambda0 && *rep.lambda0 != 0.0) {
      desc.notes.push_back("lambda0 ignored: basis renumbered so that a psi_0 = 0");
    }
    return desc;
  }

  // nu ln p < alpha ln q, so u < -1 < 1 < -u.
  const bool at_u = near(B, u, tol);
  const bool at_minus_u = near(B, -u, tol);

  if (!at_u && B < u) {
    // 1/(p^nu - q^alpha) - B/(p^nu + q^alpha) > 0: highest weight with a^+ psi_0 = 0.
    desc.case_tag = CaseTag::B2;
    desc.cls = RepClass::HighestWeight;
    desc.support = {kLongMin, 0};
    desc.lambda0_effective = -ladder.weight * (1.0 + B) / ladder.p_nu;
    return desc;
  }
  if (!at_minus_u && B > -u) {
    no_representation("case B2 needs lambda_0 = -p^-nu q^(alpha nu0 + beta)(1 + B) >= 0, i.e. B <= -1 "
                      "(B = " + fmt(B) + ")");
  }

  const auto two_dimensional = [&](CaseTag tag, bool minus_side) {
    desc.case_tag = tag;
    desc.cls = RepClass::TwoDimensional;
    desc.support = minus_side ? Support{-1, 0} : Support{0, 1};
    desc.lambda0_effective = minus_side ? 2.0 * ladder.weight / (ladder.q_alpha - ladder.p_nu) : 0.0;
  };

  // Both 1/(p^nu - q^alpha) +- B/(p^nu + q^alpha) are <= 0 here.
  if (!rep.lambda0) {
    if (at_u) {
      two_dimensional(CaseTag::B2, true);
      return desc;
    }
    throw ClassificationError(ClassificationError::Kind::MissingParameter,
                              "case B3 (|B| <= -(p^nu+q^alpha)/(p^nu-q^alpha)) needs lambda0");
  }

  const double lambda0 = *rep.lambda0;
  const double s = ladder.s_value(lambda0, B);
  if (std::abs(s) <= tol * ladder.s_scale(lambda0, B)) {
    if (at_u) {
      two_dimensional(CaseTag::B3b, true);
    } else if (at_minus_u) {
      two_dimensional(CaseTag::B3b, false);
    } else {
      desc.case_tag = CaseTag::B3b;
      desc.cls = RepClass::TwoSidedInfinite;
      desc.support = {kLongMin, kLongMax};
      desc.lambda0_effective = lambda0;
    }
    return desc;
  }
  if (s > 0.0) {
    desc.case_tag = CaseTag::B3a;
    desc.cls = RepClass::TwoSidedInfinite;
    desc.support = {kLongMin, kLongMax};
    desc.lambda0_effective = lambda0;
    return desc;
  }
  if (near(B, -1.0, tol)) {
    one_dimensional(CaseTag::B3c);
  } else if (B > -1.0 && B < -u && !at_minus_u) {
    lowest_weight(CaseTag::B3c);
  } else {
    no_representation("case B3c requires -1 <= B < -(p^nu+q^alpha)/(p^nu-q^alpha) = " + fmt(-u) +
                      " (B = " + fmt(B) + ")");
  }
  return desc;
}

LambdaSequence::LambdaSequence(RepresentationDescriptor desc) : desc_(std::move(desc)) {
  switch (desc_.cls) {
    case RepClass::OneDimensional: formula_ = LambdaFormula::OneDimensional; break;
    case RepClass::TwoDimensional: formula_ = LambdaFormula::TwoDimensional; break;
    case RepClass::HighestWeight: formula_ = LambdaFormula::HighestWeight; break;
    case RepClass::TwoSidedInfinite:
      formula_ = desc_.case_tag == CaseTag::B3b ? LambdaFormula::TwoSidedZeroS : LambdaFormula::TwoSided;
      break;
    case RepClass::FockLowestWeight:
      formula_ = desc_.case_tag == CaseTag::A ? LambdaFormula::Degenerate : LambdaFormula::LowestWeight;
      break;
  }
}

double LambdaSequence::operator()(long n) const {
  if (!desc_.support.contains(n)) {
    throw DomainError("index " + std::to_string(n) + " outside the support " +
                      desc_.support.describe());
  }
  const auto& params = desc_.params;
  const auto& rep = desc_.rep;
  const double B = rep.B;
  const double nn = static_cast<double>(n);

  switch (formula_) {
    case LambdaFormula::OneDimensional:
      return 0.0;
    case LambdaFormula::Degenerate: {
      // (n + B [n odd]) q^(alpha (nu0 + n - 1) + beta)
      const double odd_part = is_odd(n) ? B : 0.0;
      return (nn + odd_part) * std::pow(params.q, params.alpha * (rep.nu0 + nn - 1.0) + params.beta);
    }
    default:
      break;
  }

  const Ladder ladder(params, rep);
  switch (formula_) {
    case LambdaFormula::LowestWeight: {
      const auto bases = detail::ladder_bases(params);
      return ladder.weight * (detail::diff_quotient(bases, n) + B * detail::alt_quotient(bases, n));
    }
    case LambdaFormula::HighestWeight: {
      // q^a p^((n-1) nu) (D- - B D+) - q^(n a) (D- + (-1)^n B D+); both terms >= 0 for B <= u.
      const double p_prev = std::pow(params.p, (nn - 1.0) * params.nu);
      const double q_n = std::pow(params.q, nn * params.alpha);
      return ladder.weight * (ladder.q_alpha * p_prev * (ladder.inv_diff - B * ladder.inv_sum) -
                              q_n * (ladder.inv_diff + parity(n) * B * ladder.inv_sum));
    }
    case LambdaFormula::TwoSided:
    case LambdaFormula::TwoSidedZeroS: {
      // p^(n nu) S - q^(n alpha) (D- + (-1)^n B D+), scaled by q^(alpha nu0 + beta).
      const double s = formula_ == LambdaFormula::TwoSided
                           ? ladder.s_value(desc_.lambda0_effective, B)
                           : 0.0;
      const double p_n = std::pow(params.p, nn * params.nu);
      const double q_n = std::pow(params.q, nn * params.alpha);
      return ladder.weight * (p_n * s - q_n * (ladder.inv_diff + parity(n) * B * ladder.inv_sum));
    }
    case LambdaFormula::TwoDimensional: {
      // Nonzero on the parity that keeps the pair connected.
      const bool minus_side = desc_.support.lower == -1;
      const bool nonzero = minus_side ? !is_odd(n) : is_odd(n);
      if (!nonzero) return 0.0;
      return 2.0 * std::pow(params.q, params.alpha * (rep.nu0 + nn) + params.beta) /
             (ladder.q_alpha - ladder.p_nu);
    }
    default:
      break;
  }
  return 0.0;
}

std::vector<double> lambda_sequence(const RepresentationDescriptor& desc, long n_lo, long n_hi) {
  if (n_lo > n_hi) throw DomainError("empty index range");
  if (!desc.support.contains(n_lo) || !desc.support.contains(n_hi)) {
    throw DomainError("range [" + std::to_string(n_lo) + ", " + std::to_string(n_hi) +
                      "] not inside the support " + desc.support.describe());
  }
  const LambdaSequence lambda(desc);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (long n = n_lo; n <= n_hi; ++n) values.push_back(lambda(n));
  return values;
}

double lambda_recurrence_oracle(const DeformationParams& params, const RepParams& rep,
                                double lambda_n, long n) {
  const double source = std::pow(params.q, params.alpha * rep.nu0 + params.beta) *
                        (1.0 + parity(n) * rep.B) *
                        std::pow(params.q, params.alpha * static_cast<double>(n));
  return params.p_nu() * lambda_n + source;
}

IndexWindow default_window(const RepresentationDescriptor& desc, long width) {
  if (width < 1) throw DomainError("window width must be >= 1");
  const Support& s = desc.support;
  if (s.size() > 0) return {s.lower, s.upper};
  if (s.bounded_below()) return {s.lower, s.lower + width - 1};
  if (s.bounded_above()) return {s.upper - width + 1, s.upper};
  return {-(width / 2), width - 1 - width / 2};
}

RepRealization build_rep_matrices(const RepresentationDescriptor& desc, IndexWindow window) {
  if (window.lo > window.hi) throw DomainError("empty window");
  if (!desc.support.contains(window.lo) || !desc.support.contains(window.hi)) {
    throw DomainError("window [" + std::to_string(window.lo) + ", " + std::to_string(window.hi) +
                      "] not inside the support " + desc.support.describe());
  }
  if (window.hi - window.lo > 4096) throw DomainError("window too large");

  const auto& rep = desc.rep;
  if (desc.cls == RepClass::OneDimensional && desc.params.gamma == 0.0) {
    throw ClassificationError(ClassificationError::Kind::SingularOperator,
                              "one-dimensional representation has K = -1/(2 gamma), undefined at gamma = 0");
  }

  const int dim = static_cast<int>(window.hi - window.lo + 1);
  RepRealization real;
  real.first_index = window.lo;
  real.casimir_w = rep.c0 * std::polar(1.0, std::numbers::pi * std::fmod(rep.nu0, 2.0));

  OperatorQuadruple& ops = real.ops;
  ops.dim = dim;
  ops.a = ComplexMatrix::Zero(dim, dim);
  ops.n_op = ComplexMatrix::Zero(dim, dim);
  ops.k_op = ComplexMatrix::Zero(dim, dim);

  const LambdaSequence lambda(desc);
  for (int i = 0; i < dim; ++i) {
    const long n = window.lo + i;
    ops.n_op(i, i) = rep.nu0 + static_cast<double>(n);
    ops.k_op(i, i) = rep.c0 * parity(n);
    if (i == 0) continue;
    const double value = lambda(n);
    if (value < kLambdaFloor) {
      throw PositivityError("lambda_" + std::to_string(n) + " = " + fmt(value) + " < 0", n);
    }
    ops.a(i - 1, i) = std::sqrt(std::max(value, 0.0));
  }
  ops.adag = ops.a.adjoint();

  // Window ends that are not support boundaries are truncated.
  const bool keep_first = desc.support.bounded_below() && window.lo == desc.support.lower;
  const bool keep_last = desc.support.bounded_above() && window.hi == desc.support.upper;
  real.interior = {keep_first ? 0 : 1, keep_last ? dim : dim - 1};
  return real;
}

}  // namespace pqdeform

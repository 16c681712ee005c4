#pragma once

#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqdeform/fock.hpp"
#include "pqdeform/params.hpp"

namespace pqdeform {

/// Data of the extremal vector psi_0 of a representation:
///   N psi_0 = nu0 psi_0,  K psi_0 = c0 psi_0,  a^+ a psi_0 = lambda0 psi_0.
/// B = 2 gamma c0 is stored alongside.
struct RepParams {
  double nu0 = 0.0;
  double c0 = 1.0;
  double B = 0.0;
  std::optional<double> lambda0;

  static RepParams from_c0(const DeformationParams& params, double nu0, double c0,
                           std::optional<double> lambda0 = std::nullopt);
  /// Solves c0 = B / (2 gamma); needs gamma != 0.
  static RepParams from_b(const DeformationParams& params, double nu0, double B,
                          std::optional<double> lambda0 = std::nullopt);
};

enum class RepClass { FockLowestWeight, OneDimensional, TwoDimensional, HighestWeight, TwoSidedInfinite };
enum class CaseTag { A, B1, B2, B3a, B3b, B3c };

std::string_view to_string(RepClass cls);
std::string_view to_string(CaseTag tag);

/// Index set {n : lower <= n <= upper} carrying the basis psi_n. Unbounded ends are
/// represented by the numeric limits of long.
struct Support {
  long lower = 0;
  long upper = std::numeric_limits<long>::max();

  bool bounded_below() const { return lower != std::numeric_limits<long>::min(); }
  bool bounded_above() const { return upper != std::numeric_limits<long>::max(); }
  bool contains(long n) const { return n >= lower && n <= upper; }
  long size() const;  ///< -1 when infinite
  std::string describe() const;
};

struct RepresentationDescriptor {
  RepClass cls = RepClass::FockLowestWeight;
  CaseTag case_tag = CaseTag::A;
  Support support;
  DeformationParams params;
  RepParams rep;
  /// lambda_0 used by the closed form (0 for lowest weight, fixed by a^+ psi_0 = 0 for highest weight).
  double lambda0_effective = 0.0;
  /// Distance of B to the nearest class boundary (-1, +-(p^nu+q^alpha)/(p^nu-q^alpha)).
  double boundary_distance = std::numeric_limits<double>::infinity();
  std::vector<std::string> notes;
};

struct ClassifyOptions {
  double tol_regime = kDefaultRegimeTol;
  /// Relative tolerance for B = -1, B = +-(p^nu+q^alpha)/(p^nu-q^alpha) and S = 0.
  double tol_boundary = 1e-10;
};

RepresentationDescriptor classify_representation(const DeformationParams& params,
                                                 const RepParams& rep,
                                                 const ClassifyOptions& options = {});

enum class LambdaFormula {
  Degenerate,     ///< case A
  LowestWeight,   ///< lambda_0 = 0, cases B1 and B3c
  HighestWeight,  ///< a^+ psi_0 = 0, case B2
  TwoSided,       ///< general lambda_0, case B3a
  TwoSidedZeroS,  ///< case B3b with S = 0
  TwoDimensional,
  OneDimensional,
};

std::string_view to_string(LambdaFormula formula);

/// lambda_n, the eigenvalue of a^+ a on psi_n, over the descriptor's support.
class LambdaSequence {
 public:
  explicit LambdaSequence(RepresentationDescriptor desc);

  double operator()(long n) const;
  LambdaFormula formula() const { return formula_; }
  const Support& support() const { return desc_.support; }
  const RepresentationDescriptor& descriptor() const { return desc_; }

 private:
  RepresentationDescriptor desc_;
  LambdaFormula formula_;
};

/// lambda_n for n_lo..n_hi; throws DomainError unless the range lies in the support.
std::vector<double> lambda_sequence(const RepresentationDescriptor& desc, long n_lo, long n_hi);

/// p^nu lambda_n + q^(alpha nu0 + beta) (1 + (-1)^n B) q^(alpha n): the next lambda from the
/// defining relation, independent of any closed form.
double lambda_recurrence_oracle(const DeformationParams& params, const RepParams& rep,
                                double lambda_n, long n);

/// Matrices over psi_lo..psi_hi together with the columns unaffected by truncation.
struct RepRealization {
  OperatorQuadruple ops;
  long first_index = 0;
  ColumnRange interior;
  /// Eigenvalue of C2 = K exp(i pi N): c0 exp(i pi nu0).
  std::complex<double> casimir_w;
};

struct IndexWindow {
  long lo = 0;
  long hi = 0;
};

/// a psi_n = sqrt(lambda_n) psi_(n-1), N psi_n = (nu0 + n) psi_n, K psi_n = c0 (-1)^n psi_n.
/// Throws PositivityError when some lambda_n in the window is below -1e-12 and
/// ClassificationError for the one-dimensional class at gamma = 0.
RepRealization build_rep_matrices(const RepresentationDescriptor& desc, IndexWindow window);

/// Default window: the whole support when finite, otherwise `width` indices next to the
/// extremal vector (centred on 0 for two-sided supports).
IndexWindow default_window(const RepresentationDescriptor& desc, long width = 10);

}  // namespace pqdeform

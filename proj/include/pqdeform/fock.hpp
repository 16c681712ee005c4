#pragma once

#include <complex>
#include <map>
#include <string>

#include <Eigen/Dense>

#include "pqdeform/params.hpp"

namespace pqdeform {

using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kDefaultResidualTol = 1e-10;

/// Truncated matrices for a, a^+, N and K on a D-dimensional ladder.
///
/// a carries sqrt(lambda) on the superdiagonal (a|n> = sqrt(f(n)) |n-1>), adag is its
/// conjugate transpose, n_op and k_op are real diagonal.
struct OperatorQuadruple {
  int dim = 0;
  ComplexMatrix a;
  ComplexMatrix adag;
  ComplexMatrix n_op;
  ComplexMatrix k_op;
};

/// Half-open range [begin, end) of basis columns on which relations are asserted.
struct ColumnRange {
  int begin = 0;
  int end = 0;

  int size() const { return end > begin ? end - begin : 0; }
};

/// Residual of each checked relation.
///
/// Each residual is the largest entry of |lhs - rhs| over the checked columns, with every
/// entry divided by max(1, sum of the magnitudes of the terms that produced it). This keeps
/// tolerances meaningful when f(n) spans many orders of magnitude.
struct ResidualReport {
  std::map<std::string, double> residuals;
  int checked_block = 0;
  double tol = kDefaultResidualTol;
  bool pass = false;
};

/// Fock realization: a|n> = sqrt(f(n))|n-1>, N|n> = n|n>, K|n> = (-1)^n |n>, n < D.
/// Throws PositivityError naming the first n with f(n) < 0.
OperatorQuadruple build_fock(const DeformationParams& params, int dim);

/// Checks, on the leading D-1 columns,
///   R1  a adag - p^nu adag a - (I + 2 gamma K) q^(alpha N + beta) = 0
///   R2  [N, a] + a = 0
///   R3  [N, adag] - adag = 0
///   R4  K a + a K = 0
///   R5  K adag + adag K = 0
///   R6  [N, K] = 0
ResidualReport verify_relations(const OperatorQuadruple& ops, const DeformationParams& params,
                                double tol = kDefaultResidualTol);

/// Same checks restricted to an explicit column range.
ResidualReport verify_relations(const OperatorQuadruple& ops, const DeformationParams& params,
                                double tol, ColumnRange columns);

/// a (a^+)^n - p^(n nu) (a^+)^n a = [n; gamma K] (a^+)^(n-1) q^(alpha N + beta), on the leading
/// D-n-1 columns. Requires 1 <= n <= D-2.
ResidualReport verify_bracket_identity(const OperatorQuadruple& ops,
                                       const DeformationParams& params, int n,
                                       double tol = kDefaultResidualTol);

/// C1 = K^2, C2 = K exp(i pi N), C3 = exp(2 i pi N) commute with a and adag, and C2 = w I.
ResidualReport casimir_check(const OperatorQuadruple& ops, double tol = kDefaultResidualTol,
                             std::complex<double> w = 1.0);

ResidualReport casimir_check(const OperatorQuadruple& ops, double tol, std::complex<double> w,
                             ColumnRange columns);

}  // namespace pqdeform

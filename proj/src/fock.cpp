#include "pqdeform/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pqdeform/errors.hpp"
#include "pqdeform/structure.hpp"

namespace pqdeform {

namespace {

using RealMatrix = Eigen::MatrixXd;

// exp(i pi x) with x reduced mod 2 first, so integer x gives +-1 up to one rounding.
std::complex<double> half_turn_phase(double x) {
  return std::polar(1.0, std::numbers::pi * std::fmod(x, 2.0));
}

ComplexMatrix diagonal_from(const ComplexMatrix& diag_source,
                            const auto& entry /* complex(double) */) {
  const Eigen::Index dim = diag_source.rows();
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) out(i, i) = entry(diag_source(i, i));
  return out;
}

double scaled_residual(const ComplexMatrix& diff, const RealMatrix& scale, ColumnRange columns) {
  double worst = 0.0;
  for (int j = columns.begin; j < columns.end; ++j) {
    for (Eigen::Index i = 0; i < diff.rows(); ++i) {
      worst = std::max(worst, std::abs(diff(i, j)) / std::max(1.0, scale(i, j)));
    }
  }
  return worst;
}

// lhs - rhs where lhs and rhs are given as signed sums of terms.
double relation_residual(std::initializer_list<ComplexMatrix> plus,
                         std::initializer_list<ComplexMatrix> minus, ColumnRange columns) {
  const auto& first = *plus.begin();
  ComplexMatrix diff = ComplexMatrix::Zero(first.rows(), first.cols());
  RealMatrix scale = RealMatrix::Zero(first.rows(), first.cols());
  for (const auto& term : plus) {
    diff += term;
    scale += term.cwiseAbs();
  }
  for (const auto& term : minus) {
    diff -= term;
    scale += term.cwiseAbs();
  }
  return scaled_residual(diff, scale, columns);
}

void check_shapes(const OperatorQuadruple& ops) {
  const auto square = [&](const ComplexMatrix& m) {
    return m.rows() == ops.dim && m.cols() == ops.dim;
  };
  if (ops.dim < 1 || !square(ops.a) || !square(ops.adag) || !square(ops.n_op) ||
      !square(ops.k_op)) {
    throw InvalidParameterError("operator matrices must all be dim x dim");
  }
}

void require_columns(const OperatorQuadruple& ops, ColumnRange columns) {
  if (columns.begin < 0 || columns.end > ops.dim || columns.begin > columns.end) {
    throw DomainError("column range outside the realization");
  }
}

ResidualReport finish(ResidualReport report) {
  report.pass = std::all_of(report.residuals.begin(), report.residuals.end(),
                            [&](const auto& kv) { return kv.second <= report.tol; });
  return report;
}

}  // namespace

OperatorQuadruple build_fock(const DeformationParams& params, int dim) {
  params.validate();
  if (dim < 2) throw DomainError("Fock cutoff must be >= 2");

  OperatorQuadruple ops;
  ops.dim = dim;
  ops.a = ComplexMatrix::Zero(dim, dim);
  ops.n_op = ComplexMatrix::Zero(dim, dim);
  ops.k_op = ComplexMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    ops.n_op(n, n) = static_cast<double>(n);
    ops.k_op(n, n) = n % 2 == 0 ? 1.0 : -1.0;
  }
  for (int n = 1; n < dim; ++n) {
    const int sign = f_sign(params, n);
    if (sign < 0) {
      throw PositivityError("f(" + std::to_string(n) + ") < 0: no Fock realization", n);
    }
    const double f = sign == 0 ? 0.0 : f_closed(params, n).value;
    ops.a(n - 1, n) = std::sqrt(std::max(f, 0.0));
  }
  ops.adag = ops.a.adjoint();
  return ops;
}

ResidualReport verify_relations(const OperatorQuadruple& ops, const DeformationParams& params,
                                double tol) {
  return verify_relations(ops, params, tol, ColumnRange{0, ops.dim - 1});
}

ResidualReport verify_relations(const OperatorQuadruple& ops, const DeformationParams& params,
                                double tol, ColumnRange columns) {
  params.validate();
  check_shapes(ops);
  require_columns(ops, columns);

  const auto& a = ops.a;
  const auto& adag = ops.adag;
  const auto& n_op = ops.n_op;
  const auto& k_op = ops.k_op;
  const ComplexMatrix identity = ComplexMatrix::Identity(ops.dim, ops.dim);
  const ComplexMatrix q_power = diagonal_from(n_op, [&](std::complex<double> n) {
    return std::complex<double>(std::pow(params.q, params.alpha * n.real() + params.beta));
  });
  const double p_nu = params.p_nu();

  ResidualReport report;
  report.tol = tol;
  report.checked_block = columns.size();
  report.residuals["R1"] = relation_residual(
      {a * adag}, {p_nu * (adag * a), (identity + 2.0 * params.gamma * k_op) * q_power}, columns);
  report.residuals["R2"] = relation_residual({n_op * a, a}, {a * n_op}, columns);
  report.residuals["R3"] = relation_residual({n_op * adag}, {adag * n_op, adag}, columns);
  report.residuals["R4"] = relation_residual({k_op * a, a * k_op}, {}, columns);
  report.residuals["R5"] = relation_residual({k_op * adag, adag * k_op}, {}, columns);
  report.residuals["R6"] = relation_residual({n_op * k_op}, {k_op * n_op}, columns);
  return finish(report);
}

ResidualReport verify_bracket_identity(const OperatorQuadruple& ops,
                                       const DeformationParams& params, int n, double tol) {
  params.validate();
  check_shapes(ops);
  if (n < 1 || n > ops.dim - 2) {
    throw DomainError("bracket degree " + std::to_string(n) + " needs 1 <= n <= D-2 = " +
                      std::to_string(ops.dim - 2));
  }

  const ComplexMatrix q_power = diagonal_from(ops.n_op, [&](std::complex<double> x) {
    return std::complex<double>(std::pow(params.q, params.alpha * x.real() + params.beta));
  });
  // [n; gamma K] with K diagonalized: its eigenvalue on row m is K(m, m).
  const ComplexMatrix bracket_op = diagonal_from(ops.k_op, [&](std::complex<double> kappa) {
    return std::complex<double>(detail::bracket_value(params, n, kappa.real(), kDefaultRegimeTol));
  });

  ComplexMatrix adag_pow = ComplexMatrix::Identity(ops.dim, ops.dim);
  for (int i = 0; i < n - 1; ++i) adag_pow = adag_pow * ops.adag;
  const ComplexMatrix adag_pow_n = adag_pow * ops.adag;
  const double p_nu_n = std::pow(params.p, n * params.nu);

  ResidualReport report;
  report.tol = tol;
  const ColumnRange columns{0, ops.dim - n - 1};
  report.checked_block = columns.size();
  report.residuals["bracket_" + std::to_string(n)] =
      relation_residual({ops.a * adag_pow_n},
                        {p_nu_n * (adag_pow_n * ops.a), bracket_op * adag_pow * q_power}, columns);
  return finish(report);
}

ResidualReport casimir_check(const OperatorQuadruple& ops, double tol, std::complex<double> w) {
  return casimir_check(ops, tol, w, ColumnRange{0, ops.dim - 1});
}

ResidualReport casimir_check(const OperatorQuadruple& ops, double tol, std::complex<double> w,
                             ColumnRange columns) {
  check_shapes(ops);
  require_columns(ops, columns);

  // N and K are diagonal, so the exponentials are diagonal too.
  const ComplexMatrix c1 = ops.k_op * ops.k_op;
  const ComplexMatrix c2 =
      ops.k_op * diagonal_from(ops.n_op, [](std::complex<double> x) { return half_turn_phase(x.real()); });
  const ComplexMatrix c3 = diagonal_from(
      ops.n_op, [](std::complex<double> x) { return half_turn_phase(2.0 * x.real()); });
  const ComplexMatrix identity = ComplexMatrix::Identity(ops.dim, ops.dim);

  ResidualReport report;
  report.tol = tol;
  report.checked_block = columns.size();
  const std::pair<const char*, const ComplexMatrix*> casimirs[] = {
      {"C1", &c1}, {"C2", &c2}, {"C3", &c3}};
  for (const auto& [name, c] : casimirs) {
    report.residuals[std::string(name) + "_a"] =
        relation_residual({*c * ops.a}, {ops.a * *c}, columns);
    report.residuals[std::string(name) + "_adag"] =
        relation_residual({*c * ops.adag}, {ops.adag * *c}, columns);
  }
  report.residuals["C2_scalar"] =
      relation_residual({c2}, {w * identity}, ColumnRange{0, ops.dim});
  return finish(report);
}

}  // namespace pqdeform

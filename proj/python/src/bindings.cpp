#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "pqdeform/errors.hpp"
#include "pqdeform/fock.hpp"
#include "pqdeform/params.hpp"
#include "pqdeform/positivity.hpp"
#include "pqdeform/representations.hpp"
#include "pqdeform/spectrum.hpp"
#include "pqdeform/structure.hpp"

namespace py = pybind11;
using namespace pqdeform;

namespace {

std::string str(std::string_view s) { return std::string(s); }

py::dict residual_dict(const ResidualReport& r) {
  py::dict d;
  d["residuals"] = r.residuals;
  d["checked_block"] = r.checked_block;
  d["tol"] = r.tol;
  d["pass"] = r.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-parameter deformed oscillator algebra: structure function, Fock matrices, "
            "representations and spectrum.";

  py::register_exception<InvalidParameterError>(m, "InvalidParameterError", PyExc_ValueError);
  py::register_exception<PositivityError>(m, "PositivityError", PyExc_ArithmeticError);
  py::register_exception<OutOfRangeError>(m, "OutOfRangeError", PyExc_OverflowError);
  py::register_exception<ClassificationError>(m, "ClassificationError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<DeformationParams>(m, "DeformationParams")
      .def(py::init([](double p, double q, double alpha, double beta, double nu, double gamma) {
             DeformationParams params{p, q, alpha, beta, nu, gamma};
             params.validate();
             return params;
           }),
           py::arg("p") = 1.0, py::arg("q") = 1.0, py::arg("alpha") = 0.0, py::arg("beta") = 0.0,
           py::arg("nu") = 0.0, py::arg("gamma") = 0.0)
      .def_readwrite("p", &DeformationParams::p)
      .def_readwrite("q", &DeformationParams::q)
      .def_readwrite("alpha", &DeformationParams::alpha)
      .def_readwrite("beta", &DeformationParams::beta)
      .def_readwrite("nu", &DeformationParams::nu)
      .def_readwrite("gamma", &DeformationParams::gamma)
      .def("__eq__", [](const DeformationParams& a, const DeformationParams& b) { return a == b; })
      .def("__repr__", [](const DeformationParams& p) {
        return "DeformationParams(p=" + std::to_string(p.p) + ", q=" + std::to_string(p.q) +
               ", alpha=" + std::to_string(p.alpha) + ", beta=" + std::to_string(p.beta) +
               ", nu=" + std::to_string(p.nu) + ", gamma=" + std::to_string(p.gamma) + ")";
      });

  m.def("regime", [](const DeformationParams& params, double tol) {
        const RegimeInfo info = classify_regime(params, tol);
        return py::make_tuple(str(to_string(info.regime)), str(to_string(info.sign)), info.discriminant);
      },
      py::arg("params"), py::arg("tol_regime") = kDefaultRegimeTol,
      "(tag, sign, discriminant) of the p^nu = q^alpha test");

  m.def("preset", [](const std::string& name, double p0, double q0, double alpha, double beta,
                     double nu, double gamma) {
        const auto parsed = parse_preset_name(name);
        if (!parsed) throw InvalidParameterError("unknown preset '" + name + "'");
        switch (*parsed) {
          case PresetName::Undeformed: return from_preset(DeformationPreset::undeformed());
          case PresetName::Burban:
            return from_preset(DeformationPreset::burban(q0, alpha, beta, nu, gamma));
          case PresetName::ChakrabartyJagannathan:
            return from_preset(DeformationPreset::chakrabarty_jagannathan(p0, q0));
          case PresetName::Quesne: return from_preset(DeformationPreset::quesne(p0, q0));
        }
        throw InvalidParameterError("unknown preset");
      },
      py::arg("name"), py::arg("p0") = 1.0, py::arg("q0") = 1.0, py::arg("alpha") = 0.0,
      py::arg("beta") = 0.0, py::arg("nu") = 0.0, py::arg("gamma") = 0.0);

  m.def("f", [](const DeformationParams& params, int n) { return f_closed(params, n).value; },
        py::arg("params"), py::arg("n"));
  m.def("f_recurrence", &f_recurrence, py::arg("params"), py::arg("n"));
  m.def("f_log", [](const DeformationParams& params, int n) {
        const SignedLog s = f_log(params, n);
        return py::make_tuple(s.sign, s.log_abs);
      },
      py::arg("params"), py::arg("n"), "(sign, ln|f(n)|)");
  m.def("bracket", [](const DeformationParams& params, int n, int kappa) {
        return bracket(params, n, kappa).value;
      },
      py::arg("params"), py::arg("n"), py::arg("kappa"));
  m.def("genfunc_coeffs", [](const DeformationParams& params, int kappa, int order) {
        return genfunc_coeffs(params, kappa, order);
      },
      py::arg("params"), py::arg("kappa"), py::arg("order"));

  m.def("admissible_gamma", [](const DeformationParams& params) {
        const GammaInterval g = admissible_gamma(params);
        return py::make_tuple(g.lower, g.upper);
      },
      py::arg("params"), "open interval for 2*gamma");
  m.def("check_positivity", [](const DeformationParams& params, int n_max) {
        const PositivityReport r = check_positivity(params, n_max);
        py::dict d;
        d["interval"] = py::make_tuple(r.interval.lower, r.interval.upper);
        d["empirical_min"] = r.empirical_min;
        d["n_argmin"] = r.n_argmin;
        d["verdict"] = str(to_string(r.verdict));
        d["violation_n"] = r.violation ? py::object(py::int_(r.violation->n)) : py::object(py::none());
        d["gamma_in_interval"] = r.gamma_in_interval;
        d["consistent"] = r.consistent;
        return d;
      },
      py::arg("params"), py::arg("n_max") = 40);

  py::class_<OperatorQuadruple>(m, "OperatorQuadruple")
      .def_readonly("dim", &OperatorQuadruple::dim)
      .def_readonly("a", &OperatorQuadruple::a)
      .def_readonly("adag", &OperatorQuadruple::adag)
      .def_readonly("n_op", &OperatorQuadruple::n_op)
      .def_readonly("k_op", &OperatorQuadruple::k_op);

  m.def("build_fock", &build_fock, py::arg("params"), py::arg("dim"));
  m.def("verify_relations", [](const OperatorQuadruple& ops, const DeformationParams& params, double tol) {
        return residual_dict(verify_relations(ops, params, tol));
      },
      py::arg("ops"), py::arg("params"), py::arg("tol") = kDefaultResidualTol);
  m.def("verify_bracket_identity", [](const OperatorQuadruple& ops, const DeformationParams& params,
                                      int n, double tol) {
        return residual_dict(verify_bracket_identity(ops, params, n, tol));
      },
      py::arg("ops"), py::arg("params"), py::arg("n"), py::arg("tol") = kDefaultResidualTol);

  m.def("classify", [](const DeformationParams& params, double nu0, std::optional<double> c0,
                       std::optional<double> B, std::optional<double> lambda0) {
        if (c0 && B) throw InvalidParameterError("give c0 or B, not both");
        const RepParams rep = B ? RepParams::from_b(params, nu0, *B, lambda0)
                                : RepParams::from_c0(params, nu0, c0.value_or(1.0), lambda0);
        const RepresentationDescriptor desc = classify_representation(params, rep);
        const IndexWindow window = default_window(desc);
        py::dict d;
        d["class"] = str(to_string(desc.cls));
        d["case_tag"] = str(to_string(desc.case_tag));
        d["support"] = desc.support.describe();
        d["window"] = py::make_tuple(window.lo, window.hi);
        d["lambda"] = lambda_sequence(desc, window.lo, window.hi);
        d["notes"] = desc.notes;
        return d;
      },
      py::arg("params"), py::arg("nu0") = 0.0, py::arg("c0") = py::none(), py::arg("B") = py::none(),
      py::arg("lambda0") = py::none());

  m.def("energy", [](const DeformationParams& params, int n, double hbar_omega) {
        return energy({hbar_omega, params}, n);
      },
      py::arg("params"), py::arg("n"), py::arg("hbar_omega") = 1.0);
  m.def("energy_parametrized", [](const DeformationParams& params, int n, double hbar_omega) {
        const SpectrumParams sp = reparametrize(params);
        return energy_parametrized(sp, params.gamma, sp.rho * params.beta, hbar_omega, n);
      },
      py::arg("params"), py::arg("n"), py::arg("hbar_omega") = 1.0);
  m.def("spacing", [](const DeformationParams& params, int n, double hbar_omega) {
        return spacing({hbar_omega, params}, n);
      },
      py::arg("params"), py::arg("n"), py::arg("hbar_omega") = 1.0);
  m.def("reparametrize", [](const DeformationParams& params) {
        const SpectrumParams sp = reparametrize(params);
        return py::dict(py::arg("tau") = sp.tau, py::arg("rho") = sp.rho, py::arg("k") = sp.k,
                        py::arg("mu") = sp.mu);
      },
      py::arg("params"));
}

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tel/config.hpp"
#include "tel/constants.hpp"
#include "tel/cost.hpp"
#include "tel/family.hpp"
#include "tel/grid.hpp"
#include "tel/semigroup.hpp"
#include "tel/transport.hpp"
#include "tel/verify.hpp"

namespace py = pybind11;
using namespace tel;

namespace {
py::dict report_dict(const InequalityReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["constant"] = r.constant;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["slack"] = r.slack;
  d["tol"] = r.tol;
  d["pass"] = r.pass;
  d["witness"] = r.witness;
  d["flags"] = r.flags;
  return d;
}
}  // namespace

PYBIND11_MODULE(_tel, m) {
  m.doc() = "transport-entropy inequality lab";

  py::class_<Grid1D>(m, "Grid1D")
      .def(py::init<double, double, int>(), py::arg("lo"), py::arg("hi"), py::arg("n"))
      .def_readonly("lo", &Grid1D::lo)
      .def_readonly("hi", &Grid1D::hi)
      .def_readonly("n", &Grid1D::n)
      .def("spacing", &Grid1D::spacing)
      .def("points", &Grid1D::points)
      .def("__repr__", [](const Grid1D& g) { return "Grid1D(" + g.spec() + ")"; });

  py::class_<GridFunction>(m, "GridFunction")
      .def(py::init<const Grid1D&, std::vector<double>>(), py::arg("grid"), py::arg("values"))
      .def(py::init<const Grid1D&, const std::function<double(double)>&>(), py::arg("grid"),
           py::arg("f"))
      .def_readonly("grid", &GridFunction::grid)
      .def_readonly("values", &GridFunction::values);

  py::class_<GridMeasure>(m, "GridMeasure")
      .def(py::init<const Grid1D&, std::vector<double>>(), py::arg("grid"), py::arg("weights"))
      .def_readonly("grid", &GridMeasure::grid)
      .def_readonly("weights", &GridMeasure::weights);

  py::class_<AlphaCost>(m, "AlphaCost")
      .def_readonly("name", &AlphaCost::name)
      .def("__call__", [](const AlphaCost& a, double t) { return a.eval(t); })
      .def("deriv", [](const AlphaCost& a, double t) { return a.deriv(t); })
      .def("conjugate", [](const AlphaCost& a, double h) { return legendre_conjugate(a, h); })
      .def("__repr__", [](const AlphaCost& a) { return "AlphaCost(" + a.name + ")"; });

  py::class_<SemiConvexityCertificate>(m, "SemiConvexityCertificate")
      .def_readonly("K_min", &SemiConvexityCertificate::K_min)
      .def_readonly("witness_x", &SemiConvexityCertificate::witness_x)
      .def_readonly("witness_y", &SemiConvexityCertificate::witness_y)
      .def_readonly("witness_on_boundary", &SemiConvexityCertificate::witness_on_boundary);

  m.def("make_cost", &make_builtin, py::arg("id"),
        "Builtin cost profile: quadratic | power:<p> | alpha21 | scaled:<base>:<u>");
  m.def("omega_alpha", [](const AlphaCost& a, double x) { return omega_alpha(a, x); });
  m.def("lemma51_gap", &lemma51_gap);

  m.def("gaussian", &discretize_gaussian, py::arg("grid"), py::arg("mean") = 0.0,
        py::arg("sigma") = 1.0);
  m.def("exp_power", &discretize_exp_power, py::arg("grid"), py::arg("p"));
  m.def("tilt", &tilt);
  m.def("relative_entropy", &relative_entropy);
  m.def("entropy_functional", &entropy_functional);
  m.def("entropy_of_exp", &entropy_of_exp);
  m.def("gradient", &gradient);
  m.def("variance", &variance);
  m.def("laplace_transform", &laplace_transform);
  m.def("osc", &osc);

  m.def(
      "transport_cost",
      [](const GridMeasure& nu, const GridMeasure& mu, const AlphaCost& alpha) {
        TransportResult r = transport_1d_monotone(nu, mu, alpha);
        return py::make_tuple(r.cost, r.method == TransportMethod::monotone ? "monotone" : "lp");
      },
      py::arg("nu"), py::arg("mu"), py::arg("cost"));
  m.def("transport_lp",
        [](const std::vector<double>& a, const std::vector<double>& b,
           const std::vector<double>& cost_matrix) {
          return transport_lp(a, b, cost_matrix).cost;
        });

  m.def("inf_convolution", &inf_convolution, py::arg("f"), py::arg("lam"), py::arg("cost"));
  m.def("sup_convolution", &sup_convolution, py::arg("f"), py::arg("t"), py::arg("cost"));
  m.def("semiconvexity_defect", &semiconvexity_defect);
  m.def("lipschitz_constant", &lipschitz_constant);
  m.def("hopf_lax_residual", &hopf_lax_residual);

  m.def("verify_tc", [](const GridMeasure& mu, double C, const AlphaCost& alpha,
                        const GridMeasure& nu) {
    return report_dict(verify_Tc_single(mu, C, alpha, nu, "nu"));
  });
  m.def("verify_iclsi", [](const GridMeasure& mu, double C, double lam, const GridFunction& f,
                           const AlphaCost& alpha) {
    return report_dict(verify_ICLSI(mu, C, lam, f, alpha));
  });
  m.def("verify_rmlsi", [](const GridMeasure& mu, double C, const AlphaCost& alpha, double K,
                           double eta, const GridFunction& f) {
    return report_dict(verify_rMLSI(mu, C, alpha, K, eta, f));
  });
  m.def("herbst_check", [](const GridMeasure& mu, double C, double K, const GridFunction& f,
                           double lam) { return report_dict(herbst_check(mu, C, K, f, lam)); });

  m.def("sup_v_functional", [] {
    SupVResult r = sup_v_functional();
    return py::make_tuple(r.v_star, r.g_star);
  });
  m.def("phi_min", [](double lam, double C) {
    PhiMinResult r = phi_min(lam, C);
    return py::make_tuple(r.t_min, r.phi_min);
  });
  m.def("bli_constant", &bli_constant);
  m.def("run_chain", [](const GridMeasure& mu, const AlphaCost& alpha, double C, uint64_t seed) {
    return run_chain(mu, alpha, C, seed).to_json().dump();
  });

  m.attr("__version__") = "0.1.0";
}

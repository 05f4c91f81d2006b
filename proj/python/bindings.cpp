#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "vlcrange/bounds.hpp"
#include "vlcrange/cli.hpp"
#include "vlcrange/error.hpp"
#include "vlcrange/mle.hpp"
#include "vlcrange/serialize.hpp"
#include "vlcrange/sweep.hpp"

namespace py = pybind11;
using namespace vlcrange;

namespace {

py::dict noise_dict(const NoiseBreakdown& n) {
  py::dict d;
  d["var_thermal"] = n.var_thermal;
  d["var_background"] = n.var_background;
  d["var_dark"] = n.var_dark;
  d["var_shot"] = n.var_shot;
  d["var_floor"] = n.var_floor;
  d["var_total"] = n.var_total;
  return d;
}

SystemParameters with_overrides(const py::dict& overrides) {
  SystemParameters p = default_parameters();
  for (const auto& [key, value] : overrides) {
    apply_override(p, py::str(key).cast<std::string>(), py::str(value).cast<std::string>());
  }
  validate(p);
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ranging accuracy limits for RSS-based visible light positioning";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DegenerateModelError>(m, "DegenerateModelError", PyExc_ArithmeticError);

  py::class_<SystemParameters>(m, "SystemParameters")
      .def(py::init(&default_parameters))
      .def(py::init([](const py::dict& overrides) { return with_overrides(overrides); }),
           py::arg("overrides"))
      .def_static("from_json", [](const std::string& doc) { return parse_parameters(doc); })
      .def("to_json", [](const SystemParameters& p) { return serialize_parameters(p); })
      .def("set", [](SystemParameters& p, const std::string& key, const std::string& value) {
        apply_override(p, key, value);
        validate(p);
      })
      .def("get", [](const SystemParameters& p, const std::string& key) { return si_value(p, key); })
      .def_readwrite("P_t", &SystemParameters::P_t)
      .def_readwrite("P_diff", &SystemParameters::P_diff)
      .def_readwrite("m", &SystemParameters::m)
      .def(py::self == py::self);

  py::class_<Geometry>(m, "Geometry")
      .def(py::init<double, double>(), py::arg("h"), py::arg("ell") = 0.0)
      .def_property_readonly("h", &Geometry::h)
      .def_property_readonly("ell", &Geometry::ell)
      .def_property_readonly("d", &Geometry::d)
      .def_property_readonly("angle", &Geometry::angle);

  m.def("received_power", &received_power_total, py::arg("params"), py::arg("geometry"));
  m.def(
      "noise",
      [](const SystemParameters& p, const Geometry& g) { return noise_dict(total_noise(p, g)); },
      py::arg("params"), py::arg("geometry"));
  m.def("fisher_information", &fisher_information, py::arg("params"), py::arg("geometry"));
  m.def("crlb_sqrt", &crlb_sqrt, py::arg("params"), py::arg("geometry"));
  m.def("crlb_sqrt_legacy", &crlb_sqrt_legacy, py::arg("params"), py::arg("geometry"));
  m.def(
      "bound",
      [](const SystemParameters& p, const Geometry& g) {
        const auto b = bound_at(p, g);
        py::dict d;
        d["fisher"] = b.fisher;
        d["crlb_sqrt"] = b.crlb_sqrt;
        d["crlb_sqrt_legacy"] = b.crlb_sqrt_legacy;
        d["ratio"] = b.ratio;
        d["noise"] = noise_dict(b.noise);
        return d;
      },
      py::arg("params"), py::arg("geometry"));

  m.def(
      "find_m_opt",
      [](const SystemParameters& p, const Geometry& g, double m_lo, double m_hi, double tol) {
        const auto r = find_m_opt(p, g, m_lo, m_hi, tol);
        return py::make_tuple(r.m_opt, r.crlb_sqrt, r.at_boundary);
      },
      py::arg("params"), py::arg("geometry"), py::arg("m_lo") = 1.0, py::arg("m_hi") = 200.0,
      py::arg("tol") = 1e-6);
  m.def("m_opt_approximation", &m_opt_approximation, py::arg("phi"));

  m.def(
      "monte_carlo",
      [](const SystemParameters& p, const Geometry& g, std::uint64_t trials, std::uint64_t seed,
         std::optional<double> d_lo, std::optional<double> d_hi, double tol, unsigned threads) {
        SearchInterval search = default_search_interval(g.h());
        if (d_lo) search.lo = *d_lo;
        if (d_hi) search.hi = *d_hi;
        McReport r;
        {
          py::gil_scoped_release release;
          r = run_monte_carlo(p, g, trials, seed, search, tol, threads);
        }
        py::dict d;
        d["trials"] = r.trials;
        d["seed"] = r.seed;
        d["true_d"] = r.true_d;
        d["mean_estimate"] = r.mean_estimate;
        d["bias"] = r.bias;
        d["rmse"] = r.rmse;
        d["crlb_sqrt_ref"] = r.crlb_sqrt_ref;
        d["efficiency"] = r.efficiency;
        d["failures"] = r.failures;
        return d;
      },
      py::arg("params"), py::arg("geometry"), py::arg("trials"), py::arg("seed"),
      py::arg("d_lo") = py::none(), py::arg("d_hi") = py::none(), py::arg("tol") = 1e-6,
      py::arg("threads") = 0u);

  m.def(
      "sweep_json",
      [](const SystemParameters& p, const std::string& repro, std::optional<std::string> quantity) {
        SweepSpec spec = repro_spec(repro);
        if (quantity) spec.quantity = parse_quantity(*quantity);
        return sweep_to_json(run_sweep(p, spec));
      },
      py::arg("params"), py::arg("repro"), py::arg("quantity") = py::none());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <optional>

#include "rosenau/elliptic.hpp"
#include "rosenau/errors.hpp"
#include "rosenau/petviashvili.hpp"
#include "rosenau/solver.hpp"
#include "rosenau/validation.hpp"

namespace py = pybind11;
using namespace rosenau;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Array to_array(const std::vector<double>& v) {
  return Array(static_cast<py::ssize_t>(v.size()), v.data());
}

Field to_field(const Grid& g, const Array& values) {
  if (values.ndim() != 1 || values.shape(0) != g.size()) {
    throw ConfigError("expected a 1-D array of length " + std::to_string(g.size()));
  }
  return Field(g, std::vector<double>(values.data(), values.data() + values.size()));
}

py::dict diagnostics(const IterationDiagnostics& d) {
  py::dict out;
  out["iteration"] = d.iteration;
  out["error_max"] = d.error_max;
  out["error_l2"] = d.error_l2;
  out["factor"] = d.factor;
  out["factor_error"] = d.factor_error;
  out["residual"] = d.residual;
  return out;
}

py::dict table(const ConvergenceTable& t) {
  std::vector<long> res;
  std::vector<double> err, order;
  for (const auto& r : t.rows) {
    res.push_back(r.resolution);
    err.push_back(r.error);
    order.push_back(r.observed_order);
  }
  py::dict out;
  out["resolution"] = res;
  out["error"] = to_array(err);
  out["observed_order"] = to_array(order);
  out["fitted_order"] = t.fitted_order();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rosenau equation: spectral RK4 solver, solitary profiles, exact waves";

  static py::exception<Error> base(m, "RosenauError");
  static py::exception<ConfigError> config(m, "ConfigError", base.ptr());
  static py::exception<NumericalError> numerical(m, "NumericalError", base.ptr());
  static py::exception<IoError> io(m, "IoError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConfigError& e) {
      py::set_error(config, e.what());
    } catch (const NumericalError& e) {
      py::set_error(numerical, e.what());
    } catch (const IoError& e) {
      py::set_error(io, e.what());
    }
  });

  m.def("nodes", [](double a, double b, int n) { return to_array(make_grid(a, b, n).nodes()); },
        py::arg("a"), py::arg("b"), py::arg("N"));

  m.def("energy", [](Array u, double a, double b) {
    const Grid g = make_grid(a, b, static_cast<int>(u.size()));
    return energy(to_field(g, u));
  }, py::arg("u"), py::arg("a"), py::arg("b"));

  m.def("evolve", [](Array u0, double a, double b, double p, double T, long M, long stride,
                     bool dealias) {
    const Grid g = make_grid(a, b, static_cast<int>(u0.size()));
    SolverOptions opts;
    opts.dealias = dealias;
    EvolutionRecord rec = [&] {
      py::gil_scoped_release release;
      return evolve(to_field(g, u0), p, T, M, stride > 0 ? stride : M, opts);
    }();
    py::array_t<double> snaps({rec.snapshots.size(), static_cast<size_t>(g.size())});
    auto view = snaps.mutable_unchecked<2>();
    for (size_t i = 0; i < rec.snapshots.size(); ++i)
      for (int j = 0; j < g.size(); ++j) view(i, j) = rec.snapshots[i][j];
    py::dict out;
    out["times"] = to_array(rec.times);
    out["snapshots"] = snaps;
    out["energy"] = to_array(rec.energy_series);
    return out;
  }, py::arg("u0"), py::arg("a"), py::arg("b"), py::arg("p"), py::arg("T"), py::arg("M"),
     py::arg("stride") = 0, py::arg("dealias") = false);

  m.def("solve_profile", [](double c, double p, double a, double b, int N, std::optional<double> nu,
                            double tol_error, double tol_factor, double tol_residual, int max_iters) {
    PetviashviliConfig cfg;
    cfg.c = c;
    cfg.p = p;
    cfg.nu = nu;
    cfg.grid = make_grid(a, b, N);
    cfg.tol_error = tol_error;
    cfg.tol_factor = tol_factor;
    cfg.tol_residual = tol_residual;
    cfg.max_iters = max_iters;
    SolitaryProfile prof = [&] {
      py::gil_scoped_release release;
      return solve_profile(cfg);
    }();
    py::list history;
    for (const auto& d : prof.history) history.append(diagnostics(d));
    py::dict out;
    out["x"] = to_array(cfg.grid.nodes());
    out["Q"] = to_array(prof.Q.values);
    out["iterations"] = prof.iterations;
    out["nu"] = prof.nu;
    out["peak_amplitude"] = prof.peak_amplitude();
    out["history"] = history;
    out["warnings"] = prof.warnings;
    return out;
  }, py::arg("c"), py::arg("p") = 1.0, py::arg("a") = -50.0, py::arg("b") = 50.0,
     py::arg("N") = 1024, py::arg("nu") = py::none(), py::arg("tol_error") = 1e-12,
     py::arg("tol_factor") = 1e-12, py::arg("tol_residual") = 1e-10, py::arg("max_iters") = 200);

  m.def("check_identities", [](Array Q, double a, double b, double c, double p) {
    const Grid g = make_grid(a, b, static_cast<int>(Q.size()));
    const IdentitySuite suite = check_identities(to_field(g, Q), c, p);
    py::dict out;
    for (const auto& r : suite.reports) {
      py::dict d;
      d["lhs"] = r.lhs;
      d["rhs"] = r.rhs;
      d["abs_gap"] = r.abs_gap;
      d["rel_gap"] = r.rel_gap;
      out[py::str(to_string(r.identity))] = d;
    }
    out["edge_value"] = suite.edge_value;
    out["warnings"] = suite.warnings;
    return out;
  }, py::arg("Q"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("p") = 1.0);

  m.def("temporal_convergence", [](Array u0, double a, double b, double p, double T,
                                   std::vector<long> M_list, long M_ref) {
    const Grid g = make_grid(a, b, static_cast<int>(u0.size()));
    const Field f = to_field(g, u0);
    py::gil_scoped_release release;
    const auto t = temporal_convergence(f, p, T, M_list, M_ref);
    py::gil_scoped_acquire acquire;
    return table(t);
  }, py::arg("u0"), py::arg("a"), py::arg("b"), py::arg("p"), py::arg("T"), py::arg("M_list"),
     py::arg("M_ref"));

  m.def("spatial_convergence", [](Array u0_ref, double a, double b, double p, double T,
                                  std::vector<int> N_list, long M) {
    const Grid g = make_grid(a, b, static_cast<int>(u0_ref.size()));
    const Field f = to_field(g, u0_ref);
    py::gil_scoped_release release;
    const auto t = spatial_convergence(f, p, T, N_list, M);
    py::gil_scoped_acquire acquire;
    return table(t);
  }, py::arg("u0_ref"), py::arg("a"), py::arg("b"), py::arg("p"), py::arg("T"), py::arg("N_list"),
     py::arg("M"));

  py::class_<EllipticCaseParams>(m, "EllipticCase")
      .def(py::init([](const std::string& name, double c, double k, double c2, double c4,
                       double xi0, double epsilon) {
             return derive_case_params(parse_elliptic_case(name), c, k, c2, c4, xi0, epsilon);
           }),
           py::arg("case"), py::arg("c") = 1.0, py::arg("k") = 1.0, py::arg("c2") = -1.0,
           py::arg("c4") = 1.0, py::arg("xi0") = 0.0, py::arg("epsilon") = 1.0)
      .def_property_readonly("name", [](const EllipticCaseParams& p) { return to_string(p.kind); })
      .def_readonly("a0", &EllipticCaseParams::a0)
      .def_readonly("a2", &EllipticCaseParams::a2)
      .def_readonly("a4", &EllipticCaseParams::a4)
      .def_readonly("c0", &EllipticCaseParams::c0)
      .def_readonly("modulus", &EllipticCaseParams::modulus)
      .def_readonly("g", &EllipticCaseParams::g)
      .def_readonly("R", &EllipticCaseParams::R)
      .def_readonly("roots", &EllipticCaseParams::roots)
      .def_property_readonly("has_poles", &EllipticCaseParams::has_poles)
      .def_property_readonly("period", &EllipticCaseParams::period)
      .def("phi", [](const EllipticCaseParams& p, double xi) {
        const auto v = evaluate_phi(p, xi);
        return v.pole ? std::numeric_limits<double>::infinity() : v.value;
      }, py::arg("xi"))
      .def("u", [](const EllipticCaseParams& p, Array x, double t) {
        std::vector<double> out(x.size());
        for (py::ssize_t i = 0; i < x.size(); ++i) {
          const auto v = evaluate_solution(p, x.data()[i], t);
          out[i] = v.pole ? std::numeric_limits<double>::infinity() : v.value;
        }
        return to_array(out);
      }, py::arg("x"), py::arg("t") = 0.0)
      .def("ode_residual", [](const EllipticCaseParams& p, int samples, double margin) {
        return ode_residual_phi(p, period_samples(p, samples, margin));
      }, py::arg("samples") = 200, py::arg("margin") = 1e-3);
}

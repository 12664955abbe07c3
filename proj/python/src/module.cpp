#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hyperq/classical/simulation.hpp"
#include "hyperq/cli/commands.hpp"
#include "hyperq/spectral/complex_gamma.hpp"
#include "hyperq/spectral/conical.hpp"
#include "hyperq/spectral/operators.hpp"
#include "hyperq/verify/suite.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

hyperq::cli::RunConfig config_from(const std::string& text) {
  auto c = hyperq::cli::config_from_json(text.empty() ? json::object() : json::parse(text));
  hyperq::cli::validate(c);
  return c;
}

// Trajectory as a dict of columns.
py::dict simulate(const std::string& config_text) {
  using namespace hyperq::classical;
  const auto c = config_from(config_text);
  const Params params{c.m, c.a};
  EmbeddedState s0;
  for (int i = 0; i < 3; ++i) {
    s0.x[i] = c.x0[static_cast<std::size_t>(i)];
    s0.p[i] = c.p0[static_cast<std::size_t>(i)];
  }
  s0 = project_on_shell(s0, params);
  EmbeddedOptions opt;
  opt.dt = c.dt;
  opt.duration = c.T;
  opt.projection = c.projection;
  opt.sample_every = c.sample_every;
  opt.tol_c = c.tol.drift;
  const TrajectoryRecord r = integrate_embedded(s0, params, opt);
  std::vector<double> t, energy;
  std::vector<std::array<double, 3>> x, p, j;
  for (const auto& s : r.samples) {
    t.push_back(static_cast<double>(s.t));
    energy.push_back(static_cast<double>(s.diag.energy));
    std::array<double, 3> xs{}, ps{}, js{};
    for (int i = 0; i < 3; ++i) {
      const auto k = static_cast<std::size_t>(i);
      xs[k] = static_cast<double>(s.x[i]);
      ps[k] = static_cast<double>(s.p[i]);
      js[k] = static_cast<double>(s.diag.J[k]);
    }
    x.push_back(xs);
    p.push_back(ps);
    j.push_back(js);
  }
  const DriftSummary d = summarize(r, params);
  py::dict out;
  out["t"] = t;
  out["x"] = x;
  out["p"] = p;
  out["J"] = j;
  out["energy"] = energy;
  out["drift"] = py::dict(py::arg("c2") = d.c2, py::arg("c3") = d.c3, py::arg("energy") = d.energy,
                          py::arg("angular_momentum") = d.angular_momentum);
  out["drift_warning"] = r.drift_warning;
  return out;
}

}  // namespace

PYBIND11_MODULE(_hyperq, m) {
  m.doc() = "Constrained motion on the hyperboloid: symbolic, classical and spectral parts";

  py::register_exception<hyperq::cli::UsageError>(m, "UsageError", PyExc_ValueError);

  m.def("conical_p0", &hyperq::spectral::conical_p0, py::arg("lam"), py::arg("theta"));
  m.def("conical_pn", &hyperq::spectral::conical_pn, py::arg("lam"), py::arg("n"), py::arg("theta"));
  m.def("gamma", &hyperq::spectral::ComplexGamma::value, py::arg("z"));
  m.def(
      "energy",
      [](double lam, double a, double m_, double hbar) {
        return hyperq::spectral::energy(lam, {a, m_, hbar});
      },
      py::arg("lam"), py::arg("a") = 1.0, py::arg("m") = 1.0, py::arg("hbar") = 1.0);
  m.def(
      "eigen_residual",
      [](double lam, int n, double h, double theta_min, double theta_max, int n_phi) {
        auto grid = std::make_shared<const hyperq::spectral::Grid>(
            hyperq::spectral::GridSpec{theta_min, theta_max, h, n_phi});
        return hyperq::spectral::eigen_residual(grid, {lam, n}, {});
      },
      py::arg("lam"), py::arg("n"), py::arg("h") = 1e-3, py::arg("theta_min") = 0.1,
      py::arg("theta_max") = 3.0, py::arg("n_phi") = 16);

  m.def(
      "derive_json", [](const std::string& config) { return hyperq::cli::derive_document(config_from(config)).dump(); },
      py::arg("config") = "");
  m.def(
      "verify_json",
      [](const std::string& config) {
        py::gil_scoped_release release;
        auto report = hyperq::verify::run_suite(config_from(config));
        return hyperq::verify::to_json(report).dump();
      },
      py::arg("config") = "");
  m.def("simulate", &simulate, py::arg("config") = "");
}

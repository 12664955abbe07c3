#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hyperq/classical/simulation.hpp"
#include "hyperq/classical/trajectory_csv.hpp"
#include "hyperq/verify/suite.hpp"

namespace hyperq::verify {

using namespace hyperq::classical;

namespace {

const char* kModule = "classical_sim";

EmbeddedState initial_state(const cli::RunConfig& c, const Params& params) {
  EmbeddedState s;
  for (int i = 0; i < 3; ++i) {
    s.x[i] = c.x0[static_cast<std::size_t>(i)];
    s.p[i] = c.p0[static_cast<std::size_t>(i)];
  }
  return project_on_shell(s, params);
}

double max_position_error(const TrajectoryRecord& r, const EmbeddedState& s0, const Params& params) {
  Real worst = 0;
  for (const auto& s : r.samples) {
    const EmbeddedState exact = closed_form_geodesic(s0, params, s.t);
    for (int i = 0; i < 3; ++i) worst = fmaxq(worst, fabsq(exact.x[i] - s.x[i]));
  }
  return static_cast<double>(worst) / params.a;
}

}  // namespace

std::vector<CheckResult> classical_checks(const cli::RunConfig& config) {
  std::vector<CheckResult> out;
  const Params params{config.m, config.a};
  const EmbeddedState s0 = initial_state(config, params);

  EmbeddedOptions opt;
  opt.dt = config.dt;
  opt.duration = config.T;
  opt.projection = true;
  opt.sample_every = 1;
  opt.tol_c = config.tol.drift;
  const TrajectoryRecord run = integrate_embedded(s0, params, opt);
  const double err = max_position_error(run, s0, params);
  out.push_back(bound_check(kModule, "geodesic_vs_closed_form", err, config.tol.geodesic,
                            "max |x - x_exact| / a over the run"));

  {
    EmbeddedOptions half = opt;
    half.dt = opt.dt / 2;
    const double err_half = max_position_error(integrate_embedded(s0, params, half), s0, params);
    out.push_back(target_check(kModule, "rk4_order", std::log2(err / err_half), 4.0, 0.2,
                               "log2 of error ratio for dt and dt/2, ratio " +
                                   std::to_string(err / err_half)));
  }

  const DriftSummary d = summarize(run, params);
  out.push_back(bound_check(kModule, "constraint_c2", d.c2, config.tol.drift, "max |C2| / a^2"));
  out.push_back(bound_check(kModule, "constraint_c3", d.c3, config.tol.drift,
                            "max |C3| / (|x| |p|)"));
  out.push_back(bound_check(kModule, "energy_drift", d.energy, config.tol.drift, "relative"));
  out.push_back(bound_check(kModule, "angular_momentum_drift", d.angular_momentum, config.tol.drift,
                            "max_i |J^i - J^i(0)| / max_i |J^i(0)|"));
  out.push_back(bound_check(kModule, "energy_from_j", d.energy_from_j, 1e-10,
                            "|J.J/(2 m a^2) - H| / H"));

  {
    // Generic intrinsic start, same geodesic in both pictures.
    const IntrinsicState is{0.7, 0.3, 0.8, 0.5, 0.0};
    IntrinsicOptions io;
    io.dt = config.dt;
    io.duration = 5.0;
    const TrajectoryRecord ri = integrate_intrinsic(is, params, io);
    EmbeddedOptions eo = opt;
    eo.duration = 5.0;
    const TrajectoryRecord re = integrate_embedded(to_embedded(is, params), params, eo);
    Real worst = 0;
    const std::size_t n = std::min(ri.samples.size(), re.samples.size());
    for (std::size_t k = 0; k < n; ++k) {
      for (int i = 0; i < 3; ++i) worst = fmaxq(worst, fabsq(ri.samples[k].x[i] - re.samples[k].x[i]));
    }
    std::string detail = "max |x_intrinsic - x_embedded| / a, t in [0, 5]";
    double measured = static_cast<double>(worst) / params.a;
    if (ri.chart_exit || n == 0) {
      measured = std::numeric_limits<double>::infinity();
      detail += ", chart exit";
    }
    out.push_back(bound_check(kModule, "intrinsic_vs_embedded", measured, config.tol.cross, detail));

    const double v0 = intrinsic_speed_squared(is, params.a);
    double dv = 0.0;
    IntrinsicState s = is;
    const int steps = static_cast<int>(std::llround(5.0 / io.dt));
    for (int k = 0; k < steps; ++k) {
      s = intrinsic_rk4_step(s, io.dt);
      dv = std::max(dv, std::abs(intrinsic_speed_squared(s, params.a) - v0) / v0);
    }
    out.push_back(bound_check(kModule, "intrinsic_speed", dv, 1e-8, "relative drift of g(v, v)"));
  }
  {
    const IntrinsicState boost{0.4, 1.1, 0.9, 0.0, 0.0};
    IntrinsicOptions io;
    io.dt = config.dt;
    io.duration = 3.0;
    IntrinsicState s = boost;
    double worst = 0.0;
    const int steps = static_cast<int>(std::llround(io.duration / io.dt));
    for (int k = 1; k <= steps; ++k) {
      s = intrinsic_rk4_step(s, io.dt);
      const double t = k * io.dt;
      worst = std::max({worst, std::abs(s.phi - boost.phi),
                        std::abs(s.theta - (boost.theta + boost.theta_dot * t))});
    }
    out.push_back(bound_check(kModule, "boost_geodesic", worst, 1e-10,
                              "phi constant, theta linear in t"));
  }

  {
    const double sign = config.faults.count("energy-sign") ? -1.0 : 1.0;
    std::mt19937_64 rng(config.seed + 20);
    std::uniform_real_distribution<double> pos(-5.0 * params.a, 5.0 * params.a);
    std::uniform_real_distribution<double> mom(-5.0, 5.0);
    double lowest = 0.0;
    double forms = 0.0;
    for (int k = 0; k < 10000; ++k) {
      const double x = pos(rng), y = pos(rng), px = mom(rng), py = mom(rng);
      const double hr = sign * energy_reduced(x, y, px, py, params);
      const double hd = sign * energy_direct(x, y, px, py, params);
      lowest = std::min(lowest, hr);
      forms = std::max(forms, std::abs(hr - hd) / std::max(std::abs(hd), 1e-300));
    }
    out.push_back(bound_check(kModule, "energy_lower_bound", std::max(0.0, -lowest), 1e-12,
                              "-min H over 1e4 constrained states"));
    out.push_back(bound_check(kModule, "energy_forms", forms, 1e-12,
                              "factored vs quadratic form, relative"));
    const double zero = sign * energy_reduced(1.3, -0.4, 0.0, 0.0, params);
    out.push_back(bound_check(kModule, "energy_zero_at_rest", std::abs(zero), 0.0, "p_x = p_y = 0"));
  }
  {
    std::stringstream csv;
    write_trajectory_csv(csv, run);
    const std::vector<Sample> back = read_trajectory_csv(csv);
    Real worst = back.size() == run.samples.size() ? 0 : 1;
    for (const auto& s : back) {
      const Diagnostics d = diagnostics(s.x, s.p, params);
      worst = fmaxq(worst, fabsq(d.energy - s.diag.energy));
      worst = fmaxq(worst, fabsq(d.c2 - s.diag.c2));
      worst = fmaxq(worst, fabsq(d.c3 - s.diag.c3));
      for (int i = 0; i < 3; ++i) worst = fmaxq(worst, fabsq(d.J[i] - s.diag.J[i]));
    }
    out.push_back(bound_check(kModule, "csv_roundtrip", static_cast<double>(worst), 1e-12,
                              "diagnostics recomputed from re-read CSV"));
  }
  return out;
}

}  // namespace hyperq::verify

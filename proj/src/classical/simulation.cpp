#include "hyperq/classical/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyperq::classical {

using geometry::ChartPoint;
using geometry::levi_civita_upper;

Vec to_real(const geometry::MinkVec& v) { return {{v[0], v[1], v[2]}}; }

geometry::MinkVec to_double(const Vec& v) {
  return {{static_cast<double>(v[0]), static_cast<double>(v[1]), static_cast<double>(v[2])}};
}

Real minkowski_square(const Vec& v) { return geometry::inner(v, v); }

Real c3_residual(const Vec& x, const Vec& p) { return x[0] * p[0] + x[1] * p[1] + x[2] * p[2]; }

std::array<Real, 3> angular_momentum(const Vec& x, const Vec& p) {
  const Vec xl = x.lowered();
  std::array<Real, 3> J{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const int e = levi_civita_upper(i, j, k);
        if (e != 0) J[static_cast<std::size_t>(i)] -= e * xl[j] * p[k];
      }
    }
  }
  return J;
}

Real energy_from_j(const std::array<Real, 3>& J, const Params& params) {
  const Real jj = J[0] * J[0] + J[1] * J[1] - J[2] * J[2];
  return jj / (2 * Real(params.m) * Real(params.a) * Real(params.a));
}

Diagnostics diagnostics(const Vec& x, const Vec& p, const Params& params) {
  Diagnostics d;
  d.energy = minkowski_square(p) / (2 * Real(params.m));
  d.J = angular_momentum(x, p);
  d.c2 = -(minkowski_square(x) + Real(params.a) * Real(params.a));
  d.c3 = c3_residual(x, p);
  return d;
}

Sample make_sample(const EmbeddedState& s, const Params& params) {
  Sample out;
  out.t = s.t;
  out.x = s.x;
  out.p = s.p;
  const Real rho = hypotq(s.x[0], s.x[1]);
  out.theta = asinhq(rho / Real(params.a));
  if (rho > 0) {
    out.phi = atan2q(s.x[1], s.x[0]);
    if (out.phi < 0) out.phi += 2 * kPi;
  }
  out.diag = diagnostics(s.x, s.p, params);
  return out;
}

StateDerivative eom_embedded(const EmbeddedState& s, const Params& params) {
  const Real m = params.m;
  const Real a = params.a;
  const Real force = minkowski_square(s.p) / (m * a * a);
  return {s.p.lowered() * (1 / m), s.x.lowered() * force};
}

EmbeddedState project_on_shell(const EmbeddedState& s, const Params& params) {
  EmbeddedState out = s;
  const Real norm = minkowski_square(s.x);
  if (!(norm < 0)) throw std::domain_error("position is not timelike; cannot project");
  out.x = s.x * (Real(params.a) / sqrtq(-norm));
  const Real alpha = c3_residual(out.x, s.p) / minkowski_square(out.x);
  out.p = s.p - out.x.lowered() * alpha;
  return out;
}

EmbeddedState rk4_step(const EmbeddedState& s, const Params& params, Real dt) {
  auto advance = [&](const StateDerivative& d, Real h) {
    return EmbeddedState{s.x + d.dx * h, s.p + d.dp * h, s.t + h};
  };
  const Real half = dt / 2;
  const StateDerivative k1 = eom_embedded(s, params);
  const StateDerivative k2 = eom_embedded(advance(k1, half), params);
  const StateDerivative k3 = eom_embedded(advance(k2, half), params);
  const StateDerivative k4 = eom_embedded(advance(k3, dt), params);
  const Real w = dt / 6;
  EmbeddedState out;
  out.x = s.x + (k1.dx + k2.dx * Real(2) + k3.dx * Real(2) + k4.dx) * w;
  out.p = s.p + (k1.dp + k2.dp * Real(2) + k3.dp * Real(2) + k4.dp) * w;
  out.t = s.t + dt;
  return out;
}

namespace {

long step_count(double dt, double duration) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be positive");
  if (!(duration >= 0.0)) throw std::invalid_argument("duration must be non-negative");
  return static_cast<long>(std::llround(duration / dt));
}

}  // namespace

TrajectoryRecord integrate_embedded(const EmbeddedState& s0, const Params& params,
                                    const EmbeddedOptions& options) {
  const long steps = step_count(options.dt, options.duration);
  const int every = std::max(1, options.sample_every);
  const Real drift_limit = Real(1e3) * Real(options.tol_c) * Real(params.a) * Real(params.a);
  const Real dt = options.dt;

  TrajectoryRecord record;
  record.samples.reserve(static_cast<std::size_t>(steps / every + 2));
  EmbeddedState s = s0;
  record.samples.push_back(make_sample(s, params));
  for (long n = 1; n <= steps; ++n) {
    s = rk4_step(s, params, dt);
    s.t = s0.t + Real(n) * dt;
    if (options.projection) {
      s = project_on_shell(s, params);
    } else if (fabsq(minkowski_square(s.x) + Real(params.a) * Real(params.a)) > drift_limit) {
      record.drift_warning = true;
    }
    if (n % every == 0 || n == steps) record.samples.push_back(make_sample(s, params));
  }
  return record;
}

DriftSummary summarize(const TrajectoryRecord& record, const Params& params) {
  DriftSummary d;
  if (record.samples.empty()) return d;
  const Diagnostics& d0 = record.samples.front().diag;
  const Real tiny = 1e-300Q;
  const Real e_scale = fmaxq(fabsq(d0.energy), tiny);
  Real j_scale = tiny;
  for (Real j : d0.J) j_scale = fmaxq(j_scale, fabsq(j));
  const Real a2 = static_cast<Real>(params.a) * params.a;
  Real c2 = 0, c3 = 0, de = 0, dj = 0, hj = 0;
  for (const auto& s : record.samples) {
    c2 = fmaxq(c2, fabsq(s.diag.c2) / a2);
    Real xs = 0, ps = 0;
    for (int i = 0; i < 3; ++i) {
      xs = fmaxq(xs, fabsq(s.x[i]));
      ps = fmaxq(ps, fabsq(s.p[i]));
    }
    c3 = fmaxq(c3, fabsq(s.diag.c3) / fmaxq(xs * ps, tiny));
    de = fmaxq(de, fabsq(s.diag.energy - d0.energy) / e_scale);
    for (int i = 0; i < 3; ++i) dj = fmaxq(dj, fabsq(s.diag.J[i] - d0.J[i]) / j_scale);
    hj = fmaxq(hj, fabsq(energy_from_j(s.diag.J, params) - s.diag.energy) / e_scale);
  }
  d.c2 = static_cast<double>(c2);
  d.c3 = static_cast<double>(c3);
  d.energy = static_cast<double>(de);
  d.angular_momentum = static_cast<double>(dj);
  d.energy_from_j = static_cast<double>(hj);
  return d;
}

EmbeddedState closed_form_geodesic(const EmbeddedState& s0, const Params& params, Real t) {
  const Real m = params.m;
  const Vec u = s0.p.lowered() * (1 / m);
  const Real uu = minkowski_square(u);
  EmbeddedState out{s0.x, s0.p, s0.t + t};
  if (!(uu > 0)) return out;
  const Real s = sqrtq(uu) / Real(params.a);
  const Real ch = coshq(s * t);
  const Real sh = sinhq(s * t);
  out.x = s0.x * ch + u * (sh / s);
  const Vec velocity = s0.x * (s * sh) + u * ch;
  out.p = velocity.lowered() * m;
  return out;
}

IntrinsicState intrinsic_rk4_step(const IntrinsicState& s, double dt) {
  struct Rate {
    double theta, phi, theta_dot, phi_dot;
  };
  // Only Gamma^theta_{phi phi} and Gamma^phi_{theta phi} are nonzero.
  auto rate = [](double theta, double theta_dot, double phi_dot) {
    const auto gamma = geometry::christoffel(ChartPoint{theta, 0.0});
    return Rate{theta_dot, phi_dot, -gamma[0][1][1] * phi_dot * phi_dot,
                -2.0 * gamma[1][0][1] * theta_dot * phi_dot};
  };
  auto shifted = [&](const Rate& k, double h) {
    return rate(s.theta + h * k.theta, s.theta_dot + h * k.theta_dot, s.phi_dot + h * k.phi_dot);
  };
  const Rate k1 = rate(s.theta, s.theta_dot, s.phi_dot);
  const Rate k2 = shifted(k1, 0.5 * dt);
  const Rate k3 = shifted(k2, 0.5 * dt);
  const Rate k4 = shifted(k3, dt);
  const double w = dt / 6.0;
  IntrinsicState out;
  out.theta = s.theta + w * (k1.theta + 2.0 * k2.theta + 2.0 * k3.theta + k4.theta);
  out.phi = s.phi + w * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi);
  out.theta_dot =
      s.theta_dot + w * (k1.theta_dot + 2.0 * k2.theta_dot + 2.0 * k3.theta_dot + k4.theta_dot);
  out.phi_dot = s.phi_dot + w * (k1.phi_dot + 2.0 * k2.phi_dot + 2.0 * k3.phi_dot + k4.phi_dot);
  out.t = s.t + dt;
  return out;
}

EmbeddedState to_embedded(const IntrinsicState& s, const Params& params) {
  const Real a = params.a;
  const Real th = s.theta;
  const Real ph = s.phi;
  const Real sh = sinhq(th), ch = coshq(th), sp = sinq(ph), cp = cosq(ph);
  EmbeddedState out;
  out.x = Vec{{a * cp * sh, a * sp * sh, a * ch}};
  const Vec d_theta{{a * cp * ch, a * sp * ch, a * sh}};
  const Vec d_phi{{-a * sp * sh, a * cp * sh, 0}};
  const Vec velocity = d_theta * Real(s.theta_dot) + d_phi * Real(s.phi_dot);
  out.p = velocity.lowered() * Real(params.m);
  out.t = s.t;
  return out;
}

IntrinsicState to_intrinsic(const EmbeddedState& s, const Params& params) {
  const Real a = params.a;
  if (!(s.x[2] > 0)) throw geometry::ChartError("point lies on the z < 0 sheet");
  if (fabsq(minkowski_square(s.x) + a * a) > Real(1e-9) * a * a) {
    throw geometry::ChartError("point is off the hyperboloid");
  }
  const Real rho = hypotq(s.x[0], s.x[1]);
  const Real theta = asinhq(rho / a);
  Real phi = 0;
  if (rho > 0) {
    phi = atan2q(s.x[1], s.x[0]);
    if (phi < 0) phi += 2 * kPi;
  }
  const Real sh = sinhq(theta), ch = coshq(theta), sp = sinq(phi), cp = cosq(phi);
  const Vec d_theta{{a * cp * ch, a * sp * ch, a * sh}};
  const Vec d_phi{{-a * sp * sh, a * cp * sh, 0}};
  const Vec velocity = s.p.lowered() * (1 / Real(params.m));
  IntrinsicState out;
  out.theta = static_cast<double>(theta);
  out.phi = static_cast<double>(phi);
  out.theta_dot = static_cast<double>(geometry::inner(velocity, d_theta) / (a * a));
  out.phi_dot =
      sh > 0 ? static_cast<double>(geometry::inner(velocity, d_phi) / (a * a * sh * sh)) : 0.0;
  out.t = static_cast<double>(s.t);
  return out;
}

double intrinsic_speed_squared(const IntrinsicState& s, double a) {
  const double sh = std::sinh(s.theta);
  return a * a * (s.theta_dot * s.theta_dot + sh * sh * s.phi_dot * s.phi_dot);
}

TrajectoryRecord integrate_intrinsic(const IntrinsicState& s0, const Params& params,
                                     const IntrinsicOptions& options) {
  const long steps = step_count(options.dt, options.duration);
  if (!(s0.theta > options.theta_min)) {
    throw std::invalid_argument("initial theta must exceed theta_min");
  }
  const int every = std::max(1, options.sample_every);
  TrajectoryRecord record;
  IntrinsicState s = s0;
  record.samples.push_back(make_sample(to_embedded(s, params), params));
  for (long n = 1; n <= steps; ++n) {
    IntrinsicState next = intrinsic_rk4_step(s, options.dt);
    if (!(next.theta > options.theta_min) || !std::isfinite(next.theta)) {
      record.chart_exit = true;
      break;
    }
    next.t = s0.t + static_cast<double>(n) * options.dt;
    s = next;
    if (n % every == 0 || n == steps) {
      record.samples.push_back(make_sample(to_embedded(s, params), params));
    }
  }
  return record;
}

EmbeddedState on_shell_state(double theta, double phi, const geometry::MinkVec& p,
                             const Params& params) {
  const Real a = params.a;
  const Real th = theta, ph = phi;
  EmbeddedState s;
  s.x = Vec{{a * cosq(ph) * sinhq(th), a * sinq(ph) * sinhq(th), a * coshq(th)}};
  s.p = to_real(p);
  return project_on_shell(s, params);
}

double energy_direct(double x, double y, double px, double py, const Params& params) {
  const double z = std::sqrt(x * x + y * y + params.a * params.a);
  const double pz = -(x * px + y * py) / z;
  return (px * px + py * py - pz * pz) / (2.0 * params.m);
}

double energy_reduced(double x, double y, double px, double py, const Params& params) {
  const double r2 = x * x + y * y;
  const double q2 = px * px + py * py;
  if (r2 == 0.0 || q2 == 0.0) return energy_direct(x, y, px, py, params);
  const double cos_angle = (x * px + y * py) / (std::sqrt(r2) * std::sqrt(q2));
  return q2 / (2.0 * params.m) *
         (1.0 - r2 * cos_angle * cos_angle / (r2 + params.a * params.a));
}

}  // namespace hyperq::classical

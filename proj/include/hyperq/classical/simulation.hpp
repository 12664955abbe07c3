#pragma once

#include <array>
#include <vector>

#include "hyperq/classical/real.hpp"
#include "hyperq/geometry/hyperboloid.hpp"

namespace hyperq::classical {

using Vec = geometry::BasicMinkVec<Real>;

struct Params {
  double m = 1.0;
  double a = 1.0;
};

Vec to_real(const geometry::MinkVec& v);
geometry::MinkVec to_double(const Vec& v);

// x holds x^i; p holds the canonical momenta p_i (lower index), so the
// velocity is x_dot^i = p^i / m with p^3 = -p_3.
struct EmbeddedState {
  Vec x;
  Vec p;
  Real t = 0;
};

struct IntrinsicState {
  double theta = 0.0;
  double phi = 0.0;
  double theta_dot = 0.0;
  double phi_dot = 0.0;
  double t = 0.0;
};

struct Diagnostics {
  Real energy = 0;        // (p_x^2 + p_y^2 - p_z^2) / 2m
  std::array<Real, 3> J{};  // J^i = -eps^{ijk} x_j p_k
  Real c2 = 0;            // z^2 - x^2 - y^2 - a^2
  Real c3 = 0;            // x^i p_i
};

struct Sample {
  Real t = 0;
  Vec x;
  Vec p;
  Real theta = 0;
  Real phi = 0;
  Diagnostics diag;
};

struct TrajectoryRecord {
  std::vector<Sample> samples;
  bool drift_warning = false;  // C2 drift beyond 1e3 * tol_c without projection
  bool chart_exit = false;     // intrinsic integration left the chart
};

struct StateDerivative {
  Vec dx;
  Vec dp;
};

Real minkowski_square(const Vec& v);
Real c3_residual(const Vec& x, const Vec& p);
std::array<Real, 3> angular_momentum(const Vec& x, const Vec& p);
// J.J / (2 m a^2)
Real energy_from_j(const std::array<Real, 3>& J, const Params& params);
Diagnostics diagnostics(const Vec& x, const Vec& p, const Params& params);
Sample make_sample(const EmbeddedState& s, const Params& params);

// x_dot^i = p^i / m, p_dot_i = (p.p / (m a^2)) x_i
StateDerivative eom_embedded(const EmbeddedState& s, const Params& params);

// Rescale x onto the hyperboloid, then remove the x-component of p, so that
// C2 and C3 hold again.
EmbeddedState project_on_shell(const EmbeddedState& s, const Params& params);

EmbeddedState rk4_step(const EmbeddedState& s, const Params& params, Real dt);

struct EmbeddedOptions {
  double dt = 1e-3;
  double duration = 10.0;
  bool projection = true;
  int sample_every = 1;
  double tol_c = 1e-8;  // scaled by a^2
};

TrajectoryRecord integrate_embedded(const EmbeddedState& s0, const Params& params,
                                    const EmbeddedOptions& options);

// x(t) = x0 cosh(st) + (u/s) sinh(st), u = p0^i / m, s = sqrt(u.u) / a.
// p = 0 gives the constant state.
EmbeddedState closed_form_geodesic(const EmbeddedState& s0, const Params& params, Real t);

// Largest deviations along a record, relative where a scale exists:
// |C2| / a^2, |C3| / (|x| |p|), H and J^i against their initial values, and
// J.J/(2 m a^2) against H.
struct DriftSummary {
  double c2 = 0.0;
  double c3 = 0.0;
  double energy = 0.0;
  double angular_momentum = 0.0;
  double energy_from_j = 0.0;
};

DriftSummary summarize(const TrajectoryRecord& record, const Params& params);

struct IntrinsicOptions {
  double dt = 1e-3;
  double duration = 5.0;
  int sample_every = 1;
  double theta_min = 1e-6;
};

// RK4 step of the geodesic equations in the (theta, phi) chart.
IntrinsicState intrinsic_rk4_step(const IntrinsicState& s, double dt);

TrajectoryRecord integrate_intrinsic(const IntrinsicState& s0, const Params& params,
                                     const IntrinsicOptions& options);

EmbeddedState to_embedded(const IntrinsicState& s, const Params& params);
IntrinsicState to_intrinsic(const EmbeddedState& s, const Params& params);

// a^2 (theta_dot^2 + sinh^2(theta) phi_dot^2)
double intrinsic_speed_squared(const IntrinsicState& s, double a);

// On-shell state from (theta, phi) and an arbitrary momentum; the component
// of p along x is removed.
EmbeddedState on_shell_state(double theta, double phi, const geometry::MinkVec& p,
                             const Params& params);

// Energy with z and p_z eliminated:
// (p_x^2 + p_y^2)/(2m) [1 - (x^2 + y^2) cos^2(angle) / (x^2 + y^2 + a^2)].
double energy_reduced(double x, double y, double px, double py, const Params& params);
// (p_x^2 + p_y^2 - p_z^2)/(2m) with z = sqrt(x^2 + y^2 + a^2),
// p_z = -(x p_x + y p_y)/z.
double energy_direct(double x, double y, double px, double py, const Params& params);

}  // namespace hyperq::classical

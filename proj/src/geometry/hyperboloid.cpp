#include "hyperq/geometry/hyperboloid.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hyperq::geometry {

int levi_civita_lower(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  if ((i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 0)) return 1;
  return -1;
}

int levi_civita_upper(int i, int j, int k) { return -levi_civita_lower(i, j, k); }

MinkVec embed(ChartPoint p, double a) {
  const double sh = std::sinh(p.theta);
  return {{a * std::cos(p.phi) * sh, a * std::sin(p.phi) * sh, a * std::cosh(p.theta)}};
}

ChartPoint chart_inverse(const MinkVec& v, double a, double tol) {
  if (v[2] <= 0.0) throw ChartError("point lies on the z < 0 sheet");
  const double residual = inner(v, v) + a * a;
  if (std::abs(residual) > tol * a * a) {
    throw ChartError("point is off the hyperboloid (residual " + std::to_string(residual) + ")");
  }
  const double rho = std::hypot(v[0], v[1]);
  ChartPoint p;
  p.theta = std::asinh(rho / a);
  if (rho > 0.0) {
    p.phi = std::atan2(v[1], v[0]);
    if (p.phi < 0.0) p.phi += 2.0 * std::numbers::pi;
  }
  return p;
}

std::array<MinkVec, 2> embedding_jacobian(ChartPoint p, double a) {
  const double sh = std::sinh(p.theta);
  const double ch = std::cosh(p.theta);
  const double cp = std::cos(p.phi);
  const double sp = std::sin(p.phi);
  return {MinkVec{{a * cp * ch, a * sp * ch, a * sh}},
          MinkVec{{-a * sp * sh, a * cp * sh, 0.0}}};
}

MinkVec pushforward(ChartPoint p, TangentVec t, double a) {
  const auto jac = embedding_jacobian(p, a);
  return jac[0] * t.theta + jac[1] * t.phi;
}

Metric2 induced_metric(ChartPoint p, double a) {
  const double sh = std::sinh(p.theta);
  return {{{a * a, 0.0}, {0.0, a * a * sh * sh}}};
}

Christoffel christoffel(ChartPoint p) {
  if (p.theta == 0.0) throw ChartError("Christoffel symbols are singular at theta = 0");
  Christoffel g{};
  g[0][1][1] = -std::sinh(p.theta) * std::cosh(p.theta);
  g[1][0][1] = g[1][1][0] = 1.0 / std::tanh(p.theta);
  return g;
}

namespace {

ChartPoint shifted(ChartPoint p, int coord, double delta) {
  if (coord == 0) {
    p.theta += delta;
  } else {
    p.phi += delta;
  }
  return p;
}

// dg[k][i][j] = d_k g_ij
using MetricDerivative = std::array<Metric2, 2>;

MetricDerivative metric_derivative(ChartPoint p, double a, double h) {
  MetricDerivative dg{};
  for (int k = 0; k < 2; ++k) {
    const Metric2 up = induced_metric(shifted(p, k, h), a);
    const Metric2 down = induced_metric(shifted(p, k, -h), a);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) dg[k][i][j] = (up[i][j] - down[i][j]) / (2.0 * h);
    }
  }
  return dg;
}

std::array<double, 2> components(TangentVec t) { return {t.theta, t.phi}; }

}  // namespace

Christoffel christoffel_finite_difference(ChartPoint p, double a, double h) {
  const Metric2 g = induced_metric(p, a);
  const MetricDerivative dg = metric_derivative(p, a, h);
  const std::array<double, 2> ginv = {1.0 / g[0][0], 1.0 / g[1][1]};
  Christoffel out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        out[i][j][k] = 0.5 * ginv[i] * (dg[j][i][k] + dg[k][i][j] - dg[i][j][k]);
      }
    }
  }
  return out;
}

TangentVec killing_field(int index, ChartPoint p) {
  const double sp = std::sin(p.phi);
  const double cp = std::cos(p.phi);
  switch (index) {
    case 1:
    case 2: {
      if (p.theta == 0.0) throw ChartError("K_(1), K_(2) are singular at theta = 0");
      const double coth = 1.0 / std::tanh(p.theta);
      return index == 1 ? TangentVec{sp, cp * coth} : TangentVec{-cp, sp * coth};
    }
    case 3:
      return {0.0, 1.0};
    default:
      throw std::out_of_range("Killing field index must be 1, 2 or 3");
  }
}

std::array<TangentVec, 3> killing_fields(ChartPoint p) {
  return {killing_field(1, p), killing_field(2, p), killing_field(3, p)};
}

double killing_equation_residual(int index, ChartPoint p, double a, double h) {
  const Metric2 g = induced_metric(p, a);
  const MetricDerivative dg = metric_derivative(p, a, h);
  const auto k = components(killing_field(index, p));
  // dk[i][l] = d_i K^l
  std::array<std::array<double, 2>, 2> dk{};
  for (int i = 0; i < 2; ++i) {
    const auto up = components(killing_field(index, shifted(p, i, h)));
    const auto down = components(killing_field(index, shifted(p, i, -h)));
    for (int l = 0; l < 2; ++l) dk[i][l] = (up[l] - down[l]) / (2.0 * h);
  }
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      double lie = 0.0;
      for (int l = 0; l < 2; ++l) {
        lie += k[l] * dg[l][i][j] + g[l][j] * dk[i][l] + g[i][l] * dk[j][l];
      }
      worst = std::max(worst, std::abs(lie));
    }
  }
  return worst;
}

MinkVec rotation_generator(int i, const MinkVec& x) {
  const MinkVec low = x.lowered();
  MinkVec out;
  for (int l = 0; l < 3; ++l) {
    for (int k = 0; k < 3; ++k) out[l] += levi_civita_upper(i, k, l) * low[k];
  }
  return out;
}

double scalar_curvature(double a, ChartPoint at, double h) {
  const Christoffel gamma = christoffel(at);
  // dgamma[m][r][n][s] = d_m Gamma^r_{ns}
  std::array<Christoffel, 2> dgamma{};
  for (int mu = 0; mu < 2; ++mu) {
    const Christoffel up = christoffel(shifted(at, mu, h));
    const Christoffel down = christoffel(shifted(at, mu, -h));
    for (int r = 0; r < 2; ++r) {
      for (int n = 0; n < 2; ++n) {
        for (int s = 0; s < 2; ++s) dgamma[mu][r][n][s] = (up[r][n][s] - down[r][n][s]) / (2.0 * h);
      }
    }
  }
  // R^r_{s mu nu} contracted to R_{s nu} = R^r_{s r nu}.
  std::array<std::array<double, 2>, 2> ricci{};
  for (int s = 0; s < 2; ++s) {
    for (int nu = 0; nu < 2; ++nu) {
      double sum = 0.0;
      for (int r = 0; r < 2; ++r) {
        const int mu = r;
        sum += dgamma[mu][r][nu][s] - dgamma[nu][r][mu][s];
        for (int l = 0; l < 2; ++l) {
          sum += gamma[r][mu][l] * gamma[l][nu][s] - gamma[r][nu][l] * gamma[l][mu][s];
        }
      }
      ricci[s][nu] = sum;
    }
  }
  const Metric2 g = induced_metric(at, a);
  return ricci[0][0] / g[0][0] + ricci[1][1] / g[1][1];
}

}  // namespace hyperq::geometry

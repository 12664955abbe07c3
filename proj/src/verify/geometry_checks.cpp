#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hyperq/geometry/hyperboloid.hpp"
#include "hyperq/verify/suite.hpp"

namespace hyperq::verify {

using namespace hyperq::geometry;

namespace {
const char* kModule = "geometry";
}

std::vector<CheckResult> geometry_checks(const cli::RunConfig& config) {
  std::vector<CheckResult> out;
  const double a = config.a;
  std::mt19937_64 rng(config.seed + 10);
  std::uniform_real_distribution<double> th(0.05, 3.0);
  std::uniform_real_distribution<double> ph(0.0, 2.0 * std::numbers::pi);
  std::vector<ChartPoint> points(100);
  for (auto& p : points) p = {th(rng), ph(rng)};

  double shell = 0.0;
  double roundtrip = 0.0;
  for (const auto& p : points) {
    const MinkVec x = embed(p, a);
    shell = std::max(shell, std::abs(inner(x, x) + a * a) / (a * a * std::cosh(p.theta) * std::cosh(p.theta)));
    const MinkVec back = embed(chart_inverse(x, a), a);
    for (int i = 0; i < 3; ++i) roundtrip = std::max(roundtrip, std::abs(back[i] - x[i]) / (a * std::cosh(p.theta)));
  }
  out.push_back(bound_check(kModule, "embed_on_shell", shell, 1e-12,
                            "|x.x + a^2| / (a cosh theta)^2, 100 points"));
  out.push_back(bound_check(kModule, "chart_roundtrip", roundtrip, 1e-12,
                            "embed(chart_inverse(x)) vs x, relative to |x|"));

  {
    // Central differences of step h leave an O(h^2) error; the bound is set
    // for h = 1e-4.
    double worst = 0.0;
    for (std::size_t k = 0; k < 20; ++k) {
      const Christoffel exact = christoffel(points[k]);
      const Christoffel fd = christoffel_finite_difference(points[k], a, 1e-4);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          for (int l = 0; l < 2; ++l) {
            const double scale = std::max(1.0, std::abs(exact[i][j][l]));
            worst = std::max(worst, std::abs(exact[i][j][l] - fd[i][j][l]) / scale);
          }
        }
      }
    }
    out.push_back(bound_check(kModule, "christoffel_finite_difference", worst, 1e-6,
                              "closed form vs metric differences, h = 1e-4"));
  }
  {
    double worst = 0.0;
    for (std::size_t k = 0; k < 50; ++k) {
      const double scale = a * a * std::cosh(points[k].theta) * std::cosh(points[k].theta);
      for (int i = 1; i <= 3; ++i) {
        worst = std::max(worst, killing_equation_residual(i, points[k], a, 1e-4) / scale);
      }
    }
    out.push_back(bound_check(kModule, "killing_equation", worst, 1e-6,
                              "|L_K g| / (a cosh theta)^2, 50 points, h = 1e-4"));
  }
  {
    double pushed = 0.0;
    double tangent = 0.0;
    for (const auto& p : points) {
      const MinkVec x = embed(p, a);
      const double scale = a * std::cosh(p.theta);
      for (int i = 1; i <= 3; ++i) {
        const MinkVec v = pushforward(p, killing_field(i, p), a);
        // K_(i) pushes forward to -eps^{ikl} x_k d_l.
        const MinkVec r = rotation_generator(i - 1, x);
        for (int l = 0; l < 3; ++l) pushed = std::max(pushed, std::abs(v[l] + r[l]) / scale);
        tangent = std::max(tangent, std::abs(inner(x, v)) / (scale * scale));
      }
    }
    out.push_back(bound_check(kModule, "killing_pushforward", pushed, 1e-12,
                              "K_(i) vs -eps^{ikl} x_k d_l, relative to |x|"));
    out.push_back(bound_check(kModule, "killing_tangent", tangent, 1e-10, "|x . K| / |x|^2"));
  }
  {
    double worst = 0.0;
    for (const auto& p : points) {
      const Metric2 g = induced_metric(p, a);
      // Diagonal metric: the eigenvalues are the diagonal entries.
      worst = std::max(worst, -std::min(g[0][0], g[1][1]));
    }
    out.push_back(bound_check(kModule, "metric_positive", worst, 0.0,
                              "max(-eigenvalue) over 100 points"));
  }
  {
    const double r1 = scalar_curvature(a);
    const double r2 = scalar_curvature(2.0 * a);
    out.push_back(target_check(kModule, "scalar_curvature", r1 * a * a, -2.0, 1e-6,
                               "R a^2 at theta = 1"));
    out.push_back(target_check(kModule, "scalar_curvature_scaling", r2 / r1, 0.25, 1e-6,
                               "R(2a) / R(a)"));
  }
  return out;
}

}  // namespace hyperq::verify

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "hyperq/spectral/complex_gamma.hpp"
#include "hyperq/spectral/conical.hpp"
#include "hyperq/spectral/operators.hpp"
#include "hyperq/verify/suite.hpp"

namespace hyperq::verify {

using namespace hyperq::spectral;

namespace {

const char* kModule = "spectral";

std::string mode_tag(double lambda, int n) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "[lambda=%g,n=%d]", lambda, n);
  return buf;
}

// (2/pi) int_0^theta cos(lambda t) / sqrt(2 cosh theta - 2 cosh t) dt by
// tanh-sinh, with the gap theta - t taken from the complement near t = theta.
double p0_oracle(double lambda, double theta) {
  if (theta == 0.0) return 1.0;
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto f = [&](double t, double tc) {
    const double gap = t > 0.5 * theta ? tc : theta - t;
    const double d = 4.0 * std::sinh(0.5 * (theta + t)) * std::sinh(0.5 * gap);
    return std::cos(lambda * t) / std::sqrt(d);
  };
  return 2.0 / std::numbers::pi * integrator.integrate(f, 0.0, theta, 1e-15);
}

double bump(double theta) {
  const double r = (theta - 1.5) / 0.9;
  return std::abs(r) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - r * r)) : 0.0;
}

// Smooth test functions supported away from the grid ends.
struct TestPair {
  GridFunction f;
  GridFunction g;
};

TestPair test_pair(const std::shared_ptr<const Grid>& grid) {
  return {sample(grid,
                 [](double th, double ph) {
                   return bump(th) * (std::polar(1.0, ph) + 0.5 * std::polar(1.0, -2.0 * ph) + 0.3);
                 }),
          sample(grid, [](double th, double ph) {
            return bump(th) * std::sinh(th) *
                   (std::polar(0.7, 2.0 * ph) + cd(0.0, 0.4) * std::polar(1.0, -ph) + 0.2);
          })};
}

struct Identities {
  double closure = 0;
  double casimir = 0;
  double h_via_j = 0;
  double x_p = 0;
  double herm_p = 0;
  double herm_p_uncorrected = 0;
  double herm_j = 0;
  double herm_h = 0;
};

Identities measure(const cli::RunConfig& config, double h, bool identities) {
  const Units u{config.a, config.m, config.hbar};
  const PhiDerivative method =
      config.phi_derivative == "central" ? PhiDerivative::central : PhiDerivative::spectral;
  const double eps_sign = config.faults.count("epsilon-sign") ? -1.0 : 1.0;
  const bool p_correction = !config.faults.count("drop-p-correction");
  auto grid = std::make_shared<const Grid>(
      GridSpec{config.theta_min, config.theta_max, h, config.n_phi});
  const auto [f, g] = test_pair(grid);
  const double nf = norm(f);
  const double ng = norm(g);
  const cd ih(0.0, config.hbar);
  Identities out;

  auto defect = [&](const GridFunction& lf, const GridFunction& lg) {
    // |<f, A g> - <A f, g>| / (|f| |g|); lf = A f, lg = A g
    return std::abs(inner_product(f, lg) - inner_product(lf, g)) / (nf * ng);
  };
  for (int i = 1; i <= 3; ++i) {
    out.herm_p = std::max(out.herm_p, defect(apply_p(i, f, u, p_correction, method),
                                             apply_p(i, g, u, p_correction, method)));
    out.herm_p_uncorrected = std::max(
        out.herm_p_uncorrected, defect(apply_p(i, f, u, false, method), apply_p(i, g, u, false, method)));
    out.herm_j = std::max(out.herm_j, defect(apply_J(i, f, u, method), apply_J(i, g, u, method)));
  }
  if (!identities) return out;

  out.herm_h = defect(laplace_beltrami(f, u, method), laplace_beltrami(g, u, method));
  // [J^i, J^j] f + i hbar eps^{ijk} J_k f for (i, j, k) cyclic; eps^{123} = -1.
  const std::array<std::array<int, 3>, 3> cyclic = {{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};
  for (const auto& [i, j, k] : cyclic) {
    GridFunction r = apply_J(i, apply_J(j, f, u, method), u, method) -
                     apply_J(j, apply_J(i, f, u, method), u, method);
    r -= apply_J_lower(k, f, u, method) * (eps_sign * ih);
    out.closure = std::max(out.closure, norm(r, Rows::interior) / nf);
  }
  GridFunction cas(grid);
  for (int i = 1; i <= 3; ++i) cas += apply_x_lower(i, apply_J(i, f, u, method), config.a);
  out.casimir = norm(cas, Rows::interior) / (config.a * nf);
  out.h_via_j =
      norm(hamiltonian_from_j(f, u, method) - laplace_beltrami(f, u, method), Rows::interior) / nf;
  // [x^1, p_1] f - i hbar (1 + x^1 x_1 / a^2) f
  GridFunction xp = apply_x(1, apply_p(1, f, u, true, method), config.a) -
                    apply_p(1, apply_x(1, f, config.a), u, true, method);
  const GridFunction xx = apply_x(1, apply_x(1, f, config.a), config.a);
  xp -= (f + xx * cd(1.0 / (config.a * config.a))) * ih;
  out.x_p = norm(xp, Rows::interior) / nf;
  return out;
}

}  // namespace

std::vector<CheckResult> spectral_checks(const cli::RunConfig& config) {
  std::vector<CheckResult> out;
  const Units units{config.a, config.m, config.hbar};
  const PhiDerivative method =
      config.phi_derivative == "central" ? PhiDerivative::central : PhiDerivative::spectral;

  {
    double worst = 0.0;
    for (int k = 0; k <= 400; ++k) {
      const double lambda = 0.05 * k;
      const double g2 = std::norm(ComplexGamma::value({0.5, lambda}));
      const double exact = std::numbers::pi / std::cosh(std::numbers::pi * lambda);
      worst = std::max(worst, std::abs(g2 - exact) / exact);
    }
    out.push_back(bound_check(kModule, "gamma_identity", worst, 1e-10,
                              "|Gamma(1/2 + i lambda)|^2 vs pi / cosh(pi lambda), lambda in [0, 20]"));
  }
  {
    const std::array<double, 5> lambdas = {0.0, 0.5, 1.0, 2.0, 3.0};
    const std::array<double, 5> thetas = {0.05, 0.3, 1.0, 2.0, 3.0};
    double worst = 0.0;
    for (double l : lambdas) {
      for (double t : thetas) {
        const double ref = p0_oracle(l, t);
        worst = std::max(worst, std::abs(conical_p0(l, t) - ref) / std::abs(ref));
      }
    }
    out.push_back(bound_check(kModule, "conical_p0_oracle", worst, 1e-10,
                              "5 x 5 (lambda, theta) grid vs tanh-sinh quadrature, relative"));
  }
  {
    double worst = 0.0;
    double worst_negative = 0.0;
    for (double l : {0.5, 1.0, 2.0}) {
      for (double t : {0.5, 1.0, 2.0}) {
        const auto orders = conical_orders(l, 5, t);
        for (int n = 1; n <= 5; ++n) {
          const double direct = conical_pn_direct(l, n, t);
          worst = std::max(worst, std::abs(orders[static_cast<std::size_t>(n)] - direct) /
                                      std::abs(direct));
          const double neg = conical_pn_direct(l, -n, t);
          const double via = (n % 2 ? -1.0 : 1.0) * orders[static_cast<std::size_t>(n)] /
                             order_factor(l, n);
          worst_negative = std::max(worst_negative, std::abs(via - neg) / std::abs(neg));
        }
      }
    }
    out.push_back(bound_check(kModule, "conical_recurrence", worst, 1e-8,
                              "upward recurrence vs order-n integral, n <= 5"));
    out.push_back(bound_check(kModule, "conical_negative_orders", worst_negative, 1e-8,
                              "Gamma-ratio proportionality vs order -n integral"));
  }
  {
    double worst = 0.0;
    for (double l : {0.25, 0.5, 1.0, 2.0, 5.0}) {
      const double ratio = std::abs(normalization(l, 0) / normalization(l, 1));
      worst = std::max(worst, std::abs(ratio - std::sqrt(0.25 + l * l)) / std::sqrt(0.25 + l * l));
      const double n0 = std::abs(normalization(l, 0));
      const double closed = std::sqrt(2.0 * std::numbers::pi / (l * std::tanh(std::numbers::pi * l)));
      worst = std::max(worst, std::abs(n0 - closed) / closed);
    }
    out.push_back(bound_check(kModule, "normalization", worst, 1e-12,
                              "|N0/N1| = |1/2 + i lambda| and N0 closed form"));
  }
  {
    double worst = 0.0;
    for (double l : config.lambdas) {
      worst = std::max(worst, energy(0.0, units) - energy(l, units));
    }
    out.push_back(bound_check(kModule, "energy_lower_bound", worst, 0.0,
                              "E_lambda >= hbar^2 / (8 m a^2)"));
  }

  const double h = config.h;
  {
    auto fine = std::make_shared<const Grid>(GridSpec{config.theta_min, config.theta_max, h, config.n_phi});
    auto coarse =
        std::make_shared<const Grid>(GridSpec{config.theta_min, config.theta_max, 2.0 * h, config.n_phi});
    for (double l : config.lambdas) {
      for (int n : config.orders) {
        const SpectralMode mode{l, n};
        const double r_fine = eigen_residual(fine, mode, units, method);
        const double r_coarse = eigen_residual(coarse, mode, units, method);
        out.push_back(bound_check(kModule, "eigen_residual" + mode_tag(l, n), r_fine, config.tol.eigen,
                                  "||H psi - E psi|| / ||psi|| at h"));
        out.push_back(target_check(kModule, "eigen_order" + mode_tag(l, n),
                                   std::log2(r_coarse / r_fine), 2.0, 0.2,
                                   "log2 residual ratio for 2h and h"));
      }
    }
  }

  {
    const Identities at_h = measure(config, h, true);
    const Identities at_half = measure(config, h / 2.0, true);
    const Identities at_quarter = measure(config, h / 4.0, false);
    auto order = [](double coarse, double fine) { return std::log2(coarse / fine); };
    const double ceiling = 1e-2;

    out.push_back(bound_check(kModule, "jj_closure", at_h.closure, ceiling,
                              "max ||[J^i,J^j] f + i hbar eps^{ijk} J_k f|| / ||f|| at h"));
    out.push_back(target_check(kModule, "jj_closure_order", order(at_h.closure, at_half.closure), 2.0,
                               0.2, "h vs h/2"));
    out.push_back(bound_check(kModule, "casimir_xj", at_h.casimir, 1e-10,
                              "||x^j J_j f|| / (a ||f||) at h"));
    out.push_back(bound_check(kModule, "h_via_j", at_h.h_via_j, ceiling,
                              "||J^i J_i f / (2 m a^2) - H f|| / ||f|| at h"));
    out.push_back(target_check(kModule, "h_via_j_order", order(at_h.h_via_j, at_half.h_via_j), 2.0,
                               0.2, "h vs h/2"));
    out.push_back(bound_check(kModule, "x_p_commutator", at_h.x_p, ceiling,
                              "||[x^1,p_1] f - i hbar (1 + x^1 x_1/a^2) f|| / ||f|| at h"));
    out.push_back(target_check(kModule, "x_p_commutator_order", order(at_h.x_p, at_half.x_p), 2.0,
                               0.2, "h vs h/2"));
    out.push_back(bound_check(kModule, "h_hermiticity", at_h.herm_h, config.tol.hermiticity,
                              "|<f,Hg> - <Hf,g>| / (|f||g|) at h"));
    out.push_back(bound_check(kModule, "j_hermiticity", at_quarter.herm_j, config.tol.hermiticity,
                              "max_i |<f,J^i g> - <J^i f,g>| / (|f||g|) at h/4"));
    out.push_back(target_check(kModule, "j_hermiticity_order", order(at_h.herm_j, at_half.herm_j), 2.0,
                               0.2, "h vs h/2"));
    out.push_back(bound_check(kModule, "p_hermiticity", at_quarter.herm_p, config.tol.hermiticity,
                              "max_i |<f,p_i g> - <p_i f,g>| / (|f||g|) at h/4"));
    out.push_back(target_check(kModule, "p_hermiticity_order", order(at_h.herm_p, at_half.herm_p), 2.0,
                               0.2, "h vs h/2"));
    // Without -i hbar x_i / a^2 the defect stays finite as h shrinks.
    out.push_back(floor_check(kModule, "p_hermiticity_negative_control", at_quarter.herm_p_uncorrected,
                              1e3 * config.tol.hermiticity,
                              "uncorrected p_i must fail hermiticity at h/4"));
  }

  {
    auto grid = std::make_shared<const Grid>(GridSpec{config.theta_min, config.theta_max, h, config.n_phi});
    const GridFunction a0 = sample_mode(grid, {1.0, 0});
    const GridFunction a1 = sample_mode(grid, {1.0, 1});
    const double cross = std::abs(inner_product(a0, a1)) / (norm(a0) * norm(a1));
    out.push_back(bound_check(kModule, "mode_orthogonality", cross, 1e-14,
                              "|<psi^0_1, psi^1_1>| / norms"));
    const cd same = mode_overlap({1.0, 1}, {1.0, 1}, grid);
    out.push_back(bound_check(kModule, "mode_overlap_real_positive",
                              same.real() > 0.0 ? std::abs(same.imag()) / same.real() : 1.0, 1e-14,
                              "|Im| / Re of <psi, psi>, Re = " + std::to_string(same.real())));
    if (method == PhiDerivative::spectral) {
      const GridFunction f = sample(grid, [](double th, double ph) { return bump(th) * std::polar(1.0, 3.0 * ph); });
      const GridFunction j3 = apply_J(3, f, units, method);
      double worst = 0.0;
      for (std::size_t k = 0; k < f.values.size(); ++k) {
        worst = std::max(worst, std::abs(j3.values[k] - 3.0 * config.hbar * f.values[k]));
      }
      out.push_back(bound_check(kModule, "j3_eigenvalue", worst / config.hbar, 1e-12,
                                "max |J^3 f - 3 hbar f| / hbar, f = b(theta) e^{3 i phi}"));
    }
  }
  return out;
}

}  // namespace hyperq::verify

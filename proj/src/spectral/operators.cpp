#include "hyperq/spectral/operators.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace hyperq::spectral {

namespace {

constexpr cd I{0.0, 1.0};

// The FFTW planner is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Multiplies every phi row's Fourier coefficients by factor(k).
template <class Factor>
GridFunction fourier_multiply(const GridFunction& f, Factor factor) {
  const Grid& g = *f.grid;
  const int n = g.n_phi();
  GridFunction out = f;
  auto* data = reinterpret_cast<fftw_complex*>(out.values.data());
  fftw_plan forward;
  fftw_plan backward;
  {
    std::lock_guard lock(planner_mutex());
    forward = fftw_plan_many_dft(1, &n, g.n_theta(), data, nullptr, 1, n, data, nullptr, 1, n,
                                 FFTW_FORWARD, FFTW_ESTIMATE);
    backward = fftw_plan_many_dft(1, &n, g.n_theta(), data, nullptr, 1, n, data, nullptr, 1, n,
                                  FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(forward);
  for (int i = 0; i < g.n_theta(); ++i) {
    for (int j = 0; j < n; ++j) {
      const int k = j <= n / 2 ? j : j - n;
      out(i, j) *= factor(k, n) / static_cast<double>(n);
    }
  }
  fftw_execute(backward);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }
  return out;
}

void check_index(int index) {
  if (index < 1 || index > 3) throw std::out_of_range("operator index must be 1, 2 or 3");
}

}  // namespace

GridFunction d_theta(const GridFunction& f) {
  const Grid& g = *f.grid;
  GridFunction out(f.grid);
  const int last = g.n_theta() - 1;
  const double inv2h = 0.5 / g.h();
  for (int j = 0; j < g.n_phi(); ++j) {
    out(0, j) = (-3.0 * f(0, j) + 4.0 * f(1, j) - f(2, j)) * inv2h;
    out(last, j) = (3.0 * f(last, j) - 4.0 * f(last - 1, j) + f(last - 2, j)) * inv2h;
  }
  for (int i = 1; i < last; ++i) {
    for (int j = 0; j < g.n_phi(); ++j) out(i, j) = (f(i + 1, j) - f(i - 1, j)) * inv2h;
  }
  return out;
}

GridFunction d_phi(const GridFunction& f, PhiDerivative method) {
  const Grid& g = *f.grid;
  if (method == PhiDerivative::spectral) {
    return fourier_multiply(f, [](int k, int n) -> cd {
      return (2 * k == n) ? cd(0.0) : I * static_cast<double>(k);
    });
  }
  GridFunction out(f.grid);
  const int n = g.n_phi();
  const double inv = 0.5 / g.dphi();
  for (int i = 0; i < g.n_theta(); ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = (f(i, (j + 1) % n) - f(i, (j + n - 1) % n)) * inv;
  }
  return out;
}

GridFunction d_phi2(const GridFunction& f, PhiDerivative method) {
  const Grid& g = *f.grid;
  if (method == PhiDerivative::spectral) {
    return fourier_multiply(f, [](int k, int) -> cd { return -static_cast<double>(k) * k; });
  }
  GridFunction out(f.grid);
  const int n = g.n_phi();
  const double inv = 1.0 / (g.dphi() * g.dphi());
  for (int i = 0; i < g.n_theta(); ++i) {
    for (int j = 0; j < n; ++j) {
      out(i, j) = (f(i, (j + 1) % n) - 2.0 * f(i, j) + f(i, (j + n - 1) % n)) * inv;
    }
  }
  return out;
}

GridFunction laplace_beltrami(const GridFunction& f, const Units& units, PhiDerivative method) {
  const Grid& g = *f.grid;
  const GridFunction fpp = d_phi2(f, method);
  GridFunction out(f.grid);
  const double h = g.h();
  const double pref = -units.hbar * units.hbar / (2.0 * units.m * units.a * units.a);
  const int n = g.n_theta();
  for (int i = 0; i < n; ++i) {
    const double th = g.theta(i);
    const double s_up = std::sinh(th + 0.5 * h);
    const double s_dn = std::sinh(th - 0.5 * h);
    const double s = g.sinh_theta(i);
    for (int j = 0; j < g.n_phi(); ++j) {
      const cd up = i + 1 < n ? f(i + 1, j) : cd(0.0);
      const cd dn = i > 0 ? f(i - 1, j) : cd(0.0);
      const cd radial = (s_up * (up - f(i, j)) - s_dn * (f(i, j) - dn)) / (s * h * h);
      out(i, j) = pref * (radial + fpp(i, j) / (s * s));
    }
  }
  return out;
}

GridFunction apply_J(int index, const GridFunction& f, const Units& units, PhiDerivative method) {
  check_index(index);
  const Grid& g = *f.grid;
  const cd c = -I * units.hbar;
  const GridFunction fp = d_phi(f, method);
  if (index == 3) return fp * c;
  const GridFunction ft = d_theta(f);
  GridFunction out(f.grid);
  for (int i = 0; i < g.n_theta(); ++i) {
    const double coth = g.coth_theta(i);
    for (int j = 0; j < g.n_phi(); ++j) {
      const double sp = std::sin(g.phi(j));
      const double cp = std::cos(g.phi(j));
      out(i, j) = index == 1 ? c * (sp * ft(i, j) + cp * coth * fp(i, j))
                             : c * (-cp * ft(i, j) + sp * coth * fp(i, j));
    }
  }
  return out;
}

GridFunction apply_J_lower(int index, const GridFunction& f, const Units& units,
                           PhiDerivative method) {
  GridFunction out = apply_J(index, f, units, method);
  if (index == 3) out *= -1.0;
  return out;
}

GridFunction apply_x(int index, const GridFunction& f, double a) {
  check_index(index);
  const Grid& g = *f.grid;
  GridFunction out(f.grid);
  for (int i = 0; i < g.n_theta(); ++i) {
    const double th = g.theta(i);
    for (int j = 0; j < g.n_phi(); ++j) {
      const double x = index == 1   ? a * std::cos(g.phi(j)) * std::sinh(th)
                       : index == 2 ? a * std::sin(g.phi(j)) * std::sinh(th)
                                    : a * std::cosh(th);
      out(i, j) = x * f(i, j);
    }
  }
  return out;
}

GridFunction apply_x_lower(int index, const GridFunction& f, double a) {
  GridFunction out = apply_x(index, f, a);
  if (index == 3) out *= -1.0;
  return out;
}

GridFunction apply_p(int index, const GridFunction& f, const Units& units,
                     bool hermitian_correction, PhiDerivative method) {
  check_index(index);
  // eps_{ijk} with eps_{123} = 1: the two nonzero (j, k) for this i.
  const int j = index % 3 + 1;
  const int k = (index + 1) % 3 + 1;
  const double inv_a2 = 1.0 / (units.a * units.a);
  GridFunction out = apply_x(j, apply_J(k, f, units, method), units.a) -
                     apply_x(k, apply_J(j, f, units, method), units.a);
  out *= inv_a2;
  if (hermitian_correction) {
    out -= apply_x_lower(index, f, units.a) * (I * units.hbar * inv_a2);
  }
  return out;
}

GridFunction hamiltonian_from_j(const GridFunction& f, const Units& units,
                                PhiDerivative method) {
  GridFunction out(f.grid);
  for (int i = 1; i <= 3; ++i) {
    out += apply_J(i, apply_J_lower(i, f, units, method), units, method);
  }
  out *= 1.0 / (2.0 * units.m * units.a * units.a);
  return out;
}

double eigen_residual(const GridFunction& psi, double energy_value, const Units& units,
                      PhiDerivative method) {
  GridFunction r = laplace_beltrami(psi, units, method);
  r -= psi * energy_value;
  return norm(r, Rows::interior) / norm(psi, Rows::interior);
}

double eigen_residual(std::shared_ptr<const Grid> grid, const SpectralMode& mode,
                      const Units& units, PhiDerivative method) {
  const GridFunction psi = sample_mode(std::move(grid), mode, false);
  return eigen_residual(psi, energy(mode.lambda, units), units, method);
}

cd mode_overlap(const SpectralMode& m1, const SpectralMode& m2, std::shared_ptr<const Grid> grid) {
  return inner_product(sample_mode(grid, m1), sample_mode(grid, m2));
}

}  // namespace hyperq::spectral

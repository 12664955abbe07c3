#include "hyperq/spectral/conical.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "hyperq/spectral/complex_gamma.hpp"

namespace hyperq::spectral {

namespace {

constexpr double kSeriesCutoff = 0.1;
constexpr double kConventionTolerance = 1e-8;
// Below this P^n is the recessive solution of the upward recurrence and
// orders >= 2 are taken from the integral instead.
constexpr double kRecurrenceFloor = 1.5;

// F(1/2 - i lambda, 1/2 + i lambda; n + 1; -s), s = sinh^2(theta/2) < 1.
double hypergeometric_series(double lambda, int n, double s) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double j = k + 0.5;
    term *= -(lambda * lambda + j * j) * s / ((k + 1.0) * (n + k + 1.0));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double mehler_integral(double lambda, int n, double theta) {
  using boost::math::quadrature::gauss;
  const double top = std::sqrt(theta);
  const double ex = n - 0.5;
  auto integrand = [&](double v) {
    const double v2 = v * v;
    const double base = 2.0 * std::sinh(theta - 0.5 * v2) * std::sinh(0.5 * v2);
    if (base <= 0.0) return n == 0 ? 2.0 / std::sqrt(std::sinh(theta)) * std::cos(lambda * theta)
                                   : 0.0;
    return 2.0 * v * std::cos(lambda * (theta - v2)) * std::pow(base, ex);
  };
  // Panels sized to the oscillation and to the growth of the integrand.
  const int panels =
      std::clamp(static_cast<int>(std::ceil((lambda * theta + theta) / 2.0)) + 1, 2, 200);
  double sum = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double lo = top * k / panels;
    const double hi = top * (k + 1) / panels;
    sum += gauss<double, 30>::integrate(integrand, lo, hi);
  }
  return sum;
}

std::once_flag validation_flag;
double validation_deviation = 0.0;

}  // namespace

double order_factor(double lambda, int n) {
  double out = 1.0;
  for (int j = 0; j < n; ++j) out *= lambda * lambda + (j + 0.5) * (j + 0.5);
  return out;
}

double conical_p_minus(double lambda, int n, double theta) {
  if (n < 0) throw std::invalid_argument("conical_p_minus expects n >= 0");
  if (theta < 0.0) throw std::domain_error("theta must be non-negative");
  if (theta == 0.0) return n == 0 ? 1.0 : 0.0;
  if (theta < kSeriesCutoff) {
    const double sh = std::sinh(0.5 * theta);
    double lead = 1.0;
    for (int k = 1; k <= n; ++k) lead *= std::tanh(0.5 * theta) / k;
    return lead * hypergeometric_series(lambda, n, sh * sh);
  }
  const double pref = std::sqrt(2.0 / std::numbers::pi) / std::tgamma(n + 0.5) *
                      std::pow(std::sinh(theta), -n);
  return pref * mehler_integral(lambda, n, theta);
}

double conical_p0(double lambda, double theta) { return conical_p_minus(lambda, 0, theta); }

double conical_pn_direct(double lambda, int n, double theta) {
  if (n <= 0) return conical_p_minus(lambda, -n, theta);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * order_factor(lambda, n) * conical_p_minus(lambda, n, theta);
}

std::vector<double> conical_orders(double lambda, int n_max, double theta) {
  if (n_max < 0 || n_max > kMaxOrder) throw std::out_of_range("order outside [0, kMaxOrder]");
  std::vector<double> p(static_cast<std::size_t>(n_max) + 1);
  p[0] = conical_p0(lambda, theta);
  if (n_max == 0) return p;
  p[1] = -order_factor(lambda, 1) * conical_p_minus(lambda, 1, theta);
  if (theta == 0.0) return p;
  const double coth = 1.0 / std::tanh(theta);
  for (int n = 0; n + 2 <= n_max; ++n) {
    const auto k = static_cast<std::size_t>(n);
    p[k + 2] = -2.0 * (n + 1) * coth * p[k + 1] - (lambda * lambda + (n + 0.5) * (n + 0.5)) * p[k];
  }
  return p;
}

double validate_conical_conventions() {
  double worst = 0.0;
  for (double lambda : {0.5, 1.0, 2.0}) {
    for (double theta : {0.5, 1.0, 2.0}) {
      const auto rec = conical_orders(lambda, 5, theta);
      for (int n = 1; n <= 5; ++n) {
        const double up = rec[static_cast<std::size_t>(n)];
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        const double down = sign * up / order_factor(lambda, n);
        const double ref_up = conical_pn_direct(lambda, n, theta);
        const double ref_down = conical_pn_direct(lambda, -n, theta);
        worst = std::max(worst, std::abs(up - ref_up) / std::abs(ref_up));
        worst = std::max(worst, std::abs(down - ref_down) / std::abs(ref_down));
      }
    }
  }
  return worst;
}

double conical_pn(double lambda, int n, double theta) {
  if (std::abs(n) > kMaxOrder) throw std::out_of_range("|n| exceeds kMaxOrder");
  std::call_once(validation_flag, [] { validation_deviation = validate_conical_conventions(); });
  if (!(validation_deviation <= kConventionTolerance)) {
    throw ConventionError("recurrence disagrees with the integral representation (deviation " +
                          std::to_string(validation_deviation) + ")");
  }
  const int order = std::abs(n);
  const double value = (order >= 2 && theta < kRecurrenceFloor)
                           ? conical_pn_direct(lambda, order, theta)
                           : conical_orders(lambda, order, theta).back();
  if (n >= 0) return value;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * value / order_factor(lambda, -n);
}

std::complex<double> normalization(double lambda, int n) {
  if (!(lambda > 0.0)) throw std::domain_error("normalization diverges at lambda = 0");
  const double pi = std::numbers::pi;
  const double scale = std::sqrt(2.0 * pi / (lambda * std::tanh(pi * lambda)));
  const std::complex<double> z(0.5, lambda);
  const auto ratio = std::exp(ComplexGamma::log(z) - ComplexGamma::log(z + static_cast<double>(n)));
  return scale * ratio;
}

double energy(double lambda, const Units& units) {
  return units.hbar * units.hbar / (2.0 * units.m * units.a * units.a) * (lambda * lambda + 0.25);
}

}  // namespace hyperq::spectral

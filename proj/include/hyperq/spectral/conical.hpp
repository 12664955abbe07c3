#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace hyperq::spectral {

// Orders are Hobson's (no Condon-Shortley phase): P^1 = dP^0/dtheta and
// P^n = (-1)^n prod_{j<n} (lambda^2 + (j+1/2)^2) P^{-n}.
inline constexpr int kMaxOrder = 12;

class ConventionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// P_{-1/2 + i lambda}(cosh theta).
double conical_p0(double lambda, double theta);

// P^{-n}_{-1/2 + i lambda}(cosh theta), n >= 0, from the Mehler-type integral
//   sqrt(2/pi) sinh^{-n}(theta) / Gamma(n + 1/2)
//     * int_0^theta (cosh theta - cosh t)^{n - 1/2} cos(lambda t) dt
// with t = theta - v^2, or the hypergeometric series below theta = 0.1.
double conical_p_minus(double lambda, int n, double theta);

// prod_{j<n} (lambda^2 + (j+1/2)^2)
double order_factor(double lambda, int n);

// P^n from the upward recurrence
//   P^{n+2} = -2 (n+1) coth(theta) P^{n+1} - (lambda^2 + (n+1/2)^2) P^n
// seeded with P^0 and P^1 = -(lambda^2 + 1/4) P^{-1}, used for theta >= 1.5;
// closer to the apex orders >= 2 come from the integral. Negative n uses
// P^{-n} = (-1)^n P^n / order_factor. Throws ConventionError if the
// one-time cross-check against the integral fails.
double conical_pn(double lambda, int n, double theta);

// P^0 .. P^{n_max} at one point by the recurrence.
std::vector<double> conical_orders(double lambda, int n_max, double theta);

// P^n straight from the integral (n of either sign).
double conical_pn_direct(double lambda, int n, double theta);

// Compares recurrence and integral for n = -5..5 on a fixed (lambda, theta)
// set; returns the largest relative deviation. Run once by conical_pn.
double validate_conical_conventions();

// (2 pi / (lambda tanh(pi lambda)))^{1/2} Gamma(i lambda + 1/2) / Gamma(i lambda + n + 1/2).
// Throws std::domain_error at lambda = 0.
std::complex<double> normalization(double lambda, int n);

struct Units {
  double a = 1.0;
  double m = 1.0;
  double hbar = 1.0;
};

// hbar^2 / (2 m a^2) (lambda^2 + 1/4)
double energy(double lambda, const Units& units);

}  // namespace hyperq::spectral

#include "hyperq/spectral/complex_gamma.hpp"

#include <cmath>
#include <numbers>

namespace hyperq::spectral {

using cd = std::complex<double>;

cd ComplexGamma::log(cd z) {
  constexpr double pi = std::numbers::pi;
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
    return std::log(pi) - std::log(std::sin(pi * z)) - log(1.0 - z);
  }
  z -= 1.0;
  cd series = coefficients[0];
  for (std::size_t k = 1; k < coefficients.size(); ++k) {
    series += coefficients[k] / (z + static_cast<double>(k));
  }
  const cd t = z + g + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

cd ComplexGamma::value(cd z) { return std::exp(log(z)); }

}  // namespace hyperq::spectral

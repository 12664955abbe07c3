#pragma once

#include <array>
#include <complex>

namespace hyperq::spectral {

// Lanczos approximation, g = 7 with nine coefficients.
class ComplexGamma {
 public:
  static constexpr double g = 7.0;
  static constexpr std::array<double, 9> coefficients = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

  // Principal branch is not tracked; the imaginary part is correct modulo 2 pi.
  static std::complex<double> log(std::complex<double> z);
  static std::complex<double> value(std::complex<double> z);

  std::complex<double> operator()(std::complex<double> z) const { return value(z); }
};

}  // namespace hyperq::spectral

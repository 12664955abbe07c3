#pragma once

#include "hyperq/spectral/grid.hpp"

namespace hyperq::spectral {

// Second-order central differences, one-sided second order on the end rows.
GridFunction d_theta(const GridFunction& f);
// Fourier differentiation (Nyquist mode dropped) or periodic central differences.
GridFunction d_phi(const GridFunction& f, PhiDerivative method = PhiDerivative::spectral);
GridFunction d_phi2(const GridFunction& f, PhiDerivative method = PhiDerivative::spectral);

// -hbar^2/(2 m a^2) [ (1/sinh) d_theta sinh d_theta + (1/sinh^2) d_phi^2 ],
// conservative theta stencil with zero values outside the grid.
GridFunction laplace_beltrami(const GridFunction& f, const Units& units,
                              PhiDerivative method = PhiDerivative::spectral);

// J^i = i hbar eps^{ikl} x_k d_l = -i hbar K_(i):
//   J^1 = -i hbar (sin phi d_theta + cos phi coth d_phi)
//   J^2 = -i hbar (-cos phi d_theta + sin phi coth d_phi)
//   J^3 = -i hbar d_phi
// index 1, 2 or 3.
GridFunction apply_J(int index, const GridFunction& f, const Units& units,
                     PhiDerivative method = PhiDerivative::spectral);
// J_i = g_{ij} J^j
GridFunction apply_J_lower(int index, const GridFunction& f, const Units& units,
                           PhiDerivative method = PhiDerivative::spectral);

// Multiplication by the embedding coordinate x^i (or x_i).
GridFunction apply_x(int index, const GridFunction& f, double a);
GridFunction apply_x_lower(int index, const GridFunction& f, double a);

// p_i f = (1/a^2) eps_{ijk} x^j (J^k f) - (i hbar / a^2) x_i f; the last term
// is left out when hermitian_correction is false.
GridFunction apply_p(int index, const GridFunction& f, const Units& units,
                     bool hermitian_correction = true,
                     PhiDerivative method = PhiDerivative::spectral);

// J^i J_i / (2 m a^2)
GridFunction hamiltonian_from_j(const GridFunction& f, const Units& units,
                                PhiDerivative method = PhiDerivative::spectral);

// ||H psi - E psi|| / ||psi|| over interior rows.
double eigen_residual(const GridFunction& psi, double energy_value, const Units& units,
                      PhiDerivative method = PhiDerivative::spectral);
double eigen_residual(std::shared_ptr<const Grid> grid, const SpectralMode& mode,
                      const Units& units, PhiDerivative method = PhiDerivative::spectral);

// <psi_1, psi_2> on the grid (normalized modes when lambda > 0).
cd mode_overlap(const SpectralMode& m1, const SpectralMode& m2, std::shared_ptr<const Grid> grid);

}  // namespace hyperq::spectral

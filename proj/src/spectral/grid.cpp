#include "hyperq/spectral/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperq::spectral {

Grid::Grid(const GridSpec& spec) : n_phi_(spec.n_phi), h_(spec.h) {
  if (!(spec.theta_min > 0.0)) throw std::invalid_argument("theta_min must be positive");
  if (!(spec.theta_max > spec.theta_min)) throw std::invalid_argument("theta_max <= theta_min");
  if (!(spec.h > 0.0)) throw std::invalid_argument("grid step must be positive");
  if (spec.n_phi < 4) throw std::invalid_argument("n_phi must be at least 4");
  // Small slack so that e.g. [0.1, 3] with h = 1e-3 keeps its end row.
  n_theta_ = static_cast<int>(std::floor((spec.theta_max - spec.theta_min) / spec.h + 1e-9)) + 1;
  if (n_theta_ < 3) throw std::invalid_argument("grid needs at least three theta rows");
  dphi_ = 2.0 * std::numbers::pi / n_phi_;
  theta_.resize(static_cast<std::size_t>(n_theta_));
  sinh_.resize(theta_.size());
  coth_.resize(theta_.size());
  for (int i = 0; i < n_theta_; ++i) {
    const auto k = static_cast<std::size_t>(i);
    theta_[k] = spec.theta_min + i * spec.h;
    sinh_[k] = std::sinh(theta_[k]);
    coth_[k] = 1.0 / std::tanh(theta_[k]);
  }
}

GridFunction& GridFunction::operator+=(const GridFunction& o) {
  for (std::size_t k = 0; k < values.size(); ++k) values[k] += o.values[k];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& o) {
  for (std::size_t k = 0; k < values.size(); ++k) values[k] -= o.values[k];
  return *this;
}

GridFunction& GridFunction::operator*=(cd s) {
  for (auto& v : values) v *= s;
  return *this;
}

GridFunction sample(std::shared_ptr<const Grid> grid,
                    const std::function<cd(double, double)>& fn) {
  GridFunction f(std::move(grid));
  const Grid& g = *f.grid;
  for (int i = 0; i < g.n_theta(); ++i) {
    for (int j = 0; j < g.n_phi(); ++j) f(i, j) = fn(g.theta(i), g.phi(j));
  }
  return f;
}

cd inner_product(const GridFunction& f, const GridFunction& g, Rows rows) {
  const Grid& grid = *f.grid;
  const int first = rows == Rows::interior ? 1 : 0;
  const int last = rows == Rows::interior ? grid.n_theta() - 1 : grid.n_theta();
  cd sum = 0.0;
  for (int i = first; i < last; ++i) {
    cd row = 0.0;
    for (int j = 0; j < grid.n_phi(); ++j) row += std::conj(f(i, j)) * g(i, j);
    sum += row * grid.sinh_theta(i);
  }
  return sum * grid.h() * grid.dphi();
}

double norm(const GridFunction& f, Rows rows) {
  return std::sqrt(std::max(0.0, inner_product(f, f, rows).real()));
}

GridFunction sample_mode(std::shared_ptr<const Grid> grid, const SpectralMode& mode,
                         bool normalized) {
  const cd scale = (normalized && mode.lambda > 0.0) ? normalization(mode.lambda, mode.n) : 1.0;
  GridFunction f(std::move(grid));
  const Grid& g = *f.grid;
  std::vector<cd> phase(static_cast<std::size_t>(g.n_phi()));
  for (int j = 0; j < g.n_phi(); ++j) {
    phase[static_cast<std::size_t>(j)] = std::polar(1.0, mode.n * g.phi(j));
  }
  for (int i = 0; i < g.n_theta(); ++i) {
    const cd radial = scale * conical_pn(mode.lambda, mode.n, g.theta(i));
    for (int j = 0; j < g.n_phi(); ++j) f(i, j) = radial * phase[static_cast<std::size_t>(j)];
  }
  return f;
}

}  // namespace hyperq::spectral

#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "hyperq/spectral/conical.hpp"

namespace hyperq::spectral {

using cd = std::complex<double>;

struct GridSpec {
  double theta_min = 0.1;
  double theta_max = 3.0;
  double h = 1e-3;
  int n_phi = 16;
};

enum class PhiDerivative { spectral, central };

// Uniform theta rows (theta_min + i h) times uniform periodic phi columns.
class Grid {
 public:
  // Throws std::invalid_argument unless 0 < theta_min < theta_max, h > 0 and
  // n_phi >= 4. The last row is the largest theta_min + i h <= theta_max.
  explicit Grid(const GridSpec& spec);

  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }
  double h() const { return h_; }
  double dphi() const { return dphi_; }
  double theta(int i) const { return theta_[static_cast<std::size_t>(i)]; }
  double phi(int j) const { return j * dphi_; }
  double sinh_theta(int i) const { return sinh_[static_cast<std::size_t>(i)]; }
  double coth_theta(int i) const { return coth_[static_cast<std::size_t>(i)]; }
  std::size_t size() const { return static_cast<std::size_t>(n_theta_) * n_phi_; }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_phi_) +
           static_cast<std::size_t>(j);
  }

 private:
  int n_theta_;
  int n_phi_;
  double h_;
  double dphi_;
  std::vector<double> theta_;
  std::vector<double> sinh_;
  std::vector<double> coth_;
};

struct GridFunction {
  std::shared_ptr<const Grid> grid;
  std::vector<cd> values;

  explicit GridFunction(std::shared_ptr<const Grid> g)
      : grid(std::move(g)), values(grid->size()) {}

  cd& operator()(int i, int j) { return values[grid->index(i, j)]; }
  const cd& operator()(int i, int j) const { return values[grid->index(i, j)]; }

  GridFunction& operator+=(const GridFunction& o);
  GridFunction& operator-=(const GridFunction& o);
  GridFunction& operator*=(cd s);
  friend GridFunction operator+(GridFunction l, const GridFunction& r) { return l += r; }
  friend GridFunction operator-(GridFunction l, const GridFunction& r) { return l -= r; }
  friend GridFunction operator*(GridFunction f, cd s) { return f *= s; }
  friend GridFunction operator*(cd s, GridFunction f) { return f *= s; }
};

GridFunction sample(std::shared_ptr<const Grid> grid,
                    const std::function<cd(double theta, double phi)>& fn);

// Rows taken into a sum: every row, or all but the first and last.
enum class Rows { all, interior };

// sum conj(f) g sinh(theta) h dphi
cd inner_product(const GridFunction& f, const GridFunction& g, Rows rows = Rows::all);
double norm(const GridFunction& f, Rows rows = Rows::all);

struct SpectralMode {
  double lambda = 1.0;
  int n = 0;
};

// N e^{i n phi} P^n(cosh theta). With normalized == false, or at lambda = 0,
// N is replaced by 1.
GridFunction sample_mode(std::shared_ptr<const Grid> grid, const SpectralMode& mode,
                         bool normalized = true);

}  // namespace hyperq::spectral

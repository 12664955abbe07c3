#pragma once

#include <array>
#include <stdexcept>

namespace hyperq::geometry {

// Vector in R^{1,2} with metric diag(1, 1, -1); components carry upper indices.
template <class T>
struct BasicMinkVec {
  std::array<T, 3> c{};

  T& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const T& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  BasicMinkVec lowered() const { return {{c[0], c[1], -c[2]}}; }

  BasicMinkVec& operator+=(const BasicMinkVec& o) {
    for (std::size_t i = 0; i < 3; ++i) c[i] += o.c[i];
    return *this;
  }
  BasicMinkVec& operator-=(const BasicMinkVec& o) {
    for (std::size_t i = 0; i < 3; ++i) c[i] -= o.c[i];
    return *this;
  }
  BasicMinkVec& operator*=(T s) {
    for (auto& v : c) v *= s;
    return *this;
  }
  friend BasicMinkVec operator+(BasicMinkVec l, const BasicMinkVec& r) { return l += r; }
  friend BasicMinkVec operator-(BasicMinkVec l, const BasicMinkVec& r) { return l -= r; }
  friend BasicMinkVec operator*(BasicMinkVec v, T s) { return v *= s; }
  friend BasicMinkVec operator*(T s, BasicMinkVec v) { return v *= s; }
  friend bool operator==(const BasicMinkVec&, const BasicMinkVec&) = default;
};

using MinkVec = BasicMinkVec<double>;

// u^1 v^1 + u^2 v^2 - u^3 v^3
template <class T>
T inner(const BasicMinkVec<T>& u, const BasicMinkVec<T>& v) {
  return u[0] * v[0] + u[1] * v[1] - u[2] * v[2];
}

// epsilon_{ijk} with epsilon_{123} = 1 (0-based indices); upper = -lower.
int levi_civita_lower(int i, int j, int k);
int levi_civita_upper(int i, int j, int k);

// Chart (theta, phi) on the z > 0 sheet of x.x = -a^2.
struct ChartPoint {
  double theta = 0.0;
  double phi = 0.0;
};

// Chart-component tangent vector (d_theta, d_phi).
struct TangentVec {
  double theta = 0.0;
  double phi = 0.0;
};

class ChartError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// (a cos(phi) sinh(theta), a sin(phi) sinh(theta), a cosh(theta))
MinkVec embed(ChartPoint p, double a);

// Inverse of embed. phi is reported in [0, 2 pi); at the apex phi = 0.
// Throws ChartError off the surface (tolerance relative to a^2) or on z < 0.
ChartPoint chart_inverse(const MinkVec& v, double a, double tol = 1e-9);

// Partial derivatives of the embedding: d x / d theta, d x / d phi.
std::array<MinkVec, 2> embedding_jacobian(ChartPoint p, double a);
MinkVec pushforward(ChartPoint p, TangentVec t, double a);

// Induced metric a^2 d theta^2 + a^2 sinh^2(theta) d phi^2, index 0 = theta.
using Metric2 = std::array<std::array<double, 2>, 2>;
Metric2 induced_metric(ChartPoint p, double a);

// gamma[i][j][k] = Gamma^i_{jk}, index 0 = theta, 1 = phi.
using Christoffel = std::array<std::array<std::array<double, 2>, 2>, 2>;

// Closed form: Gamma^theta_{phi phi} = -sinh cosh, Gamma^phi_{theta phi} = coth.
// Throws ChartError at theta = 0.
Christoffel christoffel(ChartPoint p);

// Same symbols from central differences of the induced metric.
Christoffel christoffel_finite_difference(ChartPoint p, double a, double h);

// K_(1) = (sin phi, cos phi coth theta), K_(2) = (-cos phi, sin phi coth theta),
// K_(3) = (0, 1). index is 1, 2 or 3. K_(1), K_(2) throw at theta = 0.
TangentVec killing_field(int index, ChartPoint p);
std::array<TangentVec, 3> killing_fields(ChartPoint p);

// Largest |L_K g|_{ij} = |K^k d_k g_ij + g_kj d_i K^k + g_ik d_j K^k| using
// central differences of step h.
double killing_equation_residual(int index, ChartPoint p, double a, double h);

// eps^{ikl} x_k d_l evaluated at an embedded point (index 0-based i).
MinkVec rotation_generator(int i, const MinkVec& x);

// Ricci scalar of the induced metric at p from the closed-form Christoffel
// symbols and their central-difference derivatives.
double scalar_curvature(double a, ChartPoint at = {1.0, 0.0}, double h = 1e-5);

}  // namespace hyperq::geometry

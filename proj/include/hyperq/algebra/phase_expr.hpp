#pragma once

#include <array>
#include <string>

#include "hyperq/algebra/polynomial.hpp"

namespace hyperq::algebra {

// Exact rational function over the canonical variables and the parameters
// (a, m). Always kept in normal form: numerator and denominator coprime, the
// denominator monic in storage order, and the zero expression stored as 0/1.
class PhaseExpr {
 public:
  PhaseExpr() : den_(1) {}
  PhaseExpr(const Polynomial& num);  // NOLINT(google-explicit-constructor)
  PhaseExpr(const Rational& c) : PhaseExpr(Polynomial(c)) {}  // NOLINT
  PhaseExpr(long c) : PhaseExpr(Polynomial(c)) {}  // NOLINT
  PhaseExpr(int c) : PhaseExpr(Polynomial(c)) {}   // NOLINT
  PhaseExpr(Polynomial num, Polynomial den);

  static PhaseExpr variable(Var v) { return PhaseExpr(Polynomial::variable(v)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  PhaseExpr derivative(Var v) const;
  PhaseExpr pow(int k) const;
  PhaseExpr reciprocal() const;

  double evaluate(const std::array<double, kNumVars>& point) const;

  PhaseExpr operator-() const { return PhaseExpr(-num_, den_, kNormalized); }
  PhaseExpr& operator+=(const PhaseExpr& rhs);
  PhaseExpr& operator-=(const PhaseExpr& rhs);
  PhaseExpr& operator*=(const PhaseExpr& rhs);
  PhaseExpr& operator/=(const PhaseExpr& rhs);

  friend PhaseExpr operator+(PhaseExpr lhs, const PhaseExpr& rhs) { return lhs += rhs; }
  friend PhaseExpr operator-(PhaseExpr lhs, const PhaseExpr& rhs) { return lhs -= rhs; }
  friend PhaseExpr operator*(PhaseExpr lhs, const PhaseExpr& rhs) { return lhs *= rhs; }
  friend PhaseExpr operator/(PhaseExpr lhs, const PhaseExpr& rhs) { return lhs /= rhs; }

  friend bool operator==(const PhaseExpr& lhs, const PhaseExpr& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }

  // Canonical text form; parse(to_string()) reproduces the same value.
  std::string to_string() const;

 private:
  struct NormalizedTag {};
  static constexpr NormalizedTag kNormalized{};
  PhaseExpr(Polynomial num, Polynomial den, NormalizedTag)
      : num_(std::move(num)), den_(std::move(den)) {}

  void normalize();

  Polynomial num_;
  Polynomial den_;
};

// Convenience constructors for the canonical symbols.
namespace sym {
inline PhaseExpr lambda() { return PhaseExpr::variable(Var::lambda); }
inline PhaseExpr x() { return PhaseExpr::variable(Var::x); }
inline PhaseExpr y() { return PhaseExpr::variable(Var::y); }
inline PhaseExpr z() { return PhaseExpr::variable(Var::z); }
inline PhaseExpr p_lambda() { return PhaseExpr::variable(Var::p_lambda); }
inline PhaseExpr p_x() { return PhaseExpr::variable(Var::p_x); }
inline PhaseExpr p_y() { return PhaseExpr::variable(Var::p_y); }
inline PhaseExpr p_z() { return PhaseExpr::variable(Var::p_z); }
inline PhaseExpr a() { return PhaseExpr::variable(Var::a); }
inline PhaseExpr m() { return PhaseExpr::variable(Var::m); }
}  // namespace sym

}  // namespace hyperq::algebra

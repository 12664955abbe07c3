#include "hyperq/algebra/phase_expr.hpp"

#include <sstream>
#include <stdexcept>

namespace hyperq::algebra {

PhaseExpr::PhaseExpr(const Polynomial& num) : num_(num), den_(1) {}

PhaseExpr::PhaseExpr(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("division by zero expression");
  normalize();
}

void PhaseExpr::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      auto n = exact_divide(num_, g);
      auto d = exact_divide(den_, g);
      if (!n || !d) throw std::logic_error("gcd does not divide operands");
      num_ = std::move(*n);
      den_ = std::move(*d);
    }
  }
  const Rational scale = 1 / den_.leading_coefficient();
  if (scale != 1) {
    num_ *= scale;
    den_ *= scale;
  }
}

PhaseExpr& PhaseExpr::operator+=(const PhaseExpr& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

PhaseExpr& PhaseExpr::operator-=(const PhaseExpr& rhs) { return *this += -rhs; }

PhaseExpr& PhaseExpr::operator*=(const PhaseExpr& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = PhaseExpr();
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

PhaseExpr PhaseExpr::reciprocal() const {
  if (is_zero()) throw std::domain_error("division by zero expression");
  return PhaseExpr(den_, num_);
}

PhaseExpr& PhaseExpr::operator/=(const PhaseExpr& rhs) {
  return *this *= rhs.reciprocal();
}

PhaseExpr PhaseExpr::derivative(Var v) const {
  if (den_.is_constant()) return PhaseExpr(num_.derivative(v), den_);
  return PhaseExpr(num_.derivative(v) * den_ - num_ * den_.derivative(v),
                   den_ * den_);
}

PhaseExpr PhaseExpr::pow(int k) const {
  if (k < 0) return reciprocal().pow(-k);
  return PhaseExpr(num_.pow(static_cast<unsigned>(k)),
                   den_.pow(static_cast<unsigned>(k)));
}

double PhaseExpr::evaluate(const std::array<double, kNumVars>& point) const {
  return num_.evaluate(point) / den_.evaluate(point);
}

std::string PhaseExpr::to_string() const {
  if (den_ == Polynomial(1)) return num_.to_string();
  if (!den_.is_monomial()) {
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }
  // Monomial denominator: print term by term with the denominator distributed.
  const Monomial& dmono = den_.leading_monomial();
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [mono, c] : num_.terms()) {
    const Rational mag = abs(c);
    if (first_term) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first_term = false;
    Monomial up;
    Monomial down;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (mono.exp[i] >= dmono.exp[i]) {
        up.exp[i] = static_cast<std::uint16_t>(mono.exp[i] - dmono.exp[i]);
      } else {
        down.exp[i] = static_cast<std::uint16_t>(dmono.exp[i] - mono.exp[i]);
      }
    }
    bool first_factor = true;
    if (up.is_one() || mag != 1) {
      os << format_rational(mag);
      first_factor = false;
    }
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (up.exp[i] == 0) continue;
      if (!first_factor) os << '*';
      first_factor = false;
      os << kVarNames[i];
      if (up.exp[i] > 1) os << '^' << up.exp[i];
    }
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (down.exp[i] == 0) continue;
      os << '/' << kVarNames[i];
      if (down.exp[i] > 1) os << '^' << down.exp[i];
    }
  }
  return os.str();
}

}  // namespace hyperq::algebra

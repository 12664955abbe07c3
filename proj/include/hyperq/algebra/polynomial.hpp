#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperq/algebra/variables.hpp"

namespace hyperq::algebra {

using Rational = mpq_class;

struct Monomial {
  std::array<std::uint16_t, kNumVars> exp{};

  static Monomial of(Var v, std::uint16_t power = 1) {
    Monomial mono;
    mono.exp[index(v)] = power;
    return mono;
  }

  std::uint16_t operator[](Var v) const { return exp[index(v)]; }
  unsigned total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  // Part of the monomial in the canonical variables only (parameters zeroed).
  Monomial canonical_part() const;
  Monomial parameter_part() const;

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
  // Caller guarantees rhs.divides(lhs).
  friend Monomial operator/(const Monomial& lhs, const Monomial& rhs);
  friend Monomial gcd(const Monomial& lhs, const Monomial& rhs);

  auto operator<=>(const Monomial&) const = default;
};

// Lexicographic comparison of canonical exponents along kEliminationOrder.
std::strong_ordering elimination_compare(const Monomial& lhs,
                                         const Monomial& rhs);

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// stored in descending lexicographic order of the Var enumeration; zero
// coefficients are never stored, so structural equality is mathematical
// equality.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, std::greater<>>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT

  static Polynomial variable(Var v);
  static Polynomial monomial(const Monomial& mono, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Leading term in storage order; requires a nonzero polynomial.
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  unsigned degree(Var v) const;
  bool depends_on(Var v) const { return degree(v) > 0; }
  bool depends_on_canonical() const;

  // Coefficients c_k (free of v) with *this = sum_k c_k v^k.
  std::vector<Polynomial> coefficients_in(Var v) const;
  static Polynomial from_coefficients(Var v,
                                      const std::vector<Polynomial>& coeffs);

  Polynomial derivative(Var v) const;
  Polynomial pow(unsigned k) const;

  // Minimum exponent of every variable over all terms.
  Monomial monomial_content() const;
  // Positive rational c such that *this / c has coprime integer coefficients.
  Rational rational_content() const;
  Polynomial monic() const;

  double evaluate(const std::array<double, kNumVars>& point) const;

  void add_term(const Monomial& mono, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    return lhs += rhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    return lhs -= rhs;
  }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) {
    return lhs *= rhs;
  }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

  std::string to_string() const;

 private:
  TermMap terms_;
};

// Returns q with a == q * b when b divides a exactly, nullopt otherwise.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);

// Pseudo-remainder of a by b viewed as univariate polynomials in v.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, Var v);

// Monic greatest common divisor (gcd(0, 0) == 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

std::string format_rational(const Rational& c);

}  // namespace hyperq::algebra

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperq/algebra/phase_expr.hpp"

namespace hyperq::algebra {

// Canonical Poisson bracket over the pairs (lambda, p_lambda), (x^i, p_i).
// The parameters a and m are constants.
PhaseExpr poisson(const PhaseExpr& f, const PhaseExpr& g);

// lhs -> rhs where lhs is a monomial in the canonical variables and rhs has a
// parameter-only denominator.
struct RewriteRule {
  Monomial lhs;
  PhaseExpr rhs;
};

// Reduction modulo the ideal generated by a set of constraints. Each constraint
// is oriented by its leading canonical monomial in the elimination order; the
// leading monomials must be pairwise coprime, which makes the rule set a
// Groebner basis and the reduced form unique.
class OnShellReducer {
 public:
  // Reduces and orients the constraint. Returns false when it already lies in
  // the ideal. Throws std::runtime_error when orientation would break the
  // coprime-leading-term structure.
  bool add_constraint(const PhaseExpr& constraint);

  PhaseExpr reduce(const PhaseExpr& e) const;
  bool vanishes(const PhaseExpr& e) const;
  bool equal_on_shell(const PhaseExpr& lhs, const PhaseExpr& rhs) const;

  const std::vector<RewriteRule>& rules() const { return rules_; }

 private:
  PhaseExpr reduce_polynomial(const Polynomial& p) const;

  std::vector<RewriteRule> rules_;
};

struct Constraint {
  PhaseExpr value;           // rescaled constraint
  PhaseExpr raw_derivative;  // {C_prev, H_tilde}; the primary constraint itself for C_1
  PhaseExpr scale;           // value == scale * raw_derivative
};

struct ConstraintSet {
  PhaseExpr hamiltonian;          // H_tilde driving the chain
  std::vector<Constraint> items;  // C_1 .. C_n
  PhaseExpr closing_derivative;   // {C_n, H_tilde}, lies in the ideal
  OnShellReducer reducer;

  std::size_t size() const { return items.size(); }
  const PhaseExpr& operator[](std::size_t i) const { return items[i].value; }
};

class ConstraintChainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (p_x^2 + p_y^2 - p_z^2)/(2m) + lambda (x^2 + y^2 - z^2 + a^2)
PhaseExpr free_hamiltonian();
PhaseExpr extended_hamiltonian();

// Dirac's algorithm: C_{k+1} = normalized {C_k, H_tilde} until the next
// derivative reduces to zero on the constraints found so far.
ConstraintSet constraint_chain(const PhaseExpr& h_tilde,
                               const PhaseExpr& primary = sym::p_lambda(),
                               std::size_t max_length = 8);

// Dense square matrix of expressions.
class ExprMatrix {
 public:
  explicit ExprMatrix(std::size_t n = 0) : n_(n), data_(n * n) {}

  std::size_t size() const { return n_; }
  PhaseExpr& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const PhaseExpr& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  static ExprMatrix identity(std::size_t n);
  friend ExprMatrix operator*(const ExprMatrix& lhs, const ExprMatrix& rhs);
  friend bool operator==(const ExprMatrix& lhs, const ExprMatrix& rhs) {
    return lhs.n_ == rhs.n_ && lhs.data_ == rhs.data_;
  }

 private:
  std::size_t n_;
  std::vector<PhaseExpr> data_;
};

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BracketMatrix {
  ExprMatrix entries;
  ExprMatrix inverse;
};

// Exact inverse over the rational-function field via fraction-free
// Gauss-Jordan elimination with exact polynomial division.
ExprMatrix invert_matrix(const ExprMatrix& m);

// M_ij = {C_i, C_j} reduced on-shell, together with its exact inverse.
BracketMatrix bracket_matrix(const ConstraintSet& cs);

// Constraint set, bracket matrix and reducer bundled for repeated brackets.
class DiracAlgebra {
 public:
  explicit DiracAlgebra(ConstraintSet cs);

  // Default chain built from extended_hamiltonian().
  static DiracAlgebra standard();

  const ConstraintSet& constraints() const { return cs_; }
  const BracketMatrix& matrix() const { return bm_; }

  // {A, B} - {A, C_i} Minv_ij {C_j, B}, reduced on-shell.
  PhaseExpr bracket(const PhaseExpr& lhs, const PhaseExpr& rhs) const;
  PhaseExpr reduce(const PhaseExpr& e) const { return cs_.reducer.reduce(e); }
  bool equal_on_shell(const PhaseExpr& lhs, const PhaseExpr& rhs) const {
    return cs_.reducer.equal_on_shell(lhs, rhs);
  }

 private:
  ConstraintSet cs_;
  BracketMatrix bm_;
};

PhaseExpr dirac_bracket(const PhaseExpr& lhs, const PhaseExpr& rhs,
                        const ConstraintSet& cs);

// On-shell reduction with the full constraint set of the standard chain.
PhaseExpr reduce_on_shell(const PhaseExpr& e);

}  // namespace hyperq::algebra

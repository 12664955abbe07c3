#include "hyperq/algebra/dirac.hpp"

#include <utility>

namespace hyperq::algebra {

PhaseExpr poisson(const PhaseExpr& f, const PhaseExpr& g) {
  PhaseExpr out;
  for (const auto& [q, p] : kCanonicalPairs) {
    const PhaseExpr fq = f.derivative(q);
    const PhaseExpr gp = g.derivative(p);
    if (!fq.is_zero() && !gp.is_zero()) out += fq * gp;
    const PhaseExpr fp = f.derivative(p);
    const PhaseExpr gq = g.derivative(q);
    if (!fp.is_zero() && !gq.is_zero()) out -= fp * gq;
  }
  return out;
}

namespace {

struct LeadingPart {
  Monomial monomial;     // canonical variables only
  Polynomial parameter;  // coefficient as a polynomial in (a, m)
};

LeadingPart leading_canonical(const Polynomial& p) {
  LeadingPart lead{p.leading_monomial().canonical_part(), Polynomial()};
  for (const auto& [mono, c] : p.terms()) {
    if (elimination_compare(mono.canonical_part(), lead.monomial) > 0) {
      lead.monomial = mono.canonical_part();
    }
  }
  for (const auto& [mono, c] : p.terms()) {
    if (mono.canonical_part() == lead.monomial) {
      lead.parameter.add_term(mono.parameter_part(), c);
    }
  }
  return lead;
}

bool coprime(const Monomial& lhs, const Monomial& rhs) {
  return gcd(lhs, rhs).is_one();
}

}  // namespace

bool OnShellReducer::add_constraint(const PhaseExpr& constraint) {
  const PhaseExpr reduced = reduce(constraint);
  if (reduced.is_zero()) return false;
  const Polynomial& num = reduced.numerator();
  if (!num.depends_on_canonical()) {
    throw std::runtime_error("constraint " + constraint.to_string() +
                             " reduces to a parameter-only expression");
  }
  const LeadingPart lead = leading_canonical(num);
  for (const auto& rule : rules_) {
    if (!coprime(rule.lhs, lead.monomial)) {
      throw std::runtime_error(
          "constraint " + constraint.to_string() +
          " has a leading term sharing variables with an existing rule; "
          "a full Groebner completion would be required");
    }
  }
  const Polynomial lead_term =
      lead.parameter * Polynomial::monomial(lead.monomial, 1);
  rules_.push_back({lead.monomial, PhaseExpr(lead_term - num, lead.parameter)});
  return true;
}

PhaseExpr OnShellReducer::reduce_polynomial(const Polynomial& p) const {
  Polynomial work = p;
  Polynomial den(1);
  while (true) {
    const RewriteRule* rule = nullptr;
    Monomial hit;
    Rational coeff;
    for (const auto& [mono, c] : work.terms()) {
      const Monomial canon = mono.canonical_part();
      for (const auto& r : rules_) {
        if (r.lhs.divides(canon)) {
          rule = &r;
          hit = mono;
          coeff = c;
          break;
        }
      }
      if (rule) break;
    }
    if (!rule) break;
    work.add_term(hit, -coeff);
    const Polynomial replacement =
        Polynomial::monomial(hit / rule->lhs, coeff) * rule->rhs.numerator();
    const Polynomial& rule_den = rule->rhs.denominator();
    if (rule_den == Polynomial(1)) {
      work += replacement;
    } else {
      work = work * rule_den + replacement;
      den *= rule_den;
    }
  }
  return PhaseExpr(std::move(work), std::move(den));
}

PhaseExpr OnShellReducer::reduce(const PhaseExpr& e) const {
  if (rules_.empty() || e.is_zero()) return e;
  const PhaseExpr num = reduce_polynomial(e.numerator());
  const PhaseExpr den = reduce_polynomial(e.denominator());
  if (den.is_zero()) {
    throw std::domain_error("denominator of " + e.to_string() +
                            " vanishes on the constraint surface");
  }
  return num / den;
}

bool OnShellReducer::vanishes(const PhaseExpr& e) const {
  return reduce_polynomial(e.numerator()).is_zero();
}

bool OnShellReducer::equal_on_shell(const PhaseExpr& lhs,
                                    const PhaseExpr& rhs) const {
  return vanishes(lhs - rhs);
}

PhaseExpr free_hamiltonian() {
  using namespace sym;
  return (p_x() * p_x() + p_y() * p_y() - p_z() * p_z()) / (PhaseExpr(2) * m());
}

PhaseExpr extended_hamiltonian() {
  using namespace sym;
  return free_hamiltonian() +
         lambda() * (x() * x() + y() * y() - z() * z() + a() * a());
}

ConstraintSet constraint_chain(const PhaseExpr& h_tilde,
                               const PhaseExpr& primary,
                               std::size_t max_length) {
  ConstraintSet cs;
  cs.hamiltonian = h_tilde;
  cs.items.push_back({primary, primary, PhaseExpr(1)});
  if (!cs.reducer.add_constraint(primary)) {
    throw ConstraintChainError("primary constraint is identically zero");
  }
  while (true) {
    const PhaseExpr raw = poisson(cs.items.back().value, h_tilde);
    if (cs.reducer.vanishes(raw)) {
      cs.closing_derivative = raw;
      return cs;
    }
    if (cs.items.size() >= max_length) {
      throw ConstraintChainError("constraint chain exceeded " +
                                 std::to_string(max_length) +
                                 " constraints; unexpected constraint structure");
    }
    if (!raw.denominator().is_constant() &&
        raw.denominator().depends_on_canonical()) {
      throw ConstraintChainError("secondary constraint " + raw.to_string() +
                                 " has a phase-space dependent denominator");
    }
    const LeadingPart lead = leading_canonical(raw.numerator());
    const PhaseExpr scale = PhaseExpr(raw.denominator(), lead.parameter);
    const PhaseExpr value = raw * scale;
    if (!cs.reducer.add_constraint(value)) {
      throw ConstraintChainError("inconsistent ideal membership test");
    }
    cs.items.push_back({value, raw, scale});
  }
}

ExprMatrix ExprMatrix::identity(std::size_t n) {
  ExprMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = PhaseExpr(1);
  return out;
}

ExprMatrix operator*(const ExprMatrix& lhs, const ExprMatrix& rhs) {
  const std::size_t n = lhs.size();
  ExprMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      PhaseExpr sum;
      for (std::size_t k = 0; k < n; ++k) {
        if (lhs(i, k).is_zero() || rhs(k, j).is_zero()) continue;
        sum += lhs(i, k) * rhs(k, j);
      }
      out(i, j) = sum;
    }
  }
  return out;
}

namespace {

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  auto q = exact_divide(a * b, gcd(a, b));
  return q->monic();
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::logic_error("fraction-free elimination lost exactness");
  return *q;
}

}  // namespace

ExprMatrix invert_matrix(const ExprMatrix& m) {
  const std::size_t n = m.size();
  Polynomial common(1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) common = lcm(common, m(i, j).denominator());
  }

  // Augmented polynomial matrix [common * M | I].
  std::vector<std::vector<Polynomial>> rows(n, std::vector<Polynomial>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][j] = exact_quotient(m(i, j).numerator() * common, m(i, j).denominator());
    }
    rows[i][n + i] = Polynomial(1);
  }

  Polynomial previous(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && rows[pivot][k].is_zero()) ++pivot;
    if (pivot == n) throw SingularMatrixError("matrix determinant is identically zero");
    std::swap(rows[k], rows[pivot]);
    const Polynomial& diag = rows[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Polynomial factor = rows[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        Polynomial cross = diag * rows[i][j];
        if (!factor.is_zero() && !rows[k][j].is_zero()) cross -= factor * rows[k][j];
        rows[i][j] = exact_quotient(cross, previous);
      }
    }
    previous = diag;
  }

  ExprMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = PhaseExpr(rows[i][n + j] * common, rows[i][i]);
    }
  }
  return out;
}

BracketMatrix bracket_matrix(const ConstraintSet& cs) {
  const std::size_t n = cs.size();
  BracketMatrix bm{ExprMatrix(n), ExprMatrix(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      bm.entries(i, j) = cs.reducer.reduce(poisson(cs[i], cs[j]));
    }
  }
  bm.inverse = invert_matrix(bm.entries);
  return bm;
}

DiracAlgebra::DiracAlgebra(ConstraintSet cs)
    : cs_(std::move(cs)), bm_(bracket_matrix(cs_)) {}

DiracAlgebra DiracAlgebra::standard() {
  return DiracAlgebra(constraint_chain(extended_hamiltonian()));
}

PhaseExpr DiracAlgebra::bracket(const PhaseExpr& lhs, const PhaseExpr& rhs) const {
  const std::size_t n = cs_.size();
  std::vector<PhaseExpr> left(n);
  std::vector<PhaseExpr> right(n);
  for (std::size_t i = 0; i < n; ++i) {
    left[i] = poisson(lhs, cs_[i]);
    right[i] = poisson(cs_[i], rhs);
  }
  PhaseExpr out = poisson(lhs, rhs);
  for (std::size_t i = 0; i < n; ++i) {
    if (left[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const PhaseExpr& w = bm_.inverse(i, j);
      if (w.is_zero() || right[j].is_zero()) continue;
      out -= left[i] * w * right[j];
    }
  }
  return reduce(out);
}

PhaseExpr dirac_bracket(const PhaseExpr& lhs, const PhaseExpr& rhs,
                        const ConstraintSet& cs) {
  return DiracAlgebra(cs).bracket(lhs, rhs);
}

PhaseExpr reduce_on_shell(const PhaseExpr& e) {
  static const ConstraintSet standard = constraint_chain(extended_hamiltonian());
  return standard.reducer.reduce(e);
}

}  // namespace hyperq::algebra

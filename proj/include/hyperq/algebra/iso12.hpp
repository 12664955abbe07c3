#pragma once

#include <array>
#include <string>
#include <vector>

#include "hyperq/algebra/dirac.hpp"

namespace hyperq::algebra {

// Minkowski index helpers, metric diag(1, 1, -1), indices 0..2.
int metric_sign(int i);
// epsilon_{ijk} with epsilon_{123} = 1; the upper-index symbol is its negative.
int epsilon_lower(int i, int j, int k);
int epsilon_upper(int i, int j, int k);

std::array<PhaseExpr, 3> position_upper();  // x^i
std::array<PhaseExpr, 3> momentum_lower();  // p_i
// J^i = -epsilon^{ijk} x_j p_k
std::array<PhaseExpr, 3> angular_momentum_upper();

struct IdentityCheck {
  std::string family;  // e.g. "iso12_closure"
  std::string name;    // e.g. "{J^1,x^2}_M"
  PhaseExpr computed;
  PhaseExpr expected;
  bool holds = false;
  // computed - expected after on-shell reduction
  PhaseExpr residual;
};

struct Iso12Report {
  std::vector<IdentityCheck> checks;

  bool all_hold() const;
  std::vector<IdentityCheck> failures() const;
};

// Fault hook for negative controls: structure_sign = -1 flips epsilon in the
// expected structure constants only.
struct Iso12Options {
  int structure_sign = 1;
};

// {x^i,x^j}, {J^i,x^j}, {J^i,J^j}, Casimir centrality of x.x and x.J, and the
// on-shell recovery p_i = epsilon_{ijk} x^j J^k / a^2.
Iso12Report verify_iso12(const DiracAlgebra& algebra, Iso12Options options = {});

// Modified brackets among (x^i, p_j, J^k): {x,x}, {x,p}, {p,p}, {J,x}, {J,J}
// for every index pair, each compared with its closed form.
std::vector<IdentityCheck> modified_bracket_table(const DiracAlgebra& algebra,
                                                  Iso12Options options = {});

}  // namespace hyperq::algebra

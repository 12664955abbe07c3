#include "hyperq/algebra/iso12.hpp"

#include <string>

namespace hyperq::algebra {

int metric_sign(int i) { return i == 2 ? -1 : 1; }

int epsilon_lower(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // Even permutations of (0, 1, 2).
  if ((i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 0)) return 1;
  return -1;
}

int epsilon_upper(int i, int j, int k) { return -epsilon_lower(i, j, k); }

std::array<PhaseExpr, 3> position_upper() {
  return {sym::x(), sym::y(), sym::z()};
}

std::array<PhaseExpr, 3> momentum_lower() {
  return {sym::p_x(), sym::p_y(), sym::p_z()};
}

std::array<PhaseExpr, 3> angular_momentum_upper() {
  const auto x = position_upper();
  const auto p = momentum_lower();
  std::array<PhaseExpr, 3> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const int e = epsilon_upper(i, j, k);
        if (e == 0) continue;
        out[i] -= PhaseExpr(e * metric_sign(j)) * x[j] * p[k];
      }
    }
  }
  return out;
}

bool Iso12Report::all_hold() const {
  for (const auto& c : checks) {
    if (!c.holds) return false;
  }
  return true;
}

std::vector<IdentityCheck> Iso12Report::failures() const {
  std::vector<IdentityCheck> out;
  for (const auto& c : checks) {
    if (!c.holds) out.push_back(c);
  }
  return out;
}

namespace {

std::string label(const char* sym, int i, bool upper) {
  return std::string(sym) + (upper ? "^" : "_") + std::to_string(i + 1);
}

IdentityCheck make_check(const DiracAlgebra& algebra, std::string family,
                         std::string name, const PhaseExpr& computed,
                         const PhaseExpr& expected) {
  IdentityCheck c;
  c.family = std::move(family);
  c.name = std::move(name);
  c.computed = computed;
  c.expected = expected;
  c.residual = algebra.reduce(computed - expected);
  c.holds = c.residual.is_zero();
  return c;
}

}  // namespace

std::vector<IdentityCheck> modified_bracket_table(const DiracAlgebra& algebra,
                                                  Iso12Options options) {
  const auto x = position_upper();
  const auto p = momentum_lower();
  const auto J = angular_momentum_upper();
  const PhaseExpr inv_a2 = PhaseExpr(1) / (sym::a() * sym::a());
  const PhaseExpr s(options.structure_sign);
  std::vector<IdentityCheck> out;

  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out.push_back(make_check(algebra, "commuting_positions",
                               "{" + label("x", i, true) + "," + label("x", j, true) + "}_M",
                               algebra.bracket(x[i], x[j]), PhaseExpr(0)));
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // delta^i_j + x^i x_j / a^2
      const PhaseExpr expected = PhaseExpr(i == j ? 1 : 0) +
                                 inv_a2 * x[i] * PhaseExpr(metric_sign(j)) * x[j];
      out.push_back(make_check(algebra, "position_momentum",
                               "{" + label("x", i, true) + "," + label("p", j, false) + "}_M",
                               algebra.bracket(x[i], p[j]), expected));
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // (x_i p_j - x_j p_i) / a^2
      const PhaseExpr expected =
          inv_a2 * (PhaseExpr(metric_sign(i)) * x[i] * p[j] -
                    PhaseExpr(metric_sign(j)) * x[j] * p[i]);
      out.push_back(make_check(algebra, "momentum_momentum",
                               "{" + label("p", i, false) + "," + label("p", j, false) + "}_M",
                               algebra.bracket(p[i], p[j]), expected));
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      PhaseExpr expected_x;
      PhaseExpr expected_j;
      for (int k = 0; k < 3; ++k) {
        const int e = epsilon_upper(i, j, k);
        if (e == 0) continue;
        expected_x -= s * PhaseExpr(e * metric_sign(k)) * x[k];
        expected_j -= s * PhaseExpr(e * metric_sign(k)) * J[k];
      }
      out.push_back(make_check(algebra, "iso12_closure",
                               "{" + label("J", i, true) + "," + label("x", j, true) + "}_M",
                               algebra.bracket(J[i], x[j]), expected_x));
      out.push_back(make_check(algebra, "iso12_closure",
                               "{" + label("J", i, true) + "," + label("J", j, true) + "}_M",
                               algebra.bracket(J[i], J[j]), expected_j));
    }
  }
  return out;
}

Iso12Report verify_iso12(const DiracAlgebra& algebra, Iso12Options options) {
  const auto x = position_upper();
  const auto p = momentum_lower();
  const auto J = angular_momentum_upper();
  Iso12Report report;

  for (auto& c : modified_bracket_table(algebra, options)) {
    if (c.family == "commuting_positions" || c.family == "iso12_closure") {
      report.checks.push_back(std::move(c));
    }
  }

  PhaseExpr x_dot_x;
  PhaseExpr x_dot_j;
  for (int i = 0; i < 3; ++i) {
    x_dot_x += PhaseExpr(metric_sign(i)) * x[i] * x[i];
    x_dot_j += PhaseExpr(metric_sign(i)) * x[i] * J[i];
  }
  std::array<std::pair<std::string, PhaseExpr>, 6> generators = {{
      {"x^1", x[0]}, {"x^2", x[1]}, {"x^3", x[2]},
      {"J^1", J[0]}, {"J^2", J[1]}, {"J^3", J[2]},
  }};
  for (const auto& [gname, g] : generators) {
    report.checks.push_back(make_check(algebra, "casimir_centrality",
                                       "{x.x," + gname + "}_M",
                                       algebra.bracket(x_dot_x, g), PhaseExpr(0)));
    report.checks.push_back(make_check(algebra, "casimir_centrality",
                                       "{x.J," + gname + "}_M",
                                       algebra.bracket(x_dot_j, g), PhaseExpr(0)));
  }
  // Casimir values on the constraint surface: x.x = -a^2, x.J = 0.
  report.checks.push_back(make_check(algebra, "casimir_value", "x.x",
                                     algebra.reduce(x_dot_x), -(sym::a() * sym::a())));
  report.checks.push_back(make_check(algebra, "casimir_value", "x.J",
                                     algebra.reduce(x_dot_j), PhaseExpr(0)));

  const PhaseExpr inv_a2 = PhaseExpr(1) / (sym::a() * sym::a());
  for (int i = 0; i < 3; ++i) {
    PhaseExpr recovered;
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const int e = epsilon_lower(i, j, k);
        if (e != 0) recovered += PhaseExpr(e) * inv_a2 * x[j] * J[k];
      }
    }
    report.checks.push_back(make_check(algebra, "p_recovery",
                                       label("p", i, false), recovered, p[i]));
  }
  return report;
}

}  // namespace hyperq::algebra

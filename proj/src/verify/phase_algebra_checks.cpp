#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <string>

#include "hyperq/algebra/dirac.hpp"
#include "hyperq/algebra/iso12.hpp"
#include "hyperq/algebra/parser.hpp"
#include "hyperq/geometry/hyperboloid.hpp"
#include "hyperq/verify/suite.hpp"

namespace hyperq::verify {

using namespace hyperq::algebra;

namespace {

const char* kModule = "phase_algebra";

// Reference forms as displayed, with p^i p_i = p_x^2 + p_y^2 - p_z^2.
const std::array<const char*, 4> kConstraints = {
    "p_lambda",
    "z^2 - x^2 - y^2 - a^2",
    "x*p_x + y*p_y + z*p_z",
    // H~ + 2 lambda C2 + lambda a^2
    "(p_x^2 + p_y^2 - p_z^2)/(2*m) + lambda*(x^2 + y^2 - z^2 + a^2)"
    " + 2*lambda*(z^2 - x^2 - y^2 - a^2) + lambda*a^2",
};

const char* kPP = "(p_x^2 + p_y^2 - p_z^2)";

std::array<std::array<std::string, 4>, 4> matrix_reference() {
  const std::string pp = kPP;
  return {{{"0", "0", "0", "-a^2"},
           {"0", "0", "2*a^2", "0"},
           {"0", "-2*a^2", "0", "2*" + pp + "/m"},
           {"a^2", "0", "-2*" + pp + "/m", "0"}}};
}

std::array<std::array<std::string, 4>, 4> inverse_reference() {
  const std::string pp = kPP;
  return {{{"0", pp + "/(m*a^4)", "0", "1/a^2"},
           {"-" + pp + "/(m*a^4)", "0", "-1/(2*a^2)", "0"},
           {"0", "1/(2*a^2)", "0", "0"},
           {"-1/a^2", "0", "0", "0"}}};
}

std::string list_failures(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size() && i < 4; ++i) {
    if (i) out += "; ";
    out += names[i];
  }
  if (names.size() > 4) out += "; ...";
  return out;
}

CheckResult count_check(const std::string& name, const std::vector<std::string>& failures,
                        std::size_t total) {
  std::string detail = std::to_string(total) + " identities";
  if (!failures.empty()) detail += ", failing: " + list_failures(failures);
  return bound_check(kModule, name, static_cast<double>(failures.size()), 0.0, detail);
}

PhaseExpr random_poly(std::mt19937_64& rng) {
  static const std::array<Var, 8> vars = {Var::lambda, Var::x,   Var::y,   Var::z,
                                          Var::p_lambda, Var::p_x, Var::p_y, Var::p_z};
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> pick(0, 7);
  std::uniform_int_distribution<int> degree(0, 2);
  std::uniform_int_distribution<int> terms(1, 3);
  PhaseExpr out;
  const int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    PhaseExpr term(coef(rng));
    const int d = degree(rng);
    for (int k = 0; k < d; ++k) term *= PhaseExpr::variable(vars[static_cast<std::size_t>(pick(rng))]);
    out += term;
  }
  return out;
}

}  // namespace

std::vector<CheckResult> phase_algebra_checks(const cli::RunConfig& config) {
  std::vector<CheckResult> out;
  const Iso12Options iso{config.faults.count("epsilon-sign") ? -1 : 1};
  const DiracAlgebra algebra = DiracAlgebra::standard();
  const ConstraintSet& cs = algebra.constraints();

  {
    std::vector<std::string> bad;
    if (cs.size() != kConstraints.size()) {
      bad.push_back("chain length " + std::to_string(cs.size()));
    }
    for (std::size_t i = 0; i < std::min(cs.size(), kConstraints.size()); ++i) {
      if (!(cs[i] == parse_expr(kConstraints[i]))) {
        bad.push_back("C" + std::to_string(i + 1) + " = " + cs[i].to_string());
      }
      if (!(cs.items[i].value == cs.items[i].scale * cs.items[i].raw_derivative)) {
        bad.push_back("C" + std::to_string(i + 1) + " scale");
      }
    }
    if (!cs.reducer.vanishes(cs.closing_derivative)) bad.push_back("chain does not close");
    out.push_back(count_check("constraint_chain", bad, 2 * kConstraints.size() + 1));
  }

  const BracketMatrix& bm = algebra.matrix();
  {
    std::vector<std::string> bad;
    const auto ref = matrix_reference();
    const auto ref_inv = inverse_reference();
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        const std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
        if (!(bm.entries(i, j) == parse_expr(ref[i][j]))) {
          bad.push_back("M" + ij + " = " + bm.entries(i, j).to_string());
        }
        if (!(bm.inverse(i, j) == parse_expr(ref_inv[i][j]))) {
          bad.push_back("Minv" + ij + " = " + bm.inverse(i, j).to_string());
        }
      }
    }
    out.push_back(count_check("bracket_matrix", bad, 32));
  }
  {
    std::vector<std::string> bad;
    const ExprMatrix product = bm.entries * bm.inverse;
    const ExprMatrix id = ExprMatrix::identity(4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        if (!(product(i, j) == id(i, j))) {
          bad.push_back("(M Minv)" + std::to_string(i + 1) + std::to_string(j + 1) + " = " +
                        product(i, j).to_string());
        }
      }
    }
    out.push_back(count_check("matrix_inverse_identity", bad, 16));
  }

  {
    std::map<std::string, std::vector<std::string>> bad;
    std::map<std::string, std::size_t> total;
    auto collect = [&](const IdentityCheck& c, const std::string& family) {
      ++total[family];
      if (!c.holds) bad[family].push_back(c.name + " residual " + c.residual.to_string());
    };
    static const std::map<std::string, std::string> table_names = {
        {"commuting_positions", "dirac_x_x"},
        {"position_momentum", "dirac_x_p"},
        {"momentum_momentum", "dirac_p_p"},
    };
    for (const auto& c : modified_bracket_table(algebra, iso)) {
      auto it = table_names.find(c.family);
      if (it != table_names.end()) collect(c, it->second);
    }
    for (const auto& c : verify_iso12(algebra, iso).checks) {
      if (c.family != "commuting_positions") collect(c, c.family);
    }
    for (const auto& [family, n] : total) out.push_back(count_check(family, bad[family], n));
  }

  {
    std::mt19937_64 rng(config.seed);
    constexpr int kTriples = 120;
    std::vector<std::string> bad;
    for (int t = 0; t < kTriples; ++t) {
      const PhaseExpr f = random_poly(rng);
      const PhaseExpr g = random_poly(rng);
      const PhaseExpr h = random_poly(rng);
      const std::string tag = " #" + std::to_string(t);
      if (!(poisson(f, g) + poisson(g, f)).is_zero()) bad.push_back("antisymmetry" + tag);
      if (!(poisson(f, g * h) - poisson(f, g) * h - g * poisson(f, h)).is_zero()) {
        bad.push_back("leibniz" + tag);
      }
      if (!(poisson(f, poisson(g, h)) + poisson(g, poisson(h, f)) + poisson(h, poisson(f, g)))
               .is_zero()) {
        bad.push_back("jacobi" + tag);
      }
    }
    out.push_back(count_check("poisson_properties", bad, 3 * kTriples));
  }

  {
    // On-shell points from the (theta, phi) chart with tangent momenta.
    std::mt19937_64 rng(config.seed + 1);
    std::uniform_real_distribution<double> th(0.05, 2.0);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> vel(-1.5, 1.5);
    const std::array<const char*, 5> probes = {
        "z^2*p_z^2",
        "x*p_x*z + z^3*p_y",
        "(z^2 + x*p_x)/(a^2 + x^2 + y^2)",
        "lambda*z^2 + p_lambda*x + p_x^2*p_z*z",
        "(x*p_x + y*p_y + z*p_z)^2 + z^4/m",
    };
    const double a = config.a;
    const double m = config.m;
    double worst = 0.0;
    std::size_t not_idempotent = 0;
    for (int k = 0; k < 20; ++k) {
      const geometry::ChartPoint cp{th(rng), ph(rng)};
      const geometry::MinkVec x = geometry::embed(cp, a);
      const geometry::MinkVec v = geometry::pushforward(cp, {vel(rng), vel(rng)}, a);
      const geometry::MinkVec p = v.lowered() * m;
      const double pp = geometry::inner(v, v) * m * m;
      std::array<double, kNumVars> pt{};
      pt[index(Var::lambda)] = -pp / (2.0 * m * a * a);
      pt[index(Var::x)] = x[0];
      pt[index(Var::y)] = x[1];
      pt[index(Var::z)] = x[2];
      pt[index(Var::p_lambda)] = 0.0;
      pt[index(Var::p_x)] = p[0];
      pt[index(Var::p_y)] = p[1];
      pt[index(Var::p_z)] = p[2];
      pt[index(Var::a)] = a;
      pt[index(Var::m)] = m;
      for (const char* text : probes) {
        const PhaseExpr e = parse_expr(text);
        const PhaseExpr r = algebra.reduce(e);
        if (k == 0 && !(algebra.reduce(r) == r)) ++not_idempotent;
        const double ve = e.evaluate(pt);
        const double vr = r.evaluate(pt);
        worst = std::max(worst, std::abs(ve - vr) / std::max(1.0, std::abs(ve)));
      }
    }
    out.push_back(bound_check(kModule, "reduce_numeric_agreement", worst, 1e-12,
                              "20 chart points x 5 expressions, relative"));
    out.push_back(count_check("reduce_idempotent",
                              not_idempotent ? std::vector<std::string>{"reduce(reduce(e)) != reduce(e)"}
                                             : std::vector<std::string>{},
                              probes.size()));
  }
  return out;
}

}  // namespace hyperq::verify

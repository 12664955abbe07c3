#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hyperq/algebra/dirac.hpp"
#include "hyperq/algebra/iso12.hpp"
#include "hyperq/algebra/parser.hpp"
#include "hyperq/geometry/hyperboloid.hpp"

using namespace hyperq::algebra;

namespace {

PhaseExpr P(const char* s) { return parse_expr(s); }

const DiracAlgebra& algebra() {
  static const DiracAlgebra alg = DiracAlgebra::standard();
  return alg;
}

// Point on the constraint surface: chart position, tangent momentum,
// p_lambda = 0 and lambda fixed by C4.
std::array<double, kNumVars> on_shell_point(double theta, double phi, double vt, double vp, double a,
                                            double m) {
  using namespace hyperq::geometry;
  const MinkVec x = embed({theta, phi}, a);
  const MinkVec v = pushforward({theta, phi}, {vt, vp}, a);
  std::array<double, kNumVars> pt{};
  pt[index(Var::x)] = x[0];
  pt[index(Var::y)] = x[1];
  pt[index(Var::z)] = x[2];
  pt[index(Var::p_x)] = m * v[0];
  pt[index(Var::p_y)] = m * v[1];
  pt[index(Var::p_z)] = -m * v[2];
  pt[index(Var::lambda)] = -m * inner(v, v) / (2.0 * a * a);
  pt[index(Var::a)] = a;
  pt[index(Var::m)] = m;
  return pt;
}

}  // namespace

TEST_CASE("polynomial arithmetic and normal form") {
  CHECK(P("(x + y)^2") == P("x^2 + 2*x*y + y^2"));
  CHECK(P("(x+y)^2/(x^2-y^2)") == P("(x+y)/(x-y)"));
  CHECK(P("x/x") == PhaseExpr(1));
  CHECK(P("(a^2*m)/(2*a*m^2)") == P("a/(2*m)"));
  CHECK((P("x") - P("x")).is_zero());
  CHECK(P("x^-2") == P("1/(x*x)"));

  const Polynomial g = gcd(P("x^2 - y^2").numerator(), P("x^2 + 2*x*y + y^2").numerator());
  CHECK(PhaseExpr(g) == P("x + y").numerator().monic());
}

TEST_CASE("printed form parses back to the same value") {
  for (const char* s : {"x*p_x + y*p_y + z*p_z", "-1/2*m", "(p_x^2 + p_y^2 - p_z^2)/(m*a^4)",
                        "lambda*z^2 - 3/7*p_lambda", "(x - y)/(x + 2*y*a^2)"}) {
    const PhaseExpr e = P(s);
    CHECK(parse_expr(e.to_string()) == e);
  }
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_expr("x + q"), ParseError);
  CHECK_THROWS_AS(parse_expr("x/(y - y)"), ParseError);
  CHECK_THROWS_AS(parse_expr("(x + y"), ParseError);
  bool thrown = false;
  try {
    parse_expr("x + foo");
  } catch (const ParseError& e) {
    thrown = true;
    CHECK(e.kind() == ParseError::Kind::unknown_identifier);
    CHECK(e.position() == 4);
  }
  CHECK(thrown);
}

TEST_CASE("canonical Poisson bracket") {
  CHECK(poisson(sym::x(), sym::p_x()) == PhaseExpr(1));
  CHECK(poisson(sym::lambda(), sym::p_lambda()) == PhaseExpr(1));
  CHECK(poisson(sym::x(), sym::y()).is_zero());
  CHECK(poisson(sym::p_x(), sym::p_y()).is_zero());
  CHECK(poisson(sym::z(), sym::p_x()).is_zero());
  // {p_x, x^2} = -2x
  CHECK(poisson(sym::p_x(), P("x^2")) == P("-2*x"));
  // parameters are constants
  CHECK(poisson(sym::a(), sym::p_x()).is_zero());
}

TEST_CASE("constraint chain") {
  const ConstraintSet& cs = algebra().constraints();
  REQUIRE(cs.size() == 4);
  CHECK(cs[0] == P("p_lambda"));
  CHECK(cs[1] == P("z^2 - x^2 - y^2 - a^2"));
  CHECK(cs[2] == P("x*p_x + y*p_y + z*p_z"));
  CHECK(cs[3] == P("(p_x^2+p_y^2-p_z^2)/(2*m) + lambda*(x^2+y^2-z^2+a^2) + 2*lambda*(z^2-x^2-y^2-a^2)"
                   " + lambda*a^2"));
  // Raw derivatives by hand: {C2, H~} = -(2/m) x^i p_i, {C3, H~} = 2 C4.
  CHECK(cs.items[2].raw_derivative == P("-2*(x*p_x + y*p_y + z*p_z)/m"));
  CHECK(cs.items[2].scale == P("-m/2"));
  CHECK(cs.items[3].scale == P("1/2"));
  // {C4, H~} = -(4 lambda/m) C3, in the ideal
  CHECK(cs.closing_derivative == P("-4*lambda/m*(x*p_x + y*p_y + z*p_z)"));
  CHECK(cs.reducer.vanishes(cs.closing_derivative));
}

TEST_CASE("bracket matrix and inverse") {
  const BracketMatrix& bm = algebra().matrix();
  const char* pp = "(p_x^2 + p_y^2 - p_z^2)";
  auto with_pp = [&](std::string s) {
    for (auto pos = s.find("PP"); pos != std::string::npos; pos = s.find("PP")) s.replace(pos, 2, pp);
    return parse_expr(s);
  };
  const std::array<std::array<const char*, 4>, 4> m = {{{"0", "0", "0", "-a^2"},
                                                        {"0", "0", "2*a^2", "0"},
                                                        {"0", "-2*a^2", "0", "2*PP/m"},
                                                        {"a^2", "0", "-2*PP/m", "0"}}};
  const std::array<std::array<const char*, 4>, 4> mi = {{{"0", "PP/(m*a^4)", "0", "1/a^2"},
                                                         {"-PP/(m*a^4)", "0", "-1/(2*a^2)", "0"},
                                                         {"0", "1/(2*a^2)", "0", "0"},
                                                         {"-1/a^2", "0", "0", "0"}}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(bm.entries(i, j) == with_pp(m[i][j]));
      CHECK(bm.inverse(i, j) == with_pp(mi[i][j]));
    }
  }
  CHECK(bm.entries(1, 2).to_string() == "2*a^2");
  CHECK(bm.inverse(1, 2).to_string() == "-1/2/a^2");
  CHECK(bm.entries * bm.inverse == ExprMatrix::identity(4));
  CHECK(bm.inverse * bm.entries == ExprMatrix::identity(4));
  // row 4 . column 2: a^2 PP/(m a^4) - (2 PP/m)(1/(2 a^2)) = 0
  CHECK((bm.entries(3, 0) * bm.inverse(0, 1) + bm.entries(3, 2) * bm.inverse(2, 1)).is_zero());
}

TEST_CASE("exact inverse of small matrices") {
  ExprMatrix m(2);
  m(0, 0) = sym::a();
  m(0, 1) = PhaseExpr(1);
  m(1, 1) = sym::m();
  const ExprMatrix inv = invert_matrix(m);
  CHECK(inv(0, 0) == P("1/a"));
  CHECK(inv(0, 1) == P("-1/(a*m)"));
  CHECK(inv(1, 0).is_zero());
  CHECK(inv(1, 1) == P("1/m"));

  ExprMatrix s(2);
  s(0, 0) = sym::x();
  s(0, 1) = sym::y();
  s(1, 0) = P("2*x");
  s(1, 1) = P("2*y");
  CHECK_THROWS_AS(invert_matrix(s), SingularMatrixError);
}

TEST_CASE("Dirac brackets match an independent symbolic computation") {
  // Full Dirac brackets from the unreduced 4x4 inverse (sympy), compared on shell.
  struct Case {
    PhaseExpr lhs, rhs;
    const char* oracle;
  };
  const auto J = angular_momentum_upper();
  const std::vector<Case> cases = {
      {sym::x(), sym::p_x(), "(y - z)*(y + z)/(x^2 + y^2 - z^2)"},
      {sym::z(), sym::p_z(), "(x^2 + y^2)/(x^2 + y^2 - z^2)"},
      {sym::x(), sym::p_z(), "x*z/(x^2 + y^2 - z^2)"},
      {sym::p_x(), sym::p_y(), "-(-p_x*y + p_y*x)/(x^2 + y^2 - z^2)"},
      {sym::p_y(), sym::p_z(), "-(p_y*z + p_z*y)/(x^2 + y^2 - z^2)"},
      {J[0], J[1], "p_x*y - p_y*x"},
      {J[2], sym::x(), "y"},
      {sym::x(), sym::y(), "0"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.oracle);
    CHECK(algebra().equal_on_shell(algebra().bracket(c.lhs, c.rhs), P(c.oracle)));
  }
}

TEST_CASE("modified bracket examples") {
  const auto& alg = algebra();
  CHECK(alg.equal_on_shell(alg.bracket(sym::x(), sym::p_x()), P("1 + x^2/a^2")));
  CHECK(alg.equal_on_shell(alg.bracket(sym::z(), sym::p_z()), P("1 - z^2/a^2")));
  CHECK(alg.equal_on_shell(alg.bracket(sym::p_x(), sym::p_y()), P("(x*p_y - y*p_x)/a^2")));
  CHECK(alg.bracket(sym::x(), sym::y()).is_zero());
  CHECK(dirac_bracket(sym::x(), sym::y(), alg.constraints()).is_zero());
}

TEST_CASE("full modified bracket table holds") {
  for (const auto& c : modified_bracket_table(algebra())) {
    CAPTURE(c.name);
    CHECK(c.holds);
  }
}

TEST_CASE("ISO(1,2) relations and Casimirs") {
  const auto J = angular_momentum_upper();
  CHECK(J[2] == P("x*p_y - y*p_x"));
  const Iso12Report report = verify_iso12(algebra());
  CHECK(report.all_hold());
  CHECK(report.checks.size() >= 9 + 18 + 12 + 2 + 3);
  // {J^1, J^1} = 0
  CHECK(algebra().bracket(J[0], J[0]).is_zero());

  const PhaseExpr c2 = algebra().constraints()[1];
  const PhaseExpr x_dot_j = sym::x() * J[0] + sym::y() * J[1] - sym::z() * J[2];
  for (const PhaseExpr& g : {sym::x(), sym::y(), sym::z(), J[0], J[1], J[2], sym::p_x(), sym::p_z()}) {
    CHECK(algebra().reduce(algebra().bracket(g, c2)).is_zero());
    CHECK(algebra().reduce(algebra().bracket(g, x_dot_j)).is_zero());
  }
}

TEST_CASE("flipped structure constants are reported by name") {
  const Iso12Report report = verify_iso12(algebra(), {-1});
  CHECK_FALSE(report.all_hold());
  bool found = false;
  for (const auto& f : report.failures()) {
    CHECK(f.family == "iso12_closure");
    CHECK_FALSE(f.residual.is_zero());
    if (f.name == "{J^1,J^2}_M") found = true;
  }
  CHECK(found);
}

TEST_CASE("on-shell reduction") {
  const auto& alg = algebra();
  CHECK(alg.reduce(P("z^2 - x^2 - y^2 - a^2")).is_zero());
  CHECK(alg.reduce(P("p_lambda*x")).is_zero());
  // no z, p_z or x*p_x: unchanged
  CHECK(alg.reduce(P("y*p_y + x^2")) == P("y*p_y + x^2"));

  const PhaseExpr r = alg.reduce(P("z^2*p_z^2"));
  for (const auto& [mono, coef] : r.numerator().terms()) CHECK(mono[Var::z] <= 1);
  CHECK(alg.reduce(r) == r);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> th(0.05, 2.0), ph(0.0, 2.0 * std::numbers::pi), v(-1.0, 1.0);
  const std::array<const char*, 4> probes = {"z^2*p_z^2", "z^3*p_x + x*p_x*p_y",
                                             "(z*p_z + lambda)/(a^2 + z^2)", "lambda*z^2*p_z"};
  for (int k = 0; k < 20; ++k) {
    const auto pt = on_shell_point(th(rng), ph(rng), v(rng), v(rng), 1.3, 0.7);
    for (const char* s : probes) {
      const PhaseExpr e = P(s);
      const double before = e.evaluate(pt);
      const double after = alg.reduce(e).evaluate(pt);
      CHECK(std::abs(before - after) <= 1e-12 * std::max(1.0, std::abs(before)));
    }
  }
}

TEST_CASE("Poisson bracket identities on random triples") {
  std::mt19937_64 rng(11);
  const std::array<Var, 8> vars = {Var::lambda, Var::x,   Var::y,   Var::z,
                                   Var::p_lambda, Var::p_x, Var::p_y, Var::p_z};
  std::uniform_int_distribution<int> coef(-4, 4), pick(0, 7), deg(0, 3);
  auto random_poly = [&] {
    PhaseExpr out;
    for (int t = 0; t < 3; ++t) {
      PhaseExpr term(coef(rng));
      for (int k = deg(rng); k > 0; --k) term *= PhaseExpr::variable(vars[static_cast<std::size_t>(pick(rng))]);
      out += term;
    }
    return out;
  };
  for (int t = 0; t < 100; ++t) {
    const PhaseExpr f = random_poly(), g = random_poly(), h = random_poly();
    CHECK((poisson(f, g) + poisson(g, f)).is_zero());
    CHECK((poisson(f, g * h) - poisson(f, g) * h - g * poisson(f, h)).is_zero());
    CHECK((poisson(f, poisson(g, h)) + poisson(g, poisson(h, f)) + poisson(h, poisson(f, g))).is_zero());
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hyperq/spectral/complex_gamma.hpp"
#include "hyperq/spectral/conical.hpp"
#include "hyperq/spectral/operators.hpp"

using namespace hyperq::spectral;
using doctest::Approx;

namespace {

struct ConicalRef {
  double lambda;
  int n;
  double theta;
  double value;
};

// mpmath legenp(-1/2 + i lambda, n, cosh theta, type=3), 30 digits.
const ConicalRef kConical[] = {
    {0.5, 0, 0.05, 0.99968755695648369439},
    {0.5, 0, 0.3, 0.98882338018336724309},
    {0.5, 0, 1, 0.88353789884822377391},
    {0.5, 0, 2.5, 0.47018719242889917149},
    {0.5, 1, 0.05, -0.012495443867719584101},
    {0.5, 1, 0.3, -0.074024564388632912551},
    {0.5, 1, 1, -0.21692422417246037985},
    {0.5, 1, 2.5, -0.2811685656824540098},
    {0.5, 2, 0.05, 0.00039042162352377735621},
    {0.5, 2, 0.3, 0.013802243837689266346},
    {0.5, 2, 1, 0.12788937181190303235},
    {0.5, 2, 2.5, 0.33487293723081964427},
    {0.5, 3, 0.05, -0.000021143983852709136},
    {0.5, 3, 0.3, -0.0044565604136472566543},
    {0.5, 3, 1, -0.12938247088633797525},
    {0.5, 3, 2.5, -0.65474363426621842054},
    {0.5, 5, 0.05, -1.6925094204132037211e-7},
    {0.5, 5, 0.3, -0.0012669028638099707686},
    {0.5, 5, 1, -0.35775087429222680849},
    {0.5, 5, 2.5, -6.4523168760560238076},
    {0.5, -1, 0.05, 0.024990887735439168203},
    {0.5, -1, 0.3, 0.1480491287772658251},
    {0.5, -1, 1, 0.4338484483449207597},
    {0.5, -1, 2.5, 0.56233713136490801961},
    {0.5, -3, 0.05, 2.6023364741795859692e-6},
    {0.5, -3, 0.3, 0.00054849974321812389592},
    {0.5, -3, 1, 0.015923996416780058492},
    {0.5, -3, 2.5, 0.080583831909688420989},
    {1, 0, 0.05, 0.99921898392010628155},
    {1, 0, 0.3, 0.97217599799320141725},
    {1, 0, 1, 0.72207522827937457342},
    {1, 0, 2.5, -0.0035490130900895033203},
    {1, 1, 0.05, -0.031231288310847385459},
    {1, 1, 0.3, -0.18350142585870103995},
    {1, 1, 1, -0.49202359108530616064},
    {1, 1, 2.5, -0.32345035280756768483},
    {1, 2, 0.05, 0.0012686720116010302091},
    {1, 2, 0.3, 0.044604795636495972661},
    {1, 2, 1, 0.38949463743698421344},
    {1, 2, 2.5, 0.66011367426882281303},
    {1, 3, 0.05, -0.000076637958934895557536},
    {1, 3, 0.3, -0.016086750591410656481},
    {1, 3, 1, -0.44660413884287138314},
    {1, 3, 2.5, -1.62506491737207398},
    {1, 5, 0.05, -6.7408724630480230463e-7},
    {1, 5, 0.3, -0.005031934820636611437},
    {1, 5, 1, -1.3788309407930056427},
    {1, 5, 2.5, -19.795909765315569938},
    {1, -1, 0.05, 0.024985030648677908367},
    {1, -1, 0.3, 0.14680114068696083196},
    {1, -1, 1, 0.39361887286824492851},
    {1, -1, 2.5, 0.25876028224605414786},
    {1, -3, 0.05, 2.602031496993801423e-6},
    {1, -3, 0.3, 0.00054618145244046791236},
    {1, -3, 1, 0.015163217446124015131},
    {1, -3, 2.5, 0.055174617884250787649},
    {2, 0, 0.05, 0.99734578979723853901},
    {2, 0, 0.3, 0.90698212239251846171},
    {2, 0, 1, 0.21719320780657850667},
    {2, 0, 2.5, -0.12212413213329563436},
    {2, 1, 0.05, -0.10608684867159229773},
    {2, 1, 0.3, -0.60298600149199203103},
    {2, 1, 1, -1.0903823049275690296},
    {2, 1, 2.5, 0.45020339927460107951},
    {2, 2, 0.05, 0.0082899792833908976145},
    {2, 2, 0.3, 0.28511242036700479553},
    {2, 2, 1, 1.9403497489300203925},
    {2, 2, 2.5, -0.39359533497599167429},
    {2, 3, 0.05, -0.00070811167042405886171},
    {2, 3, 0.3, -0.14620294009850829831},
    {2, 3, 1, -3.3761013404222341281},
    {2, 3, 2.5, -1.2180297861606233037},
    {2, 5, 0.05, -8.7183058275794194736e-6},
    {2, 5, 0.3, -0.064368396871146626582},
    {2, 5, 1, -15.612173379467432242},
    {2, 5, 2.5, -72.98234466594428455},
    {2, -1, 0.05, 0.024961611452139364173},
    {2, -1, 0.3, 0.14187905917458636024},
    {2, -1, 1, 0.2565605423358985952},
    {2, -1, 2.5, -0.10593021159402378341},
    {2, -3, 0.05, 2.6008118741543625337e-6},
    {2, -3, 0.3, 0.00053698640839624281731},
    {2, -3, 1, 0.012400027878738765234},
    {2, -3, 2.5, 0.0044736818544780425502},
};

struct GammaRef {
  cd z;
  cd value;
};

// mpmath gamma
const GammaRef kGamma[] = {
    {{0.5, 1}, {0.30069461726065581622, -0.42496787943312381261}},
    {{0.5, 7.3}, {0.000015608134726500143227, 0.000021104671824564191901}},
    {{2.25, -1.5}, {0.34343081584333568752, -0.53987808275773268402}},
    {{-0.7, 0.4}, {-1.8230314038421193628, 0.91140113721224382582}},
    {{10, 3}, {197624.13894976546905, 113252.91895947161364}},
    {{0.1, 0}, {9.5135076986687312858, 0.0}},
};

double bump(double theta) {
  const double r = (theta - 1.5) / 0.9;
  return std::abs(r) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - r * r)) : 0.0;
}

std::shared_ptr<const Grid> make_grid(double h, int n_phi = 16) {
  return std::make_shared<const Grid>(GridSpec{0.1, 3.0, h, n_phi});
}

double close(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-2);
}

}  // namespace

TEST_CASE("complex Gamma") {
  for (const auto& r : kGamma) {
    CAPTURE(r.z);
    CHECK(std::abs(ComplexGamma::value(r.z) - r.value) <= 1e-12 * std::abs(r.value));
  }
  CHECK(ComplexGamma::value({5.0, 0.0}).real() == Approx(24.0).epsilon(1e-13));
  CHECK(ComplexGamma::value({0.5, 0.0}).real() == Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
  for (double l = 0.0; l <= 20.0; l += 0.25) {
    const double g2 = std::norm(ComplexGamma::value({0.5, l}));
    CHECK(g2 == Approx(std::numbers::pi / std::cosh(std::numbers::pi * l)).epsilon(1e-10));
  }
  // log form agrees with the value
  const cd z(3.3, -2.1);
  CHECK(std::abs(std::exp(ComplexGamma::log(z)) - ComplexGamma::value(z)) < 1e-12 * std::abs(ComplexGamma::value(z)));
}

TEST_CASE("conical functions against mpmath") {
  for (const auto& r : kConical) {
    CAPTURE(r.lambda);
    CAPTURE(r.n);
    CAPTURE(r.theta);
    const double got = r.n == 0 ? conical_p0(r.lambda, r.theta) : conical_pn(r.lambda, r.n, r.theta);
    CHECK(std::abs(got - r.value) <= 1e-10 * std::abs(r.value) + 1e-13);
    CHECK(std::abs(conical_pn_direct(r.lambda, r.n, r.theta) - r.value) <= 1e-10 * std::abs(r.value) + 1e-13);
  }
  CHECK(conical_p0(1.7, 0.0) == 1.0);
  CHECK(conical_pn(1.0, 0, 0.8) == conical_p0(1.0, 0.8));
  CHECK(validate_conical_conventions() < 1e-8);
}

TEST_CASE("recurrence against the order-n integral") {
  for (double l : {0.5, 1.0, 2.0}) {
    for (double t : {0.5, 1.0, 2.0}) {
      const auto orders = conical_orders(l, 5, t);
      for (int n = 0; n <= 5; ++n) {
        CHECK(close(orders[static_cast<std::size_t>(n)], conical_pn_direct(l, n, t)) <= 1e-8);
      }
    }
  }
  CHECK_THROWS(conical_pn(1.0, kMaxOrder + 1, 1.0));
}

TEST_CASE("Legendre equation residual") {
  // (1 - w^2) P'' - 2 w P' + nu (nu + 1) P = 0, w = cosh theta,
  // nu (nu + 1) = -(lambda^2 + 1/4). Derivatives in w by central differences.
  for (double l : {0.5, 1.0, 2.0}) {
    for (double theta : {0.4, 1.0, 2.0}) {
      const double w = std::cosh(theta);
      double prev = 0.0;
      for (double dw : {1e-2, 5e-3}) {
        auto P = [&](double ww) { return conical_p0(l, std::acosh(ww)); };
        const double p0 = P(w), pp = P(w + dw), pm = P(w - dw);
        const double d1 = (pp - pm) / (2 * dw);
        const double d2 = (pp - 2 * p0 + pm) / (dw * dw);
        const double r = std::abs((1 - w * w) * d2 - 2 * w * d1 - (l * l + 0.25) * p0);
        if (prev > 0.0) CHECK(std::log2(prev / r) == Approx(2.0).epsilon(0.1));
        prev = r;
      }
    }
  }
}

TEST_CASE("normalization and energies") {
  for (double l : {0.25, 1.0, 3.0}) {
    CHECK(std::abs(normalization(l, 0)) ==
          Approx(std::sqrt(2 * std::numbers::pi / (l * std::tanh(std::numbers::pi * l)))).epsilon(1e-13));
    CHECK(std::abs(normalization(l, 0) / normalization(l, 1)) == Approx(std::sqrt(0.25 + l * l)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(normalization(0.0, 0), std::domain_error);
  CHECK(energy(1.0, {}) == Approx(0.625).epsilon(1e-15));
  CHECK(energy(0.0, {}) == Approx(0.125).epsilon(1e-15));
  CHECK(energy(1.0, {2.0, 3.0, 0.5}) == Approx(0.25 / 24.0 * 1.25).epsilon(1e-15));
  for (double l = 0.0; l < 10.0; l += 0.1) CHECK(energy(l, {}) >= 0.125);
}

TEST_CASE("grid") {
  CHECK_THROWS_AS(Grid(GridSpec{0.0, 3.0, 1e-3, 16}), std::invalid_argument);
  CHECK_THROWS_AS(Grid(GridSpec{0.1, 3.0, -1e-3, 16}), std::invalid_argument);
  CHECK_THROWS_AS(Grid(GridSpec{0.1, 3.0, 1e-3, 2}), std::invalid_argument);
  const Grid g(GridSpec{0.1, 3.0, 1e-3, 16});
  CHECK(g.n_theta() == 2901);
  CHECK(g.theta(g.n_theta() - 1) == Approx(3.0).epsilon(1e-12));
  CHECK(g.phi(4) == Approx(std::numbers::pi / 2));

  // inner product approximates int d(cosh theta) d phi
  auto grid = make_grid(1e-3);
  const GridFunction one = sample(grid, [](double, double) { return cd(1.0); });
  const double area = 2 * std::numbers::pi * (std::cosh(3.0) - std::cosh(0.1));
  CHECK(inner_product(one, one).real() == Approx(area).epsilon(1e-3));
}

TEST_CASE("derivative stencils") {
  auto grid = make_grid(1e-3);
  const GridFunction f = sample(grid, [](double th, double ph) { return std::sinh(th) * std::polar(1.0, 3 * ph); });
  const GridFunction df = d_phi(f);
  const GridFunction dt = d_theta(f);
  double e_phi = 0.0, e_theta = 0.0;
  for (int i = 0; i < grid->n_theta(); ++i) {
    for (int j = 0; j < grid->n_phi(); ++j) {
      e_phi = std::max(e_phi, std::abs(df(i, j) - cd(0, 3) * f(i, j)));
      const double th = grid->theta(i);
      e_theta = std::max(e_theta, std::abs(dt(i, j) - std::cosh(th) * std::polar(1.0, 3 * grid->phi(j))));
    }
  }
  CHECK(e_phi < 1e-12);
  CHECK(e_theta < 1e-5);
  // central differences in phi: sin(3 dphi)/dphi instead of 3
  const GridFunction dc = d_phi(f, PhiDerivative::central);
  const double expected = std::sin(3 * grid->dphi()) / grid->dphi();
  CHECK(std::abs(dc(100, 2) - cd(0, expected) * f(100, 2)) < 1e-12);
}

TEST_CASE("Laplace-Beltrami") {
  const Units u;
  auto grid = make_grid(1e-3);
  const GridFunction c = sample(grid, [](double, double) { return cd(2.5); });
  const GridFunction hc = laplace_beltrami(c, u);
  double interior = 0.0;
  for (int i = 1; i + 1 < grid->n_theta(); ++i) interior = std::max(interior, std::abs(hc(i, 3)));
  CHECK(interior < 1e-9);

  CHECK(eigen_residual(grid, {1.0, 0}, u) < 1e-4);
  const double coarse = eigen_residual(make_grid(2e-3), {1.0, 0}, u);
  CHECK(std::log2(coarse / eigen_residual(grid, {1.0, 0}, u)) == Approx(2.0).epsilon(0.1));
  // other units
  const Units v{1.7, 0.4, 0.6};
  CHECK(eigen_residual(grid, {0.8, 2}, v) < 1e-4);

  const GridFunction f = sample(grid, [](double th, double ph) { return bump(th) * std::polar(1.0, ph); });
  const GridFunction g = sample(grid, [](double th, double ph) { return bump(th) * th * std::polar(1.0, -2 * ph) + bump(th); });
  const double defect = std::abs(inner_product(f, laplace_beltrami(g, u)) - inner_product(laplace_beltrami(f, u), g));
  CHECK(defect <= 1e-6 * norm(f) * norm(g));
}

TEST_CASE("angular momentum operators") {
  const Units u{1.0, 1.0, 0.7};
  auto grid = make_grid(1e-3);
  for (int n : {-2, 1, 3}) {
    const GridFunction f = sample(grid, [n](double th, double ph) { return bump(th) * std::polar(1.0, n * ph); });
    const GridFunction j3 = apply_J(3, f, u);
    double err = 0.0;
    for (std::size_t k = 0; k < f.values.size(); ++k) err = std::max(err, std::abs(j3.values[k] - n * 0.7 * f.values[k]));
    CHECK(err < 1e-12);
    // lowered index flips the sign of the third component
    CHECK(std::abs(apply_J_lower(3, f, u).values[20000] + j3.values[20000]) < 1e-15);
  }

  // commutator closure and Casimir, O(h^2)
  auto residuals = [&](double h) {
    auto g = make_grid(h);
    const GridFunction f = sample(g, [](double th, double ph) {
      return bump(th) * (std::polar(1.0, ph) + 0.5 * std::polar(1.0, -2 * ph) + 0.3);
    });
    const GridFunction c = apply_J(1, apply_J(2, f, u), u) - apply_J(2, apply_J(1, f, u), u) -
                           apply_J_lower(3, f, u) * cd(0, u.hbar);
    GridFunction cas(g);
    for (int i = 1; i <= 3; ++i) cas += apply_x_lower(i, apply_J(i, f, u), u.a);
    const GridFunction hj = hamiltonian_from_j(f, u) - laplace_beltrami(f, u);
    return std::array<double, 3>{norm(c, Rows::interior) / norm(f), norm(cas, Rows::interior) / norm(f),
                                 norm(hj, Rows::interior) / norm(f)};
  };
  const auto r1 = residuals(2e-3);
  const auto r2 = residuals(1e-3);
  CHECK(std::log2(r1[0] / r2[0]) == Approx(2.0).epsilon(0.1));
  CHECK(r2[1] < 1e-12);
  CHECK(std::log2(r1[2] / r2[2]) == Approx(2.0).epsilon(0.1));
}

TEST_CASE("momentum hermiticity needs the x correction") {
  const Units u;
  auto defects = [&](double h) {
    auto g = make_grid(h);
    const GridFunction f = sample(g, [](double th, double ph) { return bump(th) * (std::polar(1.0, ph) + 0.3); });
    const GridFunction k = sample(g, [](double th, double ph) { return bump(th) * std::sinh(th) * std::polar(0.7, 2 * ph); });
    double with = 0.0, without = 0.0;
    for (int i = 1; i <= 3; ++i) {
      with = std::max(with, std::abs(inner_product(f, apply_p(i, k, u)) - inner_product(apply_p(i, f, u), k)));
      without = std::max(without, std::abs(inner_product(f, apply_p(i, k, u, false)) -
                                           inner_product(apply_p(i, f, u, false), k)));
    }
    const double scale = norm(f) * norm(k);
    return std::pair{with / scale, without / scale};
  };
  const auto [w1, wo1] = defects(1e-3);
  const auto [w2, wo2] = defects(5e-4);
  CHECK(std::log2(w1 / w2) == Approx(2.0).epsilon(0.1));
  CHECK(wo1 > 0.1);
  CHECK(wo2 == Approx(wo1).epsilon(0.01));
}

TEST_CASE("mode overlaps") {
  auto grid = make_grid(1e-3);
  CHECK(std::abs(mode_overlap({1.0, 0}, {1.0, 1}, grid)) < 1e-13);
  const cd same = mode_overlap({1.0, 1}, {1.0, 1}, grid);
  CHECK(same.real() > 0.0);
  CHECK(std::abs(same.imag()) <= 1e-14 * same.real());
  // unnormalized lambda = 0 mode is P^0 itself
  const GridFunction z = sample_mode(grid, {0.0, 0});
  CHECK(z(500, 0).real() == Approx(conical_p0(0.0, grid->theta(500))).epsilon(1e-14));
}

// hyperq: derive, simulate, spectrum, verify.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperq/cli/commands.hpp"

namespace {

using hyperq::cli::RunConfig;

struct Overrides {
  std::string config_path;
  std::optional<std::string> format, out, only, phi_derivative;
  std::optional<std::uint64_t> seed;
  std::optional<double> a, m, hbar, dt, T, theta_min, theta_max, h;
  std::optional<double> tol_drift, tol_eigen, tol_cross, tol_geodesic, tol_hermiticity;
  std::optional<int> n_phi, sample_every, n_max;
  std::optional<bool> projection, normalize;
  std::vector<double> x0, p0, lambdas;
  std::vector<int> orders;
  std::vector<std::string> faults;
};

void register_options(CLI::App& app, Overrides& o) {
  app.add_option("--config", o.config_path, "JSON run configuration; flags override its fields");
  app.add_option("--format", o.format, "json, text or csv")
      ->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--out", o.out, "write the primary output to this file");
  app.add_option("--seed", o.seed, "seed for randomized property checks");
  app.add_option("--only", o.only, "verify: run a single module")
      ->check(CLI::IsMember({"phase_algebra", "geometry", "classical_sim", "spectral"}));
  app.add_option("--inject-fault", o.faults, "verify/derive negative control")
      ->check(CLI::IsMember({"epsilon-sign", "drop-p-correction", "energy-sign"}));

  app.add_option("--a", o.a, "hyperboloid radius");
  app.add_option("--m", o.m, "mass");
  app.add_option("--hbar", o.hbar, "reduced Planck constant");

  app.add_option("--dt", o.dt, "integrator step");
  app.add_option("--T", o.T, "integration time");
  app.add_flag("--projection,!--no-projection", o.projection, "project onto the constraints after each step");
  app.add_option("--sample-every", o.sample_every, "record every k-th step");
  app.add_option("--x0", o.x0, "initial position x y z")->expected(3);
  app.add_option("--p0", o.p0, "initial momenta p_x p_y p_z (lower index)")->expected(3);

  app.add_option("--theta-min", o.theta_min, "first grid row");
  app.add_option("--theta-max", o.theta_max, "last grid row");
  app.add_option("--theta-step", o.h, "theta grid step h");
  app.add_option("--n-phi", o.n_phi, "phi grid points");
  app.add_option("--phi-derivative", o.phi_derivative, "FFT or central differences in phi")->check(CLI::IsMember({"spectral", "central"}));
  app.add_option("--lambda", o.lambdas, "spectral parameters")->expected(1, -1);
  app.add_option("--n", o.orders, "azimuthal orders")->expected(1, -1);
  app.add_option("--n-max", o.n_max, "largest |n| accepted");
  app.add_flag("--normalize,!--no-normalize", o.normalize, "delta-normalize the modes");

  app.add_option("--tol-drift", o.tol_drift, "relative H, J and constraint drift");
  app.add_option("--tol-eigen", o.tol_eigen, "relative eigen-residual");
  app.add_option("--tol-cross", o.tol_cross, "intrinsic vs embedded, units of a");
  app.add_option("--tol-geodesic", o.tol_geodesic, "RK4 vs closed form, units of a");
  app.add_option("--tol-hermiticity", o.tol_hermiticity, "relative hermiticity defect");
}

template <class T>
void apply(const std::optional<T>& flag, T& field) {
  if (flag) field = *flag;
}

RunConfig resolve(const Overrides& o) {
  RunConfig c;
  if (!o.config_path.empty()) c = hyperq::cli::load_config(o.config_path);
  apply(o.format, c.format);
  apply(o.out, c.out);
  apply(o.only, c.only);
  apply(o.seed, c.seed);
  apply(o.a, c.a);
  apply(o.m, c.m);
  apply(o.hbar, c.hbar);
  apply(o.dt, c.dt);
  apply(o.T, c.T);
  apply(o.projection, c.projection);
  apply(o.sample_every, c.sample_every);
  if (!o.x0.empty()) std::copy(o.x0.begin(), o.x0.end(), c.x0.begin());
  if (!o.p0.empty()) std::copy(o.p0.begin(), o.p0.end(), c.p0.begin());
  apply(o.theta_min, c.theta_min);
  apply(o.theta_max, c.theta_max);
  apply(o.h, c.h);
  apply(o.n_phi, c.n_phi);
  apply(o.phi_derivative, c.phi_derivative);
  if (!o.lambdas.empty()) c.lambdas = o.lambdas;
  if (!o.orders.empty()) c.orders = o.orders;
  apply(o.n_max, c.n_max);
  apply(o.normalize, c.normalize);
  apply(o.tol_drift, c.tol.drift);
  apply(o.tol_eigen, c.tol.eigen);
  apply(o.tol_cross, c.tol.cross);
  apply(o.tol_geodesic, c.tol.geodesic);
  apply(o.tol_hermiticity, c.tol.hermiticity);
  c.faults.insert(o.faults.begin(), o.faults.end());
  hyperq::cli::validate(c);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Particle on the Poincare hyperboloid: symbolic derivation, simulation, spectra"};
  app.require_subcommand(1);
  app.fallthrough();
  Overrides o;
  register_options(app, o);
  auto* derive = app.add_subcommand("derive", "constraint chain, bracket matrix, Dirac brackets");
  auto* simulate = app.add_subcommand("simulate", "classical geodesic integration, CSV trajectory");
  auto* spectrum = app.add_subcommand("spectrum", "conical-function eigenmodes and residuals");
  auto* verify = app.add_subcommand("verify", "run the verification suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return hyperq::cli::kExitUsage;
  }

  try {
    const RunConfig config = resolve(o);
    if (derive->parsed()) return hyperq::cli::cmd_derive(config, std::cout, std::cerr);
    if (simulate->parsed()) return hyperq::cli::cmd_simulate(config, std::cout, std::cerr);
    if (spectrum->parsed()) return hyperq::cli::cmd_spectrum(config, std::cout, std::cerr);
    if (verify->parsed()) return hyperq::cli::cmd_verify(config, std::cout, std::cerr);
  } catch (const hyperq::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return hyperq::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hyperq::cli::kExitToleranceFailure;
  }
  return hyperq::cli::kExitUsage;
}

#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hyperq::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double drift = 1e-8;         // relative H, J drift and |C2|, |C3| for simulate
  double eigen = 1e-4;         // eigen-residual at the configured h
  double cross = 1e-6;         // intrinsic vs embedded, in units of a
  double geodesic = 1e-8;      // embedded RK4 vs closed form, in units of a
  double hermiticity = 1e-6;   // |<f,Pg> - <Pf,g>| / (|f||g|)
};

struct RunConfig {
  double a = 1.0;
  double m = 1.0;
  double hbar = 1.0;

  double dt = 1e-3;
  double T = 10.0;
  bool projection = true;
  int sample_every = 100;
  std::array<double, 3> x0{0.0, 0.0, 1.0};
  std::array<double, 3> p0{1.0, 0.0, 0.0};

  double theta_min = 0.1;
  double theta_max = 3.0;
  double h = 1e-3;
  int n_phi = 16;
  std::string phi_derivative = "spectral";  // or "central"

  std::vector<double> lambdas{0.5, 1.0, 2.0};
  std::vector<int> orders{0, 1, 2};
  bool normalize = true;
  int n_max = 12;

  Tolerances tol;
  std::uint64_t seed = 20240607;
  std::string format;  // empty: command default
  std::string out;
  std::string only;
  std::set<std::string> faults;
};

// Known fault hooks for negative controls.
inline const std::set<std::string>& known_faults() {
  static const std::set<std::string> f = {"epsilon-sign", "drop-p-correction", "energy-sign"};
  return f;
}

inline const std::set<std::string>& known_modules() {
  static const std::set<std::string> m = {"phase_algebra", "geometry", "classical_sim", "spectral"};
  return m;
}

// Fields present in the JSON document replace the defaults. Unknown keys are
// a usage error.
RunConfig config_from_json(const nlohmann::json& doc, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});
nlohmann::json config_to_json(const RunConfig& config);

// Throws UsageError on a violated invariant.
void validate(const RunConfig& config);

}  // namespace hyperq::cli

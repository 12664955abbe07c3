#include "hyperq/cli/config.hpp"

#include <fstream>

namespace hyperq::cli {

using nlohmann::json;

namespace {

template <class T>
void read(const json& doc, const char* key, T& field) {
  if (!doc.contains(key)) return;
  try {
    field = doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("config field '") + key + "': " + e.what());
  }
}

}  // namespace

RunConfig config_from_json(const json& doc, RunConfig c) {
  if (!doc.is_object()) throw UsageError("config must be a JSON object");
  static const std::set<std::string> keys = {
      "a", "m", "hbar", "dt", "T", "projection", "sample_every", "x0", "p0", "theta_min",
      "theta_max", "h", "n_phi", "phi_derivative", "lambdas", "orders", "normalize", "n_max",
      "tolerances", "seed", "format", "out", "only", "faults"};
  for (const auto& [key, value] : doc.items()) {
    if (!keys.count(key)) throw UsageError("unknown config field '" + key + "'");
  }
  read(doc, "a", c.a);
  read(doc, "m", c.m);
  read(doc, "hbar", c.hbar);
  read(doc, "dt", c.dt);
  read(doc, "T", c.T);
  read(doc, "projection", c.projection);
  read(doc, "sample_every", c.sample_every);
  read(doc, "x0", c.x0);
  read(doc, "p0", c.p0);
  read(doc, "theta_min", c.theta_min);
  read(doc, "theta_max", c.theta_max);
  read(doc, "h", c.h);
  read(doc, "n_phi", c.n_phi);
  read(doc, "phi_derivative", c.phi_derivative);
  read(doc, "lambdas", c.lambdas);
  read(doc, "orders", c.orders);
  read(doc, "normalize", c.normalize);
  read(doc, "n_max", c.n_max);
  read(doc, "seed", c.seed);
  read(doc, "format", c.format);
  read(doc, "out", c.out);
  read(doc, "only", c.only);
  if (doc.contains("faults")) {
    std::vector<std::string> f;
    read(doc, "faults", f);
    c.faults = {f.begin(), f.end()};
  }
  if (doc.contains("tolerances")) {
    const json& t = doc.at("tolerances");
    if (!t.is_object()) throw UsageError("tolerances must be an object");
    for (const auto& [key, value] : t.items()) {
      if (key != "drift" && key != "eigen" && key != "cross" && key != "geodesic" &&
          key != "hermiticity") {
        throw UsageError("unknown tolerance '" + key + "'");
      }
    }
    read(t, "drift", c.tol.drift);
    read(t, "eigen", c.tol.eigen);
    read(t, "cross", c.tol.cross);
    read(t, "geodesic", c.tol.geodesic);
    read(t, "hermiticity", c.tol.hermiticity);
  }
  return c;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(doc, std::move(base));
}

json config_to_json(const RunConfig& c) {
  return json{{"a", c.a},
              {"m", c.m},
              {"hbar", c.hbar},
              {"dt", c.dt},
              {"T", c.T},
              {"projection", c.projection},
              {"sample_every", c.sample_every},
              {"x0", c.x0},
              {"p0", c.p0},
              {"theta_min", c.theta_min},
              {"theta_max", c.theta_max},
              {"h", c.h},
              {"n_phi", c.n_phi},
              {"phi_derivative", c.phi_derivative},
              {"lambdas", c.lambdas},
              {"orders", c.orders},
              {"normalize", c.normalize},
              {"n_max", c.n_max},
              {"tolerances",
               {{"drift", c.tol.drift},
                {"eigen", c.tol.eigen},
                {"cross", c.tol.cross},
                {"geodesic", c.tol.geodesic},
                {"hermiticity", c.tol.hermiticity}}},
              {"seed", c.seed},
              {"faults", std::vector<std::string>(c.faults.begin(), c.faults.end())}};
}

void validate(const RunConfig& c) {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) throw UsageError(std::string(name) + " must be positive");
  };
  positive(c.a, "a");
  positive(c.m, "m");
  positive(c.hbar, "hbar");
  positive(c.dt, "dt");
  if (!(c.T >= 0.0)) throw UsageError("T must be non-negative");
  if (c.sample_every < 1) throw UsageError("sample_every must be at least 1");
  positive(c.theta_min, "theta_min");
  if (!(c.theta_max > c.theta_min)) throw UsageError("theta_max must exceed theta_min");
  positive(c.h, "h");
  if (c.n_phi < 4) throw UsageError("n_phi must be at least 4");
  if (c.phi_derivative != "spectral" && c.phi_derivative != "central") {
    throw UsageError("phi_derivative must be 'spectral' or 'central'");
  }
  if (c.phi_derivative == "spectral" && (c.n_phi & (c.n_phi - 1)) != 0) {
    throw UsageError("n_phi must be a power of two for spectral phi derivatives");
  }
  if (c.n_max < 0 || c.n_max > 12) throw UsageError("n_max must lie in [0, 12]");
  for (double l : c.lambdas) {
    if (!(l >= 0.0)) throw UsageError("lambda values must be non-negative");
  }
  for (int n : c.orders) {
    if (n > c.n_max || n < -c.n_max) throw UsageError("order exceeds n_max");
    if (2 * std::abs(n) >= c.n_phi) throw UsageError("|n| must be below n_phi / 2");
  }
  positive(c.tol.drift, "tolerances.drift");
  positive(c.tol.eigen, "tolerances.eigen");
  positive(c.tol.cross, "tolerances.cross");
  positive(c.tol.geodesic, "tolerances.geodesic");
  positive(c.tol.hermiticity, "tolerances.hermiticity");
  if (!c.format.empty() && c.format != "json" && c.format != "text" && c.format != "csv") {
    throw UsageError("format must be json, text or csv");
  }
  if (!c.only.empty() && !known_modules().count(c.only)) {
    throw UsageError("unknown module '" + c.only + "'");
  }
  for (const auto& f : c.faults) {
    if (!known_faults().count(f)) throw UsageError("unknown fault '" + f + "'");
  }
}

}  // namespace hyperq::cli

#include "hyperq/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "hyperq/algebra/dirac.hpp"
#include "hyperq/algebra/iso12.hpp"
#include "hyperq/classical/simulation.hpp"
#include "hyperq/classical/trajectory_csv.hpp"
#include "hyperq/spectral/operators.hpp"
#include "hyperq/verify/suite.hpp"

namespace hyperq::cli {

using nlohmann::json;

namespace {

// config.out when set, else the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }
  bool redirected() const { return file_ != nullptr; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

json matrix_json(const algebra::ExprMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

json derive_document(const RunConfig& config) {
  using namespace hyperq::algebra;
  const Iso12Options iso{config.faults.count("epsilon-sign") ? -1 : 1};
  const DiracAlgebra algebra = DiracAlgebra::standard();
  const ConstraintSet& cs = algebra.constraints();

  json doc;
  doc["hamiltonian"] = cs.hamiltonian.to_string();
  doc["constraints"] = json::array();
  doc["constraint_chain"] = json::array();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    doc["constraints"].push_back(cs[i].to_string());
    doc["constraint_chain"].push_back({{"name", "C" + std::to_string(i + 1)},
                                       {"value", cs.items[i].value.to_string()},
                                       {"raw_derivative", cs.items[i].raw_derivative.to_string()},
                                       {"scale", cs.items[i].scale.to_string()}});
  }
  doc["closing_derivative"] = cs.closing_derivative.to_string();
  doc["M"] = matrix_json(algebra.matrix().entries);
  doc["M_inv"] = matrix_json(algebra.matrix().inverse);

  json table = json::object();
  json identities = json::array();
  bool pass = true;
  auto record = [&](const IdentityCheck& c) {
    identities.push_back({{"family", c.family},
                          {"name", c.name},
                          {"expected", c.expected.to_string()},
                          {"holds", c.holds},
                          {"residual", c.residual.to_string()}});
    pass = pass && c.holds;
  };
  for (const auto& c : modified_bracket_table(algebra, iso)) {
    table[c.name] = algebra.reduce(c.computed).to_string();
    record(c);
  }
  for (const auto& c : verify_iso12(algebra, iso).checks) {
    // The table above already holds these.
    if (c.family == "commuting_positions" || c.family == "iso12_closure") continue;
    record(c);
  }
  doc["dirac_table"] = table;
  doc["identities"] = identities;
  doc["pass"] = pass;
  return doc;
}

std::string derive_text(const json& doc) {
  std::ostringstream out;
  out << "hamiltonian = " << doc.at("hamiltonian").get<std::string>() << "\n\n";
  out << "constraints\n";
  const auto& chain = doc.at("constraint_chain");
  for (const auto& c : chain) {
    out << "  " << c.at("name").get<std::string>() << " = " << c.at("value").get<std::string>()
        << "\n";
    out << "    scale = " << c.at("scale").get<std::string>()
        << ", raw = " << c.at("raw_derivative").get<std::string>() << "\n";
  }
  out << "  closing = " << doc.at("closing_derivative").get<std::string>() << "\n\n";
  for (const char* key : {"M", "M_inv"}) {
    out << key << "\n";
    const auto& m = doc.at(key);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        out << "  " << key << "[" << i + 1 << "," << j + 1 << "] = " << m[i][j].get<std::string>()
            << "\n";
      }
    }
    out << "\n";
  }
  out << "dirac_table\n";
  for (const auto& [name, value] : doc.at("dirac_table").items()) {
    out << "  " << name << " = " << value.get<std::string>() << "\n";
  }
  out << "\nidentities\n";
  for (const auto& c : doc.at("identities")) {
    out << "  " << (c.at("holds").get<bool>() ? "holds " : "FAILS ") << c.at("family").get<std::string>()
        << " " << c.at("name").get<std::string>();
    if (!c.at("holds").get<bool>()) out << "  residual " << c.at("residual").get<std::string>();
    out << "\n";
  }
  out << "\nresult: " << (doc.at("pass").get<bool>() ? "pass" : "FAIL") << "\n";
  return out.str();
}

json parse_derive_text(std::string_view text) {
  json doc = {{"constraints", json::array()},
              {"M", json::array()},
              {"M_inv", json::array()},
              {"dirac_table", json::object()}};
  std::istringstream in{std::string(text)};
  std::string line;
  std::string section;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] != ' ') {
      section = line;
      continue;
    }
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) continue;
    const std::string lhs = line.substr(2, eq - 2);
    const std::string rhs = line.substr(eq + 3);
    if (section == "constraints" && lhs.size() >= 2 && lhs[0] == 'C' && lhs[1] != 'l') {
      doc["constraints"].push_back(rhs);
    } else if (section == "M" || section == "M_inv") {
      int i = 0, j = 0;
      if (std::sscanf(lhs.c_str() + section.size(), "[%d,%d]", &i, &j) != 2) {
        throw std::runtime_error("bad matrix line: " + line);
      }
      auto& m = doc[section];
      while (static_cast<int>(m.size()) < i) m.push_back(json::array());
      m[static_cast<std::size_t>(i - 1)].push_back(rhs);
    } else if (section == "dirac_table") {
      doc["dirac_table"][lhs] = rhs;
    }
  }
  return doc;
}

int cmd_derive(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const json doc = derive_document(config);
  Sink sink(config.out, out);
  const std::string format = config.format.empty() ? "json" : config.format;
  if (format == "json") {
    *sink << doc.dump(2) << "\n";
  } else if (format == "text") {
    *sink << derive_text(doc);
  } else {
    throw UsageError("derive supports --format json or text");
  }
  if (!doc.at("pass").get<bool>()) {
    err << "derive: symbolic identity failure\n";
    return kExitToleranceFailure;
  }
  return kExitOk;
}

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  using namespace hyperq::classical;
  const Params params{config.m, config.a};
  EmbeddedState given;
  for (int i = 0; i < 3; ++i) {
    given.x[i] = config.x0[static_cast<std::size_t>(i)];
    given.p[i] = config.p0[static_cast<std::size_t>(i)];
  }
  EmbeddedState s0;
  try {
    s0 = project_on_shell(given, params);
    if (s0.x[2] <= 0) throw std::domain_error("position is on the z < 0 sheet");
  } catch (const std::exception& e) {
    throw UsageError(std::string("initial state: ") + e.what());
  }
  double adjustment = 0.0;
  for (int i = 0; i < 3; ++i) {
    adjustment = std::max({adjustment, static_cast<double>(fabsq(s0.x[i] - given.x[i])),
                           static_cast<double>(fabsq(s0.p[i] - given.p[i]))});
  }

  EmbeddedOptions opt;
  opt.dt = config.dt;
  opt.duration = config.T;
  opt.projection = config.projection;
  opt.sample_every = config.sample_every;
  opt.tol_c = config.tol.drift;
  const TrajectoryRecord record = integrate_embedded(s0, params, opt);
  const DriftSummary d = summarize(record, params);
  const double tol = config.tol.drift;
  const bool pass = !record.drift_warning && d.c2 <= tol && d.c3 <= tol && d.energy <= tol &&
                    d.angular_momentum <= tol;

  const json summary = {{"samples", record.samples.size()},
                        {"t_end", static_cast<double>(record.samples.back().t)},
                        {"dt", config.dt},
                        {"projection", config.projection},
                        {"initial_adjustment", adjustment},
                        {"max_c2_residual", d.c2},
                        {"max_c3_residual", d.c3},
                        {"energy_drift", d.energy},
                        {"angular_momentum_drift", d.angular_momentum},
                        {"energy_from_j_deviation", d.energy_from_j},
                        {"drift_warning", record.drift_warning},
                        {"tolerance", tol},
                        {"pass", pass}};

  // csv: trajectory to --out or stdout, summary beside it. json, text: the
  // summary on stdout, trajectory only when --out names a file.
  const std::string format = config.format.empty() ? "csv" : config.format;
  Sink sink(config.out, out);
  if (format == "csv" || sink.redirected()) write_trajectory_csv(*sink, record);
  std::ostream& s = (format == "csv" && !sink.redirected()) ? err : out;
  if (format == "json") {
    s << summary.dump(2) << "\n";
  } else {
    s << "# simulate summary\n";
    if (adjustment > 0.0) {
      s << "# initial state projected on shell, max adjustment " << sci(adjustment) << "\n";
    }
    s << "# samples " << record.samples.size() << ", projection "
      << (config.projection ? "on" : "off") << "\n";
    s << "# max |C2|/a^2       " << sci(d.c2) << "\n";
    s << "# max |C3|/(|x||p|)  " << sci(d.c3) << "\n";
    s << "# H drift            " << sci(d.energy) << "\n";
    s << "# J drift            " << sci(d.angular_momentum) << "\n";
    s << "# H vs J.J/(2ma^2)   " << sci(d.energy_from_j) << "\n";
    if (record.drift_warning) s << "# WARNING constraint drift beyond 1e3 * tol\n";
    s << "# result " << (pass ? "pass" : "FAIL") << " (tolerance " << sci(tol) << ")\n";
  }
  return pass ? kExitOk : kExitToleranceFailure;
}

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err) {
  using namespace hyperq::spectral;
  const Units units{config.a, config.m, config.hbar};
  const PhiDerivative method =
      config.phi_derivative == "central" ? PhiDerivative::central : PhiDerivative::spectral;
  auto grid = std::make_shared<const Grid>(
      GridSpec{config.theta_min, config.theta_max, config.h, config.n_phi});

  struct ModeOut {
    double lambda;
    int n;
    bool normalized;
    double energy;
    double residual;
    GridFunction psi;
  };
  std::vector<ModeOut> modes;
  bool pass = true;
  for (double l : config.lambdas) {
    for (int n : config.orders) {
      const bool normalized = config.normalize && l > 0.0;
      if (config.normalize && l == 0.0) {
        err << "warning: lambda = 0 has no finite normalization; writing n = " << n
            << " unnormalized\n";
      }
      GridFunction psi = sample_mode(grid, {l, n}, normalized);
      const double e = energy(l, units);
      const double r = eigen_residual(psi, e, units, method);
      pass = pass && r <= config.tol.eigen;
      modes.push_back({l, n, normalized, e, r, std::move(psi)});
    }
  }

  const std::string format = config.format.empty() ? "csv" : config.format;
  Sink sink(config.out, out);
  if (format == "csv") {
    *sink << "lambda,n,theta,psi_real,psi_imag,eigen_residual,energy\n";
    char buf[256];
    for (const auto& m : modes) {
      // phi = 0 column
      for (int i = 0; i < grid->n_theta(); ++i) {
        const cd v = m.psi(i, 0);
        std::snprintf(buf, sizeof buf, "%.17g,%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", m.lambda, m.n,
                      grid->theta(i), v.real(), v.imag(), m.residual, m.energy);
        *sink << buf;
      }
    }
  } else {
    json doc = {{"grid",
                 {{"theta_min", config.theta_min},
                  {"theta_max", grid->theta(grid->n_theta() - 1)},
                  {"h", config.h},
                  {"n_theta", grid->n_theta()},
                  {"n_phi", config.n_phi}}},
                {"tolerance", config.tol.eigen},
                {"pass", pass},
                {"modes", json::array()}};
    for (const auto& m : modes) {
      doc["modes"].push_back({{"lambda", m.lambda},
                              {"n", m.n},
                              {"energy", m.energy},
                              {"eigen_residual", m.residual},
                              {"normalized", m.normalized}});
    }
    if (format == "json") {
      *sink << doc.dump(2) << "\n";
    } else {
      *sink << "lambda     n   energy         eigen_residual\n";
      char buf[128];
      for (const auto& m : modes) {
        std::snprintf(buf, sizeof buf, "%-10g %-3d %-14.8g %.3e%s\n", m.lambda, m.n, m.energy,
                      m.residual, m.normalized ? "" : "  (unnormalized)");
        *sink << buf;
      }
      *sink << "result " << (pass ? "pass" : "FAIL") << " (tolerance " << sci(config.tol.eigen)
            << ")\n";
    }
  }
  if (!pass) err << "spectrum: eigen-residual above tolerance\n";
  return pass ? kExitOk : kExitToleranceFailure;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const verify::Report report = verify::run_suite(config);
  const std::string format = config.format.empty() ? "json" : config.format;
  Sink sink(config.out, out);
  if (format == "json") {
    json doc = verify::to_json(report);
    doc["config"] = config_to_json(config);
    *sink << doc.dump(2) << "\n";
  } else if (format == "text") {
    *sink << verify::to_text(report);
  } else {
    throw UsageError("verify supports --format json or text");
  }
  for (const auto* c : report.failures()) err << "FAIL " << c->module << "/" << c->name << "\n";
  return report.all_pass() ? kExitOk : kExitVerifyFailure;
}

}  // namespace hyperq::cli

#include "hyperq/verify/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <tuple>

namespace hyperq::verify {

CheckResult bound_check(std::string module, std::string name, double measured, double tolerance,
                        std::string detail) {
  CheckResult c;
  c.module = std::move(module);
  c.name = std::move(name);
  c.measured = measured;
  c.tolerance = tolerance;
  // NaN fails.
  c.pass = measured <= tolerance;
  c.detail = std::move(detail);
  return c;
}

CheckResult target_check(std::string module, std::string name, double measured, double expected,
                         double tolerance, std::string detail) {
  CheckResult c;
  c.module = std::move(module);
  c.name = std::move(name);
  c.measured = measured;
  c.comparison = Comparison::within;
  c.expected = expected;
  c.tolerance = tolerance;
  c.pass = std::abs(measured - expected) <= tolerance;
  c.detail = std::move(detail);
  return c;
}

CheckResult floor_check(std::string module, std::string name, double measured, double minimum,
                        std::string detail) {
  CheckResult c;
  c.module = std::move(module);
  c.name = std::move(name);
  c.measured = measured;
  c.tolerance = minimum;
  c.comparison = Comparison::at_least;
  c.pass = measured >= minimum;
  c.detail = std::move(detail);
  return c;
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<const CheckResult*> Report::failures() const {
  std::vector<const CheckResult*> out;
  for (const auto& c : checks) {
    if (!c.pass) out.push_back(&c);
  }
  return out;
}

void Report::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& l, const CheckResult& r) {
    return std::tie(l.module, l.name) < std::tie(r.module, r.name);
  });
}

namespace {

// JSON has no NaN or infinity.
nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

const char* comparison_name(Comparison c) {
  switch (c) {
    case Comparison::within:
      return "within";
    case Comparison::at_least:
      return "at_least";
    default:
      return "at_most";
  }
}

}  // namespace

nlohmann::json to_json(const CheckResult& c) {
  nlohmann::json j = {{"module", c.module},
                      {"name", c.name},
                      {"measured", number(c.measured)},
                      {"tolerance", number(c.tolerance)},
                      {"comparison", comparison_name(c.comparison)},
                      {"pass", c.pass}};
  if (c.expected) j["expected"] = number(*c.expected);
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  std::vector<std::string> failed;
  for (const auto* c : r.failures()) failed.push_back(c->module + "/" + c->name);
  return {{"seed", r.seed},
          {"pass", r.all_pass()},
          {"n_checks", r.checks.size()},
          {"failed", failed},
          {"checks", checks}};
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  char buf[64];
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.module << "/" << c.name << "  measured ";
    std::snprintf(buf, sizeof buf, "%.3e", c.measured);
    out << buf;
    if (c.comparison == Comparison::within) {
      std::snprintf(buf, sizeof buf, "%.3e", c.expected.value_or(0.0));
      out << "  expected " << buf << " +-";
    } else {
      out << (c.comparison == Comparison::at_least ? "  >=" : "  <=");
    }
    std::snprintf(buf, sizeof buf, " %.3e", c.tolerance);
    out << buf;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  out << r.checks.size() << " checks, " << r.failures().size() << " failed, seed " << r.seed
      << "\n";
  return out.str();
}

}  // namespace hyperq::verify

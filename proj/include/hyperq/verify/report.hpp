#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hyperq::verify {

// at_most: measured <= tolerance. within: |measured - expected| <= tolerance.
// at_least: measured >= tolerance (negative controls).
enum class Comparison { at_most, within, at_least };

struct CheckResult {
  std::string module;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::at_most;
  std::optional<double> expected;
  bool pass = false;
  std::string detail;
};

CheckResult bound_check(std::string module, std::string name, double measured, double tolerance,
                        std::string detail = {});
CheckResult target_check(std::string module, std::string name, double measured, double expected,
                         double tolerance, std::string detail = {});
CheckResult floor_check(std::string module, std::string name, double measured, double minimum,
                        std::string detail = {});

struct Report {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::vector<const CheckResult*> failures() const;
  // By (module, name); execution order never shows in output.
  void sort();
};

nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace hyperq::verify

#include "hyperq/verify/suite.hpp"

#include <functional>
#include <future>
#include <utility>

namespace hyperq::verify {

Report run_suite(const cli::RunConfig& config) {
  using Suite = std::vector<CheckResult> (*)(const cli::RunConfig&);
  const std::vector<std::pair<std::string, Suite>> suites = {
      {"phase_algebra", &phase_algebra_checks},
      {"geometry", &geometry_checks},
      {"classical_sim", &classical_checks},
      {"spectral", &spectral_checks},
  };
  std::vector<std::future<std::vector<CheckResult>>> jobs;
  for (const auto& [module, fn] : suites) {
    if (!config.only.empty() && config.only != module) continue;
    jobs.push_back(std::async(std::launch::async, fn, std::cref(config)));
  }
  Report report;
  report.seed = config.seed;
  for (auto& job : jobs) {
    auto checks = job.get();
    report.checks.insert(report.checks.end(), std::make_move_iterator(checks.begin()),
                         std::make_move_iterator(checks.end()));
  }
  report.sort();
  return report;
}

}  // namespace hyperq::verify

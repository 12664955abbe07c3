#pragma once

#include <vector>

#include "hyperq/cli/config.hpp"
#include "hyperq/verify/report.hpp"

namespace hyperq::verify {

// Each suite reads the physical units, integrator and grid settings, the
// tolerances, the seed and the fault hooks from the config.
std::vector<CheckResult> phase_algebra_checks(const cli::RunConfig& config);
std::vector<CheckResult> geometry_checks(const cli::RunConfig& config);
std::vector<CheckResult> classical_checks(const cli::RunConfig& config);
std::vector<CheckResult> spectral_checks(const cli::RunConfig& config);

// Runs every module, or only config.only when set; suites run concurrently
// and the report comes back sorted.
Report run_suite(const cli::RunConfig& config);

}  // namespace hyperq::verify

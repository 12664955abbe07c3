#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperq/classical/simulation.hpp"

namespace hyperq::classical {

inline constexpr std::array<const char*, 15> kTrajectoryColumns = {
    "t",  "x",  "y",  "z",  "p_x", "p_y",         "p_z",        "theta",
    "phi", "H", "J1", "J2", "J3",  "C2_residual", "C3_residual"};

// Values are written with format_real, so reading them back is exact.
void write_trajectory_csv(std::ostream& out, const TrajectoryRecord& record);

// Throws std::runtime_error on a malformed header or row.
std::vector<Sample> read_trajectory_csv(std::istream& in);

}  // namespace hyperq::classical

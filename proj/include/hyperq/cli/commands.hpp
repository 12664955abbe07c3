#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hyperq/cli/config.hpp"

namespace hyperq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitToleranceFailure = 2;
inline constexpr int kExitUsage = 64;

// Each command writes its primary output to config.out when set, otherwise to
// out; summaries and warnings that would corrupt that stream go to err.
int cmd_derive(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

// Derivation document: constraints[4], constraint_chain, M, M_inv,
// dirac_table, identities and pass.
nlohmann::json derive_document(const RunConfig& config);
std::string derive_text(const nlohmann::json& doc);
// Reads the text report back into constraints, M, M_inv and dirac_table.
nlohmann::json parse_derive_text(std::string_view text);

}  // namespace hyperq::cli

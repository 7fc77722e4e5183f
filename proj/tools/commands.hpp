#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "agroup/constructions.hpp"
#include "agroup/error.hpp"

namespace agroup::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitCheckFailed = 2,
  kExitResourceCap = 3,
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;  // stdout payload, LF terminated
  std::string error;   // diagnostic for stderr
};

struct CommandOptions {
  bool json = false;
  Limits limits;
};

/// Full verification report for a family group.
Json verify_report(const FamilyParams& params, const Limits& limits = {});
/// Exit status implied by a verify report: 0 iff every asserted property holds.
int verify_exit_code(const Json& report);
std::string render_verify_text(const Json& report);

Json search_report(std::uint64_t max_order);
std::string render_search_text(const Json& report);

Json decompose_report(const std::string& spec, const Limits& limits = {});
std::string render_decompose_text(const Json& report);

CommandResult run_verify(const std::string& params_text, const CommandOptions& options);
CommandResult run_search(std::uint64_t max_order, const CommandOptions& options);
CommandResult run_decompose(const std::string& spec, const CommandOptions& options);

}  // namespace agroup::cli

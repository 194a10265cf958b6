#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mhc/cyclo.hpp"
#include "mhc/group.hpp"

namespace mhc::cli {

inline constexpr const char* kSchemaVersion = "1.0.0";

struct CommandResult {
  int code = 0;
  std::string out;
  std::string err;
};

/// Runs one command; `args` excludes the program name. Exit codes: 0 success,
/// 2 usage, parse or validation errors, 1 capacity, cyclicity or internal errors.
CommandResult run_command(const std::vector<std::string>& args);

/// "trivial" | "char:k1,k2,..." | JSON list of exponents on the canonical generators.
Character parse_sigma(const GroupPtr& g, std::string_view text);

nlohmann::ordered_json scalar_json(const CycloScalar& value);

/// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::string cache_key(std::string_view canonical_input);

}  // namespace mhc::cli

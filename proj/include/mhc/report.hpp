#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace mhc {

inline constexpr const char* kEmptyTuple = "()";

/// One named pass/fail entry. Failing entries carry the group elements at
/// which the failure was observed; a failure on C^0 is located at kEmptyTuple.
struct CheckEntry {
  std::string check;
  bool pass = true;
  std::optional<std::size_t> degree;
  std::vector<std::string> counterexample;
};

using Report = std::vector<CheckEntry>;

inline bool all_pass(const Report& report) {
  for (const auto& e : report)
    if (!e.pass) return false;
  return true;
}

inline nlohmann::ordered_json to_json(const CheckEntry& e) {
  nlohmann::ordered_json j;
  j["check"] = e.check;
  if (e.degree) j["degree"] = *e.degree;
  j["pass"] = e.pass;
  if (!e.pass) j["counterexample"] = e.counterexample;
  return j;
}

inline nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& e : report) j.push_back(to_json(e));
  return j;
}

}  // namespace mhc

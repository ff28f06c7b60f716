#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "peirce/radical.hpp"

namespace peirce {

struct CliOptions {
  std::string command;  // info | radical | structure | rank | regular | corner | decompose | shapes | verify | gen
  std::string input;    // algebra file, or the generator name for gen
  std::optional<std::uint32_t> p;
  std::uint64_t seed = 7;
  std::string element;
  bool full = false;
  std::string suite = "all";
  std::size_t cases = 200;
  std::size_t d_block = 1;
  std::uint64_t brute_cap = kDefaultBruteCap;
  std::string out;
};

/// Exit codes: 0 when every ledger entry holds, 1 on a failed assertion,
/// 2 on an input error (bad file, unmet hypothesis, p too small).
struct Report {
  nlohmann::ordered_json doc;
  int exit_code = 0;
};

/// Never throws for library errors; they become the "error" field.
Report run_command(const CliOptions& opt);

/// Human-readable form of a report.
std::string render_text(const nlohmann::ordered_json& doc);

std::string fnv1a_digest(std::string_view bytes);

}  // namespace peirce

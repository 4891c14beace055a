#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace twogroups::cli {

inline constexpr const char* kSchemaVersion = "twogroups-report/1";

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"validate",       "strictify", "extract-xmod",
                                              "xmod-to-2group", "bibundle-check", "nerve",
                                              "kan-check",      "pi1",       "roundtrip"};
  return names;
}

/// Input kinds, keyed by flag name without dashes.
inline const std::vector<std::string>& input_kinds() {
  static const std::vector<std::string> kinds{"twogroup", "xmod",       "groupoid",     "complex",
                                              "bibundle", "simplicial", "partial-group"};
  return kinds;
}

struct Command {
  std::string subcommand;
  std::map<std::string, std::string> inputs;  // kind -> path
  std::size_t depth = 3;
  std::size_t kan_n = 2;
  std::size_t move_budget = 10000;
  bool verify_boundary = false;
  std::string out;                            // artifact path; empty embeds it in the report
  std::string format = "json";
};

enum ExitCode : int { kPass = 0, kViolation = 1, kStructural = 2, kInconclusive = 3 };

struct Outcome {
  int exit_code = kPass;
  std::string report;       // the document for standard output
  std::string diagnostic;   // one line for standard error, empty on success
};

/// Dispatches one subcommand. Never throws; every failure becomes an exit
/// code plus a report.
Outcome run(const Command& cmd);

}  // namespace twogroups::cli

// Command implementations behind the toric-weights executable.
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace toric::cli {

enum class Format { human, machine };

enum ExitCode : int { ok = 0, failure = 1, input_error = 2, cap_exceeded = 3 };

struct RunConfig {
  std::string command;  // check | triangulations | vectors | polytope | verify
  std::string input;
  std::uint64_t seed = 0;
  std::size_t trials = 20;
  std::size_t max_triangulations = 1'000'000;
  std::optional<double> time_budget_seconds;
  Format format = Format::human;
  bool skip_delzant_check = false;
  std::string kind;  // vectors: gkz|boundary|hurwitz|all; polytope: chow|hurwitz
};

/// Runs one command, writing the report to `out` and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace toric::cli

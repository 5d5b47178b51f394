#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cornell.h"
#include "record.hpp"

namespace cli {

struct SolveSettings {
  std::optional<std::string> r0;
  int digits = 12;      // decimals printed for energies
  int precision = 50;   // working decimal digits
  int max_depth = 200;
};

struct SolveOutcome {
  ResultRecord record;
  cornell_status status = CORNELL_OK;
  std::string message;
  // Energy with extra decimals, for deviations against references.
  std::string energy_long;
  // (depth, root) pairs of a failed solve.
  std::vector<std::pair<int, std::string>> trace;

  bool ok() const noexcept { return status == CORNELL_OK; }
};

// Decimals used for energy_long.
inline constexpr int kLongDecimals = 30;

int default_precision();

// Solves one state through the C interface. Solver failures are reported in
// the outcome; bad arguments throw ApiError.
SolveOutcome solve_state(const StateSpec& state, const SolveSettings& settings);

// Bounds-only record.
ResultRecord bounds_record(const StateSpec& state, const SolveSettings& settings);

}  // namespace cli

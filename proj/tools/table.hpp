#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "record.hpp"
#include "solve.hpp"

namespace cli {

struct ReferenceRow {
  StateSpec state;
  std::string r0;
  std::string e_ref;
  int n_ref = 0;
  bool suspect = false;
  // Second published value for the same state, when the table has one.
  std::optional<std::string> e_alt;
};

std::vector<ReferenceRow> parse_reference(const std::string& text);
std::vector<ReferenceRow> load_reference(const std::filesystem::path& path);

struct Tolerance {
  enum class Kind { kAbsolute, kRelative, kSignificant };
  Kind kind = Kind::kAbsolute;
  // Bound for absolute/relative; number of figures for kSignificant.
  double value = 0;

  // Allowed absolute deviation from `reference`.
  long double allowed(long double reference) const;
  std::string describe() const;
};

struct TablePreset {
  std::string name;
  std::string file;
  int digits = 12;
  Tolerance tolerance;
  std::optional<Tolerance> alt_tolerance;
  std::string alt_label;
  // Also integrate the wavefunction and require n interior nodes.
  bool check_nodes = false;
};

const std::vector<TablePreset>& presets();
const TablePreset& find_preset(const std::string& name);

struct RowReport {
  ReferenceRow reference;
  SolveOutcome outcome;
  std::string deviation;
  std::optional<std::string> alt_deviation;
  std::optional<int> nodes;
  bool scored = true;
  bool pass = false;
  bool alt_pass = true;
};

struct TableReport {
  std::string preset;
  std::vector<RowReport> rows;
  int scored = 0;
  int passed = 0;
  bool solver_failure = false;

  bool ok() const noexcept { return !solver_failure && passed == scored; }
};

std::filesystem::path default_data_dir();

// Solves every row with its tabulated r0; threads <= 1 runs inline.
TableReport run_table(const TablePreset& preset, const SolveSettings& base,
                      const std::filesystem::path& data_dir, int threads);

// Report excluding timings, so reruns compare equal.
std::string render_report(const TableReport& report, Format format);

}  // namespace cli

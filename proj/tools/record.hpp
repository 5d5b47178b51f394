#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cli {

struct StateSpec {
  std::string a = "1";
  std::string c = "1";
  int d = 3;
  int l = 0;
  int n = 0;
};

// One solved (or bounded) state. Solve records carry E, N and r0; bounds
// records carry nu_low, nu_up and lambda instead.
struct ResultRecord {
  std::string a;
  std::string c;
  int d = 3;
  int l = 0;
  int n = 0;
  std::optional<std::string> energy;
  std::optional<int> depth;
  std::optional<std::string> r0;
  int precision = 0;
  std::string e_low;
  std::string e_up;
  std::optional<std::string> nu_low;
  std::optional<std::string> nu_up;
  std::optional<std::string> lambda;
  long long elapsed_ms = 0;

  bool operator==(const ResultRecord&) const = default;
};

void to_json(nlohmann::json& j, const ResultRecord& r);
void from_json(const nlohmann::json& j, ResultRecord& r);

enum class Format { kJson, kCsv, kText };
Format parse_format(const std::string& name);

std::string csv_escape(const std::string& field);
std::string csv_line(const std::vector<std::string>& fields);

std::vector<std::string> csv_columns(const ResultRecord& r);
std::vector<std::string> csv_values(const ResultRecord& r);
std::string text_block(const ResultRecord& r);

// Whole output for one record, newline-terminated.
std::string render(const ResultRecord& r, Format format);

}  // namespace cli

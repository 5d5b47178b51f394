#include "table.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "api.hpp"

namespace cli {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long double to_ld(const std::string& s) {
  char* end = nullptr;
  long double v = std::strtold(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  return v;
}

std::string sci(long double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3Le", v);
  return buf;
}

const char* kColumns[] = {"a", "c", "d", "l", "n", "r0", "E_ref", "N_ref",
                          "suspect"};

int nodes_of(const ReferenceRow& row, const std::string& energy) {
  cornell_problem* raw = nullptr;
  check(cornell_problem_create(row.state.a.c_str(), row.state.c.c_str(),
                               row.state.d, row.state.l, row.state.n, &raw));
  ProblemHandle p(raw);
  cornell_wavefunction* w = nullptr;
  check(cornell_wavefunction_compute(p.get(), energy.c_str(), "12", 20000, &w));
  WavefunctionHandle wave(w);
  return cornell_wavefunction_nodes(wave.get());
}

}  // namespace

std::vector<ReferenceRow> parse_reference(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::string> header;
  std::vector<ReferenceRow> rows;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line);
    for (auto& f : fields) f = trim(f);
    if (header.empty()) {
      header = fields;
      bool good = header.size() >= 9;
      for (size_t i = 0; good && i < 9; ++i) good = header[i] == kColumns[i];
      if (!good || header.size() > 10 || (header.size() == 10 && header[9] != "E_alt")) {
        throw std::runtime_error("reference header must be "
                                 "a,c,d,l,n,r0,E_ref,N_ref,suspect[,E_alt]");
      }
      continue;
    }
    if (fields.size() != header.size()) {
      throw std::runtime_error("reference line " + std::to_string(line_no) +
                               ": expected " + std::to_string(header.size()) +
                               " fields");
    }
    ReferenceRow row;
    row.state.a = fields[0];
    row.state.c = fields[1];
    row.state.d = std::stoi(fields[2]);
    row.state.l = std::stoi(fields[3]);
    row.state.n = std::stoi(fields[4]);
    row.r0 = fields[5];
    row.e_ref = fields[6];
    row.n_ref = std::stoi(fields[7]);
    row.suspect = fields[8] == "1";
    if (header.size() == 10 && !fields[9].empty()) row.e_alt = fields[9];
    rows.push_back(std::move(row));
  }
  if (header.empty()) throw std::runtime_error("reference file has no header");
  return rows;
}

std::vector<ReferenceRow> load_reference(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_reference(os.str());
}

long double Tolerance::allowed(long double reference) const {
  switch (kind) {
    case Kind::kAbsolute:
      return value;
    case Kind::kRelative:
      return value * std::fabs(reference);
    case Kind::kSignificant: {
      // Half a unit in the last of `value` significant figures.
      int exponent = static_cast<int>(std::floor(std::log10(std::fabs(reference))));
      return 0.5L * std::pow(10.0L, exponent - static_cast<int>(value) + 1);
    }
  }
  return 0;
}

std::string Tolerance::describe() const {
  char buf[48];
  switch (kind) {
    case Kind::kAbsolute:
      std::snprintf(buf, sizeof buf, "abs %.0e", value);
      break;
    case Kind::kRelative:
      std::snprintf(buf, sizeof buf, "rel %.0e", value);
      break;
    case Kind::kSignificant:
      std::snprintf(buf, sizeof buf, "%d sig. fig.", static_cast<int>(value));
      break;
  }
  return buf;
}

const std::vector<TablePreset>& presets() {
  using K = Tolerance::Kind;
  static const std::vector<TablePreset> all = {
      {"tab1", "tab1.csv", 12, {K::kAbsolute, 1e-10}, std::nullopt, "", false},
      {"tab2", "tab2.csv", 12, {K::kAbsolute, 1e-10}, std::nullopt, "", false},
      {"tab3", "tab3.csv", 12, {K::kSignificant, 12}, std::nullopt, "", false},
      {"tab4a", "tab4a.csv", 15, {K::kRelative, 1e-13},
       Tolerance{K::kAbsolute, 1e-5}, "Eichten", false},
      {"tab4b", "tab4b.csv", 15, {K::kRelative, 1e-13},
       Tolerance{K::kAbsolute, 5e-7}, "Chung-Lee", false},
      {"fig2", "fig2.csv", 12, {K::kAbsolute, 1e-10}, std::nullopt, "", true},
  };
  return all;
}

const TablePreset& find_preset(const std::string& name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  throw ApiError(CORNELL_E_USAGE, "unknown preset '" + name + "'");
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("CORNELL_DATA_DIR"); env && *env) return env;
  return CORNELL_DATA_DIR;
}

TableReport run_table(const TablePreset& preset, const SolveSettings& base,
                      const std::filesystem::path& data_dir, int threads) {
  auto rows = load_reference(data_dir / preset.file);

  // Tables repeat the l = 0, n = 0 state; solve each distinct state once.
  using Key = std::tuple<std::string, std::string, int, int, int, std::string>;
  std::map<Key, size_t> index;
  std::vector<size_t> task_of(rows.size());
  std::vector<size_t> first_row;
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& s = rows[i].state;
    Key key{s.a, s.c, s.d, s.l, s.n, rows[i].r0};
    auto [it, inserted] = index.emplace(key, first_row.size());
    if (inserted) first_row.push_back(i);
    task_of[i] = it->second;
  }

  std::vector<SolveOutcome> outcomes(first_row.size());
  std::vector<std::optional<int>> nodes(first_row.size());
  std::vector<std::string> errors(first_row.size());
  auto work = [&](size_t t) {
    const ReferenceRow& row = rows[first_row[t]];
    SolveSettings settings = base;
    settings.r0 = row.r0;
    settings.digits = preset.digits;
    try {
      outcomes[t] = solve_state(row.state, settings);
      if (preset.check_nodes && outcomes[t].ok()) {
        nodes[t] = nodes_of(row, outcomes[t].energy_long);
      }
    } catch (const std::exception& e) {
      errors[t] = e.what();
    }
  };

  if (threads <= 1) {
    for (size_t t = 0; t < first_row.size(); ++t) work(t);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    int count = std::min<int>(threads, static_cast<int>(first_row.size()));
    for (int w = 0; w < count; ++w) {
      pool.emplace_back([&] {
        for (size_t t = next++; t < first_row.size(); t = next++) work(t);
      });
    }
    for (auto& th : pool) th.join();
  }

  TableReport report;
  report.preset = preset.name;
  for (size_t i = 0; i < rows.size(); ++i) {
    size_t t = task_of[i];
    RowReport r;
    r.reference = rows[i];
    r.outcome = outcomes[t];
    r.nodes = nodes[t];
    r.scored = !rows[i].suspect;
    if (!errors[t].empty()) {
      r.outcome.status = CORNELL_E_INTERNAL;
      r.outcome.message = errors[t];
    }
    if (r.outcome.ok()) {
      long double e = to_ld(r.outcome.energy_long);
      long double ref = to_ld(rows[i].e_ref);
      long double dev = std::fabs(e - ref);
      r.deviation = sci(dev);
      r.pass = dev <= preset.tolerance.allowed(ref);
      if (preset.alt_tolerance && rows[i].e_alt) {
        long double alt = to_ld(*rows[i].e_alt);
        long double alt_dev = std::fabs(e - alt);
        r.alt_deviation = sci(alt_dev);
        r.alt_pass = alt_dev <= preset.alt_tolerance->allowed(alt);
        r.pass = r.pass && r.alt_pass;
      }
      if (preset.check_nodes) r.pass = r.pass && r.nodes == rows[i].state.n;
    } else {
      report.solver_failure = true;
    }
    if (r.scored) {
      ++report.scored;
      if (r.pass) ++report.passed;
    }
    report.rows.push_back(std::move(r));
  }
  return report;
}

namespace {

std::string row_status(const RowReport& r) {
  if (!r.outcome.ok()) return "error";
  if (!r.scored) return "suspect";
  return r.pass ? "pass" : "FAIL";
}

std::vector<std::string> report_columns(const TablePreset& preset) {
  std::vector<std::string> cols{"a", "c", "d", "l", "n", "r0", "E", "N",
                                "E_ref", "N_ref", "deviation"};
  if (preset.alt_tolerance) {
    cols.insert(cols.end(), {"E_alt", "alt_deviation"});
  }
  if (preset.check_nodes) cols.push_back("nodes");
  cols.push_back("status");
  return cols;
}

std::vector<std::string> report_values(const TablePreset& preset,
                                       const RowReport& r) {
  const auto& rec = r.outcome.record;
  const auto& s = r.reference.state;
  std::vector<std::string> v{s.a,
                             s.c,
                             std::to_string(s.d),
                             std::to_string(s.l),
                             std::to_string(s.n),
                             r.reference.r0,
                             rec.energy.value_or(""),
                             rec.depth ? std::to_string(*rec.depth) : "",
                             r.reference.e_ref,
                             std::to_string(r.reference.n_ref),
                             r.deviation};
  if (preset.alt_tolerance) {
    v.push_back(r.reference.e_alt.value_or(""));
    v.push_back(r.alt_deviation.value_or(""));
  }
  if (preset.check_nodes) v.push_back(r.nodes ? std::to_string(*r.nodes) : "");
  v.push_back(row_status(r));
  return v;
}

std::string summary(const TablePreset& preset, const TableReport& report) {
  std::ostringstream os;
  int suspect = static_cast<int>(report.rows.size()) - report.scored;
  os << preset.name << ": " << report.passed << "/" << report.scored
     << " scored rows within " << preset.tolerance.describe();
  if (preset.alt_tolerance) {
    os << " (" << preset.alt_label << " column within "
       << preset.alt_tolerance->describe() << ")";
  }
  if (suspect > 0) os << ", " << suspect << " suspect rows reported unscored";
  if (report.solver_failure) os << ", solver failures present";
  os << (report.ok() ? " -- PASS" : " -- FAIL");
  return os.str();
}

}  // namespace

std::string render_report(const TableReport& report, Format format) {
  const TablePreset& preset = find_preset(report.preset);
  auto cols = report_columns(preset);
  std::ostringstream os;
  switch (format) {
    case Format::kCsv:
      os << csv_line(cols) << "\n";
      for (const auto& r : report.rows) {
        os << csv_line(report_values(preset, r)) << "\n";
      }
      break;
    case Format::kJson:
      for (const auto& r : report.rows) {
        auto values = report_values(preset, r);
        nlohmann::json j;
        for (size_t i = 0; i < cols.size(); ++i) j[cols[i]] = values[i];
        if (!r.outcome.message.empty()) j["message"] = r.outcome.message;
        os << j.dump() << "\n";
      }
      os << nlohmann::json{{"preset", preset.name},
                           {"scored", report.scored},
                           {"passed", report.passed},
                           {"ok", report.ok()}}
                .dump()
         << "\n";
      break;
    case Format::kText: {
      std::vector<std::vector<std::string>> cells{cols};
      for (const auto& r : report.rows) cells.push_back(report_values(preset, r));
      std::vector<size_t> width(cols.size(), 0);
      for (const auto& row : cells) {
        for (size_t i = 0; i < row.size(); ++i) {
          width[i] = std::max(width[i], row[i].size());
        }
      }
      for (const auto& row : cells) {
        for (size_t i = 0; i < row.size(); ++i) {
          os << row[i];
          if (i + 1 < row.size()) os << std::string(width[i] - row[i].size() + 2, ' ');
        }
        os << "\n";
      }
      for (const auto& r : report.rows) {
        if (!r.outcome.message.empty()) {
          os << "note: " << r.reference.state.d << "/" << r.reference.state.l
             << "/" << r.reference.state.n << ": " << r.outcome.message << "\n";
        }
      }
      os << summary(preset, report) << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace cli

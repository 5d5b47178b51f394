#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "api.hpp"
#include "record.hpp"
#include "solve.hpp"
#include "table.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct StateFlags {
  cli::StateSpec state;
  std::string r0;
  int digits = 12;
  int precision = 50;
  int max_depth = 200;
  std::string format = "text";

  cli::SolveSettings settings() const {
    cli::SolveSettings s;
    if (!r0.empty()) s.r0 = r0;
    s.digits = digits;
    s.precision = precision;
    s.max_depth = max_depth;
    return s;
  }
};

void add_state_flags(CLI::App* cmd, StateFlags& f) {
  cmd->add_option("--a", f.state.a, "Coulomb strength a > 0")->capture_default_str();
  cmd->add_option("--c", f.state.c, "linear strength c > 0")->capture_default_str();
  cmd->add_option("--d", f.state.d, "spatial dimension")
      ->check(CLI::Range(2, 1000))
      ->capture_default_str();
  cmd->add_option("--l", f.state.l, "angular momentum")
      ->check(CLI::Range(0, 1000))
      ->capture_default_str();
  cmd->add_option("--n", f.state.n, "radial node count")
      ->check(CLI::Range(0, 1000))
      ->capture_default_str();
  cmd->add_option("--r0", f.r0, "expansion point (default: asymptotic profile)");
  cmd->add_option("--digits", f.digits, "decimals printed for energies")
      ->check(CLI::Range(0, 1000))
      ->capture_default_str();
  cmd->add_option("--precision", f.precision, "working decimal digits")
      ->check(CLI::Range(20, 10000))
      ->capture_default_str();
  cmd->add_option("--max-depth", f.max_depth, "largest AIM iteration count")
      ->check(CLI::Range(10, 2000))
      ->capture_default_str();
}

void add_format_flag(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
}

bool is_usage(cornell_status s) {
  return s == CORNELL_E_USAGE || s == CORNELL_E_DOMAIN;
}

int report_solve_failure(const cli::SolveOutcome& out) {
  std::cerr << "error: " << cornell_status_name(out.status) << ": "
            << out.message << "\n";
  if (!out.trace.empty()) {
    std::cerr << "trace (N, root):\n";
    for (const auto& [depth, energy] : out.trace) {
      std::cerr << "  " << depth << "  " << energy << "\n";
    }
  }
  return is_usage(out.status) ? kExitUsage : kExitNumerical;
}

int cmd_solve(const StateFlags& f) {
  auto out = cli::solve_state(f.state, f.settings());
  if (!out.ok()) return report_solve_failure(out);
  std::cout << cli::render(out.record, cli::parse_format(f.format));
  return 0;
}

int cmd_bounds(const StateFlags& f) {
  auto record = cli::bounds_record(f.state, f.settings());
  std::cout << cli::render(record, cli::parse_format(f.format));
  return 0;
}

int cmd_table(const std::string& name, const StateFlags& f, bool parallel,
              int threads, const std::string& data_dir) {
  const auto& preset = cli::find_preset(name);
  cli::SolveSettings base = f.settings();
  int workers = 1;
  if (parallel) {
    workers = threads > 0 ? threads
                          : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
  }
  auto report = cli::run_table(
      preset, base, data_dir.empty() ? cli::default_data_dir() : std::filesystem::path(data_dir), workers);
  std::cout << cli::render_report(report, cli::parse_format(f.format));
  if (report.solver_failure) return kExitNumerical;
  return report.ok() ? 0 : kExitNumerical;
}

int cmd_wavefunction(const StateFlags& f, const std::string& r_max, int steps,
                     const std::string& out_path) {
  auto solved = cli::solve_state(f.state, f.settings());
  if (!solved.ok()) return report_solve_failure(solved);

  cornell_problem* raw = nullptr;
  cli::check(cornell_problem_create(f.state.a.c_str(), f.state.c.c_str(),
                                    f.state.d, f.state.l, f.state.n, &raw));
  cli::ProblemHandle problem(raw);
  cornell_wavefunction* w = nullptr;
  cli::check(cornell_wavefunction_compute(problem.get(),
                                          solved.energy_long.c_str(),
                                          r_max.c_str(), steps, &w));
  cli::WavefunctionHandle wave(w);

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw cli::ApiError(CORNELL_E_USAGE, "cannot write " + out_path);
  }
  std::ostream& os = out_path.empty() ? std::cout : file;
  int nodes = cornell_wavefunction_nodes(wave.get());
  os << "# E=" << *solved.record.energy << " k=" << f.state.d + 2 * f.state.l
     << " nodes=" << nodes << "\n";
  os << "r,u\n";
  char line[64];
  size_t size = cornell_wavefunction_size(wave.get());
  for (size_t i = 0; i < size; ++i) {
    std::snprintf(line, sizeof line, "%.10g,%.12e\n",
                  cornell_wavefunction_r(wave.get(), i),
                  cornell_wavefunction_u(wave.get(), i));
    os << line;
  }
  std::cerr << "nodes: " << nodes << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cornell-potential eigenvalues by the asymptotic iteration method"};
  app.require_subcommand(1);

  StateFlags flags;
  try {
    flags.precision = cli::default_precision();
  } catch (const cli::ApiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  auto* solve = app.add_subcommand("solve", "solve one state");
  add_state_flags(solve, flags);
  add_format_flag(solve, flags.format);

  auto* bounds = app.add_subcommand("bounds", "envelope bounds without AIM");
  add_state_flags(bounds, flags);
  add_format_flag(bounds, flags.format);

  std::string preset;
  bool parallel = false;
  int threads = 0;
  std::string data_dir;
  auto* table = app.add_subcommand("table", "reproduce a reference table");
  table->add_option("preset", preset, "tab1 | tab2 | tab3 | tab4a | tab4b | fig2")
      ->required()
      ->check(CLI::IsMember({"tab1", "tab2", "tab3", "tab4a", "tab4b", "fig2"}));
  table->add_flag("--parallel", parallel, "solve states on worker threads");
  table->add_option("--threads", threads, "worker count for --parallel")
      ->check(CLI::Range(1, 256));
  table->add_option("--data-dir", data_dir, "directory holding the reference CSVs");
  table->add_option("--precision", flags.precision, "working decimal digits")
      ->check(CLI::Range(20, 10000))
      ->capture_default_str();
  table->add_option("--max-depth", flags.max_depth, "largest AIM iteration count")
      ->check(CLI::Range(10, 2000))
      ->capture_default_str();
  add_format_flag(table, flags.format);

  std::string r_max = "12";
  int steps = 20000;
  std::string out_path;
  auto* wave = app.add_subcommand("wavefunction", "integrate u(r) for a solved state");
  add_state_flags(wave, flags);
  wave->add_option("--rmax", r_max, "outer end of the grid")->capture_default_str();
  wave->add_option("--steps", steps, "RK4 steps")
      ->check(CLI::Range(10, 100000000))
      ->capture_default_str();
  wave->add_option("--out", out_path, "CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(flags);
    if (*bounds) return cmd_bounds(flags);
    if (*table) return cmd_table(preset, flags, parallel, threads, data_dir);
    if (*wave) return cmd_wavefunction(flags, r_max, steps, out_path);
  } catch (const cli::ApiError& e) {
    std::cerr << "error: " << cornell_status_name(e.status()) << ": " << e.what()
              << "\n";
    if (is_usage(e.status())) {
      std::cerr << app.help();
      return kExitUsage;
    }
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}

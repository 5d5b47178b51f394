#include "solve.hpp"

#include <chrono>
#include <cstdlib>

#include "api.hpp"

namespace cli {

namespace {

ProblemHandle make_problem(const StateSpec& s) {
  cornell_problem* p = nullptr;
  check(cornell_problem_create(s.a.c_str(), s.c.c_str(), s.d, s.l, s.n, &p));
  return ProblemHandle(p);
}

ResultRecord base_record(const StateSpec& s, int precision) {
  ResultRecord r;
  r.a = s.a;
  r.c = s.c;
  r.d = s.d;
  r.l = s.l;
  r.n = s.n;
  r.precision = precision;
  return r;
}

void fill_bounds(ResultRecord& r, const cornell_problem* p, int precision,
                 int digits) {
  cornell_bounds* raw = nullptr;
  check(cornell_bounds_compute(p, precision, &raw));
  BoundsHandle b(raw);
  auto field = [&](cornell_bound_field f, int decimals) {
    return read_text([&](char* buf, size_t len) {
      return cornell_bounds_get(b.get(), f, decimals, buf, len);
    });
  };
  r.e_low = field(CORNELL_BOUND_E_LOW, digits);
  r.e_up = field(CORNELL_BOUND_E_UP, digits);
  r.nu_low = field(CORNELL_BOUND_NU_LOW, 1);
  r.nu_up = field(CORNELL_BOUND_NU_UP, 1);
  r.lambda = field(CORNELL_BOUND_LAMBDA, 6);
}

}  // namespace

int default_precision() {
  const char* env = std::getenv("CORNELL_PRECISION");
  if (env == nullptr || *env == '\0') return 50;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 20) {
    throw ApiError(CORNELL_E_USAGE,
                   "CORNELL_PRECISION must be an integer >= 20");
  }
  return static_cast<int>(v);
}

SolveOutcome solve_state(const StateSpec& state, const SolveSettings& settings) {
  ProblemHandle problem = make_problem(state);
  cornell_options* raw_options = nullptr;
  check(cornell_options_create(&raw_options));
  OptionsHandle options(raw_options);
  check(cornell_options_set_precision(options.get(), settings.precision));
  check(cornell_options_set_max_depth(options.get(), settings.max_depth));
  if (settings.r0) check(cornell_options_set_r0(options.get(), settings.r0->c_str()));

  SolveOutcome out;
  out.record = base_record(state, settings.precision);
  fill_bounds(out.record, problem.get(), settings.precision, settings.digits);
  out.record.nu_low.reset();
  out.record.nu_up.reset();
  out.record.lambda.reset();

  auto start = std::chrono::steady_clock::now();
  cornell_result* raw_result = nullptr;
  out.status = cornell_solve(problem.get(), options.get(), &raw_result);
  ResultHandle result(raw_result);
  auto stop = std::chrono::steady_clock::now();
  out.record.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  if (out.status != CORNELL_OK) out.message = cornell_last_error();
  if (!result) return out;

  auto energy = [&](int decimals) {
    return read_text([&](char* buf, size_t len) {
      return cornell_result_energy(result.get(), decimals, buf, len);
    });
  };
  if (out.ok()) {
    out.record.energy = energy(settings.digits);
    out.energy_long = energy(kLongDecimals);
    out.record.depth = cornell_result_depth(result.get());
    out.record.r0 = read_text([&](char* buf, size_t len) {
      return cornell_result_r0(result.get(), buf, len);
    });
  }
  size_t steps = cornell_result_trace_size(result.get());
  for (size_t i = 0; i < steps; ++i) {
    out.trace.emplace_back(
        cornell_result_trace_depth(result.get(), i),
        read_text([&](char* buf, size_t len) {
          return cornell_result_trace_energy(result.get(), i, settings.digits + 4,
                                             buf, len);
        }));
  }
  return out;
}

ResultRecord bounds_record(const StateSpec& state,
                           const SolveSettings& settings) {
  ProblemHandle problem = make_problem(state);
  ResultRecord r = base_record(state, settings.precision);
  auto start = std::chrono::steady_clock::now();
  fill_bounds(r, problem.get(), settings.precision, settings.digits);
  auto stop = std::chrono::steady_clock::now();
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return r;
}

}  // namespace cli

#include "cornell.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "cornell/aim.hpp"
#include "cornell/cornell.hpp"
#include "cornell/coulomb.hpp"
#include "cornell/envelope.hpp"
#include "cornell/error.hpp"
#include "cornell/real.hpp"

using cornell::Real;

struct cornell_problem {
  cornell::CornellProblem p;
};

struct cornell_options {
  cornell::SolveOptions o;
};

struct cornell_result {
  bool converged = false;
  Real energy;
  int depth = 0;
  int digits = 0;
  int attempts = 0;
  Real r0;
  Real residual;
  std::vector<cornell::aim::DepthRoot> trace;
};

struct cornell_bounds {
  cornell::envelope::BoundPair b;
};

struct cornell_wavefunction {
  std::vector<double> r;
  std::vector<double> u;
  int nodes = 0;
  double norm_residual = 0;
  Real energy;
};

namespace {

// Inputs are parsed generously so a later precision choice never loses digits
// that were typed.
constexpr int kInputDigits = 120;

thread_local std::string last_error;

cornell_status to_status(cornell::ErrorCode code) {
  return static_cast<cornell_status>(static_cast<int>(code));
}

template <typename F>
cornell_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return CORNELL_OK;
  } catch (const cornell::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CORNELL_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CORNELL_E_INTERNAL;
  }
}

size_t emit(const std::string& text, char* buf, size_t len) {
  if (buf != nullptr && len > 0) {
    size_t n = text.size() < len - 1 ? text.size() : len - 1;
    std::memcpy(buf, text.data(), n);
    buf[n] = '\0';
  }
  return text.size();
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw cornell::UsageError(std::string(what) + " is null");
}

Real parse_arg(const char* text, const char* what) {
  require(text, what);
  return Real::parse(text, kInputDigits);
}

int env_precision() {
  const char* env = std::getenv("CORNELL_PRECISION");
  if (env == nullptr || *env == '\0') return Real::kDefaultDigits;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < Real::kMinDigits || v > 10000) {
    throw cornell::UsageError("CORNELL_PRECISION must be an integer >= " +
                              std::to_string(Real::kMinDigits));
  }
  return static_cast<int>(v);
}

}  // namespace

extern "C" {

const char* cornell_version(void) { return "1.0.0"; }

const char* cornell_last_error(void) { return last_error.c_str(); }

const char* cornell_status_name(cornell_status status) {
  switch (status) {
    case CORNELL_OK: return "ok";
    case CORNELL_E_DOMAIN: return "domain";
    case CORNELL_E_USAGE: return "usage";
    case CORNELL_E_RANGE: return "range";
    case CORNELL_E_BRACKET: return "bracket";
    case CORNELL_E_NONCONVERGENCE: return "non-convergence";
    case CORNELL_E_NUMERICAL: return "numerical";
    case CORNELL_E_VALIDATION: return "validation";
    case CORNELL_E_NOT_EIGENVALUE: return "not-an-eigenvalue";
    case CORNELL_E_INTERNAL: return "internal";
  }
  return "unknown";
}

cornell_status cornell_problem_create(const char* a, const char* c, int d,
                                      int l, int n, cornell_problem** out) {
  return guarded([&] {
    require(out, "output handle");
    *out = nullptr;
    cornell::CornellProblem p{parse_arg(a, "a"), parse_arg(c, "c"), d, l, n};
    p.validate();
    *out = new cornell_problem{std::move(p)};
  });
}

void cornell_problem_destroy(cornell_problem* p) { delete p; }

int cornell_problem_k(const cornell_problem* p) {
  return p == nullptr ? -1 : p->p.k();
}

cornell_status cornell_problem_shift(const cornell_problem* p, int direction,
                                     cornell_problem** out) {
  return guarded([&] {
    require(p, "problem");
    require(out, "output handle");
    *out = nullptr;
    *out = new cornell_problem{cornell::dimension_shift(p->p, direction)};
  });
}

cornell_status cornell_default_r0(const cornell_problem* p, char* buf,
                                  size_t len) {
  return guarded([&] {
    require(p, "problem");
    emit(cornell::default_r0(p->p).fixed(1), buf, len);
  });
}

cornell_status cornell_options_create(cornell_options** out) {
  return guarded([&] {
    require(out, "output handle");
    *out = nullptr;
    auto* o = new cornell_options{};
    try {
      o->o.digits = env_precision();
    } catch (...) {
      delete o;
      throw;
    }
    *out = o;
  });
}

void cornell_options_destroy(cornell_options* o) { delete o; }

cornell_status cornell_options_set_precision(cornell_options* o, int digits) {
  return guarded([&] {
    require(o, "options");
    if (digits < Real::kMinDigits) {
      throw cornell::UsageError("precision must be at least " +
                                std::to_string(Real::kMinDigits) + " digits");
    }
    o->o.digits = digits;
  });
}

cornell_status cornell_options_set_r0(cornell_options* o, const char* r0) {
  return guarded([&] {
    require(o, "options");
    if (r0 == nullptr || *r0 == '\0') {
      o->o.r0.reset();
      return;
    }
    Real v = Real::parse(r0, kInputDigits);
    if (v <= 0) throw cornell::DomainError("r0 must be positive");
    o->o.r0 = std::move(v);
  });
}

cornell_status cornell_options_set_tolerance(cornell_options* o,
                                             const char* tol) {
  return guarded([&] {
    require(o, "options");
    Real v = parse_arg(tol, "tolerance");
    if (v <= 0) throw cornell::UsageError("tolerance must be positive");
    o->o.tolerance = std::move(v);
  });
}

cornell_status cornell_options_set_max_depth(cornell_options* o, int depth) {
  return guarded([&] {
    require(o, "options");
    if (depth < 10) throw cornell::UsageError("max depth must be at least 10");
    o->o.max_depth = depth;
  });
}

cornell_status cornell_options_set_max_retries(cornell_options* o,
                                               int retries) {
  return guarded([&] {
    require(o, "options");
    if (retries < 0) throw cornell::UsageError("retries must be non-negative");
    o->o.max_retries = retries;
  });
}

int cornell_options_precision(const cornell_options* o) {
  return o == nullptr ? -1 : o->o.digits;
}

cornell_status cornell_solve(const cornell_problem* p, const cornell_options* o,
                             cornell_result** out) {
  cornell_status status = guarded([&] {
    require(p, "problem");
    require(out, "output handle");
    *out = nullptr;
    cornell::SolveOptions defaults;
    if (o == nullptr) defaults.digits = env_precision();
    const cornell::SolveOptions& opts = o == nullptr ? defaults : o->o;
    try {
      cornell::SolveResult s = cornell::solve(p->p, opts);
      auto* r = new cornell_result{};
      r->converged = true;
      r->energy = s.eigen.energy;
      r->depth = s.eigen.depth;
      r->digits = s.eigen.digits;
      r->attempts = s.attempts;
      r->r0 = s.eigen.r0;
      r->residual = s.eigen.residual;
      r->trace = s.eigen.trace;
      *out = r;
    } catch (const cornell::aim::NonConvergenceError& e) {
      auto* r = new cornell_result{};
      r->converged = false;
      r->digits = opts.digits;
      r->trace = e.trace();
      if (!r->trace.empty()) {
        r->energy = r->trace.back().energy;
        r->depth = r->trace.back().depth;
      }
      r->attempts = opts.max_retries + 1;
      r->r0 = opts.r0 ? *opts.r0 : Real(0);
      *out = r;
      throw;
    }
  });
  return status;
}

void cornell_result_destroy(cornell_result* r) { delete r; }

int cornell_result_converged(const cornell_result* r) {
  return r != nullptr && r->converged ? 1 : 0;
}

size_t cornell_result_energy(const cornell_result* r, int decimals, char* buf,
                             size_t len) {
  if (r == nullptr) return emit("", buf, len);
  return emit(r->energy.fixed(decimals), buf, len);
}

int cornell_result_depth(const cornell_result* r) {
  return r == nullptr ? -1 : r->depth;
}

int cornell_result_precision(const cornell_result* r) {
  return r == nullptr ? -1 : r->digits;
}

int cornell_result_attempts(const cornell_result* r) {
  return r == nullptr ? -1 : r->attempts;
}

size_t cornell_result_r0(const cornell_result* r, char* buf, size_t len) {
  if (r == nullptr) return emit("", buf, len);
  return emit(r->r0.fixed(4), buf, len);
}

size_t cornell_result_residual(const cornell_result* r, char* buf,
                               size_t len) {
  if (r == nullptr) return emit("", buf, len);
  return emit(r->residual.scientific(3), buf, len);
}

size_t cornell_result_trace_size(const cornell_result* r) {
  return r == nullptr ? 0 : r->trace.size();
}

int cornell_result_trace_depth(const cornell_result* r, size_t i) {
  if (r == nullptr || i >= r->trace.size()) return -1;
  return r->trace[i].depth;
}

size_t cornell_result_trace_energy(const cornell_result* r, size_t i,
                                   int decimals, char* buf, size_t len) {
  if (r == nullptr || i >= r->trace.size()) return emit("", buf, len);
  return emit(r->trace[i].energy.fixed(decimals), buf, len);
}

cornell_status cornell_bounds_compute(const cornell_problem* p, int digits,
                                      cornell_bounds** out) {
  return guarded([&] {
    require(p, "problem");
    require(out, "output handle");
    *out = nullptr;
    *out = new cornell_bounds{
        cornell::envelope::bounds(p->p, cornell::clamp_digits(digits))};
  });
}

void cornell_bounds_destroy(cornell_bounds* b) { delete b; }

size_t cornell_bounds_get(const cornell_bounds* b, cornell_bound_field field,
                          int decimals, char* buf, size_t len) {
  if (b == nullptr) return emit("", buf, len);
  switch (field) {
    // Outward rounding keeps the printed interval a valid enclosure.
    case CORNELL_BOUND_E_LOW:
      return emit(b->b.e_low.fixed(decimals, Real::Rounding::kDown), buf, len);
    case CORNELL_BOUND_E_UP:
      return emit(b->b.e_up.fixed(decimals, Real::Rounding::kUp), buf, len);
    case CORNELL_BOUND_NU_LOW: return emit(b->b.nu_low.fixed(decimals), buf, len);
    case CORNELL_BOUND_NU_UP: return emit(b->b.nu_up.fixed(decimals), buf, len);
    case CORNELL_BOUND_LAMBDA: return emit(b->b.lambda.scientific(decimals), buf, len);
  }
  return emit("", buf, len);
}

cornell_status cornell_wavefunction_compute(const cornell_problem* p,
                                            const char* energy,
                                            const char* r_max, int steps,
                                            cornell_wavefunction** out) {
  return guarded([&] {
    require(p, "problem");
    require(out, "output handle");
    *out = nullptr;
    auto samples = cornell::wavefunction(p->p, parse_arg(energy, "energy"),
                                         parse_arg(r_max, "r_max"), steps);
    auto* w = new cornell_wavefunction{};
    w->r.reserve(samples.grid.size());
    w->u.reserve(samples.u.size());
    for (const Real& x : samples.grid) w->r.push_back(x.to_double());
    for (const Real& x : samples.u) w->u.push_back(x.to_double());
    w->nodes = samples.nodes;
    w->norm_residual = samples.norm_residual.to_double();
    w->energy = samples.energy;
    *out = w;
  });
}

void cornell_wavefunction_destroy(cornell_wavefunction* w) { delete w; }

size_t cornell_wavefunction_size(const cornell_wavefunction* w) {
  return w == nullptr ? 0 : w->r.size();
}

double cornell_wavefunction_r(const cornell_wavefunction* w, size_t i) {
  return w == nullptr || i >= w->r.size() ? 0.0 : w->r[i];
}

double cornell_wavefunction_u(const cornell_wavefunction* w, size_t i) {
  return w == nullptr || i >= w->u.size() ? 0.0 : w->u[i];
}

int cornell_wavefunction_nodes(const cornell_wavefunction* w) {
  return w == nullptr ? -1 : w->nodes;
}

double cornell_wavefunction_norm_residual(const cornell_wavefunction* w) {
  return w == nullptr ? 0.0 : w->norm_residual;
}

size_t cornell_wavefunction_energy(const cornell_wavefunction* w, int decimals,
                                   char* buf, size_t len) {
  if (w == nullptr) return emit("", buf, len);
  return emit(w->energy.fixed(decimals), buf, len);
}

cornell_status cornell_coulomb_energy(const char* a, int k, int j,
                                      int decimals, char* buf, size_t len) {
  return guarded([&] {
    emit(cornell::coulomb::exact_energy(parse_arg(a, "a"), k, j).fixed(decimals),
         buf, len);
  });
}

cornell_status cornell_coulomb_validate(const char* a, int k, int j_max,
                                        const char* r0, int digits, char* buf,
                                        size_t len) {
  return guarded([&] {
    auto report = cornell::coulomb::validate_aim(
        parse_arg(a, "a"), k, j_max, parse_arg(r0, "r0"),
        cornell::clamp_digits(digits));
    emit(report.max_error.scientific(3), buf, len);
  });
}

}  // extern "C"

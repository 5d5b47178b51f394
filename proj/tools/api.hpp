#pragma once

// Thin C++ ownership wrappers over the C interface in cornell.h.

#include <memory>
#include <stdexcept>
#include <string>

#include "cornell.h"

namespace cli {

class ApiError : public std::runtime_error {
 public:
  ApiError(cornell_status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  cornell_status status() const noexcept { return status_; }

 private:
  cornell_status status_;
};

void check(cornell_status status);

// Runs an snprintf-style writer twice: once to size, once to fill.
template <typename F>
std::string read_text(F&& writer) {
  size_t n = writer(nullptr, 0);
  std::string out(n + 1, '\0');
  writer(out.data(), out.size());
  out.resize(n);
  return out;
}

struct ProblemDeleter {
  void operator()(cornell_problem* p) const { cornell_problem_destroy(p); }
};
struct OptionsDeleter {
  void operator()(cornell_options* o) const { cornell_options_destroy(o); }
};
struct ResultDeleter {
  void operator()(cornell_result* r) const { cornell_result_destroy(r); }
};
struct BoundsDeleter {
  void operator()(cornell_bounds* b) const { cornell_bounds_destroy(b); }
};
struct WavefunctionDeleter {
  void operator()(cornell_wavefunction* w) const {
    cornell_wavefunction_destroy(w);
  }
};

using ProblemHandle = std::unique_ptr<cornell_problem, ProblemDeleter>;
using OptionsHandle = std::unique_ptr<cornell_options, OptionsDeleter>;
using ResultHandle = std::unique_ptr<cornell_result, ResultDeleter>;
using BoundsHandle = std::unique_ptr<cornell_bounds, BoundsDeleter>;
using WavefunctionHandle =
    std::unique_ptr<cornell_wavefunction, WavefunctionDeleter>;

}  // namespace cli

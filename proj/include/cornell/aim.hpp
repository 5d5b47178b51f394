#pragma once

#include <functional>
#include <vector>

#include "cornell/error.hpp"
#include "cornell/jet.hpp"
#include "cornell/real.hpp"

namespace cornell::aim {

// Coefficient functions of y'' = lambda0 y' + s0 y expanded at r0.
struct Coefficients {
  Jet lambda0;
  Jet s0;
};

using CoefficientBuilder = std::function<Coefficients(
    const Real& energy, const Real& r0, int order, int digits)>;

struct Problem {
  CoefficientBuilder build;
  // Energies outside [energy_min, energy_max] are rejected before building.
  Real energy_min;
  Real energy_max;
};

std::vector<int> default_depths();

struct Config {
  Real r0;
  std::vector<int> depths = default_depths();
  Real tolerance = pow10(-13, Real::kDefaultDigits);
  int digits = Real::kDefaultDigits;
  int scan_grid = 64;

  void validate() const;
};

struct Sequences {
  Jet lambda;
  Jet s;
  // delta[n] = lambda_n s_{n-1} - lambda_{n-1} s_n at r0, for n = 0..depth.
  std::vector<Real> delta;
};

// Runs the recursion lambda_n = lambda'_{n-1} + s_{n-1} + lambda0 lambda_{n-1},
// s_n = s'_{n-1} + s0 lambda_{n-1} from lambda_{-1} = 1, s_{-1} = 0. Each step
// consumes one order of the jets, so both inputs need order >= depth + 1.
Sequences sequences(const Jet& lambda0, const Jet& s0, int depth);

struct DeltaTrace {
  std::vector<int> depths;
  std::vector<Real> values;
};

struct Bracket {
  Real lo;
  Real hi;
};

struct DepthRoot {
  int depth;
  Real energy;
};

struct EigenResult {
  Real energy;
  int depth = 0;
  Real r0;
  int digits = 0;
  // |E(depth) - E(previous depth)|
  Real residual;
  std::vector<DepthRoot> trace;
};

class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, std::vector<DepthRoot> trace)
      : Error(ErrorCode::kNonConvergence, what), trace_(std::move(trace)) {}
  const std::vector<DepthRoot>& trace() const noexcept { return trace_; }

 private:
  std::vector<DepthRoot> trace_;
};

Real delta_at(const Problem& problem, const Real& energy, const Config& config,
              int depth);

// delta_n(E; r0) for every depth of the schedule, from a single recursion.
DeltaTrace delta_trace(const Problem& problem, const Real& energy,
                       const Config& config);

// Grid cells of [lo, hi] (grid equal cells) across which delta_depth changes
// sign, in increasing energy.
std::vector<Bracket> scan_brackets(const Problem& problem, const Config& config,
                                   const Real& lo, const Real& hi, int depth,
                                   int grid);

// Root of delta_depth inside the bracket, refined to 10^(2-digits) relative.
Real root_at_depth(const Problem& problem, const Config& config,
                   const Bracket& bracket, int depth);

// Follows the root of delta_N through the depth schedule until successive
// roots agree to config.tolerance.
EigenResult find_eigenvalue(const Problem& problem, const Config& config,
                            const Bracket& bracket);

}  // namespace cornell::aim

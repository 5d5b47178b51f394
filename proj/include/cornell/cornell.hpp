#pragma once

#include <optional>
#include <vector>

#include "cornell/aim.hpp"
#include "cornell/real.hpp"

namespace cornell {

// One eigenstate of -u'' + [(k-1)(k-3)/(4r^2) - a/r + c r] u = E u with
// k = d + 2l and n radial nodes.
struct CornellProblem {
  Real a;
  Real c;
  int d = 3;
  int l = 0;
  int n = 0;

  int k() const noexcept { return d + 2 * l; }
  void validate() const;
};

// lambda0 = (1-k)/r - 2T, s0 = -E - a/r - (k-1) T/r with T = (ln Ai(c^(1/3) r))'.
// Dividing the reduced equation for f(r) in u = r^((k-1)/2) Ai(c^(1/3) r) f(r)
// by -r gives f'' = lambda0 f' + s0 f.
aim::Coefficients build_coefficients(const CornellProblem& p, const Real& energy,
                                     const Real& r0, int order, int digits);

aim::Problem aim_problem(const CornellProblem& p);

// Peak r_hat of r^((k-1)/2) Ai(c^(1/3) r), pushed out to where the profile has
// fallen to kTailFraction of its peak, rounded up to one decimal.
inline constexpr double kTailFraction = 1e-2;
Real asymptotic_peak(const CornellProblem& p, int digits = 30);
Real default_r0(const CornellProblem& p);

struct SolveOptions {
  std::optional<Real> r0;
  int digits = Real::kDefaultDigits;
  Real tolerance = pow10(-13, Real::kDefaultDigits);
  int max_depth = 200;
  int max_retries = 4;
  Real retry_factor = Real(5, Real::kDefaultDigits) / 4;
  int scan_grid = 128;
};

struct SolveResult {
  aim::EigenResult eigen;
  Real r0_initial;
  int attempts = 1;
};

// Counts roots of delta_N from the ground level upward over the widened
// envelope range and follows the (n+1)-th through the depth schedule. On
// non-convergence r0 grows by retry_factor, up to max_retries times.
SolveResult solve(const CornellProblem& p, const SolveOptions& options = {});

// (d, l) -> (d - 2, l + 1) for direction +1 and (d + 2, l - 1) for -1;
// k and n are unchanged.
CornellProblem dimension_shift(const CornellProblem& p, int direction);

struct WavefunctionSamples {
  std::vector<Real> grid;
  std::vector<Real> u;
  int nodes = 0;
  Real norm_residual;
  // Energy used for the integration: the input E pulled onto the nearby
  // energy where u(r_max) = 0 for this grid.
  Real energy;
};

// Fixed-step RK4 integration outward from r_eps = r_max / (10^4 steps) with
// u = r^((k-1)/2), u' = ((k-1)/2) r^((k-3)/2), normalized by the trapezoid
// rule on the grid.
WavefunctionSamples wavefunction(const CornellProblem& p, const Real& energy,
                                 const Real& r_max, int steps, int digits = 30);

}  // namespace cornell

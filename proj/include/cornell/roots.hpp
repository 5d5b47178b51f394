#pragma once

#include <functional>

#include "cornell/real.hpp"

namespace cornell {

struct RootSearch {
  Real root;
  // Final bracket; collapses to {root, root} when f(root) == 0 exactly.
  Real lo;
  Real hi;
  Real f_lo;
  Real f_hi;
  int evaluations = 0;
};

// Root of f inside [lo, hi], given f(lo) and f(hi) of opposite sign.
// Illinois-weighted secant steps that never leave the bracket, with a
// bisection step whenever the bracket fails to halve over three iterations.
// Stops once the bracket is narrower than `width`.
RootSearch bracketed_root(const std::function<Real(const Real&)>& f, Real lo,
                          Real hi, Real f_lo, Real f_hi, const Real& width,
                          int max_evaluations = 400);

}  // namespace cornell

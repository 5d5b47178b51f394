#pragma once

#include "cornell/real.hpp"

namespace cornell {
struct CornellProblem;
}

namespace cornell::envelope {

// Coupling lambda = c/a^3 as a function of E(1, lambda) for a count nu;
// defined for E >= -1/(4 nu^2), where it vanishes.
Real g(const Real& energy, const Real& nu);

// E with g(E, nu) = lambda, bracketed upward from -1/(4 nu^2) and bisected.
Real invert_g(const Real& lambda, const Real& nu, int digits);

struct BoundPair {
  Real e_low;
  Real e_up;
  Real nu_low;  // n + l + (d - 1)/2
  Real nu_up;   // 2n + l + d/2
  Real lambda;  // c / a^3
};

BoundPair bounds(const CornellProblem& p, int digits = Real::kDefaultDigits);

// E(a, c) = a^2 E(1, c/a^3)
Real scale_energy(const Real& e1, const Real& a);

}  // namespace cornell::envelope

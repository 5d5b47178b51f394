#pragma once

#include <vector>

#include "cornell/aim.hpp"
#include "cornell/real.hpp"

namespace cornell::coulomb {

// -a^2 / (k + 2j - 1)^2, the bound-state energies of -a/r in k = d + 2l.
Real exact_energy(const Real& a, int k, int j);

// lambda0 = 2 kappa + (1 - k)/r, s0 = (-a + (k - 1) kappa)/r, kappa = sqrt(-E).
aim::Coefficients coefficients(const Real& a, int k, const Real& energy,
                               const Real& r0, int order, int digits);

// Energy domain is (-4 a^2, 0); the closed-form spectrum lies in [-a^2, 0).
aim::Problem problem(const Real& a, int k);

struct RootCheck {
  int depth;        // N of delta_N
  int state;        // j
  Real expected;
  Real found;
  Real error;       // |found - expected|
};

struct ValidationReport {
  Real a;
  int k;
  Real r0;
  int digits;
  std::vector<RootCheck> checks;
  Real max_error;
};

// For N = 0..j_max, finds every root of delta_N(E; r0) in [-a^2 (1 + margin),
// 0) and checks that they are exactly the energies j = 0..N. Throws
// ValidationError naming the offending (N, j) on any mismatch.
ValidationReport validate_aim(const Real& a, int k, int j_max, const Real& r0,
                              int digits);

}  // namespace cornell::coulomb

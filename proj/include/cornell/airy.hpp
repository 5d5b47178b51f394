#pragma once

#include "cornell/jet.hpp"
#include "cornell/real.hpp"

namespace cornell::airy {

struct AiryConstants {
  Real ai0;   // Ai(0)
  Real aip0;  // Ai'(0)
};

struct AiryValue {
  Real z;
  Real ai;
  Real aip;
};

inline constexpr double kMaxArgument = 40.0;

AiryConstants constants(int digits);

// Ai and Ai' by the Maclaurin series of the Airy equation. The series is
// summed with extra digits covering the cancellation for |z| > 0.
AiryValue eval(const Real& z, int digits);

// The `derivative`-th derivative of Ai at z (0 <= derivative <= 3), obtained
// by differentiating the Maclaurin series term by term.
Real maclaurin_derivative(const Real& z, int derivative, int digits);

// Jet of T(r) = d/dr ln Ai(c^(1/3) r) at r0, generated from the Riccati
// equation T' = c r - T^2 seeded with T(r0).
Jet log_derivative_jet(const Real& c, const Real& r0, int order, int digits);

}  // namespace cornell::airy

#include "cornell/envelope.hpp"

#include "cornell/cornell.hpp"
#include "cornell/error.hpp"

namespace cornell::envelope {

namespace {

Real domain_floor(const Real& nu) { return -1 / (4 * nu * nu); }

}  // namespace

Real g(const Real& energy, const Real& nu) {
  if (nu.sign() <= 0) throw DomainError("envelope count nu must be > 0");
  const Real e_min = domain_floor(nu);
  if (energy < e_min) throw DomainError("energy below the envelope domain -1/(4 nu^2)");
  // With S = sqrt(1 + 3 nu^2 E) the quotient
  //   [2 nu^2 E^3 - E^2 (S - 1)] / (S - 1)^3
  // reduces to (2S - 1)(1 + S)^2 / (27 nu^4), which is regular at E = 0.
  const Real nu2 = nu * nu;
  Real arg = 1 + 3 * nu2 * energy;
  if (arg.sign() < 0) arg = Real::zero(arg.digits());
  const Real s = sqrt(arg);
  const Real one_plus = 1 + s;
  return (2 * s - 1) * one_plus * one_plus / (27 * nu2 * nu2);
}

Real invert_g(const Real& lambda, const Real& nu, int digits) {
  if (lambda.sign() <= 0) throw DomainError("invert_g needs lambda > 0");
  if (nu.sign() <= 0) throw DomainError("envelope count nu must be > 0");
  digits = clamp_digits(digits);
  const Real lam = lambda.at_digits(digits);
  const Real nud = nu.at_digits(digits);

  Real lo = domain_floor(nud);
  Real step = -lo;
  Real hi = lo + step;
  int iterations = 0;
  while (g(hi, nud) < lam) {
    lo = hi;
    step *= 2;
    hi = lo + step;
    if (++iterations > 1000000) throw NumericalError("invert_g bracket growth failed");
  }
  // g is increasing on its domain, so plain bisection converges.
  const Real width = pow10(-digits, digits) * max(Real(1, digits), abs(hi));
  while (hi - lo > width) {
    Real mid = (lo + hi) / 2;
    if (g(mid, nud) < lam)
      lo = std::move(mid);
    else
      hi = std::move(mid);
  }
  Real e = (lo + hi) / 2;
  const Real residual = abs(g(e, nud) - lam);
  if (residual > max(Real(1, digits), lam) * pow10(5 - digits, digits))
    throw NumericalError("invert_g residual " + residual.scientific(6) +
                         " exceeds tolerance");
  return e;
}

BoundPair bounds(const CornellProblem& p, int digits) {
  p.validate();
  digits = clamp_digits(digits);
  const Real a = p.a.at_digits(digits);
  const Real lambda = p.c.at_digits(digits) / (a * a * a);
  // nu values are half-integers; build them exactly.
  Real nu_low = Real(2 * (p.n + p.l) + p.d - 1, digits) / 2;
  Real nu_up = Real(2 * (2 * p.n + p.l) + p.d, digits) / 2;
  Real e_low = scale_energy(invert_g(lambda, nu_low, digits), a);
  Real e_up = scale_energy(invert_g(lambda, nu_up, digits), a);
  return {std::move(e_low), std::move(e_up), std::move(nu_low), std::move(nu_up),
          lambda};
}

Real scale_energy(const Real& e1, const Real& a) {
  if (a.sign() <= 0) throw DomainError("scale_energy needs a > 0");
  return a * a * e1;
}

}  // namespace cornell::envelope

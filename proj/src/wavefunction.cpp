#include "cornell/cornell.hpp"
#include "cornell/roots.hpp"

namespace cornell {

namespace {

// Fixed-step RK4 for u'' = (q0(r) - E) u on a uniform grid. q0 is tabulated
// at the grid points and midpoints once per integrator.
class RadialIntegrator {
 public:
  RadialIntegrator(const CornellProblem& p, const Real& r_max, int steps, int digits)
      : digits_(digits), steps_(steps), k_(p.k()) {
    const Real rm = r_max.at_digits(digits);
    eps_ = rm / (Real(10000, digits) * steps);
    h_ = (rm - eps_) / steps;
    const Real centrifugal = Real((k_ - 1) * (k_ - 3), digits) / 4;
    const Real a = p.a.at_digits(digits);
    const Real c = p.c.at_digits(digits);
    q0_.reserve(static_cast<size_t>(2 * steps + 1));
    for (int i = 0; i <= 2 * steps; ++i) {
      Real r = eps_ + h_ * i / 2;
      q0_.push_back(centrifugal / (r * r) - a / r + c * r);
    }
  }

  Real grid(int i) const { return eps_ + h_ * i; }

  // Integrates at `energy`; fills `u` when non-null and returns u(r_max).
  Real run(const Real& energy, std::vector<Real>* u) const {
    const Real e = energy.at_digits(digits_);
    const Real half = Real(k_ - 1, digits_) / 2;
    Real y = pow(eps_, half);
    Real v = half * pow(eps_, half - 1);
    if (u) {
      u->clear();
      u->reserve(static_cast<size_t>(steps_) + 1);
      u->push_back(y);
    }
    const Real h2 = h_ / 2;
    const Real h6 = h_ / 6;
    const Real overflow = pow10(200, digits_);
    for (int i = 0; i < steps_; ++i) {
      const Real q1 = q0_[2 * i] - e;
      const Real qm = q0_[2 * i + 1] - e;
      const Real q4 = q0_[2 * i + 2] - e;
      const Real k1u = v;
      const Real k1v = q1 * y;
      const Real k2u = v + h2 * k1v;
      const Real k2v = qm * (y + h2 * k1u);
      const Real k3u = v + h2 * k2v;
      const Real k3v = qm * (y + h2 * k2u);
      const Real k4u = v + h_ * k3v;
      const Real k4v = q4 * (y + h_ * k3u);
      y += h6 * (k1u + 2 * (k2u + k3u) + k4u);
      v += h6 * (k1v + 2 * (k2v + k3v) + k4v);
      if (abs(y) > overflow)
        throw NotEigenvalueError("radial solution overflows; E = " +
                                 energy.scientific(15) + " is not an eigenvalue");
      if (u) u->push_back(y);
    }
    return y;
  }

  const Real& step() const { return h_; }

 private:
  int digits_;
  int steps_;
  int k_;
  Real eps_;
  Real h_;
  std::vector<Real> q0_;
};

Real trapezoid_squares(const std::vector<Real>& u, const Real& h, int stride) {
  const int last = static_cast<int>(u.size()) - 1;
  int end = last - last % stride;
  Real sum = (u[0] * u[0] + u[end] * u[end]) / 2;
  for (int i = stride; i < end; i += stride) sum += u[i] * u[i];
  sum *= h * stride;
  if (end < last) {
    // Leftover cells when the grid does not divide evenly.
    for (int i = end; i < last; ++i) sum += h * (u[i] * u[i] + u[i + 1] * u[i + 1]) / 2;
  }
  return sum;
}

}  // namespace

WavefunctionSamples wavefunction(const CornellProblem& p, const Real& energy,
                                 const Real& r_max, int steps, int digits) {
  p.validate();
  if (steps < 2) throw UsageError("wavefunction needs at least 2 steps");
  if (r_max.sign() <= 0) throw DomainError("wavefunction needs r_max > 0");
  digits = clamp_digits(digits);
  const RadialIntegrator integrator(p, r_max, steps, digits);
  const Real e0 = energy.at_digits(digits);
  const Real scale = max(Real(1, digits), abs(e0));

  // An eigenvalue accurate to the AIM tolerance still seeds the growing
  // solution, which dominates by r_max. Move E onto the grid's own
  // Dirichlet level u(r_max) = 0, searching outward from the input.
  auto end_value = [&](const Real& e) { return integrator.run(e, nullptr); };
  const Real f0 = end_value(e0);
  Real e_used = e0;
  if (!f0.is_zero()) {
    std::optional<RootSearch> found;
    for (Real w = pow10(-12, digits) * scale; w <= pow10(-3, digits) * scale; w *= 10) {
      Real lo = e0 - w;
      Real hi = e0 + w;
      Real f_lo = end_value(lo);
      Real f_hi = end_value(hi);
      // Prefer the half-window adjacent to e0 so the nearest level is taken.
      if (f_lo.sign() != f0.sign()) {
        found = bracketed_root(end_value, lo, e0, f_lo, f0, pow10(5 - digits, digits) * scale);
        break;
      }
      if (f_hi.sign() != f0.sign()) {
        found = bracketed_root(end_value, e0, hi, f0, f_hi, pow10(5 - digits, digits) * scale);
        break;
      }
    }
    if (!found)
      throw NotEigenvalueError("no Dirichlet level of the integration grid within 1e-3 of E = " +
                               energy.scientific(15) + "; E is not an eigenvalue");
    e_used = found->root;
  }

  WavefunctionSamples out;
  integrator.run(e_used, &out.u);
  out.energy = e_used;
  const Real norm = trapezoid_squares(out.u, integrator.step(), 1);
  const Real inv = 1 / sqrt(norm);
  Real peak = Real::zero(digits);
  for (auto& x : out.u) {
    x *= inv;
    if (peak < abs(x)) peak = abs(x);
  }
  out.norm_residual = abs(trapezoid_squares(out.u, integrator.step(), 2) - 1);

  out.grid.reserve(out.u.size());
  for (int i = 0; i <= steps; ++i) out.grid.push_back(integrator.grid(i));

  // Interior sign changes, skipping samples at round-off level near the ends.
  const Real floor = peak * pow10(-12, digits);
  int last_sign = 0;
  for (int i = 1; i < steps; ++i) {
    if (!(abs(out.u[static_cast<size_t>(i)]) > floor)) continue;
    const int s = out.u[static_cast<size_t>(i)].sign();
    if (last_sign != 0 && s != last_sign) ++out.nodes;
    last_sign = s;
  }
  return out;
}

}  // namespace cornell

#include "cornell/cornell.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cornell/airy.hpp"
#include "cornell/envelope.hpp"

namespace cornell {

void CornellProblem::validate() const {
  if (a.sign() <= 0) throw DomainError("Cornell problem needs a > 0");
  if (c.sign() <= 0) throw DomainError("Cornell problem needs c > 0");
  if (d < 2) throw DomainError("dimension d must be >= 2");
  if (l < 0) throw DomainError("angular momentum l must be >= 0");
  if (n < 0) throw DomainError("node count n must be >= 0");
}

aim::Coefficients build_coefficients(const CornellProblem& p, const Real& energy,
                                     const Real& r0, int order, int digits) {
  const int k = p.k();
  const Real center = r0.at_digits(digits);
  const Jet inv = inverse_r(center, order);
  const Jet t = airy::log_derivative_jet(p.c, center, order, digits);
  Jet lambda0 = inv * Real(1 - k, digits) - t * Real(2, digits);
  Jet s0 = Jet::constant(-energy, center, order) - inv * p.a.at_digits(digits) -
           (t * inv) * Real(k - 1, digits);
  return {std::move(lambda0), std::move(s0)};
}

aim::Problem aim_problem(const CornellProblem& p) {
  p.validate();
  aim::CoefficientBuilder build = [p](const Real& e, const Real& r0, int order,
                                      int digits) {
    return build_coefficients(p, e, r0, order, digits);
  };
  // Every level lies above the pure Coulomb ground energy -a^2/(k-1)^2.
  const long km1 = p.k() - 1;
  Real e_min = -4 * p.a * p.a / (km1 * km1);
  return {std::move(build), std::move(e_min), pow10(15, p.a.digits())};
}

namespace {

// d/dr ln u_as = (k-1)/(2r) + T(r)
Real log_profile_slope(const CornellProblem& p, const Real& r, int digits) {
  const Real beta = cbrt(p.c.at_digits(digits));
  const airy::AiryValue v = airy::eval(beta * r, digits);
  return Real(p.k() - 1, digits) / (2 * r) + beta * v.aip / v.ai;
}

Real log_profile(const CornellProblem& p, const Real& r, int digits) {
  const Real beta = cbrt(p.c.at_digits(digits));
  const airy::AiryValue v = airy::eval(beta * r, digits);
  return Real(p.k() - 1, digits) / 2 * log(r) + log(v.ai);
}

template <typename F>
Real bisect_decreasing(F&& f, Real lo, Real hi, int iterations) {
  for (int i = 0; i < iterations; ++i) {
    Real mid = (lo + hi) / 2;
    if (f(mid).sign() > 0)
      lo = std::move(mid);
    else
      hi = std::move(mid);
  }
  return (lo + hi) / 2;
}

}  // namespace

Real asymptotic_peak(const CornellProblem& p, int digits) {
  p.validate();
  const Real beta = cbrt(p.c.at_digits(digits));
  auto slope = [&](const Real& r) { return log_profile_slope(p, r, digits); };
  // The slope is +inf at 0+ and behaves like -sqrt(c r) far out.
  Real hi = 1 / beta;
  while (slope(hi).sign() > 0) hi *= 2;
  return bisect_decreasing(slope, Real::zero(digits), hi, 120);
}

Real default_r0(const CornellProblem& p) {
  const int digits = 30;
  const Real peak = asymptotic_peak(p, digits);
  const Real target = log_profile(p, peak, digits) + log(Real(kTailFraction, digits));
  auto above = [&](const Real& r) { return log_profile(p, r, digits) - target; };
  Real lo = peak;
  Real hi = peak * 2;
  while (above(hi).sign() > 0) {
    lo = hi;
    hi *= 2;
  }
  const Real tail = bisect_decreasing(above, lo, hi, 100);
  return ceil(max(peak, tail) * 10) / 10;
}

namespace {

std::vector<int> schedule_from(int first, int max_depth) {
  std::vector<int> out;
  for (int d : aim::default_depths())
    if (d >= first && d <= max_depth) out.push_back(d);
  for (int d = 210; d <= max_depth; d += 10) out.push_back(d);
  return out;
}

// Depth at which the (n+1)-th root is first looked for.
int scan_depth(int n) { return std::min(30 + 10 * ((n + 1) / 2), 60); }

}  // namespace

SolveResult solve(const CornellProblem& p, const SolveOptions& options) {
  p.validate();
  const int digits = clamp_digits(options.digits);
  Real r0 = options.r0 ? options.r0->at_digits(digits) : default_r0(p).at_digits(digits);
  const Real r0_initial = r0;

  CornellProblem ground = p;
  ground.n = 0;
  const envelope::BoundPair b0 = envelope::bounds(ground, digits);
  const envelope::BoundPair bn = envelope::bounds(p, digits);
  const Real margin = Real(5, digits) / 100;
  const Real target_lo = bn.e_low - margin * (bn.e_up - bn.e_low);
  const Real target_hi = bn.e_up + margin * (bn.e_up - bn.e_low);
  const Real scan_lo = b0.e_low - margin * (b0.e_up - b0.e_low);

  const aim::Problem prob = aim_problem(p);
  std::vector<aim::DepthRoot> traces;
  std::ostringstream why;

  for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
    aim::Config config;
    config.r0 = r0;
    config.digits = digits;
    config.tolerance = options.tolerance.at_digits(digits);
    config.scan_grid = options.scan_grid;
    try {
      std::optional<aim::Bracket> cell;
      int first = scan_depth(p.n);
      for (; first <= std::min(options.max_depth, 100); first += 20) {
        auto cells = aim::scan_brackets(prob, config, scan_lo, target_hi, first,
                                        options.scan_grid);
        if (static_cast<int>(cells.size()) > p.n) {
          const aim::Bracket& c = cells[static_cast<size_t>(p.n)];
          if (c.hi >= target_lo && c.lo <= target_hi) {
            cell = c;
            break;
          }
        }
      }
      if (!cell)
        throw aim::NonConvergenceError("could not isolate root " +
                                           std::to_string(p.n + 1) +
                                           " inside the envelope range",
                                       {});
      config.depths = schedule_from(first, options.max_depth);
      if (config.depths.size() < 2)
        throw UsageError("max depth leaves fewer than two schedule depths");
      aim::EigenResult result = aim::find_eigenvalue(prob, config, *cell);
      return {std::move(result), r0_initial, attempt + 1};
    } catch (const aim::NonConvergenceError& e) {
      why << (attempt > 0 ? "; " : "") << "[r0=" << r0.fixed(4) << "] " << e.what();
      traces.insert(traces.end(), e.trace().begin(), e.trace().end());
    } catch (const BracketError& e) {
      why << (attempt > 0 ? "; " : "") << "[r0=" << r0.fixed(4) << "] " << e.what();
    }
    r0 *= options.retry_factor;
  }
  throw aim::NonConvergenceError("no stabilized eigenvalue: " + why.str(),
                                 std::move(traces));
}

CornellProblem dimension_shift(const CornellProblem& p, int direction) {
  if (direction != 1 && direction != -1)
    throw UsageError("dimension shift direction must be +1 or -1");
  CornellProblem q = p;
  q.d = p.d - 2 * direction;
  q.l = p.l + direction;
  if (q.d < 2 || q.l < 0) {
    std::ostringstream msg;
    msg << "shift (d=" << p.d << ", l=" << p.l << ") -> (d=" << q.d
        << ", l=" << q.l << ") leaves the valid range";
    throw DomainError(msg.str());
  }
  return q;
}

}  // namespace cornell

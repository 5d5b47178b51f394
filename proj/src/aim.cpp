#include "cornell/aim.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "cornell/roots.hpp"

namespace cornell::aim {

std::vector<int> default_depths() {
  std::vector<int> d;
  for (int n = 10; n <= 200; n += 10) d.push_back(n);
  return d;
}

void Config::validate() const {
  if (r0.sign() <= 0) throw DomainError("AIM expansion point r0 must be > 0");
  if (depths.empty()) throw UsageError("empty AIM depth schedule");
  if (depths.front() < 1) throw UsageError("AIM depths must be >= 1");
  for (size_t i = 1; i < depths.size(); ++i)
    if (depths[i] <= depths[i - 1])
      throw UsageError("AIM depth schedule must be strictly increasing");
  if (!(tolerance > pow10(5 - clamp_digits(digits), clamp_digits(digits))))
    throw UsageError("AIM tolerance must exceed 10^(5-digits)");
  if (scan_grid < 2) throw UsageError("AIM scan grid needs >= 2 cells");
}

Sequences sequences(const Jet& lambda0, const Jet& s0, int depth) {
  if (depth < 0) throw UsageError("negative AIM depth");
  require_same_center(lambda0, s0);
  if (lambda0.order() < depth + 1 || s0.order() < depth + 1) {
    std::ostringstream msg;
    msg << "AIM depth " << depth << " needs jets of order " << depth + 1
        << ", got " << std::min(lambda0.order(), s0.order());
    throw UsageError(msg.str());
  }

  const int digits = std::max(lambda0.digits(), s0.digits());
  std::vector<Real> delta;
  delta.reserve(static_cast<size_t>(depth) + 1);
  delta.push_back(-s0.value());

  // Two ping-pong buffers per sequence; step n leaves order(lambda0) - n
  // valid coefficients.
  const int order0 = std::min(lambda0.order(), s0.order());
  std::vector<Real> lam(lambda0.coeffs().begin(), lambda0.coeffs().begin() + order0 + 1);
  std::vector<Real> s(s0.coeffs().begin(), s0.coeffs().begin() + order0 + 1);
  std::vector<Real> lam_next(lam.size(), Real::zero(digits));
  std::vector<Real> s_next(s.size(), Real::zero(digits));
  Real prod = Real::zero(digits);
  Real acc_l = Real::zero(digits);
  Real acc_s = Real::zero(digits);
  Real cross = Real::zero(digits);

  int order = order0;
  for (int n = 1; n <= depth; ++n) {
    const int next_order = order - 1;
    for (int k = 0; k <= next_order; ++k) {
      mpfr_mul_si(acc_l.raw(), lam[k + 1].raw(), k + 1, MPFR_RNDN);
      mpfr_add(acc_l.raw(), acc_l.raw(), s[k].raw(), MPFR_RNDN);
      mpfr_mul_si(acc_s.raw(), s[k + 1].raw(), k + 1, MPFR_RNDN);
      for (int i = 0; i <= k; ++i) {
        mpfr_srcptr l = lam[k - i].raw();
        mpfr_mul(prod.raw(), lambda0[i].raw(), l, MPFR_RNDN);
        mpfr_add(acc_l.raw(), acc_l.raw(), prod.raw(), MPFR_RNDN);
        mpfr_mul(prod.raw(), s0[i].raw(), l, MPFR_RNDN);
        mpfr_add(acc_s.raw(), acc_s.raw(), prod.raw(), MPFR_RNDN);
      }
      mpfr_swap(lam_next[k].raw(), acc_l.raw());
      mpfr_swap(s_next[k].raw(), acc_s.raw());
    }
    // delta_n = lambda_n s_{n-1} - lambda_{n-1} s_n at r0
    mpfr_mul(cross.raw(), lam_next[0].raw(), s[0].raw(), MPFR_RNDN);
    mpfr_mul(prod.raw(), lam[0].raw(), s_next[0].raw(), MPFR_RNDN);
    mpfr_sub(cross.raw(), cross.raw(), prod.raw(), MPFR_RNDN);
    delta.push_back(cross);
    std::swap(lam, lam_next);
    std::swap(s, s_next);
    order = next_order;
  }
  lam.resize(static_cast<size_t>(order) + 1);
  s.resize(static_cast<size_t>(order) + 1);
  return {Jet(lambda0.center(), std::move(lam)), Jet(s0.center(), std::move(s)),
          std::move(delta)};
}

namespace {

void check_domain(const Problem& problem, const Real& energy) {
  if (energy < problem.energy_min || energy > problem.energy_max)
    throw DomainError("energy " + energy.scientific(16) +
                      " outside the problem's domain");
}

Real root_width(const Real& scale_like, int digits) {
  const Real one(1, digits);
  return pow10(2 - digits, digits) * max(one, abs(scale_like));
}

}  // namespace

Real delta_at(const Problem& problem, const Real& energy, const Config& config,
              int depth) {
  check_domain(problem, energy);
  const int digits = clamp_digits(config.digits);
  Coefficients co = problem.build(energy.at_digits(digits),
                                  config.r0.at_digits(digits), depth + 2, digits);
  return sequences(co.lambda0, co.s0, depth).delta.back();
}

DeltaTrace delta_trace(const Problem& problem, const Real& energy,
                       const Config& config) {
  config.validate();
  check_domain(problem, energy);
  const int digits = clamp_digits(config.digits);
  const int depth = config.depths.back();
  Coefficients co = problem.build(energy.at_digits(digits),
                                  config.r0.at_digits(digits), depth + 2, digits);
  Sequences seq = sequences(co.lambda0, co.s0, depth);
  DeltaTrace trace;
  trace.depths = config.depths;
  for (int d : config.depths) trace.values.push_back(seq.delta[static_cast<size_t>(d)]);
  return trace;
}

std::vector<Bracket> scan_brackets(const Problem& problem, const Config& config,
                                   const Real& lo, const Real& hi, int depth,
                                   int grid) {
  if (!(lo < hi)) throw UsageError("scan range must satisfy lo < hi");
  if (grid < 2) throw UsageError("scan grid needs >= 2 cells");
  const int digits = clamp_digits(config.digits);
  const Real a = lo.at_digits(digits);
  const Real step = (hi.at_digits(digits) - a) / grid;

  std::vector<Bracket> out;
  Real prev_e = a;
  Real prev_f = delta_at(problem, prev_e, config, depth);
  for (int i = 1; i <= grid; ++i) {
    Real e = i == grid ? hi.at_digits(digits) : a + step * i;
    Real f = delta_at(problem, e, config, depth);
    if (prev_f.is_zero() || prev_f.sign() * f.sign() < 0) {
      // A grid point landing exactly on a root opens a bracket to its right.
      out.push_back({prev_e, e});
    }
    prev_e = std::move(e);
    prev_f = std::move(f);
  }
  return out;
}

Real root_at_depth(const Problem& problem, const Config& config,
                   const Bracket& bracket, int depth) {
  const int digits = clamp_digits(config.digits);
  auto f = [&](const Real& e) { return delta_at(problem, e, config, depth); };
  Real lo = bracket.lo.at_digits(digits);
  Real hi = bracket.hi.at_digits(digits);
  Real f_lo = f(lo);
  Real f_hi = f(hi);
  if (!f_lo.is_zero() && !f_hi.is_zero() && f_lo.sign() == f_hi.sign())
    throw BracketError("delta_" + std::to_string(depth) +
                       " has no sign change on [" + lo.scientific(16) + ", " +
                       hi.scientific(16) + "]");
  const Real width = root_width(max(abs(lo), abs(hi)), digits);
  return bracketed_root(f, lo, hi, f_lo, f_hi, width).root;
}

namespace {

// Two consecutive growing steps after the schedule has started to settle
// mean the root of delta_N is drifting away again at this r0.
bool diverging(const std::vector<Real>& steps) {
  const size_t n = steps.size();
  return n >= 3 && steps[n - 1] > steps[n - 2] && steps[n - 2] > steps[n - 3];
}

}  // namespace

EigenResult find_eigenvalue(const Problem& problem, const Config& config,
                            const Bracket& bracket) {
  config.validate();
  const int digits = clamp_digits(config.digits);
  const Real lo = bracket.lo.at_digits(digits);
  const Real hi = bracket.hi.at_digits(digits);
  if (!(lo < hi)) throw UsageError("bracket must satisfy lo < hi");
  const Real one(1, digits);
  // Intermediate depths only need roots far below the stabilization
  // tolerance; the accepted depth is polished to full width.
  const Real coarse = config.tolerance.at_digits(digits) * pow10(-4, digits);

  const int first = config.depths.front();
  auto first_f = [&](const Real& e) { return delta_at(problem, e, config, first); };
  Real f_lo = first_f(lo);
  Real f_hi = first_f(hi);
  if (!f_lo.is_zero() && !f_hi.is_zero() && f_lo.sign() == f_hi.sign())
    throw BracketError("delta_" + std::to_string(first) +
                       " has no sign change on [" + lo.scientific(16) + ", " +
                       hi.scientific(16) + "]");
  Real root = bracketed_root(first_f, lo, hi, f_lo, f_hi,
                             coarse * max(one, abs(lo) + abs(hi)))
                  .root;

  std::vector<DepthRoot> trace{{first, root}};
  std::vector<Real> steps;
  const Real floor_width = pow10(-digits / 2, digits) * max(one, abs(root));
  Real last_step = (hi - lo) / 1000;
  for (size_t i = 1; i < config.depths.size(); ++i) {
    const int depth = config.depths[i];
    auto f = [&](const Real& e) { return delta_at(problem, e, config, depth); };

    // The root moves little between depths; look for a sign change in a
    // window around the previous root before falling back to the full bracket.
    std::optional<RootSearch> window;
    Real w = max(last_step * 4, floor_width);
    for (;;) {
      Real a = max(lo, root - w);
      Real b = min(hi, root + w);
      Real fa = f(a);
      Real fb = f(b);
      if (fa.is_zero() || fb.is_zero() || fa.sign() != fb.sign()) {
        window = RootSearch{root, std::move(a), std::move(b), std::move(fa),
                            std::move(fb), 0};
        break;
      }
      if (a == lo && b == hi) break;
      w *= 16;
    }
    if (!window) {
      auto cells = scan_brackets(problem, config, lo, hi, depth, config.scan_grid);
      if (cells.empty())
        throw NonConvergenceError("root lost at depth " + std::to_string(depth),
                                  trace);
      auto nearest = std::min_element(
          cells.begin(), cells.end(), [&](const Bracket& x, const Bracket& y) {
            return abs((x.lo + x.hi) / 2 - root) < abs((y.lo + y.hi) / 2 - root);
          });
      window = RootSearch{root, nearest->lo, nearest->hi, f(nearest->lo),
                          f(nearest->hi), 0};
    }

    RootSearch found = bracketed_root(f, window->lo, window->hi, window->f_lo,
                                      window->f_hi, coarse * max(one, abs(root)));
    Real step = abs(found.root - root);
    if (step <= config.tolerance) {
      RootSearch fine =
          found.lo == found.hi
              ? found
              : bracketed_root(f, found.lo, found.hi, found.f_lo, found.f_hi,
                               root_width(found.root, digits));
      trace.push_back({depth, fine.root});
      Real residual = abs(fine.root - root);
      return {std::move(fine.root), depth, config.r0.at_digits(digits), digits,
              std::move(residual), std::move(trace)};
    }
    trace.push_back({depth, found.root});
    steps.push_back(step);
    if (diverging(steps))
      throw NonConvergenceError("roots of delta_N diverge beyond depth " +
                                    std::to_string(depth) + " at r0 = " +
                                    config.r0.fixed(4),
                                trace);
    root = std::move(found.root);
    last_step = std::move(step);
  }
  throw NonConvergenceError("depth schedule exhausted without stabilization",
                            trace);
}

}  // namespace cornell::aim

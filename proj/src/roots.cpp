#include "cornell/roots.hpp"

#include "cornell/error.hpp"

namespace cornell {

RootSearch bracketed_root(const std::function<Real(const Real&)>& f, Real lo,
                          Real hi, Real f_lo, Real f_hi, const Real& width,
                          int max_evaluations) {
  if (f_lo.is_zero()) return {lo, lo, lo, f_lo, f_lo, 0};
  if (f_hi.is_zero()) return {hi, hi, hi, f_hi, f_hi, 0};
  if (f_lo.sign() == f_hi.sign())
    throw BracketError("bracket endpoints do not straddle a sign change");
  if (hi < lo) {
    std::swap(lo, hi);
    std::swap(f_lo, f_hi);
  }

  int evaluations = 0;
  int retained = 0;  // endpoint kept by the last step: -1 lo, +1 hi
  Real checkpoint = hi - lo;
  int since_checkpoint = 0;
  while (hi - lo > width && evaluations < max_evaluations) {
    bool force_bisect = false;
    if (since_checkpoint == 3) {
      const Real w = hi - lo;
      force_bisect = !(w * 2 < checkpoint);
      checkpoint = w;
      since_checkpoint = 0;
    }
    Real x = (lo + hi) / 2;
    if (!force_bisect) {
      Real secant = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
      if (lo < secant && secant < hi) x = std::move(secant);
    }
    ++since_checkpoint;

    Real fx = f(x);
    ++evaluations;
    if (fx.is_zero()) return {x, x, x, fx, fx, evaluations};
    if (fx.sign() == f_lo.sign()) {
      lo = x;
      f_lo = fx;
      if (retained == 1) f_hi /= 2;
      retained = 1;
    } else {
      hi = x;
      f_hi = fx;
      if (retained == -1) f_lo /= 2;
      retained = -1;
    }
  }
  Real mid = (lo + hi) / 2;
  return {std::move(mid), std::move(lo), std::move(hi), std::move(f_lo),
          std::move(f_hi), evaluations};
}

}  // namespace cornell

#include "cornell/jet.hpp"

#include <algorithm>

#include "cornell/error.hpp"

namespace cornell {

Jet::Jet(Real center, std::vector<Real> coeffs)
    : center_(std::move(center)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw UsageError("jet needs at least one coefficient");
}

Jet Jet::constant(const Real& value, const Real& center, int order) {
  if (order < 0) throw UsageError("negative jet order");
  std::vector<Real> c(static_cast<size_t>(order) + 1,
                      Real::zero(center.digits()));
  c[0] = value.at_digits(center.digits());
  return Jet(center, std::move(c));
}

Jet Jet::zero(const Real& center, int order) {
  return constant(Real::zero(center.digits()), center, order);
}

Jet Jet::identity(const Real& center, int order) {
  Jet j = constant(center, center, order);
  if (order >= 1) j[1] = Real(1, center.digits());
  return j;
}

Jet Jet::truncated(int order) const {
  if (order < 0 || order > this->order())
    throw UsageError("cannot truncate jet to a higher order");
  return Jet(center_, std::vector<Real>(coeffs_.begin(),
                                        coeffs_.begin() + order + 1));
}

void require_same_center(const Jet& f, const Jet& g) {
  if (!(f.center() == g.center()))
    throw UsageError("jet arithmetic with mismatched centers");
}

Jet& Jet::operator+=(const Jet& g) {
  require_same_center(*this, g);
  coeffs_.resize(static_cast<size_t>(std::min(order(), g.order())) + 1);
  for (int k = 0; k <= order(); ++k) (*this)[k] += g[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& g) {
  require_same_center(*this, g);
  coeffs_.resize(static_cast<size_t>(std::min(order(), g.order())) + 1);
  for (int k = 0; k <= order(); ++k) (*this)[k] -= g[k];
  return *this;
}

Jet& Jet::operator*=(const Real& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Jet operator+(const Jet& f, const Jet& g) {
  Jet r = f;
  return r += g;
}

Jet operator-(const Jet& f, const Jet& g) {
  Jet r = f;
  return r -= g;
}

Jet operator*(const Jet& f, const Jet& g) {
  require_same_center(f, g);
  const int order = std::min(f.order(), g.order());
  const int digits = std::max(f.digits(), g.digits());
  std::vector<Real> out;
  out.reserve(static_cast<size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    Real acc = Real::zero(digits);
    for (int i = 0; i <= k; ++i)
      mpfr_fma(acc.raw(), f[i].raw(), g[k - i].raw(), acc.raw(), MPFR_RNDN);
    out.push_back(std::move(acc));
  }
  return Jet(f.center(), std::move(out));
}

Jet operator*(Jet f, const Real& s) { return f *= s; }
Jet operator*(const Real& s, Jet f) { return f *= s; }

Jet derivative(const Jet& f) {
  if (f.order() < 1)
    throw UsageError("derivative of an order-0 jet: derivative information exhausted");
  std::vector<Real> out;
  out.reserve(static_cast<size_t>(f.order()));
  for (int k = 0; k < f.order(); ++k) out.push_back(f[k + 1] * (k + 1));
  return Jet(f.center(), std::move(out));
}

Jet inverse_r(const Real& center, int order) {
  if (center.sign() <= 0) throw DomainError("1/r jet needs a positive center");
  if (order < 0) throw UsageError("negative jet order");
  std::vector<Real> out;
  out.reserve(static_cast<size_t>(order) + 1);
  const Real step = -1 / center;
  Real term = 1 / center;
  for (int k = 0; k <= order; ++k) {
    out.push_back(term);
    term *= step;
  }
  return Jet(center, std::move(out));
}

}  // namespace cornell

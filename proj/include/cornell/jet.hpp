#pragma once

#include <span>
#include <vector>

#include "cornell/real.hpp"

namespace cornell {

// Truncated Taylor series at a fixed center. coeffs[k] holds f^(k)(center)/k!.
// Arithmetic between jets requires equal centers and truncates to the lower
// order of the two operands.
class Jet {
 public:
  Jet(Real center, std::vector<Real> coeffs);

  static Jet constant(const Real& value, const Real& center, int order);
  static Jet zero(const Real& center, int order);
  // The identity function r.
  static Jet identity(const Real& center, int order);

  const Real& center() const noexcept { return center_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  int digits() const noexcept { return center_.digits(); }
  std::span<const Real> coeffs() const noexcept { return coeffs_; }
  const Real& operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
  Real& operator[](int k) { return coeffs_[static_cast<size_t>(k)]; }

  // f(center).
  const Real& value() const { return coeffs_.front(); }

  Jet truncated(int order) const;

  Jet& operator+=(const Jet& g);
  Jet& operator-=(const Jet& g);
  Jet& operator*=(const Real& s);

 private:
  Real center_;
  std::vector<Real> coeffs_;
};

void require_same_center(const Jet& f, const Jet& g);

Jet operator+(const Jet& f, const Jet& g);
Jet operator-(const Jet& f, const Jet& g);
// Truncated Cauchy product.
Jet operator*(const Jet& f, const Jet& g);
Jet operator*(Jet f, const Real& s);
Jet operator*(const Real& s, Jet f);

// Throws UsageError once the jet carries no derivative information.
Jet derivative(const Jet& f);

// Taylor jet of 1/r; coefficients (-1)^k / center^(k+1).
Jet inverse_r(const Real& center, int order);

}  // namespace cornell

#include "cornell/airy.hpp"

#include <cmath>

#include "cornell/error.hpp"

namespace cornell::airy {

namespace {

constexpr int kGuardDigits = 15;

// Decimal digits lost to cancellation when summing the Maclaurin series at z:
// the largest term grows like exp(2/3 |z|^(3/2)) while Ai(z) decays like its
// reciprocal for z > 0.
int cancellation_digits(double z) {
  const double az = std::abs(z);
  return static_cast<int>(std::ceil(4.0 / 3.0 * std::pow(az, 1.5) / std::log(10.0)));
}

void check_range(const Real& z) {
  if (!(abs(z) <= Real(kMaxArgument, z.digits())))
    throw RangeError("Airy argument outside |z| <= 40: " + z.scientific(12));
}

// Coefficients a_m of Ai(z) = sum a_m z^m, summed with the derivative order
// applied term by term: sum m(m-1)...(m-q+1) a_m z^(m-q).
Real sum_series(const Real& z, int q, int work) {
  const AiryConstants c0 = constants(work);
  const Real zw = z.at_digits(work);
  const Real eps = pow10(-work, work);

  // The series is split into the z^(3j) and z^(3j+1) chains so that each
  // coefficient follows from the one three places earlier.
  Real sum = Real::zero(work);
  Real peak = Real::zero(work);
  Real coef0 = c0.ai0;   // a_{3j}
  Real coef1 = c0.aip0;  // a_{3j+1}
  const double zd = std::abs(z.to_double());
  for (int j = 0;; ++j) {
    Real chunk = Real::zero(work);
    for (int branch = 0; branch < 2; ++branch) {
      const int m = 3 * j + branch;
      if (m < q) continue;
      Real term = branch == 0 ? coef0 : coef1;
      for (int i = 0; i < q; ++i) term *= (m - i);
      if (m - q > 0) term *= pow(zw, static_cast<long>(m - q));
      chunk += term;
    }
    sum += chunk;
    const Real mag = abs(chunk);
    if (peak < mag) peak = mag;
    // Terms decrease monotonically once (3j)^2 exceeds |z|^3.
    const bool past_peak = 9.0 * j * j > zd * zd * zd + 9.0;
    if (past_peak && (mag <= eps * peak || chunk.is_zero())) break;
    if (j > 100000) throw NumericalError("Airy series failed to converge");
    coef0 /= static_cast<long>((3 * j + 2) * (3 * j + 3));
    coef1 /= static_cast<long>((3 * j + 3) * (3 * j + 4));
  }
  return sum;
}

}  // namespace

AiryConstants constants(int digits) {
  const int work = clamp_digits(digits) + 5;
  const Real three(3, work);
  const Real third = Real(1, work) / 3;
  // Ai(0) = 3^(-2/3) / Gamma(2/3), Ai'(0) = -3^(-1/3) / Gamma(1/3).
  Real ai0 = pow(three, -2 * third) / gamma(2 * third);
  Real aip0 = -pow(three, -third) / gamma(third);
  return {ai0.at_digits(digits), aip0.at_digits(digits)};
}

Real maclaurin_derivative(const Real& z, int derivative, int digits) {
  if (derivative < 0 || derivative > 3)
    throw UsageError("Airy series derivative order must be in 0..3");
  check_range(z);
  const int work = clamp_digits(digits) + kGuardDigits +
                   cancellation_digits(z.to_double());
  return sum_series(z, derivative, work).at_digits(digits);
}

AiryValue eval(const Real& z, int digits) {
  check_range(z);
  const int work = clamp_digits(digits) + kGuardDigits +
                   cancellation_digits(z.to_double());
  Real ai = sum_series(z, 0, work);
  Real aip = sum_series(z, 1, work);
  return {z.at_digits(digits), ai.at_digits(digits), aip.at_digits(digits)};
}

Jet log_derivative_jet(const Real& c, const Real& r0, int order, int digits) {
  if (c.sign() <= 0) throw DomainError("Airy log-derivative needs c > 0");
  if (r0.sign() <= 0) throw DomainError("Airy log-derivative needs r0 > 0");
  if (order < 1) throw UsageError("Airy log-derivative jet needs order >= 1");

  const Real cd = c.at_digits(digits);
  const Real center = r0.at_digits(digits);
  const Real scale = cbrt(cd);
  const AiryValue v = eval(scale * center, digits);
  if (v.ai.sign() <= 0)
    throw DomainError("Ai(c^(1/3) r0) <= 0; log-derivative undefined");

  std::vector<Real> t;
  t.reserve(static_cast<size_t>(order) + 1);
  t.push_back(scale * v.aip / v.ai);
  // (k+1) t_{k+1} = c [r]_k - sum_{i=0..k} t_i t_{k-i}
  for (int k = 0; k < order; ++k) {
    Real square = Real::zero(digits);
    for (int i = 0; i <= k; ++i)
      mpfr_fma(square.raw(), t[i].raw(), t[k - i].raw(), square.raw(), MPFR_RNDN);
    Real next = -square;
    if (k == 0) next += cd * center;
    if (k == 1) next += cd;
    next /= (k + 1);
    t.push_back(std::move(next));
  }
  return Jet(center, std::move(t));
}

}  // namespace cornell::airy

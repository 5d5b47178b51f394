#pragma once

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cornell {

// Extended-precision real backed by an MPFR value. Precision is expressed in
// decimal digits and never drops below kMinDigits. Binary operations produce
// a result at the larger of the two operand precisions.
class Real {
 public:
  static constexpr int kMinDigits = 20;
  static constexpr int kDefaultDigits = 50;

  Real() : Real(0, kDefaultDigits) {}

  template <std::integral I>
  Real(I value, int digits = kDefaultDigits) : Real(uninitialized(digits)) {
    if constexpr (std::is_signed_v<I>)
      mpfr_set_si(v_, static_cast<long>(value), MPFR_RNDN);
    else
      mpfr_set_ui(v_, static_cast<unsigned long>(value), MPFR_RNDN);
  }

  // Exact binary value of the double; use parse() for decimal literals.
  template <std::floating_point F>
  explicit Real(F value, int digits = kDefaultDigits) : Real(uninitialized(digits)) {
    mpfr_set_d(v_, static_cast<double>(value), MPFR_RNDN);
  }

  static Real parse(std::string_view text, int digits = kDefaultDigits);
  static Real zero(int digits) { return Real(0, digits); }

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  int digits() const noexcept { return digits_; }
  // Copy rounded to the given precision.
  Real at_digits(int digits) const;

  mpfr_srcptr raw() const noexcept { return v_; }
  mpfr_ptr raw() noexcept { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const noexcept { return mpfr_sgn(v_); }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }

  enum class Rounding { kNearest, kDown, kUp };
  // Correctly rounded fixed-point text with `decimals` digits after the point.
  std::string fixed(int decimals, Rounding mode = Rounding::kNearest) const;
  // Correctly rounded scientific text with `significant` digits.
  std::string scientific(int significant) const;
  // Scientific text carrying all working digits.
  std::string str() const { return scientific(digits_); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator+=(long rhs);
  Real& operator-=(long rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  Real operator-() const;

  friend Real operator+(Real lhs, const Real& rhs);
  friend Real operator-(Real lhs, const Real& rhs);
  friend Real operator*(Real lhs, const Real& rhs);
  friend Real operator/(Real lhs, const Real& rhs);
  template <std::integral I>
  friend Real operator+(Real lhs, I rhs) { return lhs += static_cast<long>(rhs); }
  template <std::integral I>
  friend Real operator-(Real lhs, I rhs) { return lhs -= static_cast<long>(rhs); }
  template <std::integral I>
  friend Real operator*(Real lhs, I rhs) { return lhs *= static_cast<long>(rhs); }
  template <std::integral I>
  friend Real operator/(Real lhs, I rhs) { return lhs /= static_cast<long>(rhs); }
  template <std::integral I>
  friend Real operator+(I lhs, Real rhs) { return rhs += static_cast<long>(lhs); }
  template <std::integral I>
  friend Real operator-(I lhs, const Real& rhs) {
    return -rhs + static_cast<long>(lhs);
  }
  template <std::integral I>
  friend Real operator*(I lhs, Real rhs) { return rhs *= static_cast<long>(lhs); }
  template <std::integral I>
  friend Real operator/(I lhs, const Real& rhs) {
    return divide(static_cast<long>(lhs), rhs);
  }

  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  template <std::integral I>
  friend bool operator==(const Real& a, I b) {
    return mpfr_cmp_si(a.v_, static_cast<long>(b)) == 0;
  }
  template <std::integral I>
  friend std::partial_ordering operator<=>(const Real& a, I b) {
    return compare(a, static_cast<long>(b));
  }

 private:
  static Real divide(long lhs, const Real& rhs);
  static std::partial_ordering compare(const Real& a, long b);

  struct uninitialized {
    int digits;
  };
  explicit Real(uninitialized u);

  mpfr_t v_;
  int digits_;
};

// Number of mantissa bits used for a decimal precision.
mpfr_prec_t bits_for_digits(int digits);
int clamp_digits(int digits);

Real abs(Real x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real gamma(const Real& x);
Real ceil(const Real& x);
// 10^e at the given precision.
Real pow10(long e, int digits = Real::kDefaultDigits);
const Real& min(const Real& a, const Real& b);
const Real& max(const Real& a, const Real& b);

std::ostream& operator<<(std::ostream& os, const Real& x);

}  // namespace cornell

#include "cornell/real.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "cornell/error.hpp"

namespace cornell {

int clamp_digits(int digits) { return std::max(digits, Real::kMinDigits); }

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(
             std::ceil(clamp_digits(digits) * 3.3219280948873623)) +
         4;
}

Real::Real(uninitialized u) : digits_(clamp_digits(u.digits)) {
  mpfr_init2(v_, bits_for_digits(digits_));
}

Real::Real(const Real& other) : Real(uninitialized{other.digits_}) {
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : digits_(other.digits_) {
  // Steal the limbs and leave `other` holding a fresh zero of the same size.
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set_zero(v_, 1);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    if (digits_ != other.digits_) {
      digits_ = other.digits_;
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    }
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    mpfr_swap(v_, other.v_);
    std::swap(digits_, other.digits_);
  }
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::parse(std::string_view text, int digits) {
  std::string s(text);
  Real r(uninitialized{digits});
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == s.c_str() || *end != '\0')
    throw UsageError("not a decimal number: '" + s + "'");
  if (!r.is_finite()) throw UsageError("non-finite number: '" + s + "'");
  return r;
}

Real Real::at_digits(int digits) const {
  Real r(uninitialized{digits});
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

namespace {

std::string format_with(const char* spec, int count, mpfr_srcptr v) {
  char* buf = nullptr;
  int n = mpfr_asprintf(&buf, spec, count, v);
  if (n < 0) throw NumericalError("mpfr_asprintf failed");
  std::string out(buf, static_cast<size_t>(n));
  mpfr_free_str(buf);
  return out;
}

Real combine(const Real& a, const Real& b) {
  return Real::zero(std::max(a.digits(), b.digits()));
}

}  // namespace

std::string Real::fixed(int decimals, Rounding mode) const {
  const char* spec = mode == Rounding::kDown ? "%.*RDf"
                     : mode == Rounding::kUp ? "%.*RUf"
                                             : "%.*RNf";
  std::string s = format_with(spec, std::max(decimals, 0), v_);
  // "-0.000" is printed for tiny negatives; normalize to an unsigned zero.
  if (!s.empty() && s[0] == '-' &&
      s.find_first_not_of("0.", 1) == std::string::npos)
    s.erase(0, 1);
  return s;
}

std::string Real::scientific(int significant) const {
  return format_with("%.*RNe", std::max(significant - 1, 0), v_);
}

Real& Real::operator+=(const Real& rhs) {
  if (rhs.digits_ > digits_) *this = at_digits(rhs.digits_);
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  if (rhs.digits_ > digits_) *this = at_digits(rhs.digits_);
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  if (rhs.digits_ > digits_) *this = at_digits(rhs.digits_);
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  if (rhs.digits_ > digits_) *this = at_digits(rhs.digits_);
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator+=(long rhs) {
  mpfr_add_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(long rhs) {
  mpfr_sub_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long rhs) {
  mpfr_mul_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(long rhs) {
  if (rhs == 0) throw DomainError("division by zero");
  mpfr_div_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }

Real Real::divide(long lhs, const Real& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  Real r = Real::zero(rhs.digits());
  mpfr_si_div(r.raw(), lhs, rhs.raw(), MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : c > 0 ? std::partial_ordering::greater
                       : std::partial_ordering::equivalent;
}

std::partial_ordering Real::compare(const Real& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : c > 0 ? std::partial_ordering::greater
                       : std::partial_ordering::equivalent;
}

Real abs(Real x) {
  mpfr_abs(x.raw(), x.raw(), MPFR_RNDN);
  return x;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("sqrt of negative number");
  Real r = Real::zero(x.digits());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real cbrt(const Real& x) {
  if (x.sign() <= 0) throw DomainError("cbrt requires a positive argument");
  Real r = Real::zero(x.digits());
  mpfr_cbrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r = Real::zero(x.digits());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  if (x.sign() <= 0) throw DomainError("log requires a positive argument");
  Real r = Real::zero(x.digits());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r = combine(x, y);
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  if (!r.is_finite()) throw DomainError("pow result is not finite");
  return r;
}

Real pow(const Real& x, long n) {
  Real r = Real::zero(x.digits());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  if (!r.is_finite()) throw DomainError("pow result is not finite");
  return r;
}

Real gamma(const Real& x) {
  Real r = Real::zero(x.digits());
  mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
  if (!r.is_finite()) throw DomainError("gamma pole");
  return r;
}

Real ceil(const Real& x) {
  Real r = Real::zero(x.digits());
  mpfr_ceil(r.raw(), x.raw());
  return r;
}

Real pow10(long e, int digits) {
  Real r = Real::zero(digits);
  mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e),
                 MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  return r;
}

const Real& min(const Real& a, const Real& b) { return b < a ? b : a; }
const Real& max(const Real& a, const Real& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Real& x) {
  return os << x.scientific(std::min(x.digits(), 25));
}

}  // namespace cornell

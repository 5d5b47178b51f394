#include "cornell/airy.hpp"
#include "cornell/error.hpp"
#include "doctest.h"
#include "oracle.hpp"

using cornell::Real;
using cornell::pow10;
using oracle::dec;

namespace airy = cornell::airy;

TEST_CASE("Ai(0) and Ai'(0)") {
  auto k = airy::constants(50);
  CHECK(abs(k.ai0 - dec("0.355028053887817239260063186004")) < pow10(-29));
  CHECK(abs(k.aip0 - dec("-0.258819403792806798405183560189")) < pow10(-29));
}

TEST_CASE("Ai matches MPFR's implementation") {
  for (const char* z : {"-10", "-3.5", "-1", "0", "0.5", "2", "5", "10", "25"}) {
    Real x = dec(z);
    auto v = airy::eval(x, 50);
    Real ref = oracle::mpfr_airy(x.at_digits(60));
    CAPTURE(z);
    CHECK(abs(v.ai - ref) <= pow10(-45) * cornell::max(Real(1), abs(ref)) +
                                 pow10(-48) * abs(ref));
  }
}

TEST_CASE("Ai' matches a finite difference of MPFR's Ai") {
  for (const char* z : {"-7", "-1", "0.3", "3", "12"}) {
    Real x = dec(z, 100);
    auto v = airy::eval(dec(z), 50);
    Real fd = oracle::central_difference(oracle::mpfr_airy, x, pow10(-30, 100));
    CAPTURE(z);
    CHECK(abs(v.aip - fd) < pow10(-40));
  }
}

TEST_CASE("published values") {
  auto one = airy::eval(Real(1), 50);
  CHECK(abs(one.ai - dec("0.135292416312881415524")) < pow10(-21));
  auto zero = airy::eval(dec("-2.338107410459767038489"), 50);
  CHECK(abs(zero.ai) < pow10(-21));
}

TEST_CASE("series derivatives satisfy the Airy equation") {
  for (const char* z : {"-6", "-0.4", "1.7", "8"}) {
    Real x = dec(z);
    Real ai = airy::maclaurin_derivative(x, 0, 50);
    Real d1 = airy::maclaurin_derivative(x, 1, 50);
    Real d2 = airy::maclaurin_derivative(x, 2, 50);
    Real d3 = airy::maclaurin_derivative(x, 3, 50);
    CAPTURE(z);
    CHECK(abs(d2 - x * ai) < pow10(-44));
    // Ai''' = Ai + z Ai'
    CHECK(abs(d3 - ai - x * d1) < pow10(-44));
  }
  CHECK_THROWS_AS(airy::maclaurin_derivative(Real(0), 4, 50), cornell::UsageError);
}

TEST_CASE("argument range") {
  CHECK_THROWS_AS(airy::eval(Real(41), 50), cornell::RangeError);
  CHECK_THROWS_AS(airy::eval(Real(-41), 50), cornell::RangeError);
  CHECK_NOTHROW(airy::eval(Real(40), 50));
}

TEST_CASE("log-derivative jet") {
  // T(1) for c = 1 is Ai'(1)/Ai(1).
  auto t = airy::log_derivative_jet(Real(1), Real(1), 6, 50);
  CHECK(abs(t[0] - dec("-1.17632196714370102308934626278734984847")) < pow10(-38));

  // Taylor coefficients of T(r) = d/dr ln Ai(c^(1/3) r), frozen from an
  // independent arbitrary-precision evaluation.
  const char* c1[] = {"-1.176321967143701023089346262787349848474",
                      "-0.3837333703848264293013944092091533806835",
                      "0.0486060068902385498127746885975600748961",
                      "-0.01096622408888233048102054392248833705471",
                      "0.002875968276283315726880403884621066139452",
                      "-0.0008025253690914315076288857639448171256483",
                      "0.0002308670475165978363885403020492466229389"};
  for (int k = 0; k <= 6; ++k) {
    CAPTURE(k);
    CHECK(abs(t[k] - dec(c1[k])) < pow10(-38));
  }
  auto t100 = airy::log_derivative_jet(Real(100), Real(1), 4, 50);
  const char* c100[] = {"-10.23630067213198018534968804701022227102",
                        "-4.781851450289629303988811390527149658723",
                        "1.051530785364983320224537808799039511772",
                        "-0.4461775742129785354978199983358119185339",
                        "0.2305281041076048727740874898626933489131"};
  for (int k = 0; k <= 4; ++k) {
    CAPTURE(k);
    CHECK(abs(t100[k] - dec(c100[k])) < pow10(-37));
  }
}

TEST_CASE("Riccati jet agrees with finite differences of ln Ai") {
  const int digits = 100;
  for (const char* cs : {"0.01", "1", "100"}) {
    for (const char* rs : {"0.5", "2.5"}) {
      Real c = dec(cs, digits);
      Real r0 = dec(rs, digits);
      Real beta = cornell::cbrt(c);
      auto log_ai = [&](const Real& r) {
        return cornell::log(oracle::mpfr_airy(beta * r));
      };
      // T = (ln Ai)' and T' = (ln Ai)''.
      std::function<Real(const Real&)> big_t = [&](const Real& r) {
        return oracle::central_difference(log_ai, r, pow10(-30, digits));
      };
      Real h = pow10(-20, digits);
      auto jet = airy::log_derivative_jet(dec(cs), dec(rs), 3, 50);
      CAPTURE(cs);
      CAPTURE(rs);
      Real scale = cornell::max(Real(1), abs(jet[0]));
      CHECK(abs(jet[0] - big_t(r0)) < pow10(-30) * scale);
      CHECK(abs(jet[1] - oracle::central_difference(big_t, r0, h)) <
            pow10(-25) * scale * scale);
      CHECK(abs(2 * jet[2] - oracle::second_difference(big_t, r0, h)) <
            pow10(-14) * scale * scale * scale);
    }
  }
}

#include "cornell/cornell.hpp"
#include "cornell/envelope.hpp"
#include "cornell/error.hpp"
#include "doctest.h"
#include "oracle.hpp"

using cornell::Real;
using cornell::pow10;
using oracle::dec;

namespace envelope = cornell::envelope;

namespace {

// The unsimplified quotient, usable away from E = 0.
Real quotient(const Real& e, const Real& nu) {
  Real s1 = cornell::sqrt(1 + 3 * nu * nu * e) - 1;
  return (2 * nu * nu * e * e * e - e * e * s1) / (s1 * s1 * s1);
}

// Expansion about E = 0 in x = 3 nu^2 E.
Real series(const Real& e, const Real& nu) {
  Real x = 3 * nu * nu * e;
  const long num[] = {1, 3, 3, -1, 3, -3, 7, -9, 99};
  const long den[] = {1, 2, 16, 32, 256, 512, 2048, 4096, 65536};
  Real sum = Real::zero(50);
  Real p(1, 50);
  for (int i = 0; i < 9; ++i) {
    sum += p * num[i] / den[i];
    p *= x;
  }
  return sum * 4 / (27 * cornell::pow(nu, 4L));
}

}  // namespace

TEST_CASE("g at distinguished points") {
  for (const char* nus : {"1", "1.5", "3.5"}) {
    Real nu = dec(nus);
    CAPTURE(nus);
    CHECK(abs(envelope::g(Real(0), nu) - 4 / (27 * cornell::pow(nu, 4L))) <
          pow10(-48));
    CHECK(abs(envelope::g(-1 / (4 * nu * nu), nu)) < pow10(-48));
  }
  CHECK(abs(envelope::g(Real(1), Real(1)) - 1) < pow10(-48));
  CHECK_THROWS_AS(envelope::g(Real(-1), Real(1)), cornell::DomainError);
  CHECK_THROWS_AS(envelope::g(Real(1), Real(0)), cornell::DomainError);
}

TEST_CASE("g matches the raw quotient away from zero") {
  for (const char* es : {"-0.2", "-0.05", "0.3", "1", "7.5", "40"}) {
    for (const char* nus : {"1", "1.5", "2.5"}) {
      Real e = dec(es);
      Real nu = dec(nus);
      if (e < -1 / (4 * nu * nu)) continue;
      CAPTURE(es);
      CAPTURE(nus);
      Real q = quotient(e, nu);
      CHECK(abs(envelope::g(e, nu) - q) <= pow10(-40) * cornell::max(Real(1), abs(q)));
    }
  }
}

TEST_CASE("g matches its expansion near zero") {
  Real nu = dec("1.5");
  for (const char* es : {"1e-4", "-3e-4", "2e-6", "0"}) {
    Real e = dec(es);
    CAPTURE(es);
    // The truncated series is good to x^9 ~ 1e-27 on this range.
    CHECK(abs(envelope::g(e, nu) - series(e, nu)) < pow10(-25));
  }
}

TEST_CASE("g is increasing on a grid") {
  for (const char* nus : {"1", "2", "5.5"}) {
    Real nu = dec(nus);
    Real e = -1 / (4 * nu * nu);
    Real prev = envelope::g(e, nu);
    for (int i = 1; i <= 400; ++i) {
      e += Real(1) / 20;
      Real cur = envelope::g(e, nu);
      CHECK(cur > prev);
      prev = cur;
    }
  }
}

TEST_CASE("invert_g round-trips") {
  for (const char* ls : {"1e-8", "0.01", "1", "100", "1e6"}) {
    for (const char* nus : {"1", "1.5", "4"}) {
      Real lambda = dec(ls);
      Real nu = dec(nus);
      Real e = envelope::invert_g(lambda, nu, 50);
      CAPTURE(ls);
      CAPTURE(nus);
      CHECK(abs(envelope::g(e, nu) - lambda) <= pow10(-40) * lambda);
    }
  }
  CHECK_THROWS_AS(envelope::invert_g(Real(0), Real(1), 50), cornell::DomainError);
}

TEST_CASE("bounds for a state") {
  cornell::CornellProblem ground{Real(1), Real(1), 3, 0, 0};
  auto b = envelope::bounds(ground);
  CHECK(b.nu_low == 1);
  CHECK(b.nu_up == dec("1.5"));
  CHECK(b.e_low < dec("1.397875641660"));
  CHECK(dec("1.397875641660") < b.e_up);
  // g(1, 1) = 1 puts the lower bound at exactly 1.
  CHECK(abs(b.e_low - 1) < pow10(-45));

  cornell::CornellProblem scaled{Real(2), Real(8), 3, 0, 0};
  auto s = envelope::bounds(scaled);
  CHECK(s.lambda == 1);
  CHECK(abs(s.e_low - 4 * b.e_low) < pow10(-44));
  CHECK(abs(s.e_up - 4 * b.e_up) < pow10(-44));

  cornell::CornellProblem excited{Real(1), Real(1), 4, 2, 3};
  auto x = envelope::bounds(excited);
  CHECK(x.nu_low == dec("6.5"));
  CHECK(x.nu_up == 10);
}

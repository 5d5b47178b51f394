#include <random>

#include "cornell/error.hpp"
#include "cornell/jet.hpp"
#include "cornell/real.hpp"
#include "cornell/roots.hpp"
#include "doctest.h"
#include "oracle.hpp"

using cornell::Jet;
using cornell::Real;
using oracle::dec;

TEST_CASE("decimal parse and fixed-point rounding") {
  CHECK(dec("1.5").fixed(3) == "1.500");
  CHECK(dec("0.12345651").fixed(6) == "0.123457");
  CHECK(dec("-0.12345649").fixed(6) == "-0.123456");
  CHECK(dec("2.5e-3").fixed(4) == "0.0025");
  CHECK(dec("-1e-30").fixed(5) == "0.00000");
  CHECK(dec("1.23456789").fixed(4, Real::Rounding::kDown) == "1.2345");
  CHECK(dec("1.23450001").fixed(4, Real::Rounding::kUp) == "1.2346");
  CHECK(dec("-1.23450001").fixed(4, Real::Rounding::kDown) == "-1.2346");
  CHECK_THROWS_AS(Real::parse("1.2.3"), cornell::UsageError);
  CHECK_THROWS_AS(Real::parse(""), cornell::UsageError);
  CHECK_THROWS_AS(Real::parse("abc"), cornell::UsageError);
}

TEST_CASE("precision floor and propagation") {
  CHECK(Real(1, 5).digits() == Real::kMinDigits);
  Real lo(1, 30);
  Real hi(3, 80);
  CHECK((lo / hi).digits() == 80);
  CHECK((hi * lo).digits() == 80);
  // 1/3 at 80 digits carries more correct digits than at 30.
  Real third_lo = Real(1, 30) / 3;
  Real third_hi = Real(1, 80) / 3;
  CHECK(abs(third_hi * 3 - 1) < cornell::pow10(-78, 80));
  CHECK(abs(third_lo * 3 - 1) < cornell::pow10(-28, 80));
  CHECK(abs(third_lo - third_hi) > cornell::pow10(-40, 80));
}

TEST_CASE("elementary functions") {
  using cornell::cbrt;
  using cornell::sqrt;
  CHECK(cbrt(Real(27)) == 3);
  CHECK(abs(sqrt(Real(2)) * sqrt(Real(2)) - 2) < cornell::pow10(-48));
  CHECK(abs(cornell::exp(cornell::log(Real(7))) - 7) < cornell::pow10(-47));
  CHECK(abs(cornell::gamma(Real(5)) - 24) < cornell::pow10(-45));
  CHECK_THROWS_AS(sqrt(Real(-1)), cornell::DomainError);
  CHECK_THROWS_AS(cbrt(Real(0)), cornell::DomainError);
  CHECK(dec("3.2") > 3);
  CHECK(cornell::ceil(dec("4.01")) == 5);
  CHECK(cornell::pow(Real(2), 10L) == 1024);
}

TEST_CASE("jet basics") {
  Real c(2);
  Jet x = Jet::identity(c, 5);
  CHECK(x.order() == 5);
  CHECK(x[0] == 2);
  CHECK(x[1] == 1);
  CHECK(x[2] == 0);

  Jet sq = x * x;  // r^2 around 2: 4 + 4h + h^2
  CHECK(sq[0] == 4);
  CHECK(sq[1] == 4);
  CHECK(sq[2] == 1);
  CHECK(sq[3] == 0);

  Jet inv = cornell::inverse_r(c, 6);
  CHECK(inv[0] == Real(1) / 2);
  CHECK(inv[3] == Real(-1) / 16);
  Jet one = inv * Jet::identity(c, 6);
  CHECK(abs(one[0] - 1) < cornell::pow10(-48));
  for (int k = 1; k <= 6; ++k) CHECK(abs(one[k]) < cornell::pow10(-48));

  Jet cube = sq * x;  // derivative 3 r^2 = 12 + 12 h + 3 h^2
  Jet dcube = cornell::derivative(cube);
  CHECK(dcube.order() == 4);
  CHECK(dcube[0] == 12);
  CHECK(dcube[1] == 12);
  CHECK(dcube[2] == 3);

  CHECK_THROWS_AS(cornell::inverse_r(Real(0), 3), cornell::DomainError);
  CHECK_THROWS_AS(cornell::derivative(Jet::constant(Real(1), c, 0)),
                  cornell::UsageError);
  CHECK_THROWS_AS(x + Jet::identity(Real(3), 5), cornell::UsageError);
}

TEST_CASE("jet product obeys the Leibniz rule") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coeff(-999, 999);
  for (int trial = 0; trial < 25; ++trial) {
    int order = 3 + trial % 9;
    Real center = Real(coeff(rng), 50) / 100;
    std::vector<Real> fc, gc;
    for (int k = 0; k <= order; ++k) {
      fc.push_back(Real(coeff(rng), 50) / 37);
      gc.push_back(Real(coeff(rng), 50) / 53);
    }
    Jet f(center, fc);
    Jet g(center, gc);
    Jet lhs = cornell::derivative(f * g);
    Jet rhs = cornell::derivative(f) * g.truncated(order - 1) +
              f.truncated(order - 1) * cornell::derivative(g);
    REQUIRE(lhs.order() == rhs.order());
    for (int k = 0; k <= lhs.order(); ++k) {
      CHECK(abs(lhs[k] - rhs[k]) < cornell::pow10(-40));
    }
  }
}

TEST_CASE("bracketed root finder") {
  auto f = [](const Real& x) { return x * x - 2; };
  auto r = cornell::bracketed_root(f, Real(0), Real(2), Real(-2), Real(2),
                                   cornell::pow10(-45));
  CHECK(abs(r.root - cornell::sqrt(Real(2))) < cornell::pow10(-44));
  CHECK(r.lo <= r.root);
  CHECK(r.root <= r.hi);
  CHECK_THROWS_AS(cornell::bracketed_root(f, Real(2), Real(3), Real(2),
                                          Real(7), cornell::pow10(-10)),
                  cornell::BracketError);
  // A flat-then-steep function still converges inside its bracket.
  auto g = [](const Real& x) { return cornell::pow(x, 9L) - Real(1) / 512; };
  auto s = cornell::bracketed_root(g, Real(0), Real(4), g(Real(0)), g(Real(4)),
                                   cornell::pow10(-40));
  CHECK(abs(s.root - Real(1) / cornell::pow(Real(512), Real(1) / 9)) <
        cornell::pow10(-38));
}

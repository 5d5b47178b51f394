#include <mpfr.h>

#include "cornell/airy.hpp"
#include "cornell/cornell.hpp"
#include "cornell/error.hpp"
#include "doctest.h"
#include "oracle.hpp"

using cornell::CornellProblem;
using cornell::Real;
using cornell::pow10;
using oracle::dec;

TEST_CASE("problem validation") {
  CHECK_THROWS_AS((CornellProblem{Real(0), Real(1), 3, 0, 0}.validate()),
                  cornell::DomainError);
  CHECK_THROWS_AS((CornellProblem{Real(1), Real(-1), 3, 0, 0}.validate()),
                  cornell::DomainError);
  CHECK_THROWS_AS((CornellProblem{Real(1), Real(1), 1, 0, 0}.validate()),
                  cornell::DomainError);
  CHECK_THROWS_AS((CornellProblem{Real(1), Real(1), 3, -1, 0}.validate()),
                  cornell::DomainError);
  CHECK_THROWS_AS((CornellProblem{Real(1), Real(1), 3, 0, -2}.validate()),
                  cornell::DomainError);
  CHECK((CornellProblem{Real(1), Real(1), 4, 3, 0}.k()) == 10);
}

TEST_CASE("dimension shift keeps k and n") {
  CornellProblem p{Real(1), Real(1), 5, 0, 2};
  auto up = cornell::dimension_shift(p, +1);
  CHECK(up.d == 3);
  CHECK(up.l == 1);
  CHECK(up.k() == p.k());
  CHECK(up.n == 2);
  auto back = cornell::dimension_shift(up, -1);
  CHECK(back.d == 5);
  CHECK(back.l == 0);
  CHECK_THROWS_AS(cornell::dimension_shift(p, -1), cornell::DomainError);
  CHECK_THROWS_AS(cornell::dimension_shift(CornellProblem{Real(1), Real(1), 3, 0, 0}, 1),
                  cornell::DomainError);
  CHECK_THROWS_AS(cornell::dimension_shift(p, 2), cornell::UsageError);
}

TEST_CASE("asymptotic peak against a direct maximization") {
  struct Case {
    const char* c;
    int k;
    const char* peak;
  };
  // Roots of (k-1)/(2r) + c^(1/3) Ai'(c^(1/3) r)/Ai(c^(1/3) r), computed
  // independently.
  const Case cases[] = {{"1", 3, "0.884050458552372950069801529863762928"},
                        {"100", 3, "0.190462897564382628428967808603883281"},
                        {"1", 5, "1.480762741743551322639681664476646317"},
                        {"0.01", 3, "4.103398736766951091521600557928322879"}};
  for (const auto& cs : cases) {
    CornellProblem p{Real(1), dec(cs.c), cs.k, 0, 0};
    CAPTURE(cs.c);
    CHECK(abs(cornell::asymptotic_peak(p) - dec(cs.peak)) < pow10(-25));
  }
  // The profile u = r Ai(r) has a maximum there: sample it with MPFR's Ai.
  auto u = [](const Real& r) {
    Real ai = Real::zero(50);
    mpfr_ai(ai.raw(), r.raw(), MPFR_RNDN);
    return r * ai;
  };
  Real peak = cornell::asymptotic_peak(CornellProblem{Real(1), Real(1), 3, 0, 0});
  CHECK(u(peak) > u(peak - pow10(-3)));
  CHECK(u(peak) > u(peak + pow10(-3)));
}

TEST_CASE("default expansion point") {
  Real r0 = cornell::default_r0(CornellProblem{Real(1), Real(1), 3, 0, 0});
  // One decimal, beyond the peak, where r Ai(r) has dropped to 1% of its peak.
  CHECK(r0.fixed(6) == "4.600000");
  Real wide = cornell::default_r0(CornellProblem{Real(1), dec("0.01"), 3, 0, 0});
  Real narrow = cornell::default_r0(CornellProblem{Real(1), Real(100), 3, 0, 0});
  CHECK(wide > r0);
  CHECK(narrow < r0);
  CHECK(wide > cornell::asymptotic_peak(CornellProblem{Real(1), dec("0.01"), 3, 0, 0}));
}

TEST_CASE("coefficient jets") {
  CornellProblem p{Real(1), Real(1), 3, 0, 0};
  Real r0(2);
  Real e = dec("1.4");
  auto co = cornell::build_coefficients(p, e, r0, 4, 50);
  auto t = cornell::airy::log_derivative_jet(Real(1), r0, 4, 50);
  // k = 3: lambda0 = -2/r - 2T, s0 = -E - 1/r - 2T/r at r0 = 2.
  CHECK(abs(co.lambda0[0] - (Real(-1) - 2 * t[0])) < pow10(-45));
  CHECK(abs(co.s0[0] - (-e - Real(1) / 2 - t[0])) < pow10(-45));
  CHECK(co.lambda0.order() == 4);
}

TEST_CASE("solve reproduces reference states") {
  auto ground = cornell::solve(CornellProblem{Real(1), Real(1), 3, 0, 0});
  CHECK(abs(ground.eigen.energy - dec("1.397875641660")) < pow10(-10));
  CHECK(ground.eigen.residual <= pow10(-13));

  auto p_wave = cornell::solve(CornellProblem{Real(1), Real(1), 3, 1, 0});
  CHECK(abs(p_wave.eigen.energy - dec("2.825646640704")) < pow10(-10));

  cornell::SolveOptions opts;
  opts.r0 = Real(6);
  auto weak = cornell::solve(CornellProblem{dec("0.2"), Real(1), 3, 0, 0}, opts);
  CHECK(abs(weak.eigen.energy - dec("2.167316208772717")) <
        pow10(-13) * dec("2.167316208772717"));
  CHECK(weak.r0_initial == 6);
}

TEST_CASE("solve scales with the expansion point retry") {
  cornell::SolveOptions opts;
  opts.r0 = Real(2);
  opts.max_retries = 0;
  CHECK_THROWS_AS(cornell::solve(CornellProblem{Real(1), Real(1), 3, 0, 4}, opts),
                  cornell::aim::NonConvergenceError);
  opts.max_retries = 6;
  auto r = cornell::solve(CornellProblem{Real(1), Real(1), 3, 0, 4}, opts);
  CHECK(r.attempts > 1);
  CHECK(abs(r.eigen.energy - dec("7.574932640591")) < pow10(-10));
}

TEST_CASE("wavefunction of the ground state") {
  CornellProblem p{Real(1), Real(1), 3, 0, 0};
  auto w = cornell::wavefunction(p, dec("1.39787564165990700"), Real(12), 4000);
  CHECK(w.nodes == 0);
  CHECK(w.norm_residual < pow10(-8));
  Real peak = Real::zero(30);
  for (const auto& u : w.u) peak = cornell::max(peak, abs(u));
  CHECK(abs(w.u.front()) < peak / 1000);
  CHECK(abs(w.u.back()) < peak / 1000);
  CHECK_THROWS_AS(cornell::wavefunction(p, dec("1.2"), Real(12), 4000),
                  cornell::NotEigenvalueError);
  CHECK_THROWS_AS(cornell::wavefunction(p, dec("1.4"), Real(12), 1),
                  cornell::UsageError);
}

#include <cstring>
#include <string>

#include "cornell.h"
#include "doctest.h"

namespace {

std::string energy_of(const cornell_result* r, int decimals) {
  char buf[128];
  cornell_result_energy(r, decimals, buf, sizeof buf);
  return buf;
}

}  // namespace

TEST_CASE("problem handles and error codes") {
  cornell_problem* p = nullptr;
  CHECK(cornell_problem_create("1", "1", 3, 1, 0, &p) == CORNELL_OK);
  REQUIRE(p != nullptr);
  CHECK(cornell_problem_k(p) == 5);

  cornell_problem* shifted = nullptr;
  CHECK(cornell_problem_shift(p, -1, &shifted) == CORNELL_OK);
  CHECK(cornell_problem_k(shifted) == 5);
  cornell_problem_destroy(shifted);
  CHECK(cornell_problem_shift(p, 3, &shifted) == CORNELL_E_USAGE);
  CHECK(shifted == nullptr);
  cornell_problem_destroy(p);

  cornell_problem* bad = nullptr;
  CHECK(cornell_problem_create("-1", "1", 3, 0, 0, &bad) == CORNELL_E_DOMAIN);
  CHECK(bad == nullptr);
  CHECK(std::strstr(cornell_last_error(), "a > 0") != nullptr);
  CHECK(cornell_problem_create("x1", "1", 3, 0, 0, &bad) == CORNELL_E_USAGE);
  CHECK(cornell_problem_create(nullptr, "1", 3, 0, 0, &bad) == CORNELL_E_USAGE);
  CHECK(std::string(cornell_status_name(CORNELL_E_NONCONVERGENCE)) ==
        "non-convergence");
}

TEST_CASE("text output follows snprintf conventions") {
  cornell_problem* p = nullptr;
  REQUIRE(cornell_problem_create("1", "1", 3, 0, 0, &p) == CORNELL_OK);
  char small[4];
  CHECK(cornell_default_r0(p, small, sizeof small) == CORNELL_OK);
  CHECK(std::string(small) == "4.6");
  cornell_bounds* b = nullptr;
  REQUIRE(cornell_bounds_compute(p, 50, &b) == CORNELL_OK);
  char tiny[3];
  size_t full = cornell_bounds_get(b, CORNELL_BOUND_E_UP, 12, tiny, sizeof tiny);
  CHECK(full == std::strlen("1.830499363047"));
  CHECK(std::string(tiny) == "1.");
  CHECK(cornell_bounds_get(b, CORNELL_BOUND_NU_UP, 1, nullptr, 0) == 3);
  cornell_bounds_destroy(b);
  cornell_problem_destroy(p);
}

TEST_CASE("solve through the C interface") {
  cornell_problem* p = nullptr;
  REQUIRE(cornell_problem_create("1", "1", 3, 2, 0, &p) == CORNELL_OK);
  cornell_options* o = nullptr;
  REQUIRE(cornell_options_create(&o) == CORNELL_OK);
  CHECK(cornell_options_set_precision(o, 10) == CORNELL_E_USAGE);
  CHECK(cornell_options_set_precision(o, 40) == CORNELL_OK);
  CHECK(cornell_options_precision(o) == 40);
  CHECK(cornell_options_set_r0(o, "0") == CORNELL_E_DOMAIN);
  CHECK(cornell_options_set_r0(o, "5") == CORNELL_OK);
  CHECK(cornell_options_set_tolerance(o, "-1") == CORNELL_E_USAGE);

  cornell_result* r = nullptr;
  REQUIRE(cornell_solve(p, o, &r) == CORNELL_OK);
  CHECK(cornell_result_converged(r) == 1);
  CHECK(energy_of(r, 12) == "3.850580006803");
  CHECK(cornell_result_precision(r) == 40);
  CHECK(cornell_result_depth(r) > 0);
  CHECK(cornell_result_trace_size(r) >= 2);
  cornell_result_destroy(r);

  // A starved schedule fails with a trace attached.
  CHECK(cornell_options_set_max_depth(o, 20) == CORNELL_OK);
  CHECK(cornell_options_set_max_retries(o, 0) == CORNELL_OK);
  CHECK(cornell_options_set_r0(o, "2") == CORNELL_OK);
  cornell_problem* hard = nullptr;
  REQUIRE(cornell_problem_create("1", "1", 3, 0, 5, &hard) == CORNELL_OK);
  cornell_status s = cornell_solve(hard, o, &r);
  CHECK(s == CORNELL_E_NONCONVERGENCE);
  REQUIRE(r != nullptr);
  CHECK(cornell_result_converged(r) == 0);
  cornell_result_destroy(r);
  cornell_problem_destroy(hard);

  cornell_options_destroy(o);
  cornell_problem_destroy(p);
}

TEST_CASE("Coulomb helpers and wavefunction") {
  char buf[64];
  CHECK(cornell_coulomb_energy("1", 3, 1, 6, buf, sizeof buf) == CORNELL_OK);
  CHECK(std::string(buf) == "-0.062500");
  CHECK(cornell_coulomb_validate("1", 3, 2, "5", 50, buf, sizeof buf) == CORNELL_OK);
  CHECK(std::stod(buf) < 1e-35);

  cornell_problem* p = nullptr;
  REQUIRE(cornell_problem_create("1", "1", 3, 0, 1, &p) == CORNELL_OK);
  cornell_wavefunction* w = nullptr;
  REQUIRE(cornell_wavefunction_compute(p, "3.475086545396", "12", 3000, &w) ==
          CORNELL_OK);
  CHECK(cornell_wavefunction_size(w) == 3001);
  CHECK(cornell_wavefunction_nodes(w) == 1);
  CHECK(cornell_wavefunction_norm_residual(w) < 1e-6);
  CHECK(cornell_wavefunction_r(w, 3000) == doctest::Approx(12.0));
  cornell_wavefunction_destroy(w);
  CHECK(cornell_wavefunction_compute(p, "2.9", "12", 3000, &w) ==
        CORNELL_E_NOT_EIGENVALUE);
  cornell_problem_destroy(p);
}

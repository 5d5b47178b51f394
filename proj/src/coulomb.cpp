#include "cornell/coulomb.hpp"

#include <sstream>

namespace cornell::coulomb {

namespace {

void check_params(const Real& a, int k) {
  if (a.sign() <= 0) throw DomainError("Coulomb strength a must be > 0");
  if (k < 2) throw DomainError("k = d + 2l must be >= 2");
}

}  // namespace

Real exact_energy(const Real& a, int k, int j) {
  check_params(a, k);
  if (j < 0) throw DomainError("state index j must be >= 0");
  const long m = k + 2 * j - 1;
  return -(a * a) / (m * m);
}

aim::Coefficients coefficients(const Real& a, int k, const Real& energy,
                               const Real& r0, int order, int digits) {
  check_params(a, k);
  if (energy.sign() >= 0) throw DomainError("Coulomb bound states need E < 0");
  const Real center = r0.at_digits(digits);
  const Real kappa = sqrt(-energy.at_digits(digits));
  const Jet inv = inverse_r(center, order);
  Jet lambda0 = Jet::constant(2 * kappa, center, order) + inv * Real(1 - k, digits);
  Jet s0 = inv * ((k - 1) * kappa - a.at_digits(digits));
  return {std::move(lambda0), std::move(s0)};
}

aim::Problem problem(const Real& a, int k) {
  check_params(a, k);
  aim::CoefficientBuilder build = [a, k](const Real& e, const Real& r0,
                                         int order, int digits) {
    return coefficients(a, k, e, r0, order, digits);
  };
  // The upper end stays strictly negative so that kappa > 0.
  return {std::move(build), -4 * a * a, -pow10(-30, a.digits()) * a * a};
}

ValidationReport validate_aim(const Real& a, int k, int j_max, const Real& r0,
                              int digits) {
  check_params(a, k);
  if (j_max < 0) throw DomainError("j_max must be >= 0");
  digits = clamp_digits(digits);
  const Real ad = a.at_digits(digits);
  aim::Problem prob = problem(ad, k);
  aim::Config config;
  config.r0 = r0.at_digits(digits);
  config.digits = digits;

  ValidationReport report{ad, k, config.r0, digits, {}, Real::zero(digits)};
  const Real tol = pow10(10 - digits, digits);
  std::ostringstream failures;

  for (int depth = 0; depth <= j_max; ++depth) {
    // Scan uniformly in kappa = sqrt(-E) so the cells crowd toward E = 0-,
    // where the high-j energies accumulate. Depth N has its last exact root
    // at kappa = a/(k + 2N - 1); the scan stops well below that.
    const int grid = 256;
    const Real kappa_hi = ad * Real::parse("1.05", digits);
    const Real kappa_lo = ad / (2 * (k + 2 * depth + 3));
    std::vector<aim::Bracket> cells;
    auto delta = [&](const Real& e) { return aim::delta_at(prob, e, config, depth); };
    Real prev_e = -(kappa_hi * kappa_hi);
    Real prev_f = delta(prev_e);
    for (int i = 1; i <= grid; ++i) {
      Real kappa = kappa_hi + (kappa_lo - kappa_hi) * i / grid;
      Real e = -(kappa * kappa);
      Real fv = delta(e);
      if (prev_f.is_zero() || prev_f.sign() * fv.sign() < 0)
        cells.push_back({prev_e, e});
      prev_e = std::move(e);
      prev_f = std::move(fv);
    }

    std::vector<Real> roots;
    for (const auto& cell : cells)
      roots.push_back(aim::root_at_depth(prob, config, cell, depth));

    if (static_cast<int>(roots.size()) != depth + 1) {
      failures << "N=" << depth << ": found " << roots.size()
               << " roots, expected " << depth + 1 << "; ";
    }
    for (int j = 0; j <= depth && j < static_cast<int>(roots.size()); ++j) {
      const Real expected = exact_energy(ad, k, j);
      const Real err = abs(roots[static_cast<size_t>(j)] - expected);
      if (report.max_error < err) report.max_error = err;
      if (err > tol) failures << "N=" << depth << " j=" << j << " error " << err << "; ";
      report.checks.push_back({depth, j, expected, roots[static_cast<size_t>(j)], err});
    }
  }
  const std::string msg = failures.str();
  if (!msg.empty()) throw ValidationError("Coulomb AIM validation failed: " + msg);
  return report;
}

}  // namespace cornell::coulomb

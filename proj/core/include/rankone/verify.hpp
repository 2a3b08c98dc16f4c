#pragma once

#include <rankone/common.hpp>

#include <string>
#include <vector>

namespace rankone::verify {

struct Check {
  std::string name;
  double value;
  double limit;
  bool pass() const { return value < limit; }
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass()) return false;
    return true;
  }
};

/// Appendix integral identities over parameter sweeps.
SuiteResult run_appendix_suite();

/// Closed-form g against direct quadrature, and the derivative relation.
SuiteResult run_greens_suite(unsigned seed = 20240801);

/// Convention lock: the +-2 pi i/(e^{+-2 pi xi}+1) multiplier against the
/// eps-regularized Cauchy kernel evaluated by adaptive quadrature.
SuiteResult run_mellin_suite();

/// Moller relation residuals on interior bumps for a small parameter set.
SuiteResult run_scattering_suite();

std::vector<SuiteResult> run_all_suites();

}  // namespace rankone::verify

#pragma once

#include <string>
#include <vector>

#include "ellip/bipoly.hpp"
#include "ellip/conformal.hpp"
#include "ellip/field.hpp"

namespace ellip {

/// Outcome of one named invariant suite.
struct SuiteResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;   ///< worst observed metric
  double bound = 0.0;   ///< allowed bound for that metric
  std::string detail;   ///< one-line note (or the caught error message)
};

/// Runs every invariant-and-property suite across the library. Each suite is
/// isolated: an exception is reported as that suite's failure, not a crash.
std::vector<SuiteResult> run_validation_suites();

/// Max over points of |S(z) - f(omega(z))| — the solution field on the disk
/// against an exact solution expressed in the image-domain coordinate.
double max_error_vs_exact(const FourierRadialField& S, const BiPolynomial& f,
                          const ConformalMap& omega,
                          const std::vector<Cx>& points);

}  // namespace ellip

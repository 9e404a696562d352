#pragma once

#include <string>
#include <vector>

#include "dkp/scattering.hpp"

namespace dkp::verify {

struct VerifyOptions {
  double a = 5.0;
  double b = 3.0;
  double m = 1.0;
  bool quick = false;
  ScatteringOptions scattering;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the invariant suite: DKP algebra, special-function identities,
/// unitarity, superradiance, total reflection, free particle, oracle
/// equivalence, step limit, component and DKP residual convergence, and the
/// high-energy decay of R.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace dkp::verify

#pragma once

// Command-line front end. Commands: point, sweep, regions, wavefunction,
// potential, verify. Exit codes: 0 success, 1 runtime or check failure,
// 2 usage error.

#include <iosfwd>
#include <string>

#include "dkp/scattering.hpp"

namespace dkp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Shortest round-trip decimal form (at most 17 significant digits).
std::string format_csv_number(double value);

/// Human-facing form with 12 significant digits.
std::string format_report_number(double value);

struct SweepSpec {
  double e_min = 0.0;
  double e_max = 0.0;
  int steps = 2;
  PotentialConfig pot;
  double m = 1.0;
};

/// Writes `E,R,T,unitarity_defect,region` rows for `steps` energies evenly
/// spaced over [e_min, e_max], ascending. Boundary energies and energies with
/// no propagating channel are skipped and noted on `log`. Returns the number
/// of data rows written.
int write_sweep_csv(const SweepSpec& spec, std::ostream& out, std::ostream& log,
                    const ScatteringOptions& options = {});

/// Reads DKP_EPS_BOUNDARY; returns the default when unset. Throws
/// std::invalid_argument on a malformed or non-positive value.
double eps_boundary_from_env();

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dkp::cli

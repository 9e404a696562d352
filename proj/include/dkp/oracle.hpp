#pragma once

// Independent numerical checks of the analytic coefficients: direct
// integration of Psi'' + [(E - a tanh(bx))^2 - m^2] Psi = 0 with plane-wave
// matching, and the closed-form step potential (b -> infinity).
//
// Nothing here uses the Gamma/hypergeometric machinery; the wavenumbers are
// recomputed from E, a, m directly.

#include <complex>

#include "dkp/scattering.hpp"

namespace dkp::oracle {

struct IntegrationSettings {
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  double x_right = 15.0;
  double x_left = -15.0;
  long max_steps = 1'000'000;

  /// Defaults for steepness b: x_right = 15/b, x_left = -15/b.
  static IntegrationSettings defaults_for(double b);

  /// Throws DomainError unless tolerances are in (0, 1e-4] and tanh is
  /// saturated to 1 - 1e-12 at both ends.
  void validate(double b) const;
};

struct KgEndpoint {
  Complex psi;
  Complex dpsi;
  long steps = 0;
  /// Largest relative change of Im(psi* psi') over accepted steps.
  double max_current_drift = 0.0;
};

/// Integrates from x_right (pure transmitted wave e^{i k_t x}) to x_left with
/// an adaptive Dormand-Prince 5(4) pair. Each step's local error is held
/// below its share |h| / (x_right - x_left) of the tolerance, so the error
/// accumulated over the whole span is of the order of the tolerance. Throws
/// EvanescentChannel when the right channel is closed and StepLimitExceeded
/// after max_steps.
KgEndpoint integrate_kg(const PotentialConfig& pot, const ParticleConfig& particle,
                        const IntegrationSettings& settings);

struct NumericRT {
  double R = 0.0;
  double T = 0.0;
  double defect = 0.0;  // R + T - 1
};

/// Splits the integrated wave at x_left into A e^{i k_i x} + C e^{-i k_i x}
/// and returns R = |C/A|^2, T = (k_t/k_i) / |A|^2. Throws EvanescentIncident
/// when the left channel is closed.
NumericRT numeric_rt(const PotentialConfig& pot, const ParticleConfig& particle,
                     const IntegrationSettings& settings);

inline NumericRT numeric_rt(const PotentialConfig& pot, const ParticleConfig& particle) {
  return numeric_rt(pot, particle, IntegrationSettings::defaults_for(pot.b));
}

/// Plane-wave matching across the step V = -a (x < 0), V = +a (x > 0).
/// Throws ChannelClosed unless both channels propagate.
NumericRT step_rt(double a, double m, double E);

}  // namespace dkp::oracle

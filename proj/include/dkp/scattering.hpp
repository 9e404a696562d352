#pragma once

// Analytic scattering of spin-one DKP particles on V(x) = a tanh(b x).
//
// Natural units (hbar = c = 1). The incident wave arrives from x = -inf,
// where V -> -a, and is transmitted towards x = +inf, where V -> +a. The
// asymptotic wavenumbers are 2 b nu (left) and 2 b mu (right) with
//
//   nu = sqrt((E + a)^2 - m^2) / (2b),  mu = sqrt((E - a)^2 - m^2) / (2b),
//
// signed by the group velocity (sign(nu) = sign(E + a), sign(mu) = sign(E - a))
// when real and carrying a positive imaginary part when the channel is closed.

#include <complex>
#include <string_view>

namespace dkp {

using Complex = std::complex<double>;

struct PotentialConfig {
  double a = 0.0;  // asymptotic height, V(+-inf) = +-a
  double b = 1.0;  // steepness (inverse length), b > 0

  double operator()(double x) const;
};

struct ParticleConfig {
  double m = 1.0;
  double E = 0.0;
};

/// Default distance (in energy units) from a threshold +-a +- m below which
/// an energy is rejected as a boundary energy.
inline constexpr double kDefaultEpsBoundary = 1e-9;

struct ScatteringOptions {
  double eps_boundary = kDefaultEpsBoundary;
  /// Mutation hook for the verification suite: evaluates the analytic
  /// pipeline with the sign of mu reversed. Never set in normal use.
  bool debug_flip_mu_sign = false;
};

struct KinematicParams {
  Complex nu;
  Complex mu;
  Complex lambda;
  Complex alpha;  // i nu
  Complex beta;   // lambda
  Complex gamma;  // i mu
  double b = 1.0;

  bool nu_real() const { return nu.imag() == 0.0; }
  bool mu_real() const { return mu.imag() == 0.0; }
};

struct HypergeomParams {
  Complex alpha1, beta1, gamma1;
  Complex alpha2, beta2, gamma2;
};

struct ConnectionCoefficients {
  Complex A, B, C, D;
};

enum class EnergyRegion { I, II, III, IV, V, Boundary };

/// CSV token: I, II, III, IV, V or boundary.
std::string_view region_token(EnergyRegion region);

struct Currents {
  double j_inc = 0.0;
  double j_ref = 0.0;
  double j_trans = 0.0;
};

struct ScatteringResult {
  double R = 0.0;
  double T = 0.0;
  double unitarity_defect = 0.0;  // R + T - 1
  EnergyRegion region = EnergyRegion::Boundary;
};

/// Threshold energies (-|a| - m, -|a| + m, |a| - m, |a| + m) in ascending order
/// of the nominal table layout (they may cross when |a| < m).
struct RegionThresholds {
  double lower_outer;  // -|a| - m
  double lower_inner;  // -|a| + m
  double upper_inner;  //  |a| - m
  double upper_outer;  //  |a| + m
};
RegionThresholds region_thresholds(double a, double m);

/// True when E is within eps of one of the four thresholds.
bool is_boundary_energy(const PotentialConfig& pot, const ParticleConfig& particle,
                        double eps_boundary = kDefaultEpsBoundary);

/// Throws BoundaryEnergy near a threshold and DomainError for b <= 0 or m <= 0.
KinematicParams kinematics(const PotentialConfig& pot, const ParticleConfig& particle,
                           const ScatteringOptions& options = {});

/// Energy region of the five-row classification. Negative a is classified
/// through the mirror x -> -x (intervals use |a|). When |a| <= m the middle
/// row is empty, and energies with both channels closed report Boundary.
EnergyRegion classify_region(const PotentialConfig& pot, const ParticleConfig& particle,
                             double eps_boundary = kDefaultEpsBoundary);

HypergeomParams hypergeometric_parameters(const KinematicParams& k);

/// A, B, C, D through log-Gamma; a Gamma pole in a denominator gives an
/// exact zero coefficient.
ConnectionCoefficients connection_coefficients(const HypergeomParams& h);

/// Probability currents of the incident, reflected and transmitted waves.
/// Throws EvanescentIncident when nu is not real.
Currents currents(const ConnectionCoefficients& coeffs, const KinematicParams& k, double m);

/// R = |C/A|^2 and T = (mu/nu) / |A|^2 (signed). In the total-reflection
/// regions the transmitted current vanishes and T = 0. When the left channel
/// is closed (region IV for a > 0) the wave incident from the open side is
/// evaluated through the mirror a -> -a.
ScatteringResult scattering_coefficients(const PotentialConfig& pot,
                                         const ParticleConfig& particle,
                                         const ScatteringOptions& options = {});

}  // namespace dkp

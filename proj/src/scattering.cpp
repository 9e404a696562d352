#include "dkp/scattering.hpp"

#include <array>
#include <cmath>

#include "dkp/errors.hpp"
#include "dkp/specfun.hpp"

namespace dkp {

namespace {

constexpr Complex kI{0.0, 1.0};

// Signed asymptotic parameter sqrt(q) / (2b): real with the sign of the
// kinetic energy when q > 0, otherwise positive imaginary (decaying wave).
Complex dispersion(double kinetic, double m, double b) {
  const double q = kinetic * kinetic - m * m;
  if (q > 0.0) return std::copysign(std::sqrt(q), kinetic) / (2.0 * b);
  return Complex{0.0, std::sqrt(-q) / (2.0 * b)};
}

struct GammaArgs {
  std::array<Complex, 2> num;
  std::array<Complex, 2> den;
};

// A = Gamma(1 - b1 + a1) Gamma(1 - g1) / (Gamma(1 - g1 + a1) Gamma(1 - b1))
GammaArgs incident_args(const HypergeomParams& h) {
  return {{1.0 - h.beta1 + h.alpha1, 1.0 - h.gamma1},
          {1.0 - h.gamma1 + h.alpha1, 1.0 - h.beta1}};
}

// B = Gamma(1 - b1 + a1) Gamma(-g1) / (Gamma(1 - g1 + a1) Gamma(-b1))
GammaArgs incident_derivative_args(const HypergeomParams& h) {
  return {{1.0 - h.beta1 + h.alpha1, -h.gamma1},
          {1.0 - h.gamma1 + h.alpha1, -h.beta1}};
}

// C = Gamma(1 - a2 + b2) Gamma(1 - g2) / (Gamma(1 - g2 + b2) Gamma(1 - a2))
GammaArgs reflected_args(const HypergeomParams& h) {
  return {{1.0 - h.alpha2 + h.beta2, 1.0 - h.gamma2},
          {1.0 - h.gamma2 + h.beta2, 1.0 - h.alpha2}};
}

// D = Gamma(1 - a2 + b2) Gamma(-g2) / (Gamma(1 - g2 + b2) Gamma(-a2))
GammaArgs reflected_derivative_args(const HypergeomParams& h) {
  return {{1.0 - h.alpha2 + h.beta2, -h.gamma2},
          {1.0 - h.gamma2 + h.beta2, -h.alpha2}};
}

Complex evaluate(const GammaArgs& g) { return specfun::gamma_ratio(g.num, g.den); }

}  // namespace

double PotentialConfig::operator()(double x) const { return a * std::tanh(b * x); }

std::string_view region_token(EnergyRegion region) {
  switch (region) {
    case EnergyRegion::I: return "I";
    case EnergyRegion::II: return "II";
    case EnergyRegion::III: return "III";
    case EnergyRegion::IV: return "IV";
    case EnergyRegion::V: return "V";
    case EnergyRegion::Boundary: return "boundary";
  }
  return "boundary";
}

RegionThresholds region_thresholds(double a, double m) {
  const double h = std::abs(a);
  return {-h - m, -h + m, h - m, h + m};
}

bool is_boundary_energy(const PotentialConfig& pot, const ParticleConfig& particle,
                        double eps_boundary) {
  const auto t = region_thresholds(pot.a, particle.m);
  for (double edge : {t.lower_outer, t.lower_inner, t.upper_inner, t.upper_outer}) {
    if (std::abs(particle.E - edge) < eps_boundary) return true;
  }
  return false;
}

KinematicParams kinematics(const PotentialConfig& pot, const ParticleConfig& particle,
                           const ScatteringOptions& options) {
  if (!(pot.b > 0.0)) throw DomainError("kinematics: b must be positive");
  if (!(particle.m > 0.0)) throw DomainError("kinematics: m must be positive");
  if (is_boundary_energy(pot, particle, options.eps_boundary)) {
    throw BoundaryEnergy("kinematics: energy at a channel threshold (E = +-a +- m)");
  }
  const double a = pot.a;
  const double b = pot.b;
  const double E = particle.E;

  KinematicParams k;
  k.b = b;
  k.nu = dispersion(E + a, particle.m, b);
  k.mu = dispersion(E - a, particle.m, b);
  if (options.debug_flip_mu_sign && k.mu_real()) k.mu = -k.mu;

  const double disc = b * b - 4.0 * a * a;
  k.lambda = disc >= 0.0 ? Complex{(b + std::sqrt(disc)) / (2.0 * b), 0.0}
                         : Complex{0.5, std::sqrt(-disc) / (2.0 * b)};
  k.alpha = kI * k.nu;
  k.beta = k.lambda;
  k.gamma = kI * k.mu;
  return k;
}

EnergyRegion classify_region(const PotentialConfig& pot, const ParticleConfig& particle,
                             double eps_boundary) {
  if (is_boundary_energy(pot, particle, eps_boundary)) return EnergyRegion::Boundary;
  const double h = std::abs(pot.a);
  const double m = particle.m;
  const double E = particle.E;
  if (E > h + m) return EnergyRegion::I;
  if (E < -h - m) return EnergyRegion::V;
  if (h > m) {
    if (E > h - m) return EnergyRegion::II;
    if (E > -h + m) return EnergyRegion::III;
    return EnergyRegion::IV;
  }
  // |a| <= m: no Klein zone; between |a| - m and m - |a| both channels close.
  if (E > m - h) return EnergyRegion::II;
  if (E < h - m) return EnergyRegion::IV;
  return EnergyRegion::Boundary;
}

HypergeomParams hypergeometric_parameters(const KinematicParams& k) {
  const Complex inu = kI * k.nu;
  const Complex imu = kI * k.mu;
  return {inu + k.lambda - imu, inu + k.lambda + imu, 1.0 + 2.0 * inu,
          -inu + k.lambda + imu, -inu + k.lambda - imu, 1.0 - 2.0 * inu};
}

ConnectionCoefficients connection_coefficients(const HypergeomParams& h) {
  return {evaluate(incident_args(h)), evaluate(incident_derivative_args(h)),
          evaluate(reflected_args(h)), evaluate(reflected_derivative_args(h))};
}

Currents currents(const ConnectionCoefficients& coeffs, const KinematicParams& k, double m) {
  if (!k.nu_real()) throw EvanescentIncident("currents: incident channel is closed");
  const double nu = k.nu.real();
  Currents j;
  j.j_inc = 6.0 * std::norm(coeffs.A) * k.b * nu / m;
  j.j_ref = -6.0 * std::norm(coeffs.C) * k.b * nu / m;
  j.j_trans = k.mu_real() ? 6.0 * k.b * k.mu.real() / m : 0.0;
  return j;
}

ScatteringResult scattering_coefficients(const PotentialConfig& pot,
                                         const ParticleConfig& particle,
                                         const ScatteringOptions& options) {
  const KinematicParams k = kinematics(pot, particle, options);
  const EnergyRegion region = classify_region(pot, particle, options.eps_boundary);

  if (!k.nu_real()) {
    if (!k.mu_real()) {
      throw EvanescentIncident("scattering_coefficients: both channels are closed");
    }
    ScatteringResult mirrored =
        scattering_coefficients(PotentialConfig{-pot.a, pot.b}, particle, options);
    mirrored.region = region;
    return mirrored;
  }

  const HypergeomParams h = hypergeometric_parameters(k);
  const GammaArgs inc = incident_args(h);
  const GammaArgs ref = reflected_args(h);

  // |C/A|^2 as one log-domain ratio.
  const std::array<Complex, 4> r_num{ref.num[0], ref.num[1], inc.den[0], inc.den[1]};
  const std::array<Complex, 4> r_den{ref.den[0], ref.den[1], inc.num[0], inc.num[1]};

  ScatteringResult result;
  result.region = region;
  result.R = specfun::gamma_ratio_abs_sq(r_num, r_den);
  result.T = k.mu_real()
                 ? k.mu.real() / k.nu.real() * specfun::gamma_ratio_abs_sq(inc.den, inc.num)
                 : 0.0;
  result.unitarity_defect = result.R + result.T - 1.0;
  return result;
}

}  // namespace dkp

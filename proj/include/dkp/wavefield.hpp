#pragma once

// Exact and asymptotic (Psi, Phi, Theta) scattering solutions.
//
// All exact forms are evaluated in y = -exp(2bx). With parameters from
// hypergeometric_parameters():
//
//   incident     A (-y)^{i nu} (1-y)^lambda 2F1(a1, b1; c1; y)
//   reflected    C (-y)^{-i nu} (1-y)^lambda 2F1(a2, b2; c2; y)
//   transmitted  exp(2ib mu x) (1 + exp(-2bx))^lambda
//                  2F1(a1, a1 - c1 + 1; a1 - b1 + 1; -exp(-2bx))
//
// The transmitted wave has unit amplitude and equals incident + reflected
// for every x. Phi = (E - V) Psi / m and Theta = (i/m) dPsi/dx, with the
// derivative taken analytically through the contiguous 2F1.

#include <functional>

#include "dkp/algebra.hpp"
#include "dkp/scattering.hpp"

namespace dkp::wavefield {

using algebra::Polarization;
using algebra::SpinorTriple;

enum class WaveKind { Incident, Reflected, Transmitted };

/// Largest |2bx| accepted by the exact evaluators.
inline constexpr double kMaxExponent = 700.0;

/// Exact solution of the given kind at x. Throws RangeError when |2bx| > 700,
/// EvanescentIncident when nu is not real, and BoundaryEnergy near thresholds.
SpinorTriple wavefunction(double x, WaveKind kind, const PotentialConfig& pot,
                          const ParticleConfig& particle,
                          const Polarization& polarization = {1.0, 0.0, 0.0});

/// Plane-wave limits: incident and reflected for x -> -inf, transmitted for
/// x -> +inf.
SpinorTriple asymptotic_wavefunction(double x, WaveKind kind, const PotentialConfig& pot,
                                     const ParticleConfig& particle,
                                     const Polarization& polarization = {1.0, 0.0, 0.0});

struct ComponentResiduals {
  double r_phi = 0.0;    // |Phi - (E - V) Psi / m|
  double r_theta = 0.0;  // |Theta - (i/m) central-difference Psi'|
  double r_kg = 0.0;     // |second-difference Psi'' + ((E - V)^2 - m^2) Psi|
};

ComponentResiduals component_residuals(const algebra::SolutionMap& solution,
                                       const PotentialConfig& pot,
                                       const ParticleConfig& particle, double x, double h);

ComponentResiduals component_residuals(double x, WaveKind kind, const PotentialConfig& pot,
                                       const ParticleConfig& particle, double h);

/// Binds pot/particle/kind into a position -> SpinorTriple map.
algebra::SolutionMap solution_map(WaveKind kind, const PotentialConfig& pot,
                                  const ParticleConfig& particle,
                                  const Polarization& polarization = {1.0, 0.0, 0.0});

}  // namespace dkp::wavefield

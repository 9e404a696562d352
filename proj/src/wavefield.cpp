#include "dkp/wavefield.hpp"

#include <cmath>
#include <exception>
#include <memory>

#include "dkp/errors.hpp"
#include "dkp/specfun.hpp"

namespace dkp::wavefield {

namespace {

constexpr Complex kI{0.0, 1.0};

// log(1 + e^t) without overflow.
double softplus(double t) { return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t)); }

// 1 / (1 + e^t) without overflow.
double logistic_complement(double t) {
  if (t > 0.0) {
    const double e = std::exp(-t);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(t));
}

struct PsiAndDerivative {
  Complex psi;
  Complex dpsi;
};

struct Setup {
  KinematicParams k;
  HypergeomParams h;
  ConnectionCoefficients coeffs;
};

Setup prepare(const PotentialConfig& pot, const ParticleConfig& particle) {
  Setup s;
  s.k = kinematics(pot, particle);
  if (!s.k.nu_real()) {
    throw EvanescentIncident("wavefunction: incident channel is closed");
  }
  s.h = hypergeometric_parameters(s.k);
  s.coeffs = connection_coefficients(s.h);
  return s;
}

void check_range(double t) {
  if (!(std::abs(t) <= kMaxExponent)) {
    throw RangeError("wavefunction: |2bx| exceeds the exponent range guard");
  }
}

// amplitude (-y)^s (1-y)^lambda 2F1(a, b; c; y) and its x-derivative, y = -e^{2bx}.
PsiAndDerivative left_solution(double x, double b, Complex s, Complex lambda, Complex pa,
                               Complex pb, Complex pc, Complex amplitude) {
  const double t = 2.0 * b * x;
  const double y = -std::exp(t);
  const Complex prefactor = amplitude * std::exp(s * t + lambda * softplus(t));
  const Complex f0 = specfun::hyp2f1(pa, pb, pc, y);
  const Complex f1 = specfun::hyp2f1(pa + 1.0, pb + 1.0, pc + 1.0, y);

  const double inv_one_minus_y = logistic_complement(t);    // 1 / (1 - y)
  const double y_over = -logistic_complement(-t);           // y / (1 - y)
  const Complex log_slope = s * inv_one_minus_y - (s + lambda) * y_over;

  PsiAndDerivative out;
  out.psi = prefactor * f0;
  out.dpsi = 2.0 * b * prefactor * (log_slope * f0 + y * (pa * pb / pc) * f1);
  return out;
}

// exp(2ib mu x) (1 - w)^lambda 2F1(a1, a1-c1+1; a1-b1+1; w), w = -e^{-2bx}.
PsiAndDerivative transmitted_solution(double x, const Setup& s) {
  const double b = s.k.b;
  const double t = 2.0 * b * x;
  const double w = -std::exp(-t);
  const Complex pa = s.h.alpha1;
  const Complex pb = s.h.alpha1 - s.h.gamma1 + 1.0;
  const Complex pc = s.h.alpha1 - s.h.beta1 + 1.0;
  const Complex prefactor = std::exp(kI * s.k.mu * t + s.k.lambda * softplus(-t));
  const Complex g0 = specfun::hyp2f1(pa, pb, pc, w);
  const Complex g1 = specfun::hyp2f1(pa + 1.0, pb + 1.0, pc + 1.0, w);

  const double w_over = -logistic_complement(t);  // w / (1 - w)
  PsiAndDerivative out;
  out.psi = prefactor * g0;
  out.dpsi = (2.0 * kI * b * s.k.mu + 2.0 * b * s.k.lambda * w_over) * out.psi -
             2.0 * b * w * prefactor * (pa * pb / pc) * g1;
  return out;
}

PsiAndDerivative evaluate(double x, WaveKind kind, const Setup& s) {
  check_range(2.0 * s.k.b * x);
  switch (kind) {
    case WaveKind::Incident:
      return left_solution(x, s.k.b, kI * s.k.nu, s.k.lambda, s.h.alpha1, s.h.beta1,
                           s.h.gamma1, s.coeffs.A);
    case WaveKind::Reflected:
      return left_solution(x, s.k.b, -kI * s.k.nu, s.k.lambda, s.h.alpha2, s.h.beta2,
                           s.h.gamma2, s.coeffs.C);
    case WaveKind::Transmitted:
      return transmitted_solution(x, s);
  }
  throw DomainError("wavefunction: unknown wave kind");
}

SpinorTriple make_triple(const PsiAndDerivative& v, double kinetic, double m,
                         const Polarization& polarization) {
  return {v.psi, kinetic * v.psi / m, kI * v.dpsi / m, polarization};
}

}  // namespace

SpinorTriple wavefunction(double x, WaveKind kind, const PotentialConfig& pot,
                          const ParticleConfig& particle, const Polarization& polarization) {
  const Setup s = prepare(pot, particle);
  return make_triple(evaluate(x, kind, s), particle.E - pot(x), particle.m, polarization);
}

SpinorTriple asymptotic_wavefunction(double x, WaveKind kind, const PotentialConfig& pot,
                                     const ParticleConfig& particle,
                                     const Polarization& polarization) {
  const Setup s = prepare(pot, particle);
  const double b = pot.b;
  PsiAndDerivative v;
  double kinetic = 0.0;
  switch (kind) {
    case WaveKind::Incident: {
      const Complex k = 2.0 * b * s.k.nu;
      v.psi = s.coeffs.A * std::exp(kI * k * x);
      v.dpsi = kI * k * v.psi;
      kinetic = particle.E + pot.a;
      break;
    }
    case WaveKind::Reflected: {
      const Complex k = -2.0 * b * s.k.nu;
      v.psi = s.coeffs.C * std::exp(kI * k * x);
      v.dpsi = kI * k * v.psi;
      kinetic = particle.E + pot.a;
      break;
    }
    case WaveKind::Transmitted: {
      const Complex k = 2.0 * b * s.k.mu;
      v.psi = std::exp(kI * k * x);
      v.dpsi = kI * k * v.psi;
      kinetic = particle.E - pot.a;
      break;
    }
  }
  return make_triple(v, kinetic, particle.m, polarization);
}

algebra::SolutionMap solution_map(WaveKind kind, const PotentialConfig& pot,
                                  const ParticleConfig& particle,
                                  const Polarization& polarization) {
  auto setup = std::make_shared<const Setup>(prepare(pot, particle));
  return [setup, kind, pot, particle, polarization](double x) {
    return make_triple(evaluate(x, kind, *setup), particle.E - pot(x), particle.m,
                       polarization);
  };
}

ComponentResiduals component_residuals(const algebra::SolutionMap& solution,
                                       const PotentialConfig& pot,
                                       const ParticleConfig& particle, double x, double h) {
  if (!(h > 0.0)) throw DomainError("component_residuals: h must be positive");
  const SpinorTriple mid = solution(x);
  const SpinorTriple fwd = solution(x + h);
  const SpinorTriple bwd = solution(x - h);
  const double kinetic = particle.E - pot(x);
  const double m = particle.m;

  ComponentResiduals r;
  r.r_phi = std::abs(mid.phi - kinetic * mid.psi / m);
  r.r_theta = std::abs(mid.theta - kI / m * (fwd.psi - bwd.psi) / (2.0 * h));
  const Complex second = (fwd.psi - 2.0 * mid.psi + bwd.psi) / (h * h);
  r.r_kg = std::abs(second + (kinetic * kinetic - m * m) * mid.psi);
  return r;
}

ComponentResiduals component_residuals(double x, WaveKind kind, const PotentialConfig& pot,
                                       const ParticleConfig& particle, double h) {
  return component_residuals(solution_map(kind, pot, particle), pot, particle, x, h);
}

}  // namespace dkp::wavefield

#include "dkp/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <utility>

#include "dkp/errors.hpp"

namespace dkp::oracle {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kSaturation = 1.0 - 1e-12;

// Signed wavenumber by the group-velocity rule; zero when the channel is closed.
double wavenumber(double kinetic, double m) {
  const double q = kinetic * kinetic - m * m;
  return q > 0.0 ? std::copysign(std::sqrt(q), kinetic) : 0.0;
}

using State = std::array<Complex, 2>;  // (psi, psi')

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State out = y;
  for (const auto& [coef, k] : terms) {
    out[0] += h * coef * (*k)[0];
    out[1] += h * coef * (*k)[1];
  }
  return out;
}

double current(const State& y) { return (std::conj(y[0]) * y[1]).imag(); }

}  // namespace

IntegrationSettings IntegrationSettings::defaults_for(double b) {
  IntegrationSettings s;
  s.x_right = 15.0 / b;
  s.x_left = -15.0 / b;
  return s;
}

void IntegrationSettings::validate(double b) const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-4 && abs_tol > 0.0 && abs_tol <= 1e-4)) {
    throw DomainError("IntegrationSettings: tolerances must lie in (0, 1e-4]");
  }
  if (!(x_left < 0.0 && x_right > 0.0)) {
    throw DomainError("IntegrationSettings: need x_left < 0 < x_right");
  }
  if (std::tanh(b * x_right) < kSaturation || std::tanh(-b * x_left) < kSaturation) {
    throw DomainError("IntegrationSettings: potential not saturated at the domain ends");
  }
  if (max_steps <= 0) throw DomainError("IntegrationSettings: max_steps must be positive");
}

KgEndpoint integrate_kg(const PotentialConfig& pot, const ParticleConfig& particle,
                        const IntegrationSettings& settings) {
  settings.validate(pot.b);
  const double m = particle.m;
  const double E = particle.E;
  const double k_t = wavenumber(E - pot.a, m);
  if (k_t == 0.0) throw EvanescentChannel("integrate_kg: transmitted channel is closed");

  auto rhs = [&](double x, const State& y) -> State {
    const double kinetic = E - pot(x);
    return {y[1], -(kinetic * kinetic - m * m) * y[0]};
  };

  double x = settings.x_right;
  const double x_end = settings.x_left;
  const double span = x - x_end;
  State y{std::exp(kI * k_t * x), 0.0};
  y[1] = kI * k_t * y[0];

  const double j0 = current(y);
  KgEndpoint out;

  // Initial step: a small fraction of the local wavelength, moving left.
  double h = -std::min(0.01 / std::abs(k_t), x - x_end);
  State k1 = rhs(x, y);
  while (x > x_end) {
    if (out.steps >= settings.max_steps) {
      throw StepLimitExceeded("integrate_kg: step limit exceeded");
    }
    if (x + h < x_end) h = x_end - x;

    const State k2 = rhs(x + c2 * h, axpy(y, h, {{a21, &k1}}));
    const State k3 = rhs(x + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
    const State k4 = rhs(x + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 =
        rhs(x + c5 * h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 = rhs(x + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4},
                                            {a65, &k5}}));
    const State y_new =
        axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State k7 = rhs(x + h, y_new);

    // Error per unit step: each step may spend its share |h| / span of the
    // tolerance, so the accumulated error stays of order the tolerance.
    const double share = std::abs(h) / span;
    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      const Complex e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                             e7 * k7[i]);
      const double scale = settings.abs_tol +
                           settings.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
      err = std::max(err, std::abs(e) / (scale * share));
    }

    ++out.steps;
    if (err <= 1.0) {
      x += h;
      y = y_new;
      k1 = k7;  // first-same-as-last
      out.max_current_drift =
          std::max(out.max_current_drift, std::abs(current(y) - j0) / std::abs(j0));
    }
    // Local error ~ h^5 against a budget ~ h.
    const double factor = err == 0.0 ? 5.0 : 0.9 * std::pow(err, -0.25);
    h *= std::clamp(factor, 0.2, 5.0);
  }
  out.psi = y[0];
  out.dpsi = y[1];
  return out;
}

NumericRT numeric_rt(const PotentialConfig& pot, const ParticleConfig& particle,
                     const IntegrationSettings& settings) {
  const double k_i = wavenumber(particle.E + pot.a, particle.m);
  if (k_i == 0.0) throw EvanescentIncident("numeric_rt: incident channel is closed");
  const double k_t = wavenumber(particle.E - pot.a, particle.m);

  const KgEndpoint end = integrate_kg(pot, particle, settings);
  const double x = settings.x_left;
  const Complex ratio = end.dpsi / (kI * k_i);
  const Complex A = 0.5 * (end.psi + ratio) * std::exp(-kI * k_i * x);
  const Complex C = 0.5 * (end.psi - ratio) * std::exp(kI * k_i * x);

  NumericRT r;
  r.R = std::norm(C) / std::norm(A);
  r.T = (k_t / k_i) / std::norm(A);
  r.defect = r.R + r.T - 1.0;
  return r;
}

NumericRT step_rt(double a, double m, double E) {
  const double k_i = wavenumber(E + a, m);
  const double k_t = wavenumber(E - a, m);
  if (k_i == 0.0 || k_t == 0.0) {
    throw ChannelClosed("step_rt: both channels must propagate");
  }
  if (k_i + k_t == 0.0) throw DomainError("step_rt: k_i + k_t = 0, reflection diverges");
  const double r = (k_i - k_t) / (k_i + k_t);
  NumericRT out;
  out.R = r * r;
  out.T = 4.0 * k_i * k_t / ((k_i + k_t) * (k_i + k_t));
  out.defect = out.R + out.T - 1.0;
  return out;
}

}  // namespace dkp::oracle

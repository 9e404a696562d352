#include "dkp/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "dkp/errors.hpp"

namespace dkp::specfun {

namespace {

constexpr double kSeriesTolerance = 1e-15;
constexpr int kSeriesQuietTerms = 10;
constexpr long kSeriesMaxTerms = 100000;
constexpr double kIntegerTolerance = 1e-12;

// Stirling's series is used once Re z has been shifted past this point.
constexpr double kStirlingShift = 15.0;

// B_{2k} / (2k (2k-1)) for k = 1..8.
constexpr std::array<double, 8> kStirlingCoeffs = {
    1.0 / 12.0,          -1.0 / 360.0,          1.0 / 1260.0,
    -1.0 / 1680.0,       1.0 / 1188.0,          -691.0 / 360360.0,
    1.0 / 156.0,         -3617.0 / 122400.0,
};

Complex log_gamma_stirling(Complex z) {
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex correction = 0.0;
  Complex power = inv;
  for (double coeff : kStirlingCoeffs) {
    correction += coeff * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z +
         0.5 * std::log(2.0 * std::numbers::pi) + correction;
}

// 2F1 on [-1, 0) without going back through the connection formula.
Complex hyp2f1_unit_interval(Complex a, Complex b, Complex c, double w);

bool near_integer(Complex z, double tol) {
  return std::abs(z.imag()) < tol &&
         std::abs(z.real() - std::round(z.real())) < tol;
}

}  // namespace

bool near_gamma_pole(Complex z) {
  return z.real() < 0.5 && near_integer(z, kPoleTolerance);
}

Complex log_gamma(Complex z) {
  if (near_gamma_pole(z)) {
    throw PoleError("log_gamma: argument at a pole of Gamma");
  }
  // Shift up with Gamma(z) = Gamma(z+n) / (z (z+1) ... (z+n-1)); the sum of
  // principal logs keeps the result on the principal (continuous) branch.
  Complex shift_log = 0.0;
  while (z.real() < kStirlingShift) {
    shift_log += std::log(z);
    z += 1.0;
  }
  return log_gamma_stirling(z) - shift_log;
}

namespace {

// Sum of log Gamma over a list; returns false if any argument is a pole.
bool sum_log_gamma(std::span<const Complex> args, Complex& out) {
  out = 0.0;
  for (Complex z : args) {
    if (near_gamma_pole(z)) return false;
    out += log_gamma(z);
  }
  return true;
}

}  // namespace

double gamma_ratio_abs_sq(std::span<const Complex> numerators,
                          std::span<const Complex> denominators) {
  Complex num, den;
  if (!sum_log_gamma(numerators, num)) {
    throw PoleError("gamma_ratio_abs_sq: numerator at a pole of Gamma");
  }
  if (!sum_log_gamma(denominators, den)) return 0.0;
  return std::exp(2.0 * (num - den).real());
}

Complex gamma_ratio(std::span<const Complex> numerators,
                    std::span<const Complex> denominators) {
  Complex num, den;
  if (!sum_log_gamma(numerators, num)) {
    throw PoleError("gamma_ratio: numerator at a pole of Gamma");
  }
  if (!sum_log_gamma(denominators, den)) return 0.0;
  return std::exp(num - den);
}

Complex hyp2f1_series(Complex a, Complex b, Complex c, double z) {
  if (!(std::abs(z) < 1.0)) {
    throw DomainError("hyp2f1_series: requires |z| < 1");
  }
  Complex sum = 1.0;
  Complex term = 1.0;
  int quiet = 0;
  for (long k = 0; k < kSeriesMaxTerms; ++k) {
    const double kk = static_cast<double>(k);
    term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
    sum += term;
    if (std::abs(term) < kSeriesTolerance * std::abs(sum)) {
      if (++quiet >= kSeriesQuietTerms) return sum;
    } else {
      quiet = 0;
    }
  }
  throw NonConvergence("hyp2f1_series: no convergence within term cap");
}

Complex hyp2f1_pfaff(Complex a, Complex b, Complex c, double z) {
  if (z > 0.0) throw DomainError("hyp2f1_pfaff: requires z <= 0");
  const double w = z / (z - 1.0);
  // Both Pfaff forms are exact; take the one with the smaller numerator
  // parameters so the inner series has milder term growth.
  if (std::abs(a * (c - b)) <= std::abs(b * (c - a))) {
    return std::pow(1.0 - z, -a) * hyp2f1_series(a, c - b, c, w);
  }
  return std::pow(1.0 - z, -b) * hyp2f1_series(c - a, b, c, w);
}

Complex hyp2f1_reciprocal(Complex a, Complex b, Complex c, double z) {
  if (!(z < 0.0)) throw DomainError("hyp2f1_reciprocal: requires z < 0");
  if (near_integer(a - b, kIntegerTolerance)) {
    throw DegenerateParameters("hyp2f1: a - b is an integer, z -> 1/z formula inapplicable");
  }
  const double log_mz = std::log(-z);
  const double w = 1.0 / z;
  const std::array<Complex, 2> num1{c, b - a};
  const std::array<Complex, 2> den1{b, c - a};
  const std::array<Complex, 2> num2{c, a - b};
  const std::array<Complex, 2> den2{a, c - b};
  Complex result = 0.0;
  if (const Complex k1 = gamma_ratio(num1, den1); k1 != 0.0) {
    result += k1 * std::exp(-a * log_mz) * hyp2f1_unit_interval(a, a - c + 1.0, a - b + 1.0, w);
  }
  if (const Complex k2 = gamma_ratio(num2, den2); k2 != 0.0) {
    result += k2 * std::exp(-b * log_mz) * hyp2f1_unit_interval(b, b - c + 1.0, b - a + 1.0, w);
  }
  return result;
}

namespace {

Complex hyp2f1_unit_interval(Complex a, Complex b, Complex c, double w) {
  return w >= -0.5 ? hyp2f1_series(a, b, c, w) : hyp2f1_pfaff(a, b, c, w);
}

}  // namespace

Complex hyp2f1(Complex a, Complex b, Complex c, double z) {
  if (near_gamma_pole(c)) {
    throw DomainError("hyp2f1: c is a non-positive integer");
  }
  if (!(z < 1.0)) throw DomainError("hyp2f1: requires z < 1");
  if (z == 0.0) return 1.0;
  if (z >= -0.5) return hyp2f1_series(a, b, c, z);
  if (z >= -1.0) return hyp2f1_pfaff(a, b, c, z);
  return hyp2f1_reciprocal(a, b, c, z);
}

}  // namespace dkp::specfun

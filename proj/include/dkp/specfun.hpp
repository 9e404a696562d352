#pragma once

// Complex special-function kernels used by the scattering pipeline:
// log-Gamma on the principal branch, squared moduli of Gamma ratios computed
// in the log domain, and the Gauss hypergeometric function 2F1(a,b;c;z) for
// complex parameters and real argument z < 1.

#include <complex>
#include <span>

namespace dkp::specfun {

using Complex = std::complex<double>;

/// Distance to a non-positive integer below which Gamma is treated as a pole.
inline constexpr double kPoleTolerance = 1e-14;

/// True when z lies within kPoleTolerance of {0, -1, -2, ...}.
bool near_gamma_pole(Complex z);

/// Principal-branch log Gamma(z). Throws PoleError at the pole set.
Complex log_gamma(Complex z);

inline Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

/// |prod Gamma(n_i) / prod Gamma(d_j)|^2 evaluated as
/// exp(2 Re(sum logGamma(n_i) - sum logGamma(d_j))).
/// A numerator pole throws PoleError; a denominator pole returns exactly 0.
double gamma_ratio_abs_sq(std::span<const Complex> numerators,
                          std::span<const Complex> denominators);

/// prod Gamma(n_i) / prod Gamma(d_j) as a complex number, same pole rules.
Complex gamma_ratio(std::span<const Complex> numerators,
                    std::span<const Complex> denominators);

/// Gauss hypergeometric function 2F1(a, b; c; z) for real z < 1.
///
/// Strategy: the Gauss series for -0.5 <= z < 1, the Pfaff transformation
/// z -> z/(z-1) on [-1, -0.5), and the z -> 1/z connection formula for
/// z < -1 (requires a - b away from an integer, else DegenerateParameters).
Complex hyp2f1(Complex a, Complex b, Complex c, double z);

// The individual evaluation routes, exposed so their agreement can be tested.

/// Direct Gauss series; requires |z| < 1. Stops once ten consecutive terms
/// each change the partial sum by less than 1e-15 relative; NonConvergence
/// after 100000 terms.
Complex hyp2f1_series(Complex a, Complex b, Complex c, double z);

/// Pfaff route (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)) for z <= 0.
Complex hyp2f1_pfaff(Complex a, Complex b, Complex c, double z);

/// Connection formula around z = infinity; requires z < 0 and a - b
/// not an integer.
Complex hyp2f1_reciprocal(Complex a, Complex b, Complex c, double z);

}  // namespace dkp::specfun

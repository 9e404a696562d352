#pragma once

// Spin-one DKP beta matrices and the 10-component spinor.
//
// Component ordering phi_1..phi_10 (stored at indices 0..9) follows the
// block layout of the beta matrices: phi_1 is the scalar row, phi_2..phi_4,
// phi_5..phi_7 and phi_8..phi_10 are the three 3-vector blocks. The reduced
// (Psi, Phi, Theta) description maps onto it as
//
//   Psi+   = (phi_3, phi_4)    Psi-   = phi_5
//   Phi+   = (phi_6, phi_7)    Phi-   = phi_2
//   Theta+ = (phi_10, -phi_9)  Theta- = phi_1
//   phi_8  = 0
//
// and a polarization p = (p1, p2, p3) distributes each scalar part over
// (+ first entry, + second entry, - entry), e.g. (phi_3, phi_4, phi_5) = Psi p.

#include <array>
#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace dkp {
struct PotentialConfig;
struct ParticleConfig;
}

namespace dkp::algebra {

using Complex = std::complex<double>;
using Matrix10 = Eigen::Matrix<Complex, 10, 10>;
using Matrix3 = Eigen::Matrix<Complex, 3, 3>;
using Vector10 = Eigen::Matrix<Complex, 10, 1>;
using Polarization = std::array<Complex, 3>;

struct BetaSet {
  std::array<Matrix10, 4> beta;          // beta^0 .. beta^3
  std::array<Matrix3, 3> spin;           // s_1 .. s_3, (s_i)_{jk} = -i eps_{ijk}
  std::array<Eigen::RowVector3d, 3> unit_rows;  // e_1 .. e_3
};

/// Minkowski metric diag(1, -1, -1, -1).
inline constexpr std::array<double, 4> kMetric = {1.0, -1.0, -1.0, -1.0};

BetaSet beta_matrices();

/// Max-entry norm of the residual of the trilinear relation
/// b^mu b^nu b^la + b^la b^nu b^mu - g^{mu nu} b^la - g^{nu la} b^mu
/// for a single index triple.
double dkp_algebra_residual(const BetaSet& betas, int mu, int nu, int la);

/// Maximum of dkp_algebra_residual over all 64 index triples.
double check_dkp_algebra(const BetaSet& betas);

/// Scalar parts of the reduced system at one position.
struct SpinorTriple {
  Complex psi;
  Complex phi;
  Complex theta;
  Polarization polarization{1.0, 0.0, 0.0};
};

struct FullSpinor {
  Vector10 components = Vector10::Zero();

  /// 1-based access matching the phi_1..phi_10 naming.
  Complex operator()(int index) const { return components(index - 1); }
};

FullSpinor assemble_spinor(Complex psi, Complex phi, Complex theta,
                           const Polarization& polarization);

inline FullSpinor assemble_spinor(const SpinorTriple& t) {
  return assemble_spinor(t.psi, t.phi, t.theta, t.polarization);
}

using SolutionMap = std::function<SpinorTriple(double)>;

/// Applies {beta^0 (E - V(x)) + i beta^1 d/dx - m} to the assembled spinor,
/// with d/dx replaced by a central difference of step h, and returns the
/// max-entry norm. O(h^2) for an exact solution. Throws EvaluationError if
/// the solution map fails.
double dkp_residual(const SolutionMap& solution, const PotentialConfig& pot,
                    const ParticleConfig& particle, double x, double h);

}  // namespace dkp::algebra

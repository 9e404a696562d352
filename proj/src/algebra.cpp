#include "dkp/algebra.hpp"

#include <algorithm>
#include <exception>

#include "dkp/errors.hpp"
#include "dkp/scattering.hpp"

namespace dkp::algebra {

namespace {

constexpr Complex kI{0.0, 1.0};

// Offsets of the three 3-vector blocks inside the 10x10 layout.
constexpr int kBlock1 = 1;
constexpr int kBlock2 = 4;
constexpr int kBlock3 = 7;

double levi_civita(int i, int j, int k) {
  return static_cast<double>((i - j) * (j - k) * (k - i)) / 2.0;
}

double max_entry(const Matrix10& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

BetaSet beta_matrices() {
  BetaSet set;
  for (int i = 0; i < 3; ++i) {
    set.unit_rows[i] = Eigen::RowVector3d::Unit(i);
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        set.spin[i](j, k) = -kI * levi_civita(i, j, k);
      }
    }
  }

  Matrix10& b0 = set.beta[0];
  b0.setZero();
  b0.block<3, 3>(kBlock1, kBlock2).setIdentity();
  b0.block<3, 3>(kBlock2, kBlock1).setIdentity();

  for (int i = 0; i < 3; ++i) {
    Matrix10& bi = set.beta[i + 1];
    bi.setZero();
    bi.block<1, 3>(0, kBlock2) = set.unit_rows[i].cast<Complex>();
    bi.block<3, 1>(kBlock2, 0) = -set.unit_rows[i].transpose().cast<Complex>();
    bi.block<3, 3>(kBlock1, kBlock3) = -kI * set.spin[i];
    bi.block<3, 3>(kBlock3, kBlock1) = -kI * set.spin[i];
  }
  return set;
}

double dkp_algebra_residual(const BetaSet& betas, int mu, int nu, int la) {
  const auto& b = betas.beta;
  Matrix10 r = b[mu] * b[nu] * b[la] + b[la] * b[nu] * b[mu];
  if (mu == nu) r -= kMetric[mu] * b[la];
  if (nu == la) r -= kMetric[nu] * b[mu];
  return max_entry(r);
}

double check_dkp_algebra(const BetaSet& betas) {
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      for (int la = 0; la < 4; ++la) {
        worst = std::max(worst, dkp_algebra_residual(betas, mu, nu, la));
      }
    }
  }
  return worst;
}

FullSpinor assemble_spinor(Complex psi, Complex phi, Complex theta,
                           const Polarization& p) {
  FullSpinor s;
  auto& c = s.components;
  // Psi block: (phi_3, phi_4, phi_5)
  c(2) = psi * p[0];
  c(3) = psi * p[1];
  c(4) = psi * p[2];
  // Phi block: (phi_6, phi_7, phi_2)
  c(5) = phi * p[0];
  c(6) = phi * p[1];
  c(1) = phi * p[2];
  // Theta block: (phi_10, -phi_9, phi_1); phi_8 stays zero.
  c(9) = theta * p[0];
  c(8) = -theta * p[1];
  c(0) = theta * p[2];
  return s;
}

double dkp_residual(const SolutionMap& solution, const PotentialConfig& pot,
                    const ParticleConfig& particle, double x, double h) {
  if (!(h > 0.0)) throw DomainError("dkp_residual: h must be positive");
  static const BetaSet betas = beta_matrices();

  Vector10 at_x, forward, backward;
  try {
    at_x = assemble_spinor(solution(x)).components;
    forward = assemble_spinor(solution(x + h)).components;
    backward = assemble_spinor(solution(x - h)).components;
  } catch (const std::exception& e) {
    throw EvaluationError(std::string("dkp_residual: solution map failed: ") + e.what());
  }
  const Vector10 derivative = (forward - backward) / (2.0 * h);
  const double kinetic = particle.E - pot(x);
  const Vector10 r = kinetic * (betas.beta[0] * at_x) + kI * (betas.beta[1] * derivative) -
                     particle.m * at_x;
  return r.cwiseAbs().maxCoeff();
}

}  // namespace dkp::algebra

// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Parameters a = 5, b = 3, m = 1 unless stated.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "dkp/algebra.hpp"
#include "dkp/cli.hpp"
#include "dkp/oracle.hpp"
#include "dkp/scattering.hpp"
#include "dkp/specfun.hpp"
#include "dkp/wavefield.hpp"

using namespace dkp;

namespace {

const PotentialConfig kPot{5.0, 3.0};
constexpr double kM = 1.0;

struct Outcome {
  bool passed = false;
  std::string detail;
};

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<double> interior(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 1; i <= n; ++i) out.push_back(lo + (hi - lo) * i / (n + 1));
  return out;
}

ScatteringResult at(double E, const PotentialConfig& pot = kPot) {
  return scattering_coefficients(pot, {kM, E});
}

Outcome unitarity() {
  // Candidates on a fine grid, dropping those within 1e-3 of E = 4 or 6,
  // until 500 energies are in hand.
  int used = 0;
  double worst = 0.0, worst_E = 0.0;
  for (double E : interior(1.01, 10.0, 520)) {
    if (used == 500) break;
    if (std::abs(E - 4.0) < 1e-3 || std::abs(E - 6.0) < 1e-3) continue;
    const double d = std::abs(at(E).unitarity_defect);
    if (d > worst) {
      worst = d;
      worst_E = E;
    }
    ++used;
  }
  return {used == 500 && worst <= 1e-8,
          fmt("%d energies in (1.01, 10), max |R+T-1| = %.3e at E = %.6g (limit 1e-8)", used,
              worst, worst_E)};
}

Outcome superradiance() {
  int bad = 0;
  double min_R = INFINITY, max_T = -INFINITY;
  const auto grid = interior(1.05, 3.95, 400);
  for (double E : grid) {
    const auto r = at(E);
    min_R = std::min(min_R, r.R);
    max_T = std::max(max_T, r.T);
    if (!(r.R > 1.0 && r.T < 0.0)) ++bad;
  }
  return {bad == 0, fmt("%zu energies in (1.05, 3.95): min R = %.6f, max T = %.6f, violations %d",
                        grid.size(), min_R, max_T, bad)};
}

Outcome total_reflection() {
  std::vector<double> energies = interior(4.05, 5.95, 50);
  for (double E : interior(-5.95, -4.05, 50)) energies.push_back(E);
  double worst = 0.0;
  int nonzero_T = 0;
  for (double E : energies) {
    const auto r = at(E);
    worst = std::max(worst, std::abs(r.R - 1.0));
    if (r.T != 0.0) ++nonzero_T;
  }
  return {worst <= 1e-8 && nonzero_T == 0,
          fmt("%zu energies in (4.05, 5.95) and (-5.95, -4.05): max |R-1| = %.3e, T != 0 at %d",
              energies.size(), worst, nonzero_T)};
}

Outcome oracle_equivalence() {
  std::vector<double> energies = interior(6.0, 12.0, 10);    // region I
  for (double E : interior(-4.0, 4.0, 10)) energies.push_back(E);  // region III
  double worst = 0.0, worst_E = 0.0;
  for (double E : energies) {
    const auto a = at(E);
    const auto n = oracle::numeric_rt(kPot, {kM, E});
    const double d = std::max(std::abs(a.R - n.R), std::abs(a.T - n.T));
    if (d > worst) {
      worst = d;
      worst_E = E;
    }
  }
  return {worst <= 1e-6,
          fmt("%zu energies (10 in I, 10 in III): max |dR|,|dT| = %.3e at E = %.6g (limit 1e-6)",
              energies.size(), worst, worst_E)};
}

Outcome step_limit() {
  const PotentialConfig sharp{5.0, 1e4};
  std::vector<double> energies = interior(6.0, 15.0, 5);
  // Region III from E = 1.5 up: R grows like 1/E^2 towards E = 0 and the
  // finite-b correction grows with it.
  for (double E : interior(1.5, 3.95, 4)) energies.push_back(E);
  energies.push_back(2.5);
  double worst = 0.0, worst_E = 0.0;
  for (double E : energies) {
    const double d = std::abs(at(E, sharp).R - oracle::step_rt(5.0, kM, E).R);
    if (d > worst) {
      worst = d;
      worst_E = E;
    }
  }
  const double step_25 = oracle::step_rt(5.0, kM, 2.5).R;
  return {worst <= 1e-4,
          fmt("b = 1e4, %zu energies: max |R - R_step| = %.3e at E = %.6g (limit 1e-4); "
              "R_step(2.5) = %.7f, R(2.5) = %.7f",
              energies.size(), worst, worst_E, step_25, at(2.5, sharp).R)};
}

Outcome free_particle() {
  double worst_R = 0.0, worst_T = 0.0;
  int pairs = 0;
  for (double b : {0.2, 1.0, 3.0, 10.0}) {
    for (double E : {1.05, 2.0, 5.0, 20.0, -3.0}) {
      const auto r = scattering_coefficients({0.0, b}, {kM, E});
      worst_R = std::max(worst_R, std::abs(r.R));
      worst_T = std::max(worst_T, std::abs(r.T - 1.0));
      ++pairs;
    }
  }
  return {worst_R <= 1e-12 && worst_T <= 1e-12,
          fmt("%d (b, E) pairs: max R = %.2e, max |T-1| = %.2e (limit 1e-12)", pairs, worst_R,
              worst_T)};
}

Outcome dkp_algebra() {
  const double r = algebra::check_dkp_algebra(algebra::beta_matrices());
  return {r <= 1e-14, fmt("64 index triples: max residual %.3e (limit 1e-14)", r)};
}

Outcome component_relations() {
  double worst_phi = 0.0, min_ratio = INFINITY, max_ratio = 0.0;
  int points = 0;
  for (double E : {7.0, 2.5, -7.0}) {
    const ParticleConfig particle{kM, E};
    const auto solution =
        wavefield::solution_map(wavefield::WaveKind::Transmitted, kPot, particle);
    const double k = std::max({std::abs(E + kPot.a), std::abs(E - kPot.a), kPot.b});
    const double h = 0.02 / k;
    for (double bx : {-1.5, -0.5, 0.0, 0.5, 1.5}) {
      const double x = bx / kPot.b;
      const auto coarse = wavefield::component_residuals(solution, kPot, particle, x, h);
      const auto fine = wavefield::component_residuals(solution, kPot, particle, x, h / 2);
      worst_phi = std::max({worst_phi, coarse.r_phi, fine.r_phi});
      for (double ratio : {coarse.r_theta / fine.r_theta, coarse.r_kg / fine.r_kg}) {
        min_ratio = std::min(min_ratio, ratio);
        max_ratio = std::max(max_ratio, ratio);
      }
      ++points;
    }
  }
  return {worst_phi <= 1e-10 && min_ratio >= 3.5 && max_ratio <= 4.5,
          fmt("%d points (5 positions x 3 energies): Phi residual %.2e; Theta/KG halving ratios "
              "in [%.4f, %.4f]",
              points, worst_phi, min_ratio, max_ratio)};
}

Outcome special_functions() {
  using specfun::Complex;
  const std::array<Complex, 1> num{Complex{1.0, 1.0}};
  const double g_err = std::abs(specfun::gamma_ratio_abs_sq(num, {}) -
                                std::numbers::pi / std::sinh(std::numbers::pi));
  const double f_err = std::abs(specfun::hyp2f1(1.0, 1.0, 2.0, -1.0) - std::numbers::ln2);
  double path = 0.0;
  const std::array<std::array<Complex, 3>, 3> params{{
      {Complex{0.3, 1.2}, Complex{0.5, -2.0}, Complex{3.0, 0.7}},
      {Complex{0.5, 1.6}, Complex{0.5, -1.1}, Complex{2.0, 1.0}},
      {Complex{1.0, 0.0}, Complex{1.0, 0.0}, Complex{2.5, 0.0}},
  }};
  for (const auto& p : params) {
    for (double z : interior(-1.0, -0.5, 40)) {
      const Complex s = specfun::hyp2f1_series(p[0], p[1], p[2], z);
      const Complex t = specfun::hyp2f1_pfaff(p[0], p[1], p[2], z);
      path = std::max(path, std::abs(s - t) / std::abs(s));
    }
    const Complex s = specfun::hyp2f1_series(p[0], p[1], p[2], -0.5);
    const Complex t = specfun::hyp2f1_pfaff(p[0], p[1], p[2], -0.5);
    path = std::max(path, std::abs(s - t) / std::abs(s));
  }
  return {g_err <= 1e-10 && f_err <= 1e-10 && path <= 1e-9,
          fmt("|G(1+i)|^2 err %.2e, 2F1(1,1;2;-1) - ln 2 = %.2e, series/Pfaff rel diff %.2e",
              g_err, f_err, path)};
}

struct Row {
  double E, R, T;
  std::string region;
};

std::vector<Row> sweep_rows(double lo, double hi, int steps) {
  cli::SweepSpec spec;
  spec.e_min = lo;
  spec.e_max = hi;
  spec.steps = steps;
  spec.pot = kPot;
  spec.m = kM;
  std::ostringstream out, log;
  cli::write_sweep_csv(spec, out, log);
  std::vector<Row> rows;
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string e, r, t, d, region;
    std::getline(cells, e, ',');
    std::getline(cells, r, ',');
    std::getline(cells, t, ',');
    std::getline(cells, d, ',');
    std::getline(cells, region, ',');
    rows.push_back({std::stod(e), std::stod(r), std::stod(t), region});
  }
  return rows;
}

Outcome figure_shape() {
  const auto rows = sweep_rows(1.01, 10.0, 500);
  int superradiant_outside = 0, region_iii_not_above = 0, region_ii_off = 0;
  int n_iii = 0, n_ii = 0, n_i = 0;
  for (const auto& r : rows) {
    const bool in_iii = r.region == "III" && r.E > kM;
    if (in_iii) {
      ++n_iii;
      if (!(r.R > 1.0)) ++region_iii_not_above;
    } else if (r.R > 1.0) {
      ++superradiant_outside;
    }
    if (r.region == "II") {
      ++n_ii;
      if (std::abs(r.R - 1.0) > 1e-8) ++region_ii_off;
    }
    if (r.region == "I") ++n_i;
  }
  const auto tail = sweep_rows(20.0, 200.0, 50);
  int not_decreasing = 0;
  for (std::size_t i = 1; i < tail.size(); ++i) {
    if (!(tail[i].R < tail[i - 1].R)) ++not_decreasing;
  }
  const bool ok = rows.size() == 500 && n_iii > 0 && n_ii > 0 && n_i > 0 &&
                  superradiant_outside == 0 && region_iii_not_above == 0 && region_ii_off == 0 &&
                  tail.size() == 50 && not_decreasing == 0;
  return {ok, fmt("sweep (1.01, 10) x 500: %zu rows (III %d, II %d, I %d); R<=1 in III: %d, "
                  "R>1 outside III: %d, |R-1|>1e-8 in II: %d; [20, 200] x 50: %d increases",
                  rows.size(), n_iii, n_ii, n_i, region_iii_not_above, superradiant_outside,
                  region_ii_off, not_decreasing)};
}

struct Criterion {
  int id;
  const char* name;
  double time_limit;  // seconds; 0 when the criterion sets none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "unitarity", 5.0, unitarity},
      {2, "superradiance", 2.0, superradiance},
      {3, "total reflection", 0.0, total_reflection},
      {4, "oracle equivalence", 30.0, oracle_equivalence},
      {5, "step limit", 0.0, step_limit},
      {6, "free particle", 0.0, free_particle},
      {7, "DKP algebra", 0.0, dkp_algebra},
      {8, "component relations", 0.0, component_relations},
      {9, "special functions", 0.0, special_functions},
      {10, "figure shape", 0.0, figure_shape},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = fmt("%.3f s", seconds);
    if (c.time_limit > 0.0) {
      timing += fmt(" (limit %.0f s)", c.time_limit);
      if (seconds >= c.time_limit) o.passed = false;
    }
    std::printf("%s criterion %d [%s]: %s; %s\n", o.passed ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), timing.c_str());
    if (!o.passed) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

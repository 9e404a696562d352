#include "dkp/cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include <CLI11.hpp>

#include "dkp/errors.hpp"
#include "dkp/verify.hpp"
#include "dkp/wavefield.hpp"

namespace dkp::cli {

namespace fs = std::filesystem;

std::string format_csv_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string format_report_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

std::string format_report_complex(Complex z) {
  if (z.imag() == 0.0) return format_report_number(z.real());
  if (z.real() == 0.0) return format_report_number(z.imag()) + "i";
  const std::string sign = z.imag() < 0.0 ? "-" : "+";
  return format_report_number(z.real()) + sign + format_report_number(std::abs(z.imag())) + "i";
}

// Writes through `body` into `path` (or stdout for "-"); a failed write
// leaves no partial file behind.
int write_output(const std::string& path, std::ostream& out, std::ostream& err,
                 const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(out);
    return kExitOk;
  }
  const fs::path target(path);
  fs::path partial = target;
  partial += ".partial";
  try {
    {
      std::ofstream file(partial, std::ios::binary | std::ios::trunc);
      if (!file) throw std::runtime_error("cannot open " + partial.string() + " for writing");
      body(file);
      file.flush();
      if (!file) throw std::runtime_error("write to " + partial.string() + " failed");
    }
    fs::rename(partial, target);
  } catch (const DomainError&) {
    std::error_code ec;
    fs::remove(partial, ec);
    throw;
  } catch (const std::exception& e) {
    std::error_code ec;
    fs::remove(partial, ec);
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

struct PointArgs {
  double a = 0.0, b = 0.0, m = 0.0, E = 0.0;
};

int cmd_point(const PointArgs& p, const ScatteringOptions& options, std::ostream& out) {
  const PotentialConfig pot{p.a, p.b};
  const ParticleConfig particle{p.m, p.E};
  const KinematicParams k = kinematics(pot, particle, options);
  const ScatteringResult r = scattering_coefficients(pot, particle, options);
  out << "E = " << format_report_number(p.E) << '\n'
      << "region = " << region_token(r.region) << '\n'
      << "nu = " << format_report_complex(k.nu) << '\n'
      << "mu = " << format_report_complex(k.mu) << '\n'
      << "R = " << format_report_number(r.R) << '\n'
      << "T = " << format_report_number(r.T) << '\n'
      << "R+T-1 = " << format_report_number(r.unitarity_defect) << '\n';
  return kExitOk;
}

struct RegionsArgs {
  double a = 0.0, m = 0.0;
};

void cmd_regions(const RegionsArgs& r, std::ostream& out) {
  const auto t = region_thresholds(r.a, r.m);
  const auto n = [](double v) { return format_report_number(v); };
  out << "region,interval,nu,mu\n";
  out << "I,E > " << n(t.upper_outer) << ",real nu>0,real mu>0\n";
  out << "II," << n(std::max(t.upper_inner, t.lower_inner)) << " < E < " << n(t.upper_outer)
      << ",real nu>0,imaginary\n";
  if (t.upper_inner > t.lower_inner) {
    out << "III," << n(t.lower_inner) << " < E < " << n(t.upper_inner)
        << ",real nu>0,real mu<0\n";
  } else {
    out << "III,empty (degenerate: a-m <= -a+m),real nu>0,real mu<0\n";
  }
  out << "IV," << n(t.lower_outer) << " < E < " << n(std::min(t.upper_inner, t.lower_inner))
      << ",imaginary,real mu<0\n";
  out << "V,E < " << n(t.lower_outer) << ",real nu<0,real mu<0\n";
  if (t.upper_inner < t.lower_inner) {
    out << "# both channels closed for " << n(t.upper_inner) << " < E < " << n(t.lower_inner)
        << '\n';
  }
  if (r.a < 0.0) out << "# a < 0: intervals use |a| (mirror x -> -x)\n";
  out << "# boundaries: " << n(t.lower_outer) << ", " << n(t.lower_inner) << ", "
      << n(t.upper_inner) << ", " << n(t.upper_outer) << '\n';
}

struct WaveArgs {
  double a = 0.0, b = 0.0, m = 0.0, E = 0.0;
  double xmin = 0.0, xmax = 0.0;
  int samples = 0;
  std::string kind;
  std::string out;
};

wavefield::WaveKind parse_kind(const std::string& s) {
  if (s == "incident") return wavefield::WaveKind::Incident;
  if (s == "reflected") return wavefield::WaveKind::Reflected;
  return wavefield::WaveKind::Transmitted;
}

void write_wavefunction(const WaveArgs& w, std::ostream& os, std::ostream& log) {
  const PotentialConfig pot{w.a, w.b};
  const ParticleConfig particle{w.m, w.E};
  const auto solution = wavefield::solution_map(parse_kind(w.kind), pot, particle);
  os << "x,re_psi,im_psi,re_phi,im_phi,re_theta,im_theta\n";
  for (int i = 0; i < w.samples; ++i) {
    const double x = w.xmin + (w.xmax - w.xmin) * i / (w.samples - 1);
    try {
      const auto s = solution(x);
      os << format_csv_number(x) << ',' << format_csv_number(s.psi.real()) << ','
         << format_csv_number(s.psi.imag()) << ',' << format_csv_number(s.phi.real()) << ','
         << format_csv_number(s.phi.imag()) << ',' << format_csv_number(s.theta.real()) << ','
         << format_csv_number(s.theta.imag()) << '\n';
    } catch (const RangeError&) {
      log << "note: skipping x=" << format_csv_number(x) << " (|2bx| > 700)\n";
    }
  }
}

struct PotentialArgs {
  double a = 0.0, b = 0.0;
  double xmin = -3.0, xmax = 3.0;
  int samples = 201;
  std::string out;
};

void write_potential(const PotentialArgs& p, std::ostream& os) {
  const PotentialConfig pot{p.a, p.b};
  os << "x,V\n";
  for (int i = 0; i < p.samples; ++i) {
    const double x = p.xmin + (p.xmax - p.xmin) * i / (p.samples - 1);
    os << format_csv_number(x) << ',' << format_csv_number(pot(x)) << '\n';
  }
}

struct VerifyArgs {
  verify::VerifyOptions options;
  bool flip_mu = false;
};

int cmd_verify(VerifyArgs v, std::ostream& out) {
  v.options.scattering.debug_flip_mu_sign = v.flip_mu;
  const auto start = std::chrono::steady_clock::now();
  const auto results = verify::run_verification(v.options);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  int failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    if (!r.passed) ++failed;
  }
  out << (failed == 0 ? "all " : "") << results.size() - failed << '/' << results.size()
      << " checks passed in " << format_report_number(seconds) << " s\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int write_sweep_csv(const SweepSpec& spec, std::ostream& out, std::ostream& log,
                    const ScatteringOptions& options) {
  out << "E,R,T,unitarity_defect,region\n";
  int rows = 0;
  for (int i = 0; i < spec.steps; ++i) {
    const double E = spec.e_min + (spec.e_max - spec.e_min) * i / (spec.steps - 1);
    const ParticleConfig particle{spec.m, E};
    if (classify_region(spec.pot, particle, options.eps_boundary) == EnergyRegion::Boundary) {
      log << "note: skipping E=" << format_csv_number(E) << " (boundary)\n";
      continue;
    }
    ScatteringResult r;
    try {
      r = scattering_coefficients(spec.pot, particle, options);
    } catch (const EvanescentIncident&) {
      log << "note: skipping E=" << format_csv_number(E) << " (no propagating channel)\n";
      continue;
    }
    out << format_csv_number(E) << ',' << format_csv_number(r.R) << ','
        << format_csv_number(r.T) << ',' << format_csv_number(r.unitarity_defect) << ','
        << region_token(r.region) << '\n';
    ++rows;
  }
  return rows;
}

double eps_boundary_from_env() {
  const char* raw = std::getenv("DKP_EPS_BOUNDARY");
  if (raw == nullptr || *raw == '\0') return kDefaultEpsBoundary;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string("DKP_EPS_BOUNDARY: invalid value '") + raw + "'");
  }
  return v;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spin-one DKP scattering on the hyperbolic tangent potential"};
  app.require_subcommand(1);

  PointArgs point_args;
  auto* point = app.add_subcommand("point", "R, T and kinematics at a single energy");
  point->add_option("--a", point_args.a, "potential height")->required();
  point->add_option("--b", point_args.b, "potential steepness")->required();
  point->add_option("--m", point_args.m, "particle mass")->required();
  point->add_option("--E", point_args.E, "energy")->required();

  SweepSpec sweep_spec;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "R, T over an energy grid as CSV");
  sweep->add_option("--a", sweep_spec.pot.a)->required();
  sweep->add_option("--b", sweep_spec.pot.b)->required();
  sweep->add_option("--m", sweep_spec.m)->required();
  sweep->add_option("--emin", sweep_spec.e_min)->required();
  sweep->add_option("--emax", sweep_spec.e_max)->required();
  sweep->add_option("--steps", sweep_spec.steps)->required();
  sweep->add_option("--out", sweep_out, "output CSV path ('-' for stdout)")->required();

  RegionsArgs regions_args;
  auto* regions = app.add_subcommand("regions", "Energy regions of the potential");
  regions->add_option("--a", regions_args.a)->required();
  regions->add_option("--m", regions_args.m)->required();

  WaveArgs wave_args;
  auto* wave = app.add_subcommand("wavefunction", "Exact (Psi, Phi, Theta) over x as CSV");
  wave->add_option("--a", wave_args.a)->required();
  wave->add_option("--b", wave_args.b)->required();
  wave->add_option("--m", wave_args.m)->required();
  wave->add_option("--E", wave_args.E)->required();
  wave->add_option("--xmin", wave_args.xmin)->required();
  wave->add_option("--xmax", wave_args.xmax)->required();
  wave->add_option("--samples", wave_args.samples)->required();
  wave->add_option("--kind", wave_args.kind)
      ->required()
      ->check(CLI::IsMember({"incident", "reflected", "transmitted"}));
  wave->add_option("--out", wave_args.out, "output CSV path (default stdout)");

  PotentialArgs pot_args;
  auto* potential = app.add_subcommand("potential", "V(x) = a tanh(bx) over x as CSV");
  potential->add_option("--a", pot_args.a)->required();
  potential->add_option("--b", pot_args.b)->required();
  potential->add_option("--xmin", pot_args.xmin);
  potential->add_option("--xmax", pot_args.xmax);
  potential->add_option("--samples", pot_args.samples);
  potential->add_option("--out", pot_args.out, "output CSV path (default stdout)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  verify_cmd->add_option("--a", verify_args.options.a);
  verify_cmd->add_option("--b", verify_args.options.b);
  verify_cmd->add_option("--m", verify_args.options.m);
  verify_cmd->add_flag("--quick", verify_args.options.quick, "reduced sample counts");
  verify_cmd->add_flag("--debug-flip-mu-sign", verify_args.flip_mu,
                       "mutation test: reverse the sign of mu in the analytic path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const bool sub_help = dynamic_cast<const CLI::CallForAllHelp*>(&e) != nullptr;
    if (sub_help) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  ScatteringOptions options;
  try {
    options.eps_boundary = eps_boundary_from_env();
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  verify_args.options.scattering.eps_boundary = options.eps_boundary;

  try {
    if (point->parsed()) return cmd_point(point_args, options, out);

    if (sweep->parsed()) {
      if (!(sweep_spec.e_min < sweep_spec.e_max) || sweep_spec.steps < 2) {
        err << "usage error: sweep needs emin < emax and steps >= 2\n";
        return kExitUsage;
      }
      return write_output(sweep_out, out, err, [&](std::ostream& os) {
        write_sweep_csv(sweep_spec, os, err, options);
      });
    }

    if (regions->parsed()) {
      if (!(regions_args.m > 0.0)) {
        err << "usage error: m must be positive\n";
        return kExitUsage;
      }
      cmd_regions(regions_args, out);
      return kExitOk;
    }

    if (wave->parsed()) {
      if (wave_args.samples < 2 || !(wave_args.xmin < wave_args.xmax)) {
        err << "usage error: wavefunction needs xmin < xmax and samples >= 2\n";
        return kExitUsage;
      }
      return write_output(wave_args.out, out, err,
                          [&](std::ostream& os) { write_wavefunction(wave_args, os, err); });
    }

    if (potential->parsed()) {
      if (pot_args.samples < 2 || !(pot_args.xmin < pot_args.xmax)) {
        err << "usage error: potential needs xmin < xmax and samples >= 2\n";
        return kExitUsage;
      }
      return write_output(pot_args.out, out, err,
                          [&](std::ostream& os) { write_potential(pot_args, os); });
    }

    if (verify_cmd->parsed()) return cmd_verify(verify_args, out);
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace dkp::cli

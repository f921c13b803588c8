// Command-line front end for the squeeze/boost correspondence library.
//
// Subcommands:
//   add-velocities  relativistic velocity addition plus the Wigner angle
//   wigner          closed-form squeeze composition, optionally cross-checked
//                   against the truncated Fock-space operator identity
//   boost           boost matrix from a squeeze (--rho/--phi) or velocity (--v)
//   verify          randomized self-checks with per-check residuals
//   fringe          two-mode interference readout of the Wigner angle
//   galilean        deviation from Galilean addition with a fitted exponent
//
// All angles are radians, all velocities are in units of c.  Output is JSON by
// default (--format text for key = value lines; --format csv only for
// `fringe --scan`).  Runs are deterministic: the same command line produces
// byte-identical output.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqboost/correspondence.hpp"
#include "sqboost/errors.hpp"
#include "sqboost/experiment_sim.hpp"
#include "sqboost/fock_oracle.hpp"
#include "sqboost/mat3.hpp"
#include "sqboost/relativity.hpp"
#include "sqboost/sampling.hpp"
#include "sqboost/squeeze_algebra.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sqboost;

constexpr double kPi = 3.141592653589793238462643383279502884;

// Exit code 1 for `verify` when any check fails; set by run_verify.
bool g_verify_failed = false;

std::string fmt(double x) {
  if (x == 0.0) x = 0.0;  // print negative zero as plain 0
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string fmt_pair(double x, double y) { return "(" + fmt(x) + ", " + fmt(y) + ")"; }

Velocity2 parse_velocity(const std::vector<double>& raw, const char* name) {
  if (raw.size() != 2) {
    throw CLI::ValidationError(std::string(name) + ": expected two comma-separated components VX,VY");
  }
  return Velocity2(raw[0], raw[1]);
}

ordered_json velocity_json(const Velocity2& v) { return ordered_json::array({v.vx(), v.vy()}); }

ordered_json matrix_json(const Mat3& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < 3; ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

void clean_negative_zeros(ordered_json& j) {
  if (j.is_number_float()) {
    if (j.get<double>() == 0.0) j = 0.0;
  } else if (j.is_array() || j.is_object()) {
    for (auto& item : j) clean_negative_zeros(item);
  }
}

void emit_json(const ordered_json& j) {
  ordered_json c = j;
  clean_negative_zeros(c);
  std::cout << c.dump(2) << "\n";
}

void forbid_csv(const std::string& format) {
  if (format == "csv") {
    throw CLI::ValidationError("--format: csv output is only available for 'fringe --scan'");
  }
}

SqueezeParam random_squeeze(UniformRng& rng, double rho_lo, double rho_hi) {
  return SqueezeParam(rng.uniform(rho_lo, rho_hi), rng.uniform(-kPi, kPi));
}

Velocity2 random_velocity(UniformRng& rng, double vmax) {
  const double ang = rng.uniform(-kPi, kPi);
  const double speed = rng.uniform(0.0, vmax);
  return Velocity2(speed * std::cos(ang), speed * std::sin(ang));
}

void run_add_velocities(const std::string& format, const std::vector<double>& u_raw,
                        const std::vector<double>& v_raw) {
  forbid_csv(format);
  const Velocity2 u = parse_velocity(u_raw, "--u");
  const Velocity2 v = parse_velocity(v_raw, "--v");
  const Velocity2 w = add_velocities(u, v);
  const double gw = gamma_compose(u, v);
  const VelocityAdditionResult r = velocity_addition_via_squeeze(u, v);
  const double cross = std::max(std::abs(r.w.vx() - w.vx()), std::abs(r.w.vy() - w.vy()));

  if (format == "text") {
    std::cout << "u = " << fmt_pair(u.vx(), u.vy()) << "\n"
              << "v = " << fmt_pair(v.vx(), v.vy()) << "\n"
              << "w = " << fmt_pair(w.vx(), w.vy()) << "\n"
              << "gamma_w = " << fmt(gw) << "\n"
              << "delta_rad = " << fmt(r.delta) << "\n"
              << "cross_check_residual = " << fmt(cross) << "\n";
    return;
  }
  ordered_json out;
  out["u"] = velocity_json(u);
  out["v"] = velocity_json(v);
  out["w"] = velocity_json(w);
  out["gamma_w"] = gw;
  out["delta_rad"] = r.delta;
  out["cross_check_residual"] = cross;
  emit_json(out);
}

void run_wigner(const std::string& format, double rho1, double phi1, double rho2, double phi2) {
  forbid_csv(format);
  const SqueezeParam s1(rho1, phi1);
  const SqueezeParam s2(rho2, phi2);
  const CompositionResult c = compose_squeezes_closed_form(s1, s2);

  // Cross-check the delta branch on the truncated Fock space when both factors
  // are weak enough for the truncation to be quiet.  The branch label is only
  // trusted when the winning residual beats the losing one decisively;
  // otherwise it is reported as "unverified".
  std::string branch = "skipped";
  bool ran_fock = false;
  TruncationReport rep;
  if (s1.rho() <= 1.2 && s2.rho() <= 1.2 && !c.degenerate_direction) {
    rep = check_composition_identity(s1, s2, c, 100, 16, 1e-13);
    ran_fock = true;
    branch = (rep.residual < 0.05 * rep.residual_alt) ? rep.branch : "unverified";
  }

  if (format == "text") {
    std::cout << "rho1 = " << fmt(s1.rho()) << "\n"
              << "phi1 = " << fmt(s1.phi()) << "\n"
              << "rho2 = " << fmt(s2.rho()) << "\n"
              << "phi2 = " << fmt(s2.phi()) << "\n"
              << "rho3 = " << fmt(c.beta3.rho()) << "\n"
              << "phi3 = " << fmt(c.beta3.phi()) << "\n"
              << "delta_rad = " << fmt(c.delta) << "\n"
              << "degenerate_direction = " << (c.degenerate_direction ? "true" : "false") << "\n"
              << "branch = " << branch << "\n";
    if (ran_fock) {
      std::cout << "fock_dim = " << rep.dim << "\n"
                << "fock_cutoff = " << rep.cutoff << "\n"
                << "fock_residual = " << fmt(rep.residual) << "\n";
    }
    return;
  }
  ordered_json out;
  out["rho1"] = s1.rho();
  out["phi1"] = s1.phi();
  out["rho2"] = s2.rho();
  out["phi2"] = s2.phi();
  out["rho3"] = c.beta3.rho();
  out["phi3"] = c.beta3.phi();
  out["delta_rad"] = c.delta;
  out["degenerate_direction"] = c.degenerate_direction;
  out["branch"] = branch;
  if (ran_fock) {
    out["fock_dim"] = rep.dim;
    out["fock_cutoff"] = rep.cutoff;
    out["fock_residual"] = rep.residual;
  }
  emit_json(out);
}

void run_boost(const std::string& format, bool has_rho, double rho, double phi, bool has_v,
               const std::vector<double>& v_raw) {
  forbid_csv(format);
  if (!has_rho && !has_v) {
    throw CLI::RequiredError("boost: either --rho or --v");
  }
  SqueezeParam s;
  Velocity2 v;
  Boost3 b;
  if (has_rho) {
    s = SqueezeParam(rho, phi);
    v = squeeze_to_velocity(s);
    b = boost_matrix_rapidity(s.rho(), s.phi());
  } else {
    v = parse_velocity(v_raw, "--v");
    s = velocity_to_squeeze(v);
    b = boost_matrix_velocity(v);
  }
  const double res = metric_residual(b.mat());

  if (format == "text") {
    std::cout << "rho = " << fmt(s.rho()) << "\n"
              << "phi = " << fmt(s.phi()) << "\n"
              << "velocity = " << fmt_pair(v.vx(), v.vy()) << "\n"
              << "gamma = " << fmt(b(0, 0)) << "\n"
              << "matrix:\n";
    for (int i = 0; i < 3; ++i) {
      std::cout << " ";
      for (int j = 0; j < 3; ++j) std::cout << " " << fmt(b(i, j));
      std::cout << "\n";
    }
    std::cout << "metric_residual = " << fmt(res) << "\n";
    return;
  }
  ordered_json out;
  out["rho"] = s.rho();
  out["phi"] = s.phi();
  out["velocity"] = velocity_json(v);
  out["gamma"] = b(0, 0);
  out["matrix"] = matrix_json(b.mat());
  out["metric_residual"] = res;
  emit_json(out);
}

struct CheckRow {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

void run_verify(const std::string& format, const std::string& suite, int dim, int cutoff,
                std::uint64_t seed, const std::vector<std::string>& tol_raw) {
  forbid_csv(format);

  std::map<std::string, double> tols{
      {"closed_vs_matrix", 1e-10},
      {"su11_preservation", 1e-12},
      {"delta_antisymmetry", 1e-12},
      {"collinear_additivity", 1e-12},
      {"composition_residual", 1e-6},
      {"principal_branch", 0.05},
      {"metric_preservation", 1e-10},
      {"parametrisation_agreement", 1e-12},
      {"addition_cross_check", 1e-10},
      {"gamma_composition", 1e-12},
      {"wigner_sign", 1e-10},
  };
  for (const auto& item : tol_raw) {
    const auto pos = item.find('=');
    if (pos == std::string::npos || pos == 0) {
      throw CLI::ValidationError("--tolerance: expected NAME=VALUE, got '" + item + "'");
    }
    const std::string name = item.substr(0, pos);
    const auto it = tols.find(name);
    if (it == tols.end()) {
      throw CLI::ValidationError("--tolerance: unknown check name '" + name + "'");
    }
    const std::string value = item.substr(pos + 1);
    std::size_t used = 0;
    double parsed = 0.0;
    try {
      parsed = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (value.empty() || used != value.size() || !std::isfinite(parsed) || !(parsed > 0.0)) {
      throw CLI::ValidationError("--tolerance: bad value for '" + name + "': '" + value + "'");
    }
    it->second = parsed;
  }

  constexpr int kTrials = 200;
  UniformRng rng(seed);
  std::vector<CheckRow> rows;
  auto push = [&](const std::string& name, double residual, const std::string& detail) {
    CheckRow row;
    row.name = name;
    row.residual = residual;
    row.tolerance = tols.at(name);
    row.pass = residual <= row.tolerance;
    row.detail = detail;
    rows.push_back(row);
  };

  if (suite == "all" || suite == "algebra") {
    double worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const SqueezeParam s1 = random_squeeze(rng, 0.0, 3.0);
      const SqueezeParam s2 = random_squeeze(rng, 0.0, 3.0);
      const CompositionResult closed = compose_squeezes_closed_form(s1, s2);
      const CompositionResult polar = polar_decompose(compose(to_bogoliubov(s1), to_bogoliubov(s2)));
      if (closed.degenerate_direction || polar.degenerate_direction) continue;
      double d = std::abs(closed.beta3.rho() - polar.beta3.rho());
      d = std::max(d, std::abs(std::remainder(closed.beta3.phi() - polar.beta3.phi(), 2.0 * kPi)));
      d = std::max(d, std::abs(closed.delta - polar.delta));
      worst = std::max(worst, d);
    }
    push("closed_vs_matrix", worst,
         "closed-form composition vs 2x2 polar decomposition, 200 random pairs, rho <= 3");

    worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const BogoliubovMatrix m = compose(to_bogoliubov(random_squeeze(rng, 0.0, 3.0)),
                                         to_bogoliubov(random_squeeze(rng, 0.0, 3.0)));
      worst = std::max(worst, m.su11_defect());
    }
    push("su11_preservation", worst,
         "|mu|^2 - |nu|^2 = 1 after composition, 200 random pairs, rho <= 3");

    worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const SqueezeParam s1 = random_squeeze(rng, 0.0, 3.0);
      const SqueezeParam s2 = random_squeeze(rng, 0.0, 3.0);
      const double d12 = compose_squeezes_closed_form(s1, s2).delta;
      const double d21 = compose_squeezes_closed_form(s2, s1).delta;
      worst = std::max(worst, std::abs(d12 + d21));
    }
    push("delta_antisymmetry", worst,
         "swapping the factors flips the wigner angle, 200 random pairs, rho <= 3");

    worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const double phi = rng.uniform(-kPi, kPi);
      const double ra = rng.uniform(0.0, 2.0);
      const double rb = rng.uniform(0.0, 2.0);
      const CompositionResult c =
          compose_squeezes_closed_form(SqueezeParam(ra, phi), SqueezeParam(rb, phi));
      worst = std::max(worst, std::max(std::abs(c.beta3.rho() - (ra + rb)), std::abs(c.delta)));
    }
    push("collinear_additivity", worst,
         "same-axis strengths add with zero wigner angle, 200 trials, rho <= 2");
  }

  if (suite == "all" || suite == "composition") {
    double worst_res = 0.0;
    double worst_ratio = 0.0;
    for (int i = 0; i < 3; ++i) {
      const SqueezeParam s1 = random_squeeze(rng, 0.1, 0.8);
      const SqueezeParam s2 = random_squeeze(rng, 0.1, 0.8);
      const CompositionResult c = compose_squeezes_closed_form(s1, s2);
      const TruncationReport rep = check_composition_identity(s1, s2, c, dim, cutoff, 1e-13);
      worst_res = std::max(worst_res, rep.residual);
      const double ratio = (rep.branch == "principal" && rep.residual_alt > 0.0)
                               ? rep.residual / rep.residual_alt
                               : 1.0;
      worst_ratio = std::max(worst_ratio, ratio);
    }
    std::ostringstream od;
    od << "operator identity S(b1) S(b2) = S(b3) R(delta) at dim " << dim << ", cutoff " << cutoff
       << ", 3 pairs, rho in [0.1, 0.8]";
    push("composition_residual", worst_res, od.str());
    push("principal_branch", worst_ratio,
         "worst principal-to-alternate branch residual ratio; small means the principal delta "
         "branch wins decisively");
  }

  if (suite == "all" || suite == "boost") {
    double worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      worst = std::max(worst, metric_residual(boost_matrix_velocity(random_velocity(rng, 0.99)).mat()));
    }
    push("metric_preservation", worst,
         "m^T G m = G for boosts from random velocities, |v| <= 0.99, 200 trials");

    worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const SqueezeParam s = random_squeeze(rng, 0.0, 5.0);
      const Mat3 m1 = boost_matrix_velocity(squeeze_to_velocity(s)).mat();
      const Mat3 m2 = boost_matrix_rapidity(s.rho(), s.phi()).mat();
      worst = std::max(worst, max_abs_diff(m1, m2) / std::max(1.0, max_abs(m2)));
    }
    push("parametrisation_agreement", worst,
         "velocity and rapidity boost constructions agree (scale-relative), rho <= 5, 200 trials");

    worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const Velocity2 u = random_velocity(rng, 0.99);
      const Velocity2 v = random_velocity(rng, 0.99);
      const Velocity2 w = add_velocities(u, v);
      const VelocityAdditionResult r = velocity_addition_via_squeeze(u, v);
      worst = std::max(worst, std::max(std::abs(r.w.vx() - w.vx()), std::abs(r.w.vy() - w.vy())));
    }
    push("addition_cross_check", worst,
         "squeeze-route velocity addition vs the direct law, |u|,|v| <= 0.99, 200 trials");

    worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const Velocity2 u = random_velocity(rng, 0.99);
      const Velocity2 v = random_velocity(rng, 0.99);
      const double direct = gamma(add_velocities(u, v));
      const double composed = gamma_compose(u, v);
      worst = std::max(worst, std::abs(composed - direct) / composed);
    }
    push("gamma_composition", worst,
         "gamma_u gamma_v (1 + u.v) vs gamma(u (+) v), relative, |u|,|v| <= 0.99, 200 trials");

    worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const Velocity2 u = random_velocity(rng, 0.95);
      const Velocity2 v = random_velocity(rng, 0.95);
      const Mat3 m = boost_matrix_velocity(u).mat() * boost_matrix_velocity(v).mat();
      const BoostDecomposition d = boost_polar_decompose(m);
      const double delta = velocity_addition_via_squeeze(u, v).delta;
      worst = std::max(worst, std::abs(std::remainder(d.angle + delta, 2.0 * kPi)));
    }
    push("wigner_sign", worst,
         "boost(u) boost(v) leaves spatial_rotation(-delta), |u|,|v| <= 0.95, 200 trials");
  }

  bool all_pass = true;
  for (const CheckRow& row : rows) all_pass = all_pass && row.pass;
  g_verify_failed = !all_pass;

  if (format == "text") {
    std::cout << "suite = " << suite << "\n"
              << "dim = " << dim << "\n"
              << "cutoff = " << cutoff << "\n"
              << "seed = " << seed << "\n";
    for (const CheckRow& row : rows) {
      std::cout << (row.pass ? "[PASS] " : "[FAIL] ") << row.name
                << "  residual = " << fmt(row.residual) << "  tolerance = " << fmt(row.tolerance)
                << "\n";
    }
    std::cout << "overall = " << (all_pass ? "PASS" : "FAIL") << "\n";
    return;
  }
  ordered_json out;
  out["suite"] = suite;
  out["dim"] = dim;
  out["cutoff"] = cutoff;
  out["seed"] = seed;
  ordered_json checks = ordered_json::array();
  for (const CheckRow& row : rows) {
    ordered_json c;
    c["name"] = row.name;
    c["residual"] = row.residual;
    c["tolerance"] = row.tolerance;
    c["pass"] = row.pass;
    c["detail"] = row.detail;
    checks.push_back(c);
  }
  out["checks"] = checks;
  out["pass"] = all_pass;
  emit_json(out);
}

void run_fringe(const std::string& format, double rho1, double phi1, double rho2, double phi2,
                int dim, int scan_points) {
  if (format == "csv" && scan_points == 0) {
    throw CLI::ValidationError("--format: csv needs --scan to have sample rows to print");
  }
  const SqueezeParam s1(rho1, phi1);
  const SqueezeParam s2(rho2, phi2);
  const CompositionResult c = compose_squeezes_closed_form(s1, s2);
  const FringeResult f = nopa_pipeline(s1, s2, dim);
  // delta and the interference readout agree modulo 4*pi (both halve into
  // physical phases modulo 2*pi)
  const double diff = std::abs(std::remainder(f.delta_prime - c.delta, 4.0 * kPi));

  std::vector<double> phases;
  std::vector<double> intensities;
  if (scan_points > 0) {
    phases.reserve(static_cast<std::size_t>(scan_points));
    for (int j = 0; j < scan_points; ++j) {
      phases.push_back(-kPi + 2.0 * kPi * j / scan_points);
    }
    intensities = fringe_scan(s1, s2, dim, phases);
  }

  if (format == "csv") {
    std::cout << "theta_rad,intensity\n";
    for (std::size_t j = 0; j < phases.size(); ++j) {
      std::cout << fmt(phases[j]) << "," << fmt(intensities[j]) << "\n";
    }
    return;
  }
  if (format == "text") {
    std::cout << "rho1 = " << fmt(s1.rho()) << "\n"
              << "phi1 = " << fmt(s1.phi()) << "\n"
              << "rho2 = " << fmt(s2.rho()) << "\n"
              << "phi2 = " << fmt(s2.phi()) << "\n"
              << "dim = " << dim << "\n"
              << "delta_rad = " << fmt(c.delta) << "\n"
              << "delta_prime_rad = " << fmt(f.delta_prime) << "\n"
              << "difference = " << fmt(diff) << "\n"
              << "visibility = " << fmt(f.visibility) << "\n"
              << "overlap_magnitude = " << fmt(f.overlap_magnitude) << "\n";
    if (scan_points > 0) {
      std::cout << "scan = " << scan_points
                << " points (use --format json or --format csv for the samples)\n";
    }
    return;
  }
  ordered_json out;
  out["rho1"] = s1.rho();
  out["phi1"] = s1.phi();
  out["rho2"] = s2.rho();
  out["phi2"] = s2.phi();
  out["dim"] = dim;
  out["delta_rad"] = c.delta;
  out["delta_prime_rad"] = f.delta_prime;
  out["difference"] = diff;
  out["visibility"] = f.visibility;
  out["overlap_magnitude"] = f.overlap_magnitude;
  if (scan_points > 0) {
    ordered_json scan;
    scan["theta_rad"] = phases;
    scan["intensity"] = intensities;
    out["scan"] = scan;
  }
  emit_json(out);
}

void run_galilean(const std::string& format, const std::vector<double>& u_raw,
                  const std::vector<double>& v_raw, const std::vector<double>& scales) {
  forbid_csv(format);
  const Velocity2 u = parse_velocity(u_raw, "--u");
  const Velocity2 v = parse_velocity(v_raw, "--v");
  if (scales.size() < 2) {
    throw CLI::ValidationError("--scales: need at least two scale factors");
  }
  for (double s : scales) {
    if (!std::isfinite(s) || !(s > 1.0)) {
      throw CLI::ValidationError("--scales: every scale must be a finite number above 1");
    }
  }
  if (*std::min_element(scales.begin(), scales.end()) ==
      *std::max_element(scales.begin(), scales.end())) {
    throw CLI::ValidationError("--scales: need at least two distinct scales to fit an exponent");
  }

  std::vector<double> deviations;
  deviations.reserve(scales.size());
  for (double s : scales) {
    const double d = galilean_limit_check(u, v, s);
    if (!(d > 0.0)) {
      throw InvalidParameter("galilean: deviation underflowed to zero at scale " + fmt(s) +
                             "; use smaller scales or larger velocities");
    }
    deviations.push_back(d);
  }

  // least-squares slope of log(deviation) against log(scale); -2 in the limit
  const std::size_t n = scales.size();
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(scales[i]);
    my += std::log(deviations[i]);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(scales[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(deviations[i]) - my);
  }
  const double exponent = sxy / sxx;

  if (format == "text") {
    std::cout << "u = " << fmt_pair(u.vx(), u.vy()) << "\n"
              << "v = " << fmt_pair(v.vx(), v.vy()) << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      std::cout << "scale " << fmt(scales[i]) << ": deviation = " << fmt(deviations[i]) << "\n";
    }
    std::cout << "fitted_exponent = " << fmt(exponent) << "\n";
    return;
  }
  ordered_json out;
  out["u"] = velocity_json(u);
  out["v"] = velocity_json(v);
  out["scales"] = scales;
  out["deviations"] = deviations;
  out["fitted_exponent"] = exponent;
  emit_json(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Squeeze-operator model of planar special relativity: velocity addition, Wigner "
      "rotation, boost matrices, Fock-space cross-checks, and a two-mode interference readout"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format,
                 "Output format: json (default), text, or csv (fringe --scan only)")
      ->check(CLI::IsMember({"json", "text", "csv"}));

  std::vector<double> av_u;
  std::vector<double> av_v;
  CLI::App* av = app.add_subcommand(
      "add-velocities", "Relativistically add two planar velocities and report the Wigner angle");
  av->fallthrough();
  av->add_option("--u", av_u, "First velocity as VX,VY in units of c")->delimiter(',')->required();
  av->add_option("--v", av_v, "Second velocity as VX,VY in units of c")->delimiter(',')->required();
  av->callback([&]() { run_add_velocities(format, av_u, av_v); });

  double w_rho1 = 0.0;
  double w_phi1 = 0.0;
  double w_rho2 = 0.0;
  double w_phi2 = 0.0;
  CLI::App* wg = app.add_subcommand(
      "wigner", "Compose two squeezes in closed form and report the Wigner rotation angle");
  wg->fallthrough();
  wg->add_option("--rho1", w_rho1, "First squeeze strength (>= 0)")->required();
  wg->add_option("--phi1", w_phi1, "First squeeze axis, radians")->required();
  wg->add_option("--rho2", w_rho2, "Second squeeze strength (>= 0)")->required();
  wg->add_option("--phi2", w_phi2, "Second squeeze axis, radians")->required();
  wg->callback([&]() { run_wigner(format, w_rho1, w_phi1, w_rho2, w_phi2); });

  double b_rho = 0.0;
  double b_phi = 0.0;
  std::vector<double> b_v;
  CLI::App* bo = app.add_subcommand(
      "boost", "Boost matrix from a squeeze (--rho, --phi) or from a velocity (--v)");
  bo->fallthrough();
  CLI::Option* opt_rho = bo->add_option("--rho", b_rho, "Squeeze strength / rapidity (>= 0)");
  CLI::Option* opt_phi =
      bo->add_option("--phi", b_phi, "Squeeze axis / boost direction, radians (default 0)");
  CLI::Option* opt_v = bo->add_option("--v", b_v, "Velocity as VX,VY in units of c")->delimiter(',');
  opt_phi->needs(opt_rho);
  opt_rho->excludes(opt_v);
  opt_v->excludes(opt_rho);
  bo->callback(
      [&]() { run_boost(format, opt_rho->count() > 0, b_rho, b_phi, opt_v->count() > 0, b_v); });

  std::string vf_suite = "all";
  int vf_dim = 100;
  int vf_cutoff = 20;
  std::uint64_t vf_seed = 7;
  std::vector<std::string> vf_tols;
  CLI::App* vf =
      app.add_subcommand("verify", "Run randomized self-checks and report per-check residuals");
  vf->fallthrough();
  vf->add_option("--suite", vf_suite, "Which suite to run: algebra, composition, boost, or all")
      ->check(CLI::IsMember({"algebra", "composition", "boost", "all"}));
  vf->add_option("--dim", vf_dim, "Fock dimension for the composition suite (default 100)")
      ->check(CLI::Range(4, 400));
  vf->add_option("--cutoff", vf_cutoff, "Safe-block cutoff for the composition suite (default 20)")
      ->check(CLI::Range(0, 200));
  vf->add_option("--seed", vf_seed, "Random seed (default 7)");
  vf->add_option("--tolerance", vf_tols, "Override a check tolerance as NAME=VALUE; repeatable");
  vf->callback([&]() { run_verify(format, vf_suite, vf_dim, vf_cutoff, vf_seed, vf_tols); });

  double f_rho1 = 0.0;
  double f_phi1 = 0.0;
  double f_rho2 = 0.0;
  double f_phi2 = 0.0;
  int f_dim = 30;
  int f_scan = 0;
  CLI::App* fr = app.add_subcommand(
      "fringe", "Two-mode interference readout of the Wigner angle (delta' = 2 arg<psi2|psi1>)");
  fr->fallthrough();
  fr->add_option("--rho1", f_rho1, "First squeeze strength (>= 0)")->required();
  fr->add_option("--phi1", f_phi1, "First squeeze axis, radians")->required();
  fr->add_option("--rho2", f_rho2, "Second squeeze strength (>= 0)")->required();
  fr->add_option("--phi2", f_phi2, "Second squeeze axis, radians")->required();
  fr->add_option("--dim", f_dim, "Per-mode Fock dimension, 2..40 (default 30)")
      ->check(CLI::Range(2, 40));
  fr->add_option("--scan", f_scan, "Also sample the fringe at K equally spaced phases")
      ->check(CLI::Range(2, 65536));
  fr->callback([&]() { run_fringe(format, f_rho1, f_phi1, f_rho2, f_phi2, f_dim, f_scan); });

  std::vector<double> g_u;
  std::vector<double> g_v;
  std::vector<double> g_scales{10.0, 100.0, 1000.0};
  CLI::App* ga = app.add_subcommand(
      "galilean", "Deviation from Galilean addition as speeds shrink, with fitted decay exponent");
  ga->fallthrough();
  ga->add_option("--u", g_u, "First velocity as VX,VY in units of c")->delimiter(',')->required();
  ga->add_option("--v", g_v, "Second velocity as VX,VY in units of c")->delimiter(',')->required();
  ga->add_option("--scales", g_scales, "Scale-down factors, comma separated (default 10,100,1000)")
      ->delimiter(',');
  ga->callback([&]() { run_galilean(format, g_u, g_v, g_scales); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const sqboost::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return g_verify_failed ? 1 : 0;
}

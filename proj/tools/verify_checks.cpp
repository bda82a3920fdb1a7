#include "verify_checks.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "liefrenet/sampling.hpp"

namespace liefrenet::cli {

namespace {

constexpr int kInstances = 1000;

double spinor_dist(const Spinor& a, const Spinor& b) {
  return std::sqrt(std::norm(a.c1 - b.c1) + std::norm(a.c2 - b.c2));
}

double frame_gap(const Frame& a, const Frame& b) {
  return std::max(
      {max_abs(a.t - b.t), max_abs(a.n - b.n), max_abs(a.b - b.b)});
}

Check leq(std::string name, double measured, double threshold) {
  const bool pass = measured <= threshold;
  return {std::move(name), measured, threshold, false, pass};
}

Check greater(std::string name, double measured, double threshold) {
  const bool pass = measured > threshold;
  return {std::move(name), measured, threshold, true, pass};
}

}  // namespace

double nominal_group_torsion(const RunConfig& cfg) {
  if (cfg.kind_name == "abelian") return 0.0;
  if (cfg.kind_name == "so3") return 0.5;
  if (cfg.kind_name == "s3") return 1.0;
  return 0.5 * cfg.kind.structure_constant;
}

BatteryResult run_verify_battery(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  BatteryResult result;
  auto& checks = result.checks;

  // Torsion constant against the value the named kind pins. Everything
  // else below uses the configured constant consistently, so a corrupted
  // override trips this check and only this check.
  {
    double worst = 0.0;
    for (int i = 0; i < kInstances; ++i) {
      const Frame f = rotation_frame(rng);
      worst = std::max(worst,
                       std::fabs(group_torsion_from_frame(cfg.kind, f) -
                                 nominal_group_torsion(cfg)));
    }
    checks.push_back(leq("group_torsion_from_frame", worst, 1e-12));
  }

  // Bracket identities on random frames.
  {
    const double two_tg = 2.0 * group_torsion(cfg.kind);
    double tn = 0.0, tb = 0.0, nb = 0.0;
    for (int i = 0; i < kInstances; ++i) {
      const Frame f = rotation_frame(rng);
      tn = std::max(tn, max_abs(bracket(cfg.kind, f.t, f.n) - two_tg * f.b));
      tb = std::max(tb, max_abs(bracket(cfg.kind, f.t, f.b) + two_tg * f.n));
      nb = std::max(nb, max_abs(bracket(cfg.kind, f.n, f.b) - two_tg * f.t));
    }
    checks.push_back(leq("bracket_tangent_normal", tn, 1e-12));
    checks.push_back(leq("bracket_tangent_binormal", tb, 1e-12));
    checks.push_back(leq("bracket_normal_binormal", nb, 1e-12));
  }

  // Mate identities; these are exact in IEEE arithmetic.
  {
    double invol = 0.0, antilin = 0.0, ortho = 0.0;
    for (int i = 0; i < kInstances; ++i) {
      const Spinor phi = unit_spinor(rng);
      const Spinor psi = unit_spinor(rng);
      const Complex alpha = gaussian_complex(rng);
      const Complex beta = gaussian_complex(rng);
      invol = std::max(invol, spinor_dist(mate(mate(phi)), -phi));
      const Spinor lhs = mate(alpha * phi + beta * psi);
      const Spinor rhs = std::conj(alpha) * mate(phi) +
                         std::conj(beta) * mate(psi);
      antilin = std::max(antilin, spinor_dist(lhs, rhs));
      const Complex pairing = std::conj(phi.c1) * mate(phi).c1 +
                              std::conj(phi.c2) * mate(phi).c2;
      ortho = std::max(ortho, std::abs(pairing));
    }
    checks.push_back(leq("mate_involution", invol, 1e-15));
    checks.push_back(leq("mate_antilinearity", antilin, 1e-15));
    checks.push_back(leq("mate_orthogonality", ortho, 1e-15));
  }

  // Bilinear-form identities.
  {
    double symm = 0.0, conj_id = 0.0;
    for (int i = 0; i < kInstances; ++i) {
      const Spinor phi = unit_spinor(rng);
      const Spinor psi = unit_spinor(rng);
      const auto fwd = sigma_form(psi, phi);
      const auto rev = sigma_form(phi, psi);
      const auto mm = sigma_form(mate(psi), mate(phi));
      for (int k = 0; k < 3; ++k) {
        symm = std::max(symm, std::abs(fwd[k] - rev[k]));
        conj_id = std::max(conj_id, std::abs(std::conj(fwd[k]) + mm[k]));
      }
    }
    checks.push_back(leq("sigma_symmetry", symm, 1e-12));
    checks.push_back(leq("sigma_conjugation", conj_id, 1e-12));
  }

  // Triad geometry from random unit spinors.
  {
    double iso = 0.0, ortho = 0.0, round_trip = 0.0;
    for (int i = 0; i < kInstances; ++i) {
      const Spinor phi = unit_spinor(rng);
      const Triad t = spinor_to_triad(phi);
      const Complex self_dot(dot(t.a, t.a) - dot(t.b, t.b),
                             2.0 * dot(t.a, t.b));
      iso = std::max(iso, std::abs(self_dot));
      const double defect = std::max(
          {std::fabs(dot(t.a, t.b)), std::fabs(dot(t.a, t.c)),
           std::fabs(dot(t.b, t.c)), std::fabs(norm(t.a) - 1.0),
           std::fabs(norm(t.b) - 1.0), std::fabs(norm(t.c) - 1.0)});
      ortho = std::max(ortho, defect);
      const auto [plus, minus] = triad_to_spinor(t);
      round_trip = std::max(round_trip, std::min(spinor_dist(plus, phi),
                                                 spinor_dist(minus, phi)));
    }
    checks.push_back(leq("triad_isotropy", iso, 1e-12));
    checks.push_back(leq("triad_orthonormality", ortho, 1e-12));
    checks.push_back(leq("triad_round_trip", round_trip, 1e-12));
  }

  // Frame dictionary round trip.
  {
    double worst = 0.0;
    for (int i = 0; i < kInstances; ++i) {
      const Frame f = rotation_frame(rng);
      worst = std::max(worst,
                       frame_gap(frame_from_spinor(spinor_from_frame(f).first),
                                 f));
    }
    checks.push_back(leq("frame_round_trip", worst, 1e-12));
  }

  // Two-transport equivalence over the configured run, plus the flipped
  // orientation as a negative oracle: it must diverge at order one.
  {
    const ArcGrid grid = cfg.grid();
    result.equivalence = equivalence_report(cfg.profile, cfg.kind,
                                            cfg.initial_frame, grid,
                                            cfg.method);
    const double defect_tol =
        cfg.method == IntegrationMethod::rk4_renorm ? 1e-12 : 1e-8;
    checks.push_back(leq("equivalence_max_frame_deviation",
                         result.equivalence.max_frame_deviation, 1e-6));
    checks.push_back(leq("spinor_norm_drift",
                         result.equivalence.spinor_norm_drift, 1e-10));
    checks.push_back(leq("frame_orthonormality_defect",
                         result.equivalence.frame_orthonormality_defect,
                         defect_tol));
    checks.push_back(leq("frame_unit_defect",
                         result.equivalence.frame_unit_defect, defect_tol));

    const EquivalenceReport flipped = detail::equivalence_report_signed(
        cfg.profile, cfg.kind, cfg.initial_frame, grid, cfg.method,
        -kTangentSign);
    checks.push_back(greater("tangent_orientation_oracle",
                             flipped.max_frame_deviation, 1e-1));
  }

  return result;
}

}  // namespace liefrenet::cli

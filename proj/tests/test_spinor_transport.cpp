#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "liefrenet/sampling.hpp"
#include "liefrenet/spinor_flow.hpp"

using namespace liefrenet;

namespace {

const GroupKind kKinds[] = {GroupKind::abelian(), GroupKind::so3(),
                            GroupKind::s3(), GroupKind::custom(0.7)};

CurvatureProfile stock_profile() {
  return {ScalarProfile::sinusoid(1.0, 0.3, 1.0, 0.0),
          ScalarProfile::sinusoid(0.0, 0.5, 1.0, 1.5707963267948966)};
}

double dist(const Spinor& a, const Spinor& b) {
  return std::sqrt(std::norm(a.c1 - b.c1) + std::norm(a.c2 - b.c2));
}

double frame_gap(const Frame& a, const Frame& b) {
  return std::max(
      {max_abs(a.t - b.t), max_abs(a.n - b.n), max_abs(a.b - b.b)});
}

}  // namespace

TEST_SUITE_BEGIN("spinor_transport");

TEST_CASE("transport coefficients carry the shifted torsion and half curvature") {
  for (const GroupKind& kind : kKinds) {
    const double kappa = 1.7, tau = -0.4;
    const CoefficientPair c = transport_coefficients(kind, kappa, tau);
    CHECK(c.g.real() == 0.0);
    CHECK(c.g.imag() ==
          doctest::Approx(-0.5 * (tau - group_torsion(kind))).epsilon(1e-15));
    CHECK(c.h.real() == doctest::Approx(0.5 * kappa).epsilon(1e-15));
    CHECK(c.h.imag() == 0.0);
  }
}

TEST_CASE("right-hand side combines the spinor and its mate") {
  std::mt19937_64 rng(4001);
  for (const GroupKind& kind : kKinds) {
    const Spinor phi = unit_spinor(rng);
    const double kappa = 0.9, tau = 0.3;
    const Spinor d = spinor_rhs(kind, kappa, tau, phi);
    const Complex g(0.0, -0.5 * (tau - group_torsion(kind)));
    const Spinor expect = g * phi + (0.5 * kappa) * mate(phi);
    CHECK(dist(d, expect) == 0.0);
  }
}

TEST_CASE("vanishing curvature leaves a pure phase rotation") {
  std::mt19937_64 rng(4002);
  const double tau = 0.8;
  const CurvatureProfile prof{ScalarProfile::constant(0.0),
                              ScalarProfile::constant(tau)};
  const ArcGrid grid(0.0, 5.0, 1e-3);
  for (const GroupKind& kind : kKinds) {
    const Spinor phi0 = unit_spinor(rng);
    const TransportResult run = integrate_spinor(prof, kind, phi0, grid);
    CHECK(run.spinors.size() == grid.node_count());
    CHECK(run.frames.empty());
    const double te = tau - group_torsion(kind);
    for (std::size_t i = 0; i < run.s.size(); i += 800) {
      const Complex phase = std::exp(Complex(0.0, -0.5 * te * run.s[i]));
      CHECK(dist(run.spinors[i], phase * phi0) <= 1e-11);
    }
  }
}

TEST_CASE("torsion matching the group constant leaves a real rotation") {
  std::mt19937_64 rng(4003);
  const double kappa = 1.3;
  for (const GroupKind& kind : kKinds) {
    const CurvatureProfile prof{
        ScalarProfile::constant(kappa),
        ScalarProfile::constant(group_torsion(kind))};
    const ArcGrid grid(0.0, 5.0, 1e-3);
    const Spinor phi0 = unit_spinor(rng);
    const TransportResult run = integrate_spinor(prof, kind, phi0, grid);
    for (std::size_t i = 0; i < run.s.size(); i += 800) {
      const double half = 0.5 * kappa * run.s[i];
      const Spinor expect = std::cos(half) * phi0 + std::sin(half) * mate(phi0);
      CHECK(dist(run.spinors[i], expect) <= 1e-10);
    }
  }
}

TEST_CASE("the flow conserves the spinor norm") {
  const ArcGrid grid(0.0, 10.0, 1e-3);
  std::mt19937_64 rng(4004);
  for (const GroupKind& kind : kKinds) {
    const Spinor phi0 = unit_spinor(rng);
    const TransportResult plain =
        integrate_spinor(stock_profile(), kind, phi0, grid);
    CHECK(plain.max_unit_defect <= 1e-10);
    const TransportResult renorm = integrate_spinor(
        stock_profile(), kind, phi0, grid, IntegrationMethod::rk4_renorm);
    CHECK(renorm.max_unit_defect <= 1e-13);
  }
}

TEST_CASE("initial spinor must be unit") {
  const ArcGrid grid(0.0, 1.0, 0.01);
  CHECK_THROWS_AS(
      integrate_spinor(stock_profile(), GroupKind::abelian(),
                       {Complex(1.0 + 1e-6, 0), Complex(0, 0)}, grid),
      std::invalid_argument);
}

TEST_CASE("frame dictionary round trips") {
  std::mt19937_64 rng(4005);
  for (int k = 0; k < 200; ++k) {
    const Frame f = rotation_frame(rng);
    const auto [phi, negphi] = spinor_from_frame(f);
    CHECK(negphi.c1 == -phi.c1);
    CHECK(negphi.c2 == -phi.c2);
    CHECK(std::fabs(norm(phi) - 1.0) <= 1e-14);
    CHECK(frame_gap(frame_from_spinor(phi), f) <= 1e-12);
    CHECK(frame_gap(frame_from_spinor(negphi), f) <= 1e-12);

    const Spinor psi = unit_spinor(rng);
    const auto [back, negback] = spinor_from_frame(frame_from_spinor(psi));
    CHECK(std::min(dist(back, psi), dist(negback, psi)) <= 1e-12);
  }
}

TEST_CASE("dictionary tolerates integrator drift but rejects junk") {
  std::mt19937_64 rng(4006);
  const Spinor phi = unit_spinor(rng);

  // The norm is quadratic in the amplitude, so a 4e-7 amplitude drift sits
  // safely inside the 1e-6 norm tolerance.
  const Spinor drifted = (1.0 + 4e-7) * phi;
  const Frame f = frame_from_spinor(drifted);
  CHECK(is_valid_frame(f));

  CHECK_THROWS_AS(frame_from_spinor(1.01 * phi), std::invalid_argument);
  CHECK_THROWS_AS(frame_from_spinor({Complex(0, 0), Complex(0, 0)}),
                  std::invalid_argument);

  Frame bad = f;
  bad.t = 2.0 * bad.t;
  try {
    spinor_from_frame(bad);
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("invalid frame") == 0);
  }
}

TEST_CASE("flow derivative of the carried frame pins the tangent orientation") {
  // Differentiate the dictionary along the spinor flow and compare with
  // the frame equations; only one tangent sign is consistent, which is
  // the regression guard for kTangentSign.
  std::mt19937_64 rng(4007);
  const double eps = 1e-6;
  for (const GroupKind& kind : kKinds) {
    for (int k = 0; k < 10; ++k) {
      const Spinor phi = unit_spinor(rng);
      const double kappa = 0.8 + std::fabs(gaussian(rng));
      const double tau = gaussian(rng);
      const Spinor d = spinor_rhs(kind, kappa, tau, phi);
      for (double sign : {1.0, -1.0}) {
        const Frame fp =
            detail::frame_from_spinor_signed(phi + eps * d, sign);
        const Frame fm =
            detail::frame_from_spinor_signed(phi - eps * d, sign);
        const Frame f0 = detail::frame_from_spinor_signed(phi, sign);
        const double inv2e = 1.0 / (2.0 * eps);
        const Frame flow{inv2e * (fp.t - fm.t), inv2e * (fp.n - fm.n),
                         inv2e * (fp.b - fm.b)};
        const FrameDerivative expect = frenet_rhs(kind, kappa, tau, f0);
        const double gap =
            std::max({max_abs(flow.t - expect.dt), max_abs(flow.n - expect.dn),
                      max_abs(flow.b - expect.db)});
        if (sign == kTangentSign) {
          CHECK(gap <= 1e-7);
        } else {
          CHECK(gap > 0.5);
        }
      }
    }
  }
}

TEST_CASE("both transports agree through the dictionary") {
  const ArcGrid grid(0.0, 10.0, 1e-3);
  std::mt19937_64 rng(4008);
  for (const GroupKind& kind : kKinds) {
    const Frame f0 = rotation_frame(rng);
    const EquivalenceReport rep =
        equivalence_report(stock_profile(), kind, f0, grid);
    CHECK(rep.max_frame_deviation <= 1e-6);
    CHECK(rep.spinor_norm_drift <= 1e-10);
    CHECK(rep.frame_orthonormality_defect <= 1e-8);
    CHECK(rep.frame_unit_defect <= 1e-8);
  }
}

TEST_CASE("the flipped tangent orientation diverges at order one") {
  const ArcGrid grid(0.0, 10.0, 1e-3);
  std::mt19937_64 rng(4009);
  for (const GroupKind& kind : kKinds) {
    const Frame f0 = rotation_frame(rng);
    const EquivalenceReport rep = detail::equivalence_report_signed(
        stock_profile(), kind, f0, grid, IntegrationMethod::rk4,
        -kTangentSign);
    CHECK(rep.max_frame_deviation > 1e-1);
  }
}

TEST_CASE("the zero-constant custom kind reproduces the flat runs bitwise") {
  const ArcGrid grid(0.0, 4.0, 1e-3);
  std::mt19937_64 rng(4010);
  const Frame f0 = rotation_frame(rng);
  const Spinor phi0 = spinor_from_frame(f0).first;

  const TransportResult fa =
      integrate_frenet(stock_profile(), GroupKind::abelian(), f0, grid);
  const TransportResult fc =
      integrate_frenet(stock_profile(), GroupKind::custom(0.0), f0, grid);
  const TransportResult sa =
      integrate_spinor(stock_profile(), GroupKind::abelian(), phi0, grid);
  const TransportResult sc =
      integrate_spinor(stock_profile(), GroupKind::custom(0.0), phi0, grid);
  for (std::size_t i = 0; i < grid.node_count(); ++i) {
    CHECK(frame_gap(fa.frames[i], fc.frames[i]) == 0.0);
    CHECK(sa.spinors[i].c1 == sc.spinors[i].c1);
    CHECK(sa.spinors[i].c2 == sc.spinors[i].c2);
  }
}

TEST_CASE("curved kinds reduce to the flat kind under a torsion shift") {
  const ArcGrid grid(0.0, 10.0, 1e-3);
  std::mt19937_64 rng(4011);
  const Frame f0 = rotation_frame(rng);
  const ScalarProfile kappa = ScalarProfile::sinusoid(1.0, 0.3, 1.0, 0.0);
  for (const GroupKind& kind : {GroupKind::so3(), GroupKind::s3()}) {
    const double shift = group_torsion(kind);
    const CurvatureProfile curved{kappa,
                                  ScalarProfile::sinusoid(0.5, 0.4, 1.0, 0.0)};
    const CurvatureProfile flat{
        kappa, ScalarProfile::sinusoid(0.5 - shift, 0.4, 1.0, 0.0)};
    const TransportResult a = integrate_frenet(curved, kind, f0, grid);
    const TransportResult b =
        integrate_frenet(flat, GroupKind::abelian(), f0, grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.node_count(); ++i)
      worst = std::max(worst, frame_gap(a.frames[i], b.frames[i]));
    CHECK(worst <= 1e-12);
  }
}

TEST_SUITE_END();

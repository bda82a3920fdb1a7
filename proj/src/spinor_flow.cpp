#include "liefrenet/spinor_flow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace liefrenet {

CoefficientPair transport_coefficients(const GroupKind& kind, double kappa,
                                       double tau) {
  return {Complex(0.0, -0.5 * (tau - group_torsion(kind))),
          Complex(0.5 * kappa, 0.0)};
}

Spinor spinor_rhs(const GroupKind& kind, double kappa, double tau,
                  const Spinor& phi) {
  const CoefficientPair c = transport_coefficients(kind, kappa, tau);
  return c.g * phi + c.h * mate(phi);
}

namespace {

Spinor spinor_axpy(const Spinor& phi, double a, const Spinor& d) {
  return {phi.c1 + a * d.c1, phi.c2 + a * d.c2};
}

Spinor rescaled_unit(const Spinor& phi) {
  return (1.0 / std::sqrt(norm(phi))) * phi;
}

}  // namespace

TransportResult integrate_spinor(const CurvatureProfile& profile,
                                 const GroupKind& kind, const Spinor& initial,
                                 const ArcGrid& grid,
                                 IntegrationMethod method) {
  if (std::fabs(norm(initial) - 1.0) > 1e-9)
    throw std::invalid_argument("initial spinor must be unit");

  const auto rhs = [&](double s, const Spinor& phi) {
    return spinor_rhs(kind, profile.kappa(s), profile.tau(s), phi);
  };

  TransportResult out;
  out.s.reserve(grid.node_count());
  out.spinors.reserve(grid.node_count());

  Spinor phi = initial;
  const auto record = [&](double s, const Spinor& p) {
    out.s.push_back(s);
    out.spinors.push_back(p);
    out.max_unit_defect =
        std::max(out.max_unit_defect, std::fabs(norm(p) - 1.0));
  };
  record(grid.node(0), phi);

  for (std::size_t i = 0; i < grid.step_count(); ++i) {
    const double sa = grid.node(i);
    const double sb = grid.node(i + 1);
    const double h = sb - sa;
    const double sm = sa + 0.5 * h;
    const Spinor k1 = rhs(sa, phi);
    const Spinor k2 = rhs(sm, spinor_axpy(phi, 0.5 * h, k1));
    const Spinor k3 = rhs(sm, spinor_axpy(phi, 0.5 * h, k2));
    const Spinor k4 = rhs(sb, phi + h * k3);
    phi = spinor_axpy(phi, h / 6.0, k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (method == IntegrationMethod::rk4_renorm) phi = rescaled_unit(phi);
    record(sb, phi);
  }
  return out;
}

Frame frame_from_spinor(const Spinor& phi) {
  return detail::frame_from_spinor_signed(phi, kTangentSign);
}

std::pair<Spinor, Spinor> spinor_from_frame(const Frame& frame) {
  return detail::spinor_from_frame_signed(frame, kTangentSign);
}

EquivalenceReport equivalence_report(const CurvatureProfile& profile,
                                     const GroupKind& kind,
                                     const Frame& initial, const ArcGrid& grid,
                                     IntegrationMethod method) {
  return detail::equivalence_report_signed(profile, kind, initial, grid,
                                           method, kTangentSign);
}

namespace detail {

Frame frame_from_spinor_signed(const Spinor& phi, double tangent_sign) {
  if (std::fabs(norm(phi) - 1.0) > 1e-6)
    throw std::invalid_argument("spinor norm strays from unit beyond 1e-6");
  // Rescale before mapping: the triad inherits the squared norm, so this
  // keeps the output frame valid under integrator drift.
  const Triad t = spinor_to_triad(rescaled_unit(phi));
  return {tangent_sign * t.c, t.a, t.b};
}

std::pair<Spinor, Spinor> spinor_from_frame_signed(const Frame& frame,
                                                   double tangent_sign) {
  validate_frame(frame);
  (void)tangent_sign;  // recovery reads only (n, b), blind to orientation
  const Spinor raw = spinor_from_isotropic_pair(frame.n, frame.b);
  const Spinor phi = rescaled_unit(raw);
  const double parts[4] = {phi.c1.real(), phi.c1.imag(), phi.c2.real(),
                           phi.c2.imag()};
  for (double p : parts) {
    if (std::fabs(p) > 1e-12) return p > 0.0 ? std::make_pair(phi, -phi)
                                             : std::make_pair(-phi, phi);
  }
  return {phi, -phi};
}

EquivalenceReport equivalence_report_signed(const CurvatureProfile& profile,
                                            const GroupKind& kind,
                                            const Frame& initial,
                                            const ArcGrid& grid,
                                            IntegrationMethod method,
                                            double tangent_sign) {
  const Spinor phi0 = spinor_from_frame_signed(initial, tangent_sign).first;
  const TransportResult frames =
      integrate_frenet(profile, kind, initial, grid, method);
  const TransportResult spinors =
      integrate_spinor(profile, kind, phi0, grid, method);

  EquivalenceReport report;
  report.spinor_norm_drift = spinors.max_unit_defect;
  report.frame_orthonormality_defect = frames.max_orthonormality_defect;
  report.frame_unit_defect = frames.max_unit_defect;
  for (std::size_t i = 0; i < frames.frames.size(); ++i) {
    const Frame carried =
        frame_from_spinor_signed(spinors.spinors[i], tangent_sign);
    const Frame& direct = frames.frames[i];
    const double dev =
        std::max({max_abs(direct.t - carried.t), max_abs(direct.n - carried.n),
                  max_abs(direct.b - carried.b)});
    report.max_frame_deviation = std::max(report.max_frame_deviation, dev);
  }
  return report;
}

}  // namespace detail

}  // namespace liefrenet

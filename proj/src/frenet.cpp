#include "liefrenet/frenet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace liefrenet {

FrameDerivative frenet_rhs(const GroupKind& kind, double kappa, double tau,
                           const Frame& frame) {
  const double te = tau - group_torsion(kind);
  return {kappa * frame.n, -kappa * frame.t + te * frame.b, -te * frame.n};
}

namespace {

Frame frame_axpy(const Frame& f, double a, const FrameDerivative& d) {
  return {f.t + a * d.dt, f.n + a * d.dn, f.b + a * d.db};
}

FrameDerivative deriv_combine(const FrameDerivative& k1,
                              const FrameDerivative& k2,
                              const FrameDerivative& k3,
                              const FrameDerivative& k4) {
  return {k1.dt + 2.0 * k2.dt + 2.0 * k3.dt + k4.dt,
          k1.dn + 2.0 * k2.dn + 2.0 * k3.dn + k4.dn,
          k1.db + 2.0 * k2.db + 2.0 * k3.db + k4.db};
}

double positive_kappa(const CurvatureProfile& profile, double s) {
  const double kappa = profile.kappa(s);
  if (!(kappa > 0.0)) {
    std::ostringstream msg;
    msg << "curvature not positive: kappa = " << kappa << " at s = " << s;
    throw std::domain_error(msg.str());
  }
  return kappa;
}

}  // namespace

TransportResult integrate_frenet(const CurvatureProfile& profile,
                                 const GroupKind& kind, const Frame& initial,
                                 const ArcGrid& grid,
                                 IntegrationMethod method) {
  validate_frame(initial);

  const auto rhs = [&](double s, const Frame& f) {
    return frenet_rhs(kind, positive_kappa(profile, s), profile.tau(s), f);
  };

  TransportResult out;
  out.s.reserve(grid.node_count());
  out.frames.reserve(grid.node_count());

  Frame f = initial;
  const auto record = [&](double s, const Frame& frame) {
    out.s.push_back(s);
    out.frames.push_back(frame);
    out.max_orthonormality_defect =
        std::max(out.max_orthonormality_defect, orthonormality_defect(frame));
    out.max_unit_defect = std::max(out.max_unit_defect, unit_defect(frame));
  };
  record(grid.node(0), f);

  for (std::size_t i = 0; i < grid.step_count(); ++i) {
    // Stage abscissae come from the node positions so the final stage
    // never lands past s1 (a table profile may end exactly there).
    const double sa = grid.node(i);
    const double sb = grid.node(i + 1);
    const double h = sb - sa;
    const double sm = sa + 0.5 * h;
    const FrameDerivative k1 = rhs(sa, f);
    const FrameDerivative k2 = rhs(sm, frame_axpy(f, 0.5 * h, k1));
    const FrameDerivative k3 = rhs(sm, frame_axpy(f, 0.5 * h, k2));
    const FrameDerivative k4 = rhs(sb, frame_axpy(f, h, k3));
    f = frame_axpy(f, h / 6.0, deriv_combine(k1, k2, k3, k4));
    if (method == IntegrationMethod::rk4_renorm) f = gram_schmidt(f);
    record(sb, f);
  }
  return out;
}

std::pair<TransportResult, std::vector<GroupPoint>> curve_from_profile(
    const CurvatureProfile& profile, const GroupKind& kind,
    const Frame& initial, const GroupPoint& start, const ArcGrid& grid,
    IntegrationMethod method, DevelopMethod develop_method) {
  TransportResult transport = integrate_frenet(profile, kind, initial, grid, method);
  std::vector<Vec3> tangents;
  tangents.reserve(transport.frames.size());
  for (const Frame& f : transport.frames) tangents.push_back(f.t);
  std::vector<GroupPoint> points =
      develop_curve(kind, start, tangents, grid, develop_method);
  return {std::move(transport), std::move(points)};
}

}  // namespace liefrenet

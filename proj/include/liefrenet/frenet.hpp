#pragma once

#include <span>
#include <utility>
#include <vector>

#include "liefrenet/frame.hpp"
#include "liefrenet/grid.hpp"
#include "liefrenet/group.hpp"
#include "liefrenet/profile.hpp"
#include "liefrenet/spinor.hpp"

namespace liefrenet {

enum class IntegrationMethod {
  rk4,
  rk4_renorm,  // rk4 plus per-step renormalization of the state
};

/// Right-hand side of the frame transport system at one point.
struct FrameDerivative {
  Vec3 dt, dn, db;
};

/// dT = kappa N, dN = -kappa T + (tau - tau_G) B, dB = -(tau - tau_G) N.
/// The group shifts the effective torsion by its own constant tau_G; every
/// group enters the equations through that shift alone.
FrameDerivative frenet_rhs(const GroupKind& kind, double kappa, double tau,
                           const Frame& frame);

/// Result of a transport run over an ArcGrid. `frames` or `spinors` (or
/// both) hold node samples aligned with `s`; whichever state was not
/// integrated stays empty. Defect fields track the worst drift of the
/// integrated state away from its constraint manifold across all nodes.
struct TransportResult {
  std::vector<double> s;
  std::vector<Frame> frames;
  std::vector<Spinor> spinors;
  double max_orthonormality_defect = 0.0;
  double max_unit_defect = 0.0;
};

/// Integrates the frame system from `initial` across `grid`. Throws
/// std::invalid_argument for an invalid initial frame and
/// std::domain_error naming s when kappa is evaluated <= 0 at any stage.
TransportResult integrate_frenet(const CurvatureProfile& profile,
                                 const GroupKind& kind, const Frame& initial,
                                 const ArcGrid& grid,
                                 IntegrationMethod method =
                                     IntegrationMethod::rk4);

/// Frame transport plus development of the tangent field into the group,
/// starting at `start`. Returns the transport result and the node-aligned
/// curve points.
std::pair<TransportResult, std::vector<GroupPoint>> curve_from_profile(
    const CurvatureProfile& profile, const GroupKind& kind,
    const Frame& initial, const GroupPoint& start, const ArcGrid& grid,
    IntegrationMethod method = IntegrationMethod::rk4,
    DevelopMethod develop_method = DevelopMethod::exp_midpoint);

}  // namespace liefrenet

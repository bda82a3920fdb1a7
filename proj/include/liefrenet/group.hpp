#pragma once

#include <span>
#include <variant>
#include <vector>

#include "liefrenet/frame.hpp"
#include "liefrenet/grid.hpp"
#include "liefrenet/vec3.hpp"

namespace liefrenet {

enum class GroupTag { abelian, so3, s3, custom };

/// A three-dimensional Lie group with bi-invariant metric, pinned by the
/// structure constant c of an orthonormal left-invariant basis:
/// [e_i, e_j] = c eps_ijk e_k. The named kinds are presets c = 0, 1, 2.
struct GroupKind {
  GroupTag tag = GroupTag::abelian;
  double structure_constant = 0.0;

  static GroupKind abelian() { return {GroupTag::abelian, 0.0}; }
  static GroupKind so3() { return {GroupTag::so3, 1.0}; }
  static GroupKind s3() { return {GroupTag::s3, 2.0}; }
  /// Throws std::invalid_argument unless c is finite and >= 0.
  static GroupKind custom(double c);
};

/// Lie bracket on coefficient vectors: c * (w x z).
Vec3 bracket(const GroupKind& kind, const Vec3& w, const Vec3& z);

/// The group torsion constant c/2 (0, 1/2, 1 for the named kinds). It
/// shifts the torsion in the frame equations to the effective value
/// tau - group_torsion.
double group_torsion(const GroupKind& kind);

/// Group torsion computed from a frame as half the bracket pairing
/// <[T,N], B>. Frame-independent; equals group_torsion(kind) for every
/// valid frame. Throws on an invalid frame.
double group_torsion_from_frame(const GroupKind& kind, const Frame& f);

/// Covariant derivative along a curve with unit tangent coefficients t:
/// w_dot + (1/2)[t, w].
Vec3 covariant_derivative(const GroupKind& kind, const Vec3& tangent,
                          const Vec3& w, const Vec3& w_dot);

struct Quaternion {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;
};

Quaternion operator*(const Quaternion& a, const Quaternion& b);
double norm(const Quaternion& q);
Quaternion normalized(const Quaternion& q);

/// Unit quaternion exp of the pure-imaginary quaternion with vector part
/// v: rotation by quaternion angle |v| about v.
Quaternion quat_exp(const Vec3& v);

struct Mat3 {
  double m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

  static Mat3 identity() { return {}; }
};

Mat3 operator*(const Mat3& a, const Mat3& b);
Mat3 transpose(const Mat3& a);
double determinant(const Mat3& a);

/// max |(R^t R - I)_ij|.
double orthogonality_defect(const Mat3& r);

/// Rotation about axis v by angle |v| (Rodrigues form, series-safe near 0).
Mat3 rotation_exp(const Vec3& v);

/// Nearest special-orthogonal matrix (polar factor, Newton iteration).
Mat3 polar_project(const Mat3& a);

/// A position on the group: displacement vector (abelian), unit
/// quaternion (S3 and custom c > 0), or rotation matrix (SO3).
using GroupPoint = std::variant<Vec3, Quaternion, Mat3>;

/// The neutral element in the representation develop_curve uses for kind.
GroupPoint identity_point(const GroupKind& kind);

enum class DevelopMethod {
  exp_midpoint,  ///< per-step group exponential of the midpoint tangent
  rk4_project,   ///< ambient RK4 followed by projection onto the group
};

/// Reconstructs group-valued positions from sampled unit tangent
/// coefficients on the grid nodes. tangents.size() must equal
/// grid.node_count() and be >= 2; samples must be unit within 1e-6; start
/// must satisfy the representation invariants for kind. Custom kinds
/// develop on the abelian model when c == 0 and on the quaternion model
/// (rotation rate c/2) otherwise.
std::vector<GroupPoint> develop_curve(
    const GroupKind& kind, const GroupPoint& start,
    std::span<const Vec3> tangents, const ArcGrid& grid,
    DevelopMethod method = DevelopMethod::exp_midpoint);

}  // namespace liefrenet

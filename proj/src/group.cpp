#include "liefrenet/group.hpp"

#include <cmath>
#include <stdexcept>

namespace liefrenet {

GroupKind GroupKind::custom(double c) {
  if (!std::isfinite(c) || c < 0.0)
    throw std::invalid_argument("custom group: structure constant must be finite and >= 0");
  return {GroupTag::custom, c};
}

Vec3 bracket(const GroupKind& kind, const Vec3& w, const Vec3& z) {
  return kind.structure_constant * cross(w, z);
}

double group_torsion(const GroupKind& kind) {
  return 0.5 * kind.structure_constant;
}

double group_torsion_from_frame(const GroupKind& kind, const Frame& f) {
  validate_frame(f);
  return 0.5 * dot(bracket(kind, f.t, f.n), f.b);
}

Vec3 covariant_derivative(const GroupKind& kind, const Vec3& tangent,
                          const Vec3& w, const Vec3& w_dot) {
  return w_dot + 0.5 * bracket(kind, tangent, w);
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

double norm(const Quaternion& q) {
  return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
}

Quaternion normalized(const Quaternion& q) {
  const double s = 1.0 / norm(q);
  return {s * q.w, s * q.x, s * q.y, s * q.z};
}

Quaternion quat_exp(const Vec3& v) {
  const double theta = norm(v);
  // sin(theta)/theta, series below the switchover so the quotient never
  // amplifies cancellation.
  double sinc;
  if (theta < 1e-4) {
    const double t2 = theta * theta;
    sinc = 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
  } else {
    sinc = std::sin(theta) / theta;
  }
  return {std::cos(theta), sinc * v.x, sinc * v.y, sinc * v.z};
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 3; ++k) sum += a.m[i][k] * b.m[k][j];
      out.m[i][j] = sum;
    }
  return out;
}

Mat3 transpose(const Mat3& a) {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.m[i][j] = a.m[j][i];
  return out;
}

double determinant(const Mat3& a) {
  return a.m[0][0] * (a.m[1][1] * a.m[2][2] - a.m[1][2] * a.m[2][1]) -
         a.m[0][1] * (a.m[1][0] * a.m[2][2] - a.m[1][2] * a.m[2][0]) +
         a.m[0][2] * (a.m[1][0] * a.m[2][1] - a.m[1][1] * a.m[2][0]);
}

double orthogonality_defect(const Mat3& r) {
  const Mat3 g = transpose(r) * r;
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double target = i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::fabs(g.m[i][j] - target));
    }
  return worst;
}

Mat3 rotation_exp(const Vec3& v) {
  const double theta = norm(v);
  const double t2 = theta * theta;
  // R = I + A skew(v) + B skew(v)^2 with A = sin(theta)/theta and
  // B = (1 - cos(theta))/theta^2.
  double a, b;
  if (theta < 1e-4) {
    a = 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    b = 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
  } else {
    a = std::sin(theta) / theta;
    b = (1.0 - std::cos(theta)) / t2;
  }
  const double x = v.x, y = v.y, z = v.z;
  Mat3 r;
  r.m[0][0] = 1.0 - b * (y * y + z * z);
  r.m[0][1] = b * x * y - a * z;
  r.m[0][2] = b * x * z + a * y;
  r.m[1][0] = b * x * y + a * z;
  r.m[1][1] = 1.0 - b * (x * x + z * z);
  r.m[1][2] = b * y * z - a * x;
  r.m[2][0] = b * x * z - a * y;
  r.m[2][1] = b * y * z + a * x;
  r.m[2][2] = 1.0 - b * (x * x + y * y);
  return r;
}

namespace {

Mat3 inverse(const Mat3& a) {
  const double det = determinant(a);
  Mat3 out;
  out.m[0][0] = (a.m[1][1] * a.m[2][2] - a.m[1][2] * a.m[2][1]) / det;
  out.m[0][1] = (a.m[0][2] * a.m[2][1] - a.m[0][1] * a.m[2][2]) / det;
  out.m[0][2] = (a.m[0][1] * a.m[1][2] - a.m[0][2] * a.m[1][1]) / det;
  out.m[1][0] = (a.m[1][2] * a.m[2][0] - a.m[1][0] * a.m[2][2]) / det;
  out.m[1][1] = (a.m[0][0] * a.m[2][2] - a.m[0][2] * a.m[2][0]) / det;
  out.m[1][2] = (a.m[0][2] * a.m[1][0] - a.m[0][0] * a.m[1][2]) / det;
  out.m[2][0] = (a.m[1][0] * a.m[2][1] - a.m[1][1] * a.m[2][0]) / det;
  out.m[2][1] = (a.m[0][1] * a.m[2][0] - a.m[0][0] * a.m[2][1]) / det;
  out.m[2][2] = (a.m[0][0] * a.m[1][1] - a.m[0][1] * a.m[1][0]) / det;
  return out;
}

Mat3 mat_add(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.m[i][j] = a.m[i][j] + b.m[i][j];
  return out;
}

Mat3 mat_scale(double s, const Mat3& a) {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.m[i][j] = s * a.m[i][j];
  return out;
}

}  // namespace

Mat3 polar_project(const Mat3& a) {
  if (determinant(a) <= 0.0)
    throw std::invalid_argument("polar projection: determinant must be positive");
  // Newton iteration for the orthogonal polar factor; quadratic near the
  // group, so a handful of sweeps reaches roundoff.
  Mat3 x = a;
  for (int iter = 0; iter < 30 && orthogonality_defect(x) > 1e-15; ++iter)
    x = mat_scale(0.5, mat_add(x, inverse(transpose(x))));
  return x;
}

namespace {

enum class Model { vector, quaternion, matrix };

Model develop_model(const GroupKind& kind) {
  switch (kind.tag) {
    case GroupTag::abelian:
      return Model::vector;
    case GroupTag::so3:
      return Model::matrix;
    case GroupTag::s3:
      return Model::quaternion;
    case GroupTag::custom:
      return kind.structure_constant == 0.0 ? Model::vector
                                            : Model::quaternion;
  }
  throw std::invalid_argument("develop_curve: unknown group kind");
}

Quaternion pure(const Vec3& v) { return {0.0, v.x, v.y, v.z}; }

Quaternion quat_add(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

Quaternion quat_scale(double s, const Quaternion& q) {
  return {s * q.w, s * q.x, s * q.y, s * q.z};
}

Mat3 skew(const Vec3& v) {
  Mat3 k;
  k.m[0][0] = 0.0;
  k.m[0][1] = -v.z;
  k.m[0][2] = v.y;
  k.m[1][0] = v.z;
  k.m[1][1] = 0.0;
  k.m[1][2] = -v.x;
  k.m[2][0] = -v.y;
  k.m[2][1] = v.x;
  k.m[2][2] = 0.0;
  return k;
}

}  // namespace

GroupPoint identity_point(const GroupKind& kind) {
  switch (develop_model(kind)) {
    case Model::vector:
      return Vec3{};
    case Model::quaternion:
      return Quaternion{};
    case Model::matrix:
      return Mat3::identity();
  }
  return Vec3{};
}

std::vector<GroupPoint> develop_curve(const GroupKind& kind,
                                      const GroupPoint& start,
                                      std::span<const Vec3> tangents,
                                      const ArcGrid& grid,
                                      DevelopMethod method) {
  if (tangents.size() != grid.node_count() || tangents.size() < 2)
    throw std::invalid_argument(
        "develop_curve: tangent samples must cover the grid nodes");
  for (const Vec3& t : tangents) {
    if (!all_finite(t) || std::fabs(norm(t) - 1.0) > 1e-6)
      throw std::invalid_argument("develop_curve: tangent samples must be unit");
  }

  const Model model = develop_model(kind);
  const double c = kind.structure_constant;

  std::vector<GroupPoint> points;
  points.reserve(grid.node_count());

  switch (model) {
    case Model::vector: {
      if (!std::holds_alternative<Vec3>(start))
        throw std::invalid_argument(
            "develop_curve: start must be a displacement vector");
      Vec3 p = std::get<Vec3>(start);
      if (!all_finite(p))
        throw std::invalid_argument("develop_curve: start must be finite");
      points.push_back(p);
      for (std::size_t i = 0; i < grid.step_count(); ++i) {
        const double h = grid.node(i + 1) - grid.node(i);
        const Vec3 t_mid = 0.5 * (tangents[i] + tangents[i + 1]);
        if (method == DevelopMethod::exp_midpoint) {
          p += h * t_mid;
        } else {
          // Simpson rule; the ambient RK4 of p' = t(s) collapses to it.
          p += (h / 6.0) * (tangents[i] + 4.0 * t_mid + tangents[i + 1]);
        }
        points.push_back(p);
      }
      break;
    }
    case Model::quaternion: {
      if (!std::holds_alternative<Quaternion>(start))
        throw std::invalid_argument(
            "develop_curve: start must be a unit quaternion");
      Quaternion q = std::get<Quaternion>(start);
      if (std::fabs(norm(q) - 1.0) > 1e-6)
        throw std::invalid_argument(
            "develop_curve: start quaternion must be unit");
      const double rate = 0.5 * c;
      points.push_back(q);
      for (std::size_t i = 0; i < grid.step_count(); ++i) {
        const double h = grid.node(i + 1) - grid.node(i);
        const Vec3 t_mid = 0.5 * (tangents[i] + tangents[i + 1]);
        if (method == DevelopMethod::exp_midpoint) {
          q = q * quat_exp((h * rate) * t_mid);
        } else {
          const Quaternion u1 = pure(rate * tangents[i]);
          const Quaternion um = pure(rate * t_mid);
          const Quaternion u2 = pure(rate * tangents[i + 1]);
          const Quaternion k1 = q * u1;
          const Quaternion k2 = quat_add(q, quat_scale(0.5 * h, k1)) * um;
          const Quaternion k3 = quat_add(q, quat_scale(0.5 * h, k2)) * um;
          const Quaternion k4 = quat_add(q, quat_scale(h, k3)) * u2;
          q = quat_add(q, quat_scale(h / 6.0,
                                     quat_add(quat_add(k1, k4),
                                              quat_scale(2.0, quat_add(k2, k3)))));
        }
        q = normalized(q);
        points.push_back(q);
      }
      break;
    }
    case Model::matrix: {
      if (!std::holds_alternative<Mat3>(start))
        throw std::invalid_argument(
            "develop_curve: start must be a rotation matrix");
      Mat3 r = std::get<Mat3>(start);
      if (orthogonality_defect(r) > 1e-6 || determinant(r) <= 0.0)
        throw std::invalid_argument(
            "develop_curve: start matrix must be a rotation");
      points.push_back(r);
      for (std::size_t i = 0; i < grid.step_count(); ++i) {
        const double h = grid.node(i + 1) - grid.node(i);
        const Vec3 t_mid = 0.5 * (tangents[i] + tangents[i + 1]);
        if (method == DevelopMethod::exp_midpoint) {
          r = r * rotation_exp((h * c) * t_mid);
        } else {
          const Mat3 u1 = skew(c * tangents[i]);
          const Mat3 um = skew(c * t_mid);
          const Mat3 u2 = skew(c * tangents[i + 1]);
          const Mat3 k1 = r * u1;
          const Mat3 k2 = mat_add(r, mat_scale(0.5 * h, k1)) * um;
          const Mat3 k3 = mat_add(r, mat_scale(0.5 * h, k2)) * um;
          const Mat3 k4 = mat_add(r, mat_scale(h, k3)) * u2;
          r = mat_add(r, mat_scale(h / 6.0,
                                   mat_add(mat_add(k1, k4),
                                           mat_scale(2.0, mat_add(k2, k3)))));
          r = polar_project(r);
        }
        points.push_back(r);
      }
      break;
    }
  }
  return points;
}

}  // namespace liefrenet

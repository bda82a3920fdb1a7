#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "liefrenet/frame.hpp"
#include "liefrenet/grid.hpp"
#include "liefrenet/group.hpp"
#include "liefrenet/sampling.hpp"

using namespace liefrenet;

namespace {

const GroupKind kKinds[] = {GroupKind::abelian(), GroupKind::so3(),
                            GroupKind::s3(), GroupKind::custom(0.7)};

double quat_dist(const Quaternion& a, const Quaternion& b) {
  return std::max({std::fabs(a.w - b.w), std::fabs(a.x - b.x),
                   std::fabs(a.y - b.y), std::fabs(a.z - b.z)});
}

double mat_dist(const Mat3& a, const Mat3& b) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      worst = std::max(worst, std::fabs(a.m[i][j] - b.m[i][j]));
  return worst;
}

}  // namespace

TEST_SUITE_BEGIN("lie_group");

TEST_CASE("frame validation and reorthonormalization") {
  const Frame id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(is_valid_frame(id));
  CHECK(determinant(id) == 1.0);
  CHECK_NOTHROW(validate_frame(id));

  Frame left = id;
  left.b = -id.b;
  CHECK(!is_valid_frame(left));
  CHECK_THROWS_AS(validate_frame(left), std::invalid_argument);

  std::mt19937_64 rng(2001);
  for (int k = 0; k < 50; ++k) {
    Frame f = rotation_frame(rng);
    CHECK(is_valid_frame(f));
    // Perturb, reorthonormalize, and confirm the defects collapse.
    f.t += 1e-4 * unit_vec3(rng);
    f.n += 1e-4 * unit_vec3(rng);
    f.b += 1e-4 * unit_vec3(rng);
    const Frame g = gram_schmidt(f);
    CHECK(orthonormality_defect(g) <= 1e-15);
    CHECK(unit_defect(g) <= 1e-15);
    CHECK(std::fabs(determinant(g) - 1.0) <= 1e-14);
  }
}

TEST_CASE("bracket scales the cross product by the structure constant") {
  std::mt19937_64 rng(2002);
  for (const GroupKind& kind : kKinds) {
    for (int k = 0; k < 20; ++k) {
      const Vec3 w = unit_vec3(rng), z = unit_vec3(rng);
      const Vec3 bw = bracket(kind, w, z);
      CHECK(max_abs(bw - kind.structure_constant * cross(w, z)) <= 1e-15);
      CHECK(max_abs(bracket(kind, w, w)) == 0.0);
      CHECK(max_abs(bw + bracket(kind, z, w)) <= 1e-15);
    }
  }
}

TEST_CASE("group torsion is half the structure constant, frame independent") {
  CHECK(group_torsion(GroupKind::abelian()) == 0.0);
  CHECK(group_torsion(GroupKind::so3()) == 0.5);
  CHECK(group_torsion(GroupKind::s3()) == 1.0);
  CHECK(group_torsion(GroupKind::custom(0.7)) == doctest::Approx(0.35));

  std::mt19937_64 rng(2003);
  for (const GroupKind& kind : kKinds) {
    for (int k = 0; k < 25; ++k) {
      const Frame f = rotation_frame(rng);
      CHECK(std::fabs(group_torsion_from_frame(kind, f) -
                      group_torsion(kind)) <= 1e-12);
    }
  }
}

TEST_CASE("frame brackets close onto the frame with torsion coefficients") {
  std::mt19937_64 rng(2004);
  for (const GroupKind& kind : kKinds) {
    const double two_tg = 2.0 * group_torsion(kind);
    for (int k = 0; k < 25; ++k) {
      const Frame f = rotation_frame(rng);
      CHECK(max_abs(bracket(kind, f.t, f.n) - two_tg * f.b) <= 1e-12);
      CHECK(max_abs(bracket(kind, f.t, f.b) + two_tg * f.n) <= 1e-12);
      CHECK(max_abs(bracket(kind, f.n, f.b) - two_tg * f.t) <= 1e-12);
    }
  }
}

TEST_CASE("covariant derivative adds the half-bracket correction") {
  std::mt19937_64 rng(2005);
  for (const GroupKind& kind : kKinds) {
    const Vec3 t = unit_vec3(rng), w = unit_vec3(rng), wd = unit_vec3(rng);
    const Vec3 d = covariant_derivative(kind, t, w, wd);
    CHECK(max_abs(d - (wd + 0.5 * bracket(kind, t, w))) <= 1e-15);
  }
  // Abelian reduces to the plain derivative.
  const Vec3 wd{0.3, -0.2, 0.9};
  CHECK(max_abs(covariant_derivative(GroupKind::abelian(), {1, 0, 0},
                                     {0, 1, 0}, wd) -
                wd) == 0.0);
}

TEST_CASE("custom kinds validate the structure constant") {
  CHECK_THROWS_AS(GroupKind::custom(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(GroupKind::custom(std::nan("")), std::invalid_argument);
  CHECK(GroupKind::custom(0.0).structure_constant == 0.0);
  CHECK(GroupKind::custom(2.0).structure_constant == 2.0);
}

TEST_CASE("quaternion basis commutators reproduce the bracket") {
  // ij - ji = 2k and cyclic: the quaternion model realizes the bracket of
  // the 2-preset kind on the standard basis.
  const Quaternion qi{0, 1, 0, 0}, qj{0, 0, 1, 0}, qk{0, 0, 0, 1};
  const auto comm = [](const Quaternion& a, const Quaternion& b) {
    const Quaternion ab = a * b, ba = b * a;
    return Quaternion{ab.w - ba.w, ab.x - ba.x, ab.y - ba.y, ab.z - ba.z};
  };
  const GroupKind s3 = GroupKind::s3();
  const Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  const Vec3 b12 = bracket(s3, e1, e2);
  const Quaternion c12 = comm(qi, qj);
  CHECK(quat_dist(c12, {0, b12.x, b12.y, b12.z}) == 0.0);
  const Vec3 b23 = bracket(s3, e2, e3);
  CHECK(quat_dist(comm(qj, qk), {0, b23.x, b23.y, b23.z}) == 0.0);
  const Vec3 b31 = bracket(s3, e3, e1);
  CHECK(quat_dist(comm(qk, qi), {0, b31.x, b31.y, b31.z}) == 0.0);
}

TEST_CASE("group exponentials stay on the group and match small rotations") {
  std::mt19937_64 rng(2006);
  CHECK(quat_dist(quat_exp({0, 0, 0}), Quaternion{}) == 0.0);
  CHECK(mat_dist(rotation_exp({0, 0, 0}), Mat3::identity()) == 0.0);
  for (int k = 0; k < 30; ++k) {
    const double angle = k < 15 ? 1e-6 * (k + 1) : 0.3 * (k - 14);
    const Vec3 v = angle * unit_vec3(rng);
    CHECK(std::fabs(norm(quat_exp(v)) - 1.0) <= 1e-15);
    const Mat3 r = rotation_exp(v);
    CHECK(orthogonality_defect(r) <= 1e-14);
    CHECK(std::fabs(determinant(r) - 1.0) <= 1e-14);
    // Conjugation by a unit quaternion rotates by twice its angle, so the
    // half-angle exponential matches the matrix exponential of v.
    const Quaternion q = quat_exp(0.5 * v);
    const Vec3 p = unit_vec3(rng);
    const Quaternion qp = q * Quaternion{0, p.x, p.y, p.z} *
                          Quaternion{q.w, -q.x, -q.y, -q.z};
    Vec3 rp;
    rp.x = r.m[0][0] * p.x + r.m[0][1] * p.y + r.m[0][2] * p.z;
    rp.y = r.m[1][0] * p.x + r.m[1][1] * p.y + r.m[1][2] * p.z;
    rp.z = r.m[2][0] * p.x + r.m[2][1] * p.y + r.m[2][2] * p.z;
    CHECK(max_abs(Vec3{qp.x, qp.y, qp.z} - rp) <= 1e-13);
  }
}

TEST_CASE("polar projection recovers a nearby rotation") {
  std::mt19937_64 rng(2007);
  for (int k = 0; k < 20; ++k) {
    const Mat3 r = rotation_exp(3.0 * (gaussian(rng)) * unit_vec3(rng));
    Mat3 noisy = r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) noisy.m[i][j] += 1e-6 * gaussian(rng);
    const Mat3 p = polar_project(noisy);
    CHECK(orthogonality_defect(p) <= 1e-14);
    CHECK(std::fabs(determinant(p) - 1.0) <= 1e-13);
    CHECK(mat_dist(p, r) <= 1e-5);
  }
}

TEST_CASE("development along a constant tangent follows a geodesic") {
  const ArcGrid grid(0.0, 2.0, 0.01);
  const Vec3 t{0, 0, 1};
  std::vector<Vec3> tangents(grid.node_count(), t);

  SUBCASE("abelian: straight line") {
    const auto pts = develop_curve(GroupKind::abelian(), Vec3{1, 2, 3},
                                   tangents, grid);
    REQUIRE(pts.size() == grid.node_count());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Vec3 expect = Vec3{1, 2, 3} + grid.node(i) * t;
      CHECK(max_abs(std::get<Vec3>(pts[i]) - expect) <= 1e-12);
    }
  }

  SUBCASE("quaternion model: one-parameter subgroup") {
    for (const GroupKind& kind : {GroupKind::s3(), GroupKind::custom(0.7)}) {
      const auto pts =
          develop_curve(kind, identity_point(kind), tangents, grid);
      const double rate = 0.5 * kind.structure_constant;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const Quaternion expect = quat_exp(grid.node(i) * rate * t);
        CHECK(quat_dist(std::get<Quaternion>(pts[i]), expect) <= 1e-12);
      }
    }
  }

  SUBCASE("matrix model: one-parameter subgroup") {
    const GroupKind kind = GroupKind::so3();
    const auto pts = develop_curve(kind, identity_point(kind), tangents, grid);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Mat3 expect = rotation_exp(grid.node(i) * t);
      CHECK(mat_dist(std::get<Mat3>(pts[i]), expect) <= 1e-12);
    }
  }
}

TEST_CASE("both development methods agree to integrator accuracy") {
  // Rotating tangent field, still unit at every node.
  const ArcGrid grid(0.0, 3.0, 0.005);
  std::vector<Vec3> tangents;
  tangents.reserve(grid.node_count());
  for (std::size_t i = 0; i < grid.node_count(); ++i) {
    const double s = grid.node(i);
    tangents.push_back({std::cos(s), std::sin(s), 0.0});
  }
  for (const GroupKind& kind : kKinds) {
    const auto a = develop_curve(kind, identity_point(kind), tangents, grid,
                                 DevelopMethod::exp_midpoint);
    const auto b = develop_curve(kind, identity_point(kind), tangents, grid,
                                 DevelopMethod::rk4_project);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::holds_alternative<Vec3>(a[i]))
        CHECK(max_abs(std::get<Vec3>(a[i]) - std::get<Vec3>(b[i])) <= 1e-4);
      else if (std::holds_alternative<Quaternion>(a[i]))
        CHECK(quat_dist(std::get<Quaternion>(a[i]),
                        std::get<Quaternion>(b[i])) <= 1e-4);
      else
        CHECK(mat_dist(std::get<Mat3>(a[i]), std::get<Mat3>(b[i])) <= 1e-4);
    }
  }
}

TEST_CASE("development validates its inputs") {
  const ArcGrid grid(0.0, 1.0, 0.1);
  std::vector<Vec3> tangents(grid.node_count(), Vec3{0, 0, 1});

  std::vector<Vec3> short_tangents(grid.node_count() - 1, Vec3{0, 0, 1});
  CHECK_THROWS_AS(develop_curve(GroupKind::abelian(), Vec3{}, short_tangents,
                                grid),
                  std::invalid_argument);

  std::vector<Vec3> long_tangents = tangents;
  long_tangents[3] = 1.5 * long_tangents[3];
  CHECK_THROWS_AS(develop_curve(GroupKind::abelian(), Vec3{}, long_tangents,
                                grid),
                  std::invalid_argument);

  // Start point must live in the representation the kind develops on.
  CHECK_THROWS_AS(develop_curve(GroupKind::s3(), Vec3{}, tangents, grid),
                  std::invalid_argument);
  CHECK_THROWS_AS(develop_curve(GroupKind::so3(), Quaternion{}, tangents,
                                grid),
                  std::invalid_argument);
  CHECK_THROWS_AS(develop_curve(GroupKind::s3(), Quaternion{2, 0, 0, 0},
                                tangents, grid),
                  std::invalid_argument);
  CHECK_NOTHROW(develop_curve(GroupKind::custom(0.0), Vec3{}, tangents, grid));
  CHECK_NOTHROW(
      develop_curve(GroupKind::custom(0.5), Quaternion{}, tangents, grid));
}

TEST_SUITE_END();

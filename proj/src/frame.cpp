#include "liefrenet/frame.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace liefrenet {

double orthonormality_defect(const Frame& f) {
  return std::max({std::fabs(dot(f.t, f.n)), std::fabs(dot(f.t, f.b)),
                   std::fabs(dot(f.n, f.b))});
}

double unit_defect(const Frame& f) {
  return std::max({std::fabs(norm(f.t) - 1.0), std::fabs(norm(f.n) - 1.0),
                   std::fabs(norm(f.b) - 1.0)});
}

double determinant(const Frame& f) { return dot(f.t, cross(f.n, f.b)); }

bool is_valid_frame(const Frame& f, double tol) {
  if (!all_finite(f.t) || !all_finite(f.n) || !all_finite(f.b)) return false;
  return orthonormality_defect(f) <= tol && unit_defect(f) <= tol &&
         determinant(f) > 0.0;
}

void validate_frame(const Frame& f, double tol) {
  if (!all_finite(f.t) || !all_finite(f.n) || !all_finite(f.b))
    throw std::invalid_argument("invalid frame: non-finite component");
  if (unit_defect(f) > tol)
    throw std::invalid_argument("invalid frame: vectors not unit");
  if (orthonormality_defect(f) > tol)
    throw std::invalid_argument("invalid frame: vectors not orthogonal");
  if (determinant(f) <= 0.0)
    throw std::invalid_argument("invalid frame: not positively oriented");
}

Frame gram_schmidt(const Frame& f) {
  Frame g;
  g.t = normalized(f.t);
  g.n = normalized(f.n - dot(f.n, g.t) * g.t);
  g.b = cross(g.t, g.n);
  return g;
}

}  // namespace liefrenet

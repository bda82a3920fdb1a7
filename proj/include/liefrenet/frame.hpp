#pragma once

#include "liefrenet/vec3.hpp"

namespace liefrenet {

/// Orthonormal moving frame (tangent, principal normal, binormal) given
/// by coefficient vectors in a left-invariant orthonormal basis.
struct Frame {
  Vec3 t, n, b;
};

/// Largest pairwise |dot| among the three frame vectors.
double orthonormality_defect(const Frame& f);

/// Largest | |v| - 1 | among the three frame vectors.
double unit_defect(const Frame& f);

/// det of the matrix with rows (t, n, b); +1 for a valid frame.
double determinant(const Frame& f);

bool is_valid_frame(const Frame& f, double tol = 1e-9);

/// Throws std::invalid_argument("invalid frame: ...") unless f is
/// orthonormal, positively oriented, and finite within tol.
void validate_frame(const Frame& f, double tol = 1e-9);

/// Reorthonormalizes in the order t, n, then b = t x n.
Frame gram_schmidt(const Frame& f);

}  // namespace liefrenet

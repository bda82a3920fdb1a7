#pragma once

#include <random>

#include "liefrenet/frame.hpp"
#include "liefrenet/group.hpp"
#include "liefrenet/spinor.hpp"
#include "liefrenet/vec3.hpp"

namespace liefrenet {

/// Deterministic samplers over std::mt19937_64. Gaussians use Box-Muller
/// on explicit uniform draws so streams reproduce bit-for-bit across
/// platforms, unlike std::normal_distribution.
double gaussian(std::mt19937_64& rng);
Complex gaussian_complex(std::mt19937_64& rng);

Vec3 unit_vec3(std::mt19937_64& rng);
Spinor unit_spinor(std::mt19937_64& rng);
Quaternion unit_quaternion(std::mt19937_64& rng);

/// Uniformly random right-handed orthonormal frame (rows of a random
/// rotation).
Frame rotation_frame(std::mt19937_64& rng);

}  // namespace liefrenet

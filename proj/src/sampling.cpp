#include "liefrenet/sampling.hpp"

#include <cmath>
#include <numbers>

namespace liefrenet {

namespace {

// Uniform in (0, 1]: 53 high bits, shifted away from zero so log() below
// stays finite.
double uniform_open(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace

double gaussian(std::mt19937_64& rng) {
  const double u1 = uniform_open(rng);
  const double u2 = uniform_open(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Complex gaussian_complex(std::mt19937_64& rng) {
  const double re = gaussian(rng);
  const double im = gaussian(rng);
  return {re, im};
}

Vec3 unit_vec3(std::mt19937_64& rng) {
  for (;;) {
    const double x = gaussian(rng);
    const double y = gaussian(rng);
    const double z = gaussian(rng);
    const Vec3 v{x, y, z};
    if (norm(v) > 1e-6) return normalized(v);
  }
}

Spinor unit_spinor(std::mt19937_64& rng) {
  for (;;) {
    const Complex c1 = gaussian_complex(rng);
    const Complex c2 = gaussian_complex(rng);
    const Spinor phi{c1, c2};
    const double n = norm(phi);
    if (n > 1e-12) return (1.0 / std::sqrt(n)) * phi;
  }
}

Quaternion unit_quaternion(std::mt19937_64& rng) {
  for (;;) {
    const double w = gaussian(rng);
    const double x = gaussian(rng);
    const double y = gaussian(rng);
    const double z = gaussian(rng);
    const Quaternion q{w, x, y, z};
    if (norm(q) > 1e-6) return normalized(q);
  }
}

Frame rotation_frame(std::mt19937_64& rng) {
  const Quaternion q = unit_quaternion(rng);
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  Frame f;
  f.t = {1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z),
         2.0 * (x * z + w * y)};
  f.n = {2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z),
         2.0 * (y * z - w * x)};
  f.b = {2.0 * (x * z - w * y), 2.0 * (y * z + w * x),
         1.0 - 2.0 * (x * x + y * y)};
  return f;
}

}  // namespace liefrenet

#include "liefrenet/spinor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace liefrenet {

double norm(const Spinor& phi) { return std::norm(phi.c1) + std::norm(phi.c2); }

Spinor mate(const Spinor& phi) {
  return {-std::conj(phi.c2), std::conj(phi.c1)};
}

const std::array<ComplexMat2, 3>& sigma_matrices() {
  static const std::array<ComplexMat2, 3> sigmas = {{
      {{{Complex(1, 0), Complex(0, 0)}, {Complex(0, 0), Complex(-1, 0)}}},
      {{{Complex(0, 1), Complex(0, 0)}, {Complex(0, 0), Complex(0, 1)}}},
      {{{Complex(0, 0), Complex(-1, 0)}, {Complex(-1, 0), Complex(0, 0)}}},
  }};
  return sigmas;
}

std::array<Complex, 3> sigma_form(const Spinor& psi, const Spinor& phi) {
  const auto& sigmas = sigma_matrices();
  std::array<Complex, 3> out{};
  const Complex psi_v[2] = {psi.c1, psi.c2};
  const Complex phi_v[2] = {phi.c1, phi.c2};
  for (int k = 0; k < 3; ++k) {
    Complex sum(0, 0);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) sum += psi_v[i] * sigmas[k][i][j] * phi_v[j];
    out[k] = sum;
  }
  return out;
}

Triad spinor_to_triad(const Spinor& phi) {
  const double n = norm(phi);
  if (!(n > 0.0) || !std::isfinite(n))
    throw std::invalid_argument("degenerate spinor");
  const Complex p1 = phi.c1 * phi.c1;
  const Complex p2 = phi.c2 * phi.c2;
  const Complex pr = phi.c1 * phi.c2;
  const Complex cc = phi.c1 * std::conj(phi.c2);
  Triad t;
  t.a = {p1.real() - p2.real(), -(p1.imag() + p2.imag()), -2.0 * pr.real()};
  t.b = {p1.imag() - p2.imag(), p1.real() + p2.real(), -2.0 * pr.imag()};
  t.c = {2.0 * cc.real(), -2.0 * cc.imag(),
         std::norm(phi.c1) - std::norm(phi.c2)};
  return t;
}

bool is_unit_triad(const Triad& t, double tol) {
  if (!all_finite(t.a) || !all_finite(t.b) || !all_finite(t.c)) return false;
  const double ortho = std::max(
      {std::fabs(dot(t.a, t.b)), std::fabs(dot(t.a, t.c)),
       std::fabs(dot(t.b, t.c))});
  const double unit = std::max({std::fabs(norm(t.a) - 1.0),
                                std::fabs(norm(t.b) - 1.0),
                                std::fabs(norm(t.c) - 1.0)});
  const double det = dot(t.a, cross(t.b, t.c));
  return ortho <= tol && unit <= tol && det > 0.0;
}

namespace detail {

Spinor spinor_from_isotropic_pair(const Vec3& a, const Vec3& b) {
  // Components of w = a + ib determine the squares and the product:
  // phi1^2 = (w1 - i w2) / 2, phi2^2 = (-w1 - i w2) / 2, phi1 phi2 = -w3 / 2.
  const Complex w1(a.x, b.x), w2(a.y, b.y), w3(a.z, b.z);
  const Complex p1 = 0.5 * (w1 - Complex(0, 1) * w2);
  const Complex p2 = 0.5 * (-w1 - Complex(0, 1) * w2);
  const Complex pr = -0.5 * w3;
  // Take the principal root of the larger square; the product then fixes
  // the other component (and the relative sign) stably.
  Spinor phi;
  if (std::abs(p1) >= std::abs(p2)) {
    phi.c1 = std::sqrt(p1);
    phi.c2 = pr / phi.c1;
  } else {
    phi.c2 = std::sqrt(p2);
    phi.c1 = pr / phi.c2;
  }
  return phi;
}

}  // namespace detail

namespace {

// Flips phi if needed so the first component of (Re c1, Im c1, Re c2,
// Im c2) larger than a noise floor is positive.
Spinor canonical_sign(const Spinor& phi) {
  const double parts[4] = {phi.c1.real(), phi.c1.imag(), phi.c2.real(),
                           phi.c2.imag()};
  for (double p : parts) {
    if (std::fabs(p) > 1e-12) return p > 0.0 ? phi : -phi;
  }
  return phi;
}

}  // namespace

std::pair<Spinor, Spinor> triad_to_spinor(const Triad& t) {
  if (!is_unit_triad(t)) throw std::invalid_argument("invalid triad");
  const Spinor phi = canonical_sign(detail::spinor_from_isotropic_pair(t.a, t.b));
  return {phi, -phi};
}

}  // namespace liefrenet

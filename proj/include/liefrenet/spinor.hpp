#pragma once

#include <array>
#include <complex>
#include <utility>

#include "liefrenet/vec3.hpp"

namespace liefrenet {

using Complex = std::complex<double>;

/// Two-component complex spinor. A unit spinor encodes an ordered
/// orthonormal triad through the quadratic map spinor_to_triad(); the
/// spinors phi and -phi encode the same triad.
struct Spinor {
  Complex c1{}, c2{};
};

inline Spinor operator+(const Spinor& a, const Spinor& b) {
  return {a.c1 + b.c1, a.c2 + b.c2};
}

inline Spinor operator-(const Spinor& a, const Spinor& b) {
  return {a.c1 - b.c1, a.c2 - b.c2};
}

inline Spinor operator-(const Spinor& s) { return {-s.c1, -s.c2}; }

inline Spinor operator*(double s, const Spinor& p) {
  return {s * p.c1, s * p.c2};
}

inline Spinor operator*(const Complex& s, const Spinor& p) {
  return {s * p.c1, s * p.c2};
}

/// Sum of squared component magnitudes (the quantity conserved by the
/// transport equation). The triad of a spinor has common vector
/// magnitude equal to this value, so "unit spinor" means norm() == 1.
double norm(const Spinor& phi);

/// The antilinear mate phi -> (-conj(phi2), conj(phi1)).
/// mate(mate(phi)) == -phi, and the mate is Hermitian-orthogonal to phi.
Spinor mate(const Spinor& phi);

/// An ordered triple of 3-vectors. Valid triads are mutually orthogonal,
/// of common magnitude, and positively oriented (det(a, b, c) > 0).
struct Triad {
  Vec3 a, b, c;
};

using ComplexMat2 = std::array<std::array<Complex, 2>, 2>;

/// The three constant symmetric 2x2 matrices behind the triad map:
/// diag(1, -1), i*I, and the matrix with -1 off the diagonal.
const std::array<ComplexMat2, 3>& sigma_matrices();

/// The symmetric bilinear form (psi^t sigma_k phi) for k = 1, 2, 3,
/// evaluated by explicit matrix contraction. Symmetric in (psi, phi).
std::array<Complex, 3> sigma_form(const Spinor& psi, const Spinor& phi);

/// Maps a spinor to its triad (a, b, c): a + ib is the isotropic vector
/// (phi1^2 - phi2^2, i(phi1^2 + phi2^2), -2 phi1 phi2) and c completes
/// the positively oriented triple. All three vectors share magnitude
/// norm(phi). Throws std::invalid_argument("degenerate spinor") when
/// phi == 0.
Triad spinor_to_triad(const Spinor& phi);

/// Inverse of spinor_to_triad on unit orthonormal positively oriented
/// triads (tolerance 1e-9). Returns (phi, -phi); the first element
/// carries the canonical sign (first nonzero of Re c1, Im c1, Re c2,
/// Im c2 made positive). Throws std::invalid_argument("invalid triad")
/// for non-orthonormal, non-unit, or negatively oriented input.
std::pair<Spinor, Spinor> triad_to_spinor(const Triad& t);

/// True when t is orthonormal with unit magnitudes and det(a,b,c) > 0,
/// all within tol.
bool is_unit_triad(const Triad& t, double tol = 1e-9);

namespace detail {

/// Recovers a spinor from the first two triad vectors without any
/// validation of the input. Used by triad_to_spinor after validation and
/// by the frame dictionary, where the third vector is implied.
Spinor spinor_from_isotropic_pair(const Vec3& a, const Vec3& b);

}  // namespace detail

}  // namespace liefrenet

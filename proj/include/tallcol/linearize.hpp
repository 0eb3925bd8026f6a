#pragma once

#include <array>

// Linearization of the autonomous system about its critical point
// (tau, beta, alpha) = (1, 1, 1). Perturbations of the form
// (dtau, dbeta, dalpha) e^{qt} are nontrivial exactly when the 3x3
// matrix M(q) below is singular; det M(q) = -3 q (q-1) (q^2 - q - 36),
// so the growth rates are q = 0, 1, (1 +- sqrt(145))/2. The single
// negative root spans the tangent of the one-dimensional stable manifold.

namespace tallcol {

using Mat3 = std::array<std::array<double, 3>, 3>;
using Vec3 = std::array<double, 3>;

struct Eigenmode {
    double q;    // growth rate in log-time t
    Vec3 v;      // (dtau0, dbeta0, dalpha0); dalpha0 = 1 when nonzero, else dtau0 = 1
};

// Matrix of the linearized system acting on (dtau0, dbeta0, dalpha0).
Mat3 stability_matrix(double q);

double stability_determinant(double q);

// The four roots of det M(q) = 0, ascending:
// {(1-sqrt(145))/2, 0, 1, (1+sqrt(145))/2}.
std::array<double, 4> characteristic_roots();

// Null vector of M(q) for a characteristic root q, normalized per Eigenmode.
// Throws std::invalid_argument if q is not a root (M(q) has full rank).
Eigenmode eigenmode(double q);

// The unique mode with q < 0, i.e. q = (1 - sqrt(145))/2.
Eigenmode stable_mode();

// Similarity exponents of (theta, b, a): the q = 1 eigenvector is collinear
// with this vector, reflecting that rescaling s maps the power-law solution
// to itself.
constexpr Vec3 kExponentVector{-2.0, 4.0, 3.0};

}  // namespace tallcol

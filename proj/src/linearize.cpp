#include "tallcol/linearize.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tallcol {

Mat3 stability_matrix(double q) {
    return Mat3{{{q * (q + 5.0), 0.0, q + 3.0},
                 {q * (q - 1.0), 6.0, 4.0 * (q - 3.0)},
                 {0.0, q - 4.0, 4.0}}};
}

double stability_determinant(double q) {
    const Mat3 m = stability_matrix(q);
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<double, 4> characteristic_roots() {
    // det M(q) = -3 q (q-1) (q^2 - q - 36), derived by cofactor expansion.
    const double disc = std::sqrt(145.0);
    std::array<double, 4> roots{0.5 * (1.0 - disc), 0.0, 1.0, 0.5 * (1.0 + disc)};
    // Guard against a slip in the hand factorization: the 3x3 determinant
    // must vanish at every claimed root.
    for (double q : roots) {
        if (std::abs(stability_determinant(q)) > 1e-9 * (1.0 + std::abs(q * q * q * q)))
            throw std::logic_error("characteristic_roots: factorization check failed");
    }
    return roots;
}

Eigenmode eigenmode(double q) {
    const double det = stability_determinant(q);
    if (std::abs(det) > 1e-8 * (1.0 + std::pow(std::abs(q), 4)))
        throw std::invalid_argument("eigenmode: q = " + std::to_string(q) +
                                    " is not a characteristic root");
    Eigenmode mode{};
    mode.q = q;
    const double r1 = q * (q + 5.0);
    if (std::abs(r1) > 1e-12) {
        // Rows 1 and 3 with dalpha0 = 1:
        //   q(q+5) dtau0 + (q+3) = 0,  (q-4) dbeta0 + 4 = 0.
        mode.v = Vec3{-(q + 3.0) / r1, 4.0 / (4.0 - q), 1.0};
    } else {
        // q = 0: rows 1 and 3 force dalpha0 = dbeta0 = 0; the free direction
        // is the tau translation (theta is defined up to scale).
        mode.v = Vec3{1.0, 0.0, 0.0};
    }
    return mode;
}

Eigenmode stable_mode() {
    return eigenmode(0.5 * (1.0 - std::sqrt(145.0)));
}

}  // namespace tallcol

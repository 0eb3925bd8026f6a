#pragma once

#include <array>
#include <cmath>

#include "tallcol/dynamics.hpp"

// Internal representation used by the integrator and by trajectory
// interpolation: x = (tau, u, v, beta) with u = alpha^2 w, v = alpha w^2.
// u and v evolve by the implicit equations directly,
//   u_t = 3u - 6 beta tau,   v_t = -3v + 12 tau^2,
// and the map to (w, alpha) is the bijection w = cbrt(v^2/u),
// alpha = cbrt(u^2/v) on the physical region u, v > 0.

namespace tallcol {

using FluxVec = std::array<double, 4>;

inline FluxVec to_flux(const AsState& s) {
    return {s.tau, s.alpha * s.alpha * s.w, s.alpha * s.w * s.w, s.beta};
}

inline AsState from_flux(const FluxVec& x) {
    AsState s{};
    s.tau = x[0];
    s.w = std::cbrt(x[2] * x[2] / x[1]);
    s.alpha = std::cbrt(x[1] * x[1] / x[2]);
    s.beta = x[3];
    return s;
}

inline void flux_rhs(const FluxVec& x, FluxVec& dxdt) {
    const double tau = x[0], u = x[1], v = x[2], beta = x[3];
    const double w = std::cbrt(v * v / u);
    const double alpha = std::cbrt(u * u / v);
    dxdt[0] = w - 2.0 * tau;
    dxdt[1] = 3.0 * u - 6.0 * beta * tau;
    dxdt[2] = -3.0 * v + 12.0 * tau * tau;
    dxdt[3] = 4.0 * beta - 4.0 * alpha;
}

// Cubic Hermite interpolation of one flux component set over [t1, t0]
// (works for either time orientation).
inline FluxVec hermite_flux(double t, double t0, const FluxVec& x0, const FluxVec& f0,
                            double t1, const FluxVec& x1, const FluxVec& f1) {
    const double h = t1 - t0;
    const double z = (t - t0) / h;
    const double z2 = z * z, z3 = z2 * z;
    const double h00 = 2 * z3 - 3 * z2 + 1, h10 = z3 - 2 * z2 + z;
    const double h01 = -2 * z3 + 3 * z2, h11 = z3 - z2;
    FluxVec out{};
    for (int i = 0; i < 4; ++i)
        out[i] = h00 * x0[i] + h * h10 * f0[i] + h01 * x1[i] + h * h11 * f1[i];
    return out;
}

}  // namespace tallcol

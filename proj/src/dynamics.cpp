#include "tallcol/dynamics.hpp"

#include <cmath>

namespace tallcol {

AsDerivative rhs(const AsState& s, double singular_floor) {
    const double aw = s.alpha * s.w;
    if (std::abs(aw) < singular_floor)
        throw SingularEliminationError(
            "rhs: elimination determinant 3 (alpha w)^2 underflows the floor");
    AsDerivative d{};
    d.tau_t = s.w - 2.0 * s.tau;
    d.beta_t = 4.0 * s.beta - 4.0 * s.alpha;
    d.alpha_t = 3.0 * s.alpha - 4.0 * s.beta * s.tau / aw -
                4.0 * s.tau * s.tau / (s.w * s.w);
    d.w_t = -3.0 * s.w + 8.0 * s.tau * s.tau / aw +
            2.0 * s.beta * s.tau / (s.alpha * s.alpha);
    return d;
}

double event_residual(const AsState& s, BoundaryKind bc) {
    if (bc == BoundaryKind::Clamped) return s.tau;
    return s.alpha * s.alpha * s.w;
}

AsState initial_state(double delta, const Eigenmode& mode) {
    if (delta == 0.0)
        throw std::invalid_argument(
            "initial_state: delta = 0 never leaves the critical point");
    const double dtau = mode.v[0];
    AsState s = kCriticalPoint;
    s.tau += delta * dtau;
    s.w += delta * (mode.q + 2.0) * dtau;
    s.beta += delta * mode.v[1];
    s.alpha += delta * mode.v[2];
    return s;
}

}  // namespace tallcol

#pragma once

#include <stdexcept>

#include "tallcol/linearize.hpp"

// The peeled autonomous system in log-arclength t = -ln s. State is
// (tau, w, beta, alpha) where w = tau_t + 2 tau. The implicit equations
//
//   (3 - D)(alpha^2 w) = 6 beta tau
//   (3 + D)(alpha w^2) = 12 tau^2
//   (4 - D) beta       = 4 alpha
//
// are eliminated once, by hand, through u = alpha^2 w and v = alpha w^2;
// solving the 2x2 system for alpha_t and w_t (determinant 3 alpha^2 w^2)
// gives the explicit right-hand side in rhs() below. The critical point
// (1, 2, 1, 1) is the pure similarity solution.

namespace tallcol {

enum class BoundaryKind { Clamped, Hinged };

struct AsState {
    double tau;
    double w;
    double beta;
    double alpha;
};

struct AsDerivative {
    double tau_t;
    double w_t;
    double beta_t;
    double alpha_t;
};

class SingularEliminationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Critical point of the autonomous system.
inline constexpr AsState kCriticalPoint{1.0, 2.0, 1.0, 1.0};

// Explicit right-hand side:
//   tau_t   = w - 2 tau
//   w_t     = -3 w + 8 tau^2/(alpha w) + 2 beta tau / alpha^2
//   beta_t  = 4 beta - 4 alpha
//   alpha_t = 3 alpha - 4 beta tau/(alpha w) - 4 tau^2 / w^2
// Throws SingularEliminationError when |alpha * w| < singular_floor.
AsDerivative rhs(const AsState& state, double singular_floor = 1e-12);

// Scalar whose zero crossing marks the base boundary surface:
// tau for a clamped base, alpha^2 w (the peeled torque) for a hinged base.
double event_residual(const AsState& state, BoundaryKind bc);

// Start point for backward shooting: critical point plus delta times the
// given mode, with the w component perturbed by (q+2) dtau0 since
// dw = dtau_t + 2 dtau. Rejects delta = 0.
AsState initial_state(double delta, const Eigenmode& mode);

}  // namespace tallcol

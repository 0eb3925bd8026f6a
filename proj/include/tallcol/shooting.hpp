#pragma once

#include <stdexcept>
#include <vector>

#include "tallcol/dynamics.hpp"

// Backward integration along the stable manifold. The run starts at
// initial_state(delta, stable_mode()) with t relabeled to 0 (the system is
// autonomous) and proceeds with decreasing t until the base boundary
// surface is crossed; lambda = 96 / beta at the crossing. Errors decay or
// stay constant in this direction, so a single pass suffices.
//
// Internally the integrator advances (tau, u, v, beta) with u = alpha^2 w
// and v = alpha w^2: these are the combinations the implicit equations
// evolve directly, and they stay regular at the hinged base, where
// alpha -> 0 and w diverges while u crosses zero transversally. The
// published state type AsState is recovered exactly from the bijection
// w = cbrt(v^2/u), alpha = cbrt(u^2/v).

namespace tallcol {

class NoCrossingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class StepFailureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ShootingOptions {
    double delta = -1e-4;      // signed offset along the stable mode
    double rel_tol = 1e-8;
    double abs_tol = 1e-10;
    double max_span = 10.0;    // maximum backward |t|
    double event_tol = 1e-12;  // root tolerance on the crossing time
    double max_step = 0.1;

    void validate() const;
};

struct TrajectorySample {
    double t;
    AsState state;
};

struct Solution {
    BoundaryKind bc;
    double lambda;                  // 96 / beta at the crossing
    double t_stop;                  // signed backward span, < 0
    std::vector<TrajectorySample> trajectory;  // t strictly decreasing from 0 to t_stop
};

// Shoots backward from near the critical point until event_residual(.., bc)
// vanishes. Throws NoCrossingError when the trajectory leaves the physical
// region or exhausts max_span without a valid crossing (wrong sign of
// delta), and StepFailureError when the step controller cannot proceed.
Solution integrate_backward(BoundaryKind bc, const ShootingOptions& opts = {});

struct SweepEntry {
    double delta;
    bool ok;
    double lambda;       // valid when ok
    double t_stop;       // valid when ok
    std::string error;   // set when !ok
};

// Runs integrate_backward for each offset. All offsets must share one sign
// and be nonzero (the sign selects the manifold branch); per-run failures
// are captured in the entry rather than thrown.
std::vector<SweepEntry> lambda_sensitivity(BoundaryKind bc,
                                           const std::vector<double>& deltas,
                                           const ShootingOptions& base = {});

// Aitken extrapolation of lambda(delta) -> delta = 0 over successful sweep
// entries ordered by decreasing |delta|. Falls back to the last value when
// the differences are too small or irregular to extrapolate.
double extrapolate_lambda(const std::vector<SweepEntry>& entries);

}  // namespace tallcol

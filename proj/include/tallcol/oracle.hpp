#pragma once

#include <vector>

#include "tallcol/reconstruct.hpp"

// Independent verification path: the buckling eigenvalue of a given shape is
// recomputed by direct discretization of the Sturm-Liouville problem
//   -(a^2 theta')' = lambda b theta,   b(s) = integral of a from 0 to s,
// with theta(1) = 0 (clamped base) or zero flux at s = 1 (hinged base) and
// the natural flux condition a^2 theta' = 0 at the tip node. Nothing here
// depends on the shooting path: the pencil is assembled from shape data
// alone and solved by Sturm-count bisection plus inverse iteration.

namespace tallcol {

std::vector<double> geometric_grid(int n, double s_floor = 1e-3);

struct DiscreteShape {
    std::vector<double> grid;      // nodes in (0, 1], strictly increasing
    std::vector<double> a_values;  // area at nodes
    std::vector<double> b_values;  // cumulative volume below s at nodes

    void validate() const;

    static DiscreteShape uniform(int n, double s_floor = 1e-3);
    // Interpolates a and b from profile samples (linear in log-log, exact on
    // power laws); below the first profile sample the similarity scaling
    // a ~ s^3, b ~ s^4 extends the data.
    static DiscreteShape from_profile(const ColumnProfile& p, int n,
                                      double s_floor = 1e-3);
};

struct SturmResult {
    double lambda;
    std::vector<double> theta;  // eigenfunction at all nodes (0 at a clamped base)
};

// Smallest eigenvalue of the discrete pencil; for a hinged base the smallest
// nonzero one, since the constant-angle mode sits at zero. Requires
// grid size >= 100.
double sturm_liouville_lambda(const DiscreteShape& shape, BoundaryKind bc);
SturmResult sturm_liouville_solve(const DiscreteShape& shape, BoundaryKind bc);

// Number of pencil eigenvalues strictly below sigma (Sturm count).
int eigenvalues_below(const DiscreteShape& shape, BoundaryKind bc, double sigma);

// Central difference (lambda[a + eps d] - lambda[a - eps d]) / (2 eps) for a
// volume-preserving direction d given at the grid nodes; b is recomputed for
// the perturbed shapes. At a maximizer this vanishes to O(eps^2).
double stationarity_check(const DiscreteShape& shape, BoundaryKind bc,
                          const std::vector<double>& direction, double eps);

// Constancy defect of F(s) = 2 a theta_s^2 - lambda int_s^1 theta^2 over
// s in [0.2, 1], relative to C = lambda int_0^1 theta^2 b: at the optimal
// design F(s) = C identically, the Lagrange multiplier being lambda itself.
// theta_s comes from finite differences of the profile samples, so at a
// hinged base (a -> 0, theta_s -> infinity) the evaluation near s = 1 is
// ill-conditioned and the returned defect is dominated by it.
double optimality_residual(const ColumnProfile& p);

// Relative defect of the once-integrated balance
//   a^2 theta_s = -lambda int_0^s theta b,
// evaluated with half-node fluxes over s in [0.05, 1] and normalized by the
// largest flux magnitude. Zero for theta identically zero.
double torque_residual(const ColumnProfile& p);

}  // namespace tallcol

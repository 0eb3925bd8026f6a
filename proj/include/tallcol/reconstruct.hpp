#pragma once

#include <vector>

#include "tallcol/shooting.hpp"

// Maps a peeled Solution back to the physical profiles
//   a(s) = (lambda/24) s^3 alpha,  b(s) = (lambda/96) s^4 beta,
//   theta(s) = s^-2 tau,
// with log-time rebased so the stopping point is the base s = 1 and the
// start sits at s_min = exp(t_stop). Below s_min the trajectory has not
// been computed and the pure similarity solution (alpha = beta = tau = 1)
// extends the profile to s = 0.

namespace tallcol {

struct ProfileSample {
    double s;
    double a;
    double b;
    double theta;
    bool extended;
};

struct ColumnProfile {
    BoundaryKind bc;
    double lambda;
    std::vector<ProfileSample> samples;  // s strictly increasing, last s = 1
    double s_min;                        // smallest s covered by the trajectory
    bool extended;                       // true when samples below s_min exist
};

struct MaterialSpec {
    double rho;  // density
    double g;    // gravitational acceleration
    double E;    // Young's modulus
    double c;    // cross-section shape constant
    double V;    // total volume

    void validate() const;
};

struct DimensionalDesign {
    double length;     // L = (lambda c E V / (rho g))^(1/3)
    double area_unit;  // V / L; physical area at arclength L*s is area_unit * a(s)
};

// Samples the physical profile at n_points geometrically spaced s values in
// [s_floor, 1]. Requires n_points >= 2 and 0 < s_floor < 1.
ColumnProfile profile(const Solution& solution, int n_points = 400,
                      double s_floor = 1e-3);

// Integral of a over (0, 1]: trapezoid over the samples plus the closed-form
// cubic tail below the first sample. Equals 1 for an optimal profile.
double volume(const ColumnProfile& p);

DimensionalDesign dimensional_design(const ColumnProfile& p, const MaterialSpec& mat);

}  // namespace tallcol

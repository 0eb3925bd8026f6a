#pragma once

#include <string>
#include <vector>

#include "tallcol/shooting.hpp"

// Command front end. Exit codes: 0 success, 1 numerical or check failure,
// 2 I/O or usage error.

namespace tallcol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    BoundaryKind bc = BoundaryKind::Clamped;
    bool bc_given = false;
    ShootingOptions opts{};
    int n_points = 400;
    double s_floor = 1e-3;
    std::string out;                // output base path; default column_<bc>
    std::string format = "csv";    // profile file format: csv | json
    std::vector<double> deltas;     // sweep offsets
    std::string in;                 // verify: base path of an existing run
};

// solve: shoot, reconstruct, write <out>.profile.<fmt>, <out>.trajectory.csv
// and <out>.summary.json; print lambda and delta t.
int run_solve(const RunConfig& cfg);

// verify: check a run (from --in files or a fresh in-process solve) against
// the independent discretized eigenvalue problem and the optimality
// identities; print a pass/fail report.
int run_verify(const RunConfig& cfg);

// sweep: lambda(delta) table plus extrapolated estimate.
int run_sweep(const RunConfig& cfg);

}  // namespace tallcol::cli

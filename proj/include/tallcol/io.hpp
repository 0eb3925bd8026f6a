#pragma once

#include <string>

#include "tallcol/reconstruct.hpp"

// Stable on-disk formats (UTF-8, LF, '.' decimal point, shortest
// round-trip doubles):
//   <base>.profile.csv     s,a,b,theta,extended
//   <base>.trajectory.csv  t,tau,w,beta,alpha
//   <base>.summary.json    run provenance: bc, lambda, delta, t_stop,
//                          volume, tolerances, sampling, format
// Identical inputs produce byte-identical files.

namespace tallcol::io {

std::string bc_name(BoundaryKind bc);
BoundaryKind bc_from_name(const std::string& name);

std::string format_double(double v);  // shortest round-trip decimal

struct Summary {
    std::string bc;
    double lambda = 0.0;
    double delta = 0.0;
    double t_stop = 0.0;
    double volume = 0.0;
    double rel_tol = 0.0;
    double abs_tol = 0.0;
    int n_points = 0;
    double s_floor = 0.0;
    std::string format;
};

void write_profile_csv(const ColumnProfile& p, const std::string& path);
void write_profile_json(const ColumnProfile& p, const std::string& path);
void write_trajectory_csv(const Solution& sol, const std::string& path);
void write_summary_json(const Summary& s, const std::string& path);

Summary read_summary_json(const std::string& path);
// Rebuilds a profile from a file written by write_profile_csv/json; bc and
// lambda come from the accompanying summary.
ColumnProfile read_profile(const std::string& path, const std::string& format,
                           BoundaryKind bc, double lambda);

}  // namespace tallcol::io

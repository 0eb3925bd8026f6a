// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Covers the published clamped/hinged eigenvalues and spans, the wrong
// branch, the linearization fixtures, the independent eigenvalue oracle with
// its mesh-convergence study, the uniform-column constant, the optimality
// and torque identities, stationarity, and the exactness of the similarity
// solution.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "tallcol/oracle.hpp"
#include "tallcol/similarity.hpp"

using namespace tallcol;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void line(int id, bool ok, const char* what, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", id, what,
                detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

ShootingOptions tight(double delta) {
    ShootingOptions o;
    o.delta = delta;
    o.rel_tol = 1e-12;
    o.abs_tol = 1e-14;
    return o;
}

double trapz(const std::vector<double>& x, const std::vector<double>& f) {
    double t = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        t += 0.5 * (f[i] + f[i - 1]) * (x[i] - x[i - 1]);
    return t;
}

}  // namespace

int main() {
    // --- criteria 1-2: clamped eigenvalue, extrapolation, span, runtime
    const auto t0 = Clock::now();
    const Solution clamped = integrate_backward(BoundaryKind::Clamped);
    const double clamped_seconds = seconds_since(t0);
    {
        const bool ok_lam = std::abs(clamped.lambda - 134.1944) <= 0.2;
        const auto sweep = lambda_sensitivity(BoundaryKind::Clamped,
                                              {-1e-3, -1e-4, -1e-5}, tight(-1e-4));
        const double extrapolated = extrapolate_lambda(sweep);
        const bool ok_ext = std::abs(extrapolated - 134.1944) <= 0.02;
        const bool ok_time = clamped_seconds < 1.0;
        line(1, ok_lam && ok_ext && ok_time, "clamped eigenvalue",
             fmt("lambda %.6f, extrapolated %.6f, solve %.3fs", clamped.lambda,
                 extrapolated, clamped_seconds));
        line(2, std::abs(clamped.t_stop - (-1.7114)) <= 0.01, "clamped stopping span",
             fmt("delta_t %.6f vs -1.7114", clamped.t_stop));
    }

    // --- criterion 3: hinged eigenvalue and span
    {
        const auto th = Clock::now();
        const Solution hinged = integrate_backward(BoundaryKind::Hinged);
        const double secs = seconds_since(th);
        const bool ok = std::abs(hinged.lambda - 222.7366) <= 0.4 &&
                        std::abs(hinged.t_stop - (-1.9470)) <= 0.01 && secs < 1.0;
        line(3, ok, "hinged eigenvalue and span",
             fmt("lambda %.6f, delta_t %.6f, solve %.3fs", hinged.lambda, hinged.t_stop,
                 secs));
    }

    // --- criterion 4: wrong branch is detected, not silently fixed
    {
        bool no_crossing = false;
        try {
            ShootingOptions o;
            o.delta = 1e-4;
            integrate_backward(BoundaryKind::Clamped, o);
        } catch (const NoCrossingError&) {
            no_crossing = true;
        }
        line(4, no_crossing, "positive delta yields NoCrossing",
             no_crossing ? "NoCrossingError raised" : "no error raised");
    }

    // --- criterion 5: linearization fixtures and Jacobian cross-check
    {
        const auto roots = characteristic_roots();
        bool ok = std::abs(roots[0] - (-5.5208)) < 5e-5 && roots[1] == 0.0 &&
                  roots[2] == 1.0 && std::abs(roots[3] - 6.5208) < 5e-5;
        const Eigenmode s3 = stable_mode();
        ok = ok && std::abs(s3.v[0] - 0.876733) < 1e-4 &&
             std::abs(s3.v[1] - 0.420133) < 1e-4 && s3.v[2] == 1.0;

        const double h = 1e-6;
        Eigen::Matrix4d J;
        for (int j = 0; j < 4; ++j) {
            AsState sp = kCriticalPoint, sm = kCriticalPoint;
            double* fp[4] = {&sp.tau, &sp.w, &sp.beta, &sp.alpha};
            double* fm[4] = {&sm.tau, &sm.w, &sm.beta, &sm.alpha};
            *fp[j] += h;
            *fm[j] -= h;
            const AsDerivative dp = rhs(sp), dm = rhs(sm);
            J(0, j) = (dp.tau_t - dm.tau_t) / (2 * h);
            J(1, j) = (dp.w_t - dm.w_t) / (2 * h);
            J(2, j) = (dp.beta_t - dm.beta_t) / (2 * h);
            J(3, j) = (dp.alpha_t - dm.alpha_t) / (2 * h);
        }
        Eigen::EigenSolver<Eigen::Matrix4d> es(J);
        std::array<double, 4> eig{};
        double worst = 0.0;
        for (int i = 0; i < 4; ++i) eig[i] = es.eigenvalues()(i).real();
        std::sort(eig.begin(), eig.end());
        for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(eig[i] - roots[i]));
        ok = ok && worst < 1e-5;
        line(5, ok, "linearization fixtures",
             fmt("roots ok, S3 ok, jacobian eigenvalue mismatch %.2e", worst));
    }

    // --- criterion 6: q = 1 mode is the exponent vector
    {
        const Eigenmode m = eigenmode(1.0);
        double worst = 0.0;
        for (int i = 0; i < 3; ++i)
            worst = std::max(worst, std::abs(3.0 * m.v[i] - kExponentVector[i]));
        line(6, worst < 1e-10, "q=1 mode collinear with exponents (-2,4,3)",
             fmt("max deviation %.2e", worst));
    }

    // --- criteria 7-8: oracle agreement, mesh convergence, uniform fixture
    {
        const auto t7 = Clock::now();
        const Solution ref = integrate_backward(BoundaryKind::Clamped, tight(-1e-8));
        const ColumnProfile dense = profile(ref, 16001, 1e-3);
        std::vector<double> lams;
        for (int n : {250, 500, 1000, 2000})
            lams.push_back(sturm_liouville_lambda(DiscreteShape::from_profile(dense, n),
                                                  BoundaryKind::Clamped));
        const double agreement = std::abs(lams.back() - ref.lambda) / ref.lambda;
        const double o1 = std::log2(std::abs((lams[1] - lams[0]) / (lams[2] - lams[1])));
        const double o2 = std::log2(std::abs((lams[2] - lams[1]) / (lams[3] - lams[2])));
        const double secs = seconds_since(t7);
        line(7, agreement < 0.01 && o1 >= 1.5 && o2 >= 1.5 && secs < 10.0,
             "oracle agreement and mesh convergence",
             fmt("agreement %.2e, orders %.2f / %.2f", agreement, o1, o2) +
                 fmt(", %.2fs", secs));

        const double lam_uniform =
            sturm_liouville_lambda(DiscreteShape::uniform(10000), BoundaryKind::Clamped);
        line(8, std::abs(lam_uniform - 7.8373) / 7.8373 < 1e-3, "uniform-column fixture",
             fmt("lambda %.5f vs 7.8373", lam_uniform));

        // --- criterion 9: optimality identity at the optimum vs a bumped shape
        const ColumnProfile mid = profile(ref, 4001, 1e-3);
        const double res_opt = optimality_residual(mid);
        ColumnProfile bumped = mid;
        for (auto& smp : bumped.samples)
            if (smp.s >= 0.4 && smp.s <= 0.6) smp.a *= 1.1;
        double acc = bumped.samples.front().b;
        for (std::size_t i = 1; i < bumped.samples.size(); ++i) {
            acc += 0.5 * (bumped.samples[i].a + bumped.samples[i - 1].a) *
                   (bumped.samples[i].s - bumped.samples[i - 1].s);
            bumped.samples[i].b = acc;
        }
        const double res_bumped = optimality_residual(bumped);
        line(9, res_opt < 1e-2 && res_bumped > res_opt, "optimality identity",
             fmt("residual %.2e at optimum, %.2e bumped", res_opt, res_bumped));

        // --- criterion 10: stationarity at the optimum vs the uniform column
        const DiscreteShape opt = DiscreteShape::from_profile(dense, 2000, 1e-4);
        std::vector<double> sa(opt.grid.size()), av(opt.grid.size());
        for (std::size_t i = 0; i < opt.grid.size(); ++i) {
            sa[i] = opt.a_values[i] * opt.grid[i];
            av[i] = opt.a_values[i];
        }
        const double centroid = trapz(opt.grid, sa) / trapz(opt.grid, av);
        std::vector<double> dir(opt.grid.size());
        for (std::size_t i = 0; i < opt.grid.size(); ++i)
            dir[i] = opt.a_values[i] * (opt.grid[i] - centroid);
        const double d_opt =
            std::abs(stationarity_check(opt, BoundaryKind::Clamped, dir, 1e-3)) /
            ref.lambda;

        const DiscreteShape uni = DiscreteShape::uniform(2000, 1e-4);
        std::vector<double> s3v(uni.grid.size()), ones(uni.grid.size(), 1.0);
        for (std::size_t i = 0; i < uni.grid.size(); ++i)
            s3v[i] = std::pow(uni.grid[i], 3);
        const double mean = trapz(uni.grid, s3v) / trapz(uni.grid, ones);
        std::vector<double> dir_u(uni.grid.size());
        for (std::size_t i = 0; i < uni.grid.size(); ++i) dir_u[i] = s3v[i] - mean;
        const double d_uni =
            std::abs(stationarity_check(uni, BoundaryKind::Clamped, dir_u, 1e-3)) /
            lam_uniform;
        line(10, d_opt < 1e-2 && d_uni >= 10.0 * d_opt, "stationarity of the optimum",
             fmt("|dlam|/lam %.2e at optimum, %.2e uniform", d_opt, d_uni));

        // --- criterion 11: torque balance on both optima
        const Solution ref_h = integrate_backward(BoundaryKind::Hinged, tight(-1e-8));
        const ColumnProfile dense_h = profile(ref_h, 16001, 1e-3);
        const double tq_c = torque_residual(dense);
        const double tq_h = torque_residual(dense_h);
        line(11, tq_c < 1e-3 && tq_h < 1e-3, "torque balance",
             fmt("residual %.2e clamped, %.2e hinged", tq_c, tq_h));
    }

    // --- criterion 12: similarity exactness
    {
        const AsDerivative d = rhs(kCriticalPoint);
        const double worst_rhs =
            std::max(std::max(std::abs(d.tau_t), std::abs(d.w_t)),
                     std::max(std::abs(d.beta_t), std::abs(d.alpha_t)));
        double worst_ode = 0.0;
        for (double lambda : {24.0, 134.1935, 222.7362})
            for (double s : {1e-3, 0.05, 0.4, 1.0}) {
                const auto v = similarity_profile(lambda, s);
                const double c = lambda / 24.0;
                const double r1 = -6.0 * c * c * s * s + lambda * v.b * v.theta;
                const double n1 = 6.0 * c * c * s * s + lambda * v.b * v.theta;
                const double r2 = -lambda / std::pow(s, 4) + lambda * v.theta * v.theta;
                const double n2 = 2.0 * lambda / std::pow(s, 4);
                const double r3 = 4.0 * lambda / 96.0 * s * s * s - v.a;
                worst_ode = std::max(worst_ode, std::abs(r1) / n1);
                worst_ode = std::max(worst_ode, std::abs(r2) / n2);
                worst_ode = std::max(worst_ode, std::abs(r3) / v.a);
            }
        line(12, worst_rhs <= 1e-14 && worst_ode <= 1e-13, "similarity exactness",
             fmt("rhs at critical point %.1e, ODE residuals %.1e", worst_rhs, worst_ode));
    }

    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}

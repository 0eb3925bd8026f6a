#include "tallcol/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tallcol/flux.hpp"

namespace tallcol {

namespace {

// Hermite interpolation over the stored trajectory in flux variables, where
// the hinged stop is regular (interpolating AsState directly would put a
// divergent w and a vanishing alpha at the ends of the last interval).
class TrajectoryInterpolant {
  public:
    explicit TrajectoryInterpolant(const Solution& sol) {
        if (sol.trajectory.size() < 2)
            throw std::invalid_argument("profile: trajectory needs at least 2 samples");
        ts_.reserve(sol.trajectory.size());
        xs_.reserve(sol.trajectory.size());
        fs_.reserve(sol.trajectory.size());
        for (const auto& smp : sol.trajectory) {
            ts_.push_back(smp.t);
            FluxVec x = to_flux(smp.state);
            FluxVec f{};
            flux_rhs(x, f);
            xs_.push_back(x);
            fs_.push_back(f);
        }
    }

    // t runs from 0 down to t_stop; samples are stored in that order.
    FluxVec at(double t) const {
        if (t >= ts_.front()) return xs_.front();
        if (t <= ts_.back()) return xs_.back();
        // first index with ts_[i] <= t (ts_ decreasing)
        const auto it = std::lower_bound(ts_.begin(), ts_.end(), t,
                                         [](double a, double b) { return a > b; });
        const std::size_t i = static_cast<std::size_t>(it - ts_.begin());
        return hermite_flux(t, ts_[i - 1], xs_[i - 1], fs_[i - 1], ts_[i], xs_[i],
                            fs_[i]);
    }

  private:
    std::vector<double> ts_;
    std::vector<FluxVec> xs_;
    std::vector<FluxVec> fs_;
};

}  // namespace

void MaterialSpec::validate() const {
    if (!(rho > 0.0 && g > 0.0 && E > 0.0 && c > 0.0 && V > 0.0))
        throw std::invalid_argument("MaterialSpec: all fields must be positive");
}

ColumnProfile profile(const Solution& solution, int n_points, double s_floor) {
    if (n_points < 2)
        throw std::invalid_argument("profile: n_points must be at least 2");
    if (!(s_floor > 0.0) || s_floor >= 1.0)
        throw std::invalid_argument("profile: s_floor must lie in (0, 1)");

    const TrajectoryInterpolant traj(solution);
    const double lam = solution.lambda;
    const double t_stop = solution.t_stop;

    ColumnProfile p{};
    p.bc = solution.bc;
    p.lambda = lam;
    p.s_min = std::exp(t_stop);
    p.extended = false;
    p.samples.reserve(static_cast<std::size_t>(n_points));

    const double log_floor = std::log(s_floor);
    for (int j = 0; j < n_points; ++j) {
        const double frac = static_cast<double>(j) / (n_points - 1);
        const double s = (j == n_points - 1) ? 1.0 : std::exp(log_floor * (1.0 - frac));
        const double t_rel = -std::log(s);  // 0 at the base
        ProfileSample smp{};
        smp.s = s;
        double tau, beta, alpha;
        if (t_rel >= -t_stop) {
            tau = beta = alpha = 1.0;  // pure similarity extension
            smp.extended = true;
            p.extended = true;
        } else {
            const FluxVec x = traj.at(t_stop + t_rel);
            const AsState st = from_flux(x);
            tau = st.tau;
            beta = st.beta;
            alpha = st.alpha;
            smp.extended = false;
        }
        const double s2 = s * s;
        smp.a = lam / 24.0 * s2 * s * alpha;
        smp.b = lam / 96.0 * s2 * s2 * beta;
        smp.theta = tau / s2;
        p.samples.push_back(smp);
    }

    if (std::abs(p.samples.back().b - 1.0) > 1e-6)
        throw std::logic_error("profile: volume constraint b(1) = 1 violated");
    return p;
}

double volume(const ColumnProfile& p) {
    const auto& smp = p.samples;
    const std::size_t n = smp.size();
    if (n < 2) throw std::invalid_argument("volume: profile too short");

    // In x = ln s the sample grid is uniform and the integral becomes
    // int a s dx; use composite Simpson there, falling back to the
    // trapezoid for non-uniform spacing and for a leftover interval.
    bool uniform = true;
    const double dx0 = std::log(smp[1].s) - std::log(smp[0].s);
    for (std::size_t i = 1; i + 1 < n && uniform; ++i) {
        const double dx = std::log(smp[i + 1].s) - std::log(smp[i].s);
        if (std::abs(dx - dx0) > 1e-9 * std::abs(dx0)) uniform = false;
    }

    double total = 0.0;
    auto f = [&smp](std::size_t i) { return smp[i].a * smp[i].s; };
    if (uniform) {
        std::size_t i = 0;
        for (; i + 2 < n; i += 2)
            total += dx0 / 3.0 * (f(i) + 4.0 * f(i + 1) + f(i + 2));
        if (i + 1 < n) total += 0.5 * dx0 * (f(i) + f(i + 1));
    } else {
        for (std::size_t i = 1; i < n; ++i)
            total += 0.5 * (smp[i].a + smp[i - 1].a) * (smp[i].s - smp[i - 1].s);
    }
    // Cubic tail below the first sample: integral of a0 s^3 with
    // a0 = a(s0)/s0^3 is a(s0) s0 / 4.
    total += smp.front().a * smp.front().s / 4.0;
    return total;
}

DimensionalDesign dimensional_design(const ColumnProfile& p, const MaterialSpec& mat) {
    mat.validate();
    DimensionalDesign d{};
    d.length = std::cbrt(p.lambda * mat.c * mat.E * mat.V / (mat.rho * mat.g));
    d.area_unit = mat.V / d.length;
    return d;
}

}  // namespace tallcol

#include "tallcol/shooting.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>

#include "tallcol/flux.hpp"

namespace tallcol {

namespace {

namespace ode = boost::numeric::odeint;

struct FluxSystem {
    void operator()(const FluxVec& x, FluxVec& dxdt, double /*t*/) const {
        flux_rhs(x, dxdt);
    }
};

double residual_of(const FluxVec& x, BoundaryKind bc) {
    return bc == BoundaryKind::Clamped ? x[0] : x[1];
}

bool physical(const FluxVec& x, BoundaryKind bc) {
    if (!(x[3] > 0.0) || !(x[2] > 0.0)) return false;
    if (bc == BoundaryKind::Clamped && !(x[1] > 0.0)) return false;
    return true;
}

struct Node {
    double t;
    FluxVec x;
    FluxVec f;
};

Node make_node(double t, const FluxVec& x) {
    Node n{t, x, {}};
    flux_rhs(n.x, n.f);
    return n;
}

// Bisection for the event crossing on the Hermite model of one step.
Node refine_crossing(const Node& a, const Node& b, BoundaryKind bc, double event_tol) {
    double lo = a.t, hi = b.t;  // lo > hi, integration runs toward negative t
    double r_lo = residual_of(a.x, bc);
    while (std::abs(lo - hi) > 0.25 * event_tol) {
        const double mid = 0.5 * (lo + hi);
        const FluxVec xm = hermite_flux(mid, a.t, a.x, a.f, b.t, b.x, b.f);
        if (residual_of(xm, bc) * r_lo > 0.0) {
            lo = mid;
            r_lo = residual_of(xm, bc);
        } else {
            hi = mid;
        }
    }
    const double ts = 0.5 * (lo + hi);
    return make_node(ts, hermite_flux(ts, a.t, a.x, a.f, b.t, b.x, b.f));
}

// Local closure of a hinged run. Near the base, alpha ~ d^{2/3} and
// w ~ d^{-1/3} with d the distance to the stopping time, so adaptive
// stepping cannot cross the surface at tight tolerance; u, v and beta are
// regular there and u vanishes linearly. One Newton step on u with the
// exact derivative locates the stop, and tau gets the d^{2/3} correction
// from integrating w = cbrt(v^2/u) through the cusp.
Node hinged_endgame(const Node& n, double event_tol) {
    const double tau1 = n.x[0], u1 = n.x[1], v1 = n.x[2], beta1 = n.x[3];
    const double u_t = n.f[1];
    if (!(u_t > 0.0))
        throw StepFailureError("hinged endgame: residual derivative not positive");
    const double d = u1 / u_t;
    const double t_stop = n.t - d;
    FluxVec xs{};
    xs[0] = tau1 - 1.5 * std::cbrt(v1 * v1 / u_t) * std::pow(d, 2.0 / 3.0) +
            2.0 * tau1 * d;
    xs[1] = 0.5 * event_tol;  // just inside the physical side of the surface
    xs[2] = v1 - n.f[2] * d;
    xs[3] = beta1 - n.f[3] * d;
    return make_node(t_stop, xs);
}

}  // namespace

void ShootingOptions::validate() const {
    if (delta == 0.0) throw std::invalid_argument("ShootingOptions: delta must be nonzero");
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw std::invalid_argument("ShootingOptions: tolerances must be positive");
    if (!(max_span > 0.0) || !(event_tol > 0.0) || !(max_step > 0.0))
        throw std::invalid_argument("ShootingOptions: spans and steps must be positive");
}

Solution integrate_backward(BoundaryKind bc, const ShootingOptions& opts) {
    opts.validate();

    const AsState start = initial_state(opts.delta, stable_mode());
    Node cur = make_node(0.0, to_flux(start));
    const double u_start = cur.x[1];
    const double u_switch = 1e-6 * std::abs(u_start);

    std::vector<Node> nodes;
    nodes.push_back(cur);

    auto stepper = ode::make_controlled<ode::runge_kutta_dopri5<FluxVec>>(
        opts.abs_tol, opts.rel_tol);
    FluxSystem sys;

    double dt = -std::min(opts.max_step, 1e-3);
    Node stop_node{};
    bool stopped = false;
    int consecutive_failures = 0;

    while (!stopped) {
        if (cur.t <= -opts.max_span)
            throw NoCrossingError(
                "integrate_backward: no boundary crossing within max_span "
                "(wrong sign of delta?)");

        double dt_try = -std::min(opts.max_step, std::abs(dt));
        if (bc == BoundaryKind::Hinged) {
            // Keep steps from overshooting the u = 0 surface; the endgame
            // takes over once u is small.
            const double u_t = cur.f[1];
            if (u_t > 0.0)
                dt_try = -std::min(std::abs(dt_try),
                                   std::max(0.75 * cur.x[1] / u_t, 1e-9));
        }

        FluxVec x = cur.x;
        double t = cur.t;
        dt = dt_try;
        const auto result = stepper.try_step(sys, x, t, dt);

        if (result == ode::fail) {
            ++consecutive_failures;
            const bool stalled =
                consecutive_failures > 200 || std::abs(dt) < 1e-14 * std::max(1.0, std::abs(t));
            if (!stalled) continue;
            if (bc == BoundaryKind::Hinged && cur.x[1] < 1e-2 * std::abs(u_start)) {
                stop_node = hinged_endgame(cur, opts.event_tol);
                stopped = true;
                break;
            }
            if (!physical(cur.x, bc))
                throw NoCrossingError(
                    "integrate_backward: trajectory left the physical region "
                    "(wrong sign of delta?)");
            throw StepFailureError("integrate_backward: step controller stalled");
        }
        consecutive_failures = 0;
        Node next = make_node(t, x);

        const double r_prev = residual_of(cur.x, bc);
        const double r_next = residual_of(next.x, bc);
        if (r_prev * r_next <= 0.0) {
            Node crossing = refine_crossing(cur, next, bc, opts.event_tol);
            if (!physical(crossing.x, bc))
                throw NoCrossingError(
                    "integrate_backward: boundary surface reached outside the "
                    "physical region (wrong sign of delta?)");
            stop_node = crossing;
            stopped = true;
            break;
        }

        if (!physical(next.x, bc))
            throw NoCrossingError(
                "integrate_backward: trajectory left the physical region "
                "(wrong sign of delta?)");

        nodes.push_back(next);
        cur = next;

        if (bc == BoundaryKind::Hinged && cur.x[1] < u_switch) {
            stop_node = hinged_endgame(cur, opts.event_tol);
            stopped = true;
        }
    }

    if (!(stop_node.x[3] > 0.0))
        throw NoCrossingError("integrate_backward: nonpositive beta at the crossing");

    Solution sol{};
    sol.bc = bc;
    sol.t_stop = stop_node.t;
    sol.lambda = 96.0 / stop_node.x[3];
    sol.trajectory.reserve(nodes.size() + 1);
    for (const Node& n : nodes)
        sol.trajectory.push_back({n.t, from_flux(n.x)});
    sol.trajectory.push_back({stop_node.t, from_flux(stop_node.x)});
    return sol;
}

std::vector<SweepEntry> lambda_sensitivity(BoundaryKind bc,
                                           const std::vector<double>& deltas,
                                           const ShootingOptions& base) {
    for (double d : deltas) {
        if (d == 0.0)
            throw std::invalid_argument("lambda_sensitivity: deltas must be nonzero");
        if (d * deltas.front() < 0.0)
            throw std::invalid_argument("lambda_sensitivity: deltas must share one sign");
    }
    std::vector<SweepEntry> out;
    out.reserve(deltas.size());
    for (double d : deltas) {
        ShootingOptions opts = base;
        opts.delta = d;
        SweepEntry e{d, false, 0.0, 0.0, {}};
        try {
            const Solution s = integrate_backward(bc, opts);
            e.ok = true;
            e.lambda = s.lambda;
            e.t_stop = s.t_stop;
        } catch (const std::exception& ex) {
            e.error = ex.what();
        }
        out.push_back(e);
    }
    return out;
}

double extrapolate_lambda(const std::vector<SweepEntry>& entries) {
    std::vector<double> lam;
    for (const auto& e : entries)
        if (e.ok) lam.push_back(e.lambda);
    if (lam.empty())
        throw std::invalid_argument("extrapolate_lambda: no successful entries");
    if (lam.size() < 3) return lam.back();
    const double x0 = lam[lam.size() - 3], x1 = lam[lam.size() - 2], x2 = lam.back();
    const double d1 = x1 - x0, d2 = x2 - x1;
    const double dd = d2 - d1;
    // Aitken; skip when the sequence has already converged to rounding noise
    // or the differences are not contracting.
    if (std::abs(dd) < 1e-12 * std::abs(x2) || std::abs(d2) >= std::abs(d1))
        return x2;
    return x2 - d2 * d2 / dd;
}

}  // namespace tallcol

#include "curvedyn/pointdyn.hpp"

namespace curvedyn {

double speed_squared(const ParticleState& s, const AzimuthalMetric& metric) {
    return s.vr * s.vr + metric.g_thetatheta(s.r) * s.vtheta * s.vtheta;
}

std::array<double, 2> covariant_rhs(const ParticleState& s,
                                    const AzimuthalMetric& metric,
                                    const ForceField& force) {
    if (!(s.mass > 0.0)) throw std::invalid_argument("particle mass must be > 0");
    const Christoffel gamma = metric.christoffel(s.r);
    double ar = -gamma.r_thetatheta * s.vtheta * s.vtheta;
    double atheta = -2.0 * gamma.theta_rtheta * s.vr * s.vtheta;
    if (force) {
        const auto [Fr, Ftheta] = force(s.r, s.theta);
        ar += Fr / s.mass;                                      // g^{rr} = 1
        atheta += Ftheta / (s.mass * metric.g_thetatheta(s.r)); // g^{tt} = 1/warp^2
    }
    return {ar, atheta};
}

namespace {

struct Phase {
    double r, theta, vr, vtheta;
};

Phase derivative(const Phase& y, double mass, const AzimuthalMetric& metric,
                 const ForceField& force) {
    ParticleState s{y.r, y.theta, y.vr, y.vtheta, mass};
    const auto a = covariant_rhs(s, metric, force);
    return {y.vr, y.vtheta, a[0], a[1]};
}

Phase axpy(const Phase& y, double h, const Phase& d) {
    return {y.r + h * d.r, y.theta + h * d.theta, y.vr + h * d.vr,
            y.vtheta + h * d.vtheta};
}

}  // namespace

Trajectory integrate_particle(const ParticleState& initial,
                              const AzimuthalMetric& metric,
                              const ForceField& force, double dt, int steps) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
    if (steps < 0) throw std::invalid_argument("steps must be >= 0");

    Trajectory traj;
    traj.time.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    traj.time.push_back(0.0);
    traj.states.push_back(initial);

    Phase y{initial.r, initial.theta, initial.vr, initial.vtheta};
    for (int i = 0; i < steps; ++i) {
        Phase next;
        try {
            const Phase k1 = derivative(y, initial.mass, metric, force);
            const Phase k2 = derivative(axpy(y, dt / 2, k1), initial.mass, metric, force);
            const Phase k3 = derivative(axpy(y, dt / 2, k2), initial.mass, metric, force);
            const Phase k4 = derivative(axpy(y, dt, k3), initial.mass, metric, force);
            next = {y.r + dt / 6 * (k1.r + 2 * k2.r + 2 * k3.r + k4.r),
                    y.theta + dt / 6 * (k1.theta + 2 * k2.theta + 2 * k3.theta + k4.theta),
                    y.vr + dt / 6 * (k1.vr + 2 * k2.vr + 2 * k3.vr + k4.vr),
                    y.vtheta + dt / 6 * (k1.vtheta + 2 * k2.vtheta + 2 * k3.vtheta + k4.vtheta)};
        } catch (const std::domain_error&) {
            traj.completed = false;
            return traj;
        }
        if (!metric.profile().contains(next.r)) {
            traj.completed = false;
            return traj;
        }
        y = next;
        traj.time.push_back((i + 1) * dt);
        traj.states.push_back({y.r, y.theta, y.vr, y.vtheta, initial.mass});
    }
    return traj;
}

}  // namespace curvedyn

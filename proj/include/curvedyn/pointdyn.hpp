#pragma once

#include <array>
#include <functional>
#include <vector>

#include "curvedyn/geometry.hpp"

namespace curvedyn {

/// Point mass on the space manifold in (r, theta) coordinates.
struct ParticleState {
    double r = 0.0;
    double theta = 0.0;
    double vr = 0.0;      // tangent components v^r, v^theta
    double vtheta = 0.0;
    double mass = 1.0;
};

/// Force field as covector components (F_r, F_theta) at a point.
using ForceField = std::function<std::array<double, 2>(double r, double theta)>;

/// g(v, v) for the particle's velocity.
double speed_squared(const ParticleState& state, const AzimuthalMetric& metric);

/// Coordinate acceleration a^i = (1/m) g^{il} F_l - Gamma^i_{jk} v^j v^k.
/// With no force this is the geodesic equation right-hand side.
std::array<double, 2> covariant_rhs(const ParticleState& state,
                                    const AzimuthalMetric& metric,
                                    const ForceField& force = nullptr);

struct Trajectory {
    std::vector<double> time;
    std::vector<ParticleState> states;
    // False when the particle left the metric's domain; the trajectory is
    // then truncated at the last valid state.
    bool completed = true;
};

/// Classical fourth-order one-step integration of covariant_rhs.
/// The returned trajectory holds steps+1 states when it completes, the
/// first of which is `initial`.
Trajectory integrate_particle(const ParticleState& initial,
                              const AzimuthalMetric& metric,
                              const ForceField& force, double dt, int steps);

}  // namespace curvedyn

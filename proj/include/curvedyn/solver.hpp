#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curvedyn/elasticity.hpp"
#include "curvedyn/geometry.hpp"

namespace curvedyn {

struct RadialGrid {
    double r_min = 0.2;
    double r_max = 1.0;
    int n = 401;

    double spacing() const { return (r_max - r_min) / (n - 1); }
    double node(int j) const { return r_min + j * spacing(); }
    std::vector<double> nodes() const;
    void validate() const;

    friend bool operator==(const RadialGrid&, const RadialGrid&) = default;
};

/// Radial field f and its velocity on the grid nodes.
struct RadialState {
    std::vector<double> f;
    std::vector<double> f_t;
    double time = 0.0;
};

struct EnergyReport {
    double kinetic = 0.0;
    double potential = 0.0;
    double total = 0.0;
};

struct Perturbation {
    double amplitude = 0.01;
    int mode = 1;

    friend bool operator==(const Perturbation&, const Perturbation&) = default;
};

struct ProblemConfig {
    CurvatureProfile body = CurvatureProfile::spherical(2.0);
    CurvatureProfile space = CurvatureProfile::spherical(0.5);
    RadialGrid grid{};
    bool dt_auto = true;
    double dt = 0.0;  // used when dt_auto is false
    double t_end = 10.0;
    double mass_growth_rate = 0.0;  // rho_dot / rho
    Perturbation perturbation{};
    double output_interval = 0.01;

    void validate() const;

    friend bool operator==(const ProblemConfig&, const ProblemConfig&) = default;
};

struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, std::vector<double> history)
        : std::runtime_error(what), residual_history(std::move(history)) {}
    std::vector<double> residual_history;
};

struct BlowUpError : std::runtime_error {
    BlowUpError(const std::string& what, double t)
        : std::runtime_error(what), time(t) {}
    double time;
};

/// Ghost values (g_lo, g_hi) that make the centered derivative at both
/// boundary nodes equal 1 exactly: g_lo = f[1] - 2 dR, g_hi = f[n-2] + 2 dR.
std::pair<double, double> apply_boundary(std::span<const double> f,
                                         const RadialGrid& grid);

/// Nodal derivative with the ghost closure: centered differences in the
/// interior, exactly 1 at both boundary nodes.
std::vector<double> ghost_derivative(std::span<const double> f,
                                     const RadialGrid& grid);

/// Acceleration of the radial wave equation,
///   f_tt = (1/Phi) D_R(Phi dW/df') - dW/df - mass_growth_rate f_t,
/// discretized as the exact gradient of the trapezoid potential with the
/// ghost closure, divided by the lumped mass Phi_j c_j dR. Throws
/// std::domain_error naming the first node outside the space domain.
std::vector<double> radial_rhs(const RadialState& state,
                               const ProblemConfig& config);

/// dt = 0.25 dR / max_j c_j with local wave speed c^2 = 4 (3 f'^2 - 1),
/// floored at the compatible value c^2 = 8.
double stable_dt(const RadialState& state, const ProblemConfig& config);

/// One velocity-Verlet (kick-drift-kick) step of radial_rhs; the damping
/// half-kick is resolved implicitly, so the scheme is exactly reversible
/// when mass_growth_rate = 0.
RadialState step_dynamics(RadialState state, const ProblemConfig& config,
                          double dt);

EnergyReport total_energy(const RadialState& state, const ProblemConfig& config);

double boundary_distance(const RadialState& state);

struct EquilibriumResult {
    RadialState state;
    double residual = 0.0;  // max |radial_rhs| at the returned state
    int iterations = 0;
    std::vector<double> residual_history;
};

/// Damped Newton on the discrete force residual with an Armijo line search
/// on the potential, seeded with f = R (clipped to the space domain); falls
/// back to heavily damped dynamics when Newton stalls. Throws
/// ConvergenceError with the residual history when the budget is exhausted.
EquilibriumResult solve_equilibrium(const ProblemConfig& config,
                                    double tolerance = 1e-10);

/// Equilibrium plus amplitude * sin(mode pi (R - R_min)/(R_max - R_min)),
/// velocity zero.
RadialState initial_condition(const ProblemConfig& config);

struct SeriesSample {
    double t = 0.0;
    double distance = 0.0;
    EnergyReport energy;
};

struct SimulationResult {
    std::vector<SeriesSample> series;
    std::vector<RadialState> snapshots;  // every 10th series sample
};

/// Integrates from initial_condition(config) to t_end, sampling the
/// boundary distance and energies every output_interval. Throws
/// BlowUpError (with timestamp) if the state explodes, and
/// std::runtime_error if f stops being strictly increasing.
SimulationResult simulate(const ProblemConfig& config);

}  // namespace curvedyn

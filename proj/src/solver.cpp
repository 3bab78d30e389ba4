#include "curvedyn/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace curvedyn {

std::vector<double> RadialGrid::nodes() const {
    std::vector<double> out(n);
    for (int j = 0; j < n; ++j) out[j] = node(j);
    return out;
}

void RadialGrid::validate() const {
    if (n < 3) throw std::invalid_argument("grid.n must be >= 3");
    if (!(r_min > 0.0)) throw std::invalid_argument("grid.r_min must be > 0");
    if (!(r_min < r_max)) throw std::invalid_argument("grid.r_min must be < grid.r_max");
}

void ProblemConfig::validate() const {
    grid.validate();
    if (!body.contains(grid.r_max))
        throw std::invalid_argument("grid exceeds the body profile domain");
    if (!dt_auto && !(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
    if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be > 0");
    if (!(output_interval > 0.0))
        throw std::invalid_argument("output.interval must be > 0");
    if (mass_growth_rate < 0.0)
        throw std::invalid_argument("mass_growth_rate must be >= 0");
    if (perturbation.mode < 1)
        throw std::invalid_argument("perturbation.mode must be >= 1");
}

std::pair<double, double> apply_boundary(std::span<const double> f,
                                         const RadialGrid& grid) {
    if (static_cast<int>(f.size()) != grid.n || grid.n < 3)
        throw std::invalid_argument("field size does not match grid");
    const double dR = grid.spacing();
    return {f[1] - 2.0 * dR, f[f.size() - 2] + 2.0 * dR};
}

std::vector<double> ghost_derivative(std::span<const double> f,
                                     const RadialGrid& grid) {
    if (static_cast<int>(f.size()) != grid.n || grid.n < 3)
        throw std::invalid_argument("field size does not match grid");
    const std::size_t n = f.size();
    const double dR = grid.spacing();
    std::vector<double> d(n);
    // Centered differences written against the displacement f - R, so the
    // identity configuration has derivative exactly 1 at every node.
    for (std::size_t j = 1; j + 1 < n; ++j) {
        const double w_hi = f[j + 1] - grid.node(static_cast<int>(j) + 1);
        const double w_lo = f[j - 1] - grid.node(static_cast<int>(j) - 1);
        d[j] = 1.0 + (w_hi - w_lo) / (2 * dR);
    }
    d[0] = 1.0;      // ghost closure: (f[1] - g_lo)/(2 dR) with g_lo = f[1] - 2 dR
    d[n - 1] = 1.0;
    return d;
}

namespace {

// Grid-derived quantities shared by the energy, the force and the Hessian.
struct Workspace {
    int n;
    double dR;
    std::vector<double> R;     // nodes
    std::vector<double> Phi;   // body warp on nodes (= rho = sqrt(det G))
    std::vector<double> mass;  // lumped mass c_j Phi_j dR
    std::vector<double> cw;    // trapezoid weights c_j

    explicit Workspace(const ProblemConfig& cfg) {
        cfg.grid.validate();
        n = cfg.grid.n;
        dR = cfg.grid.spacing();
        R = cfg.grid.nodes();
        Phi.resize(n);
        mass.resize(n);
        cw.assign(n, 1.0);
        cw[0] = cw[n - 1] = 0.5;
        for (int j = 0; j < n; ++j) {
            Phi[j] = cfg.body.warp(R[j]);
            mass[j] = cw[j] * Phi[j] * dR;
        }
    }
};

void check_space_domain(std::span<const double> f, const CurvatureProfile& space) {
    for (std::size_t j = 0; j < f.size(); ++j)
        if (!space.contains(f[j]))
            throw std::domain_error("f exits the space domain at node " +
                                    std::to_string(j) + " (f = " +
                                    std::to_string(f[j]) + ")");
}

bool in_space_domain(std::span<const double> f, const CurvatureProfile& space) {
    for (double v : f)
        if (!space.contains(v) || !std::isfinite(v)) return false;
    return true;
}

// Discrete potential U = dR sum_j c_j Phi_j W(f_j, d_j) with the ghost
// closure; the radial acceleration below is exactly -grad U / mass.
double potential_energy(std::span<const double> f, const Workspace& ws,
                        const ProblemConfig& cfg) {
    const auto d = ghost_derivative(f, cfg.grid);
    double U = 0.0;
    for (int j = 0; j < ws.n; ++j) {
        const double eRR = d[j] * d[j] - 1.0;
        const double phi = cfg.space.warp(f[j]);
        const double q = phi / ws.Phi[j];
        const double hoop = q * q - 1.0;
        U += ws.mass[j] * (eRR * eRR + hoop * hoop);
    }
    return U;
}

std::vector<double> potential_gradient(std::span<const double> f,
                                       const Workspace& ws,
                                       const ProblemConfig& cfg) {
    const auto d = ghost_derivative(f, cfg.grid);
    std::vector<double> grad(ws.n);
    for (int j = 0; j < ws.n; ++j) {
        const auto der =
            radial_energy_derivatives(f[j], d[j], ws.R[j], cfg.body, cfg.space);
        grad[j] = ws.mass[j] * der.dW_df;
    }
    // Flux contributions of the interior derivative nodes; the boundary
    // derivatives are pinned to 1 and carry no f-dependence.
    for (int j = 1; j + 1 < ws.n; ++j) {
        const double W1 = 4.0 * d[j] * (d[j] * d[j] - 1.0);
        const double half_flux = 0.5 * ws.Phi[j] * W1;
        grad[j + 1] += half_flux;
        grad[j - 1] -= half_flux;
    }
    return grad;
}

std::vector<double> acceleration(std::span<const double> f, const Workspace& ws,
                                 const ProblemConfig& cfg) {
    check_space_domain(f, cfg.space);
    auto grad = potential_gradient(f, ws, cfg);
    for (int j = 0; j < ws.n; ++j) grad[j] = -grad[j] / ws.mass[j];
    return grad;
}

// Symmetric pentadiagonal Hessian of the potential, stored as dense bands:
// band[k][j] = H(j, j+k) for k = 0, 1, 2.
struct Banded {
    std::array<std::vector<double>, 3> band;
    int n;

    explicit Banded(int size) : n(size) {
        for (auto& b : band) b.assign(n, 0.0);
    }
    double& at(int j, int k) { return band[k][j]; }
};

Banded hessian(std::span<const double> f, const Workspace& ws,
               const ProblemConfig& cfg) {
    const auto d = ghost_derivative(f, cfg.grid);
    Banded H(ws.n);
    for (int j = 0; j < ws.n; ++j) {
        const double phi = cfg.space.warp(f[j]);
        const double dphi = cfg.space.warp_derivative(f[j]);
        const double ddphi = cfg.space.warp_second_derivative(f[j]);
        const double P2 = ws.Phi[j] * ws.Phi[j];
        const double u = phi * phi / P2 - 1.0;
        const double up = 2.0 * phi * dphi / P2;
        const double upp = 2.0 * (dphi * dphi + phi * ddphi) / P2;
        H.at(j, 0) += ws.mass[j] * 2.0 * (up * up + u * upp);
    }
    for (int j = 1; j + 1 < ws.n; ++j) {
        const double beta = ws.Phi[j] * (12.0 * d[j] * d[j] - 4.0) / (4.0 * ws.dR);
        H.at(j + 1, 0) += beta;
        H.at(j - 1, 0) += beta;
        H.at(j - 1, 2) -= beta;
    }
    return H;
}

// LDL^T factorization of a symmetric banded matrix (bandwidth 2), no
// pivoting; returns false on a non-positive pivot.
bool ldlt_solve(Banded H, std::vector<double> rhs, std::vector<double>& out) {
    const int n = H.n;
    std::vector<double> diag(n), l1(n, 0.0), l2(n, 0.0);
    for (int j = 0; j < n; ++j) {
        double dj = H.at(j, 0);
        if (j >= 1) dj -= l1[j - 1] * l1[j - 1] * diag[j - 1];
        if (j >= 2) dj -= l2[j - 2] * l2[j - 2] * diag[j - 2];
        if (!(dj > 0.0)) return false;
        diag[j] = dj;
        if (j + 1 < n) {
            double v = H.at(j, 1);
            if (j >= 1) v -= l2[j - 1] * l1[j - 1] * diag[j - 1];
            l1[j] = v / dj;
        }
        if (j + 2 < n) l2[j] = H.at(j, 2) / dj;
    }
    // forward solve L y = rhs
    for (int j = 0; j < n; ++j) {
        if (j >= 1) rhs[j] -= l1[j - 1] * rhs[j - 1];
        if (j >= 2) rhs[j] -= l2[j - 2] * rhs[j - 2];
    }
    for (int j = 0; j < n; ++j) rhs[j] /= diag[j];
    // back solve L^T x = y
    for (int j = n - 1; j >= 0; --j) {
        if (j + 1 < n) rhs[j] -= l1[j] * rhs[j + 1];
        if (j + 2 < n) rhs[j] -= l2[j] * rhs[j + 2];
    }
    out = std::move(rhs);
    return true;
}

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// Residual precision attainable with f stored in doubles: one ulp of f
// moves the acceleration by about diag(H)/mass.
double residual_floor(const Banded& H, const Workspace& ws, double f_scale) {
    double ratio = 0.0;
    for (int j = 0; j < ws.n; ++j)
        ratio = std::max(ratio, std::abs(H.band[0][j]) / ws.mass[j]);
    return 4.0 * std::numeric_limits<double>::epsilon() * f_scale * ratio;
}

}  // namespace

std::vector<double> radial_rhs(const RadialState& state,
                               const ProblemConfig& config) {
    const Workspace ws(config);
    if (static_cast<int>(state.f.size()) != ws.n ||
        state.f_t.size() != state.f.size())
        throw std::invalid_argument("state size does not match grid");
    auto a = acceleration(state.f, ws, config);
    if (config.mass_growth_rate != 0.0)
        for (int j = 0; j < ws.n; ++j) a[j] -= config.mass_growth_rate * state.f_t[j];
    return a;
}

double stable_dt(const RadialState& state, const ProblemConfig& config) {
    const auto d = ghost_derivative(state.f, config.grid);
    double c2 = 8.0;  // compatible-state wave speed squared
    for (double dj : d) c2 = std::max(c2, 4.0 * (3.0 * dj * dj - 1.0));
    return 0.25 * config.grid.spacing() / std::sqrt(c2);
}

RadialState step_dynamics(RadialState state, const ProblemConfig& config,
                          double dt) {
    const Workspace ws(config);
    if (static_cast<int>(state.f.size()) != ws.n ||
        state.f_t.size() != state.f.size())
        throw std::invalid_argument("state size does not match grid");
    const double gamma = config.mass_growth_rate;

    auto a = acceleration(state.f, ws, config);
    for (int j = 0; j < ws.n; ++j)
        state.f_t[j] += 0.5 * dt * (a[j] - gamma * state.f_t[j]);
    for (int j = 0; j < ws.n; ++j) state.f[j] += dt * state.f_t[j];
    a = acceleration(state.f, ws, config);
    const double denom = 1.0 + 0.5 * dt * gamma;
    for (int j = 0; j < ws.n; ++j)
        state.f_t[j] = (state.f_t[j] + 0.5 * dt * a[j]) / denom;
    state.time += dt;

    for (double v : state.f_t)
        if (!std::isfinite(v))
            throw BlowUpError("non-finite velocity after step", state.time);
    return state;
}

EnergyReport total_energy(const RadialState& state, const ProblemConfig& config) {
    const Workspace ws(config);
    EnergyReport rep;
    for (int j = 0; j < ws.n; ++j)
        rep.kinetic += 0.5 * ws.mass[j] * state.f_t[j] * state.f_t[j];
    rep.potential = potential_energy(state.f, ws, config);
    rep.total = rep.kinetic + rep.potential;
    return rep;
}

double boundary_distance(const RadialState& state) {
    return state.f.back() - state.f.front();
}

EquilibriumResult solve_equilibrium(const ProblemConfig& config,
                                    double tolerance) {
    config.validate();
    const Workspace ws(config);

    RadialState state;
    state.f.resize(ws.n);
    state.f_t.assign(ws.n, 0.0);
    const double f_cap = 0.99 * config.space.max_radius();
    for (int j = 0; j < ws.n; ++j) state.f[j] = std::min(ws.R[j], f_cap);

    std::vector<double> history;
    int iterations = 0;
    int fallbacks = 0;
    const int max_iterations = 200;

    const auto residual_of = [&](std::span<const double> f) {
        auto a = acceleration(f, ws, config);
        return max_abs(a);
    };

    while (iterations < max_iterations) {
        ++iterations;
        const auto grad = potential_gradient(state.f, ws, config);
        std::vector<double> rhs(ws.n);
        for (int j = 0; j < ws.n; ++j) rhs[j] = -grad[j] / ws.mass[j];
        const double res = max_abs(rhs);
        history.push_back(res);
        if (res < tolerance) {
            return {std::move(state), res, iterations, std::move(history)};
        }

        Banded H = hessian(state.f, ws, config);

        // Levenberg-damped Newton direction.
        std::vector<double> neg_grad(grad);
        for (auto& g : neg_grad) g = -g;
        std::vector<double> p;
        double tau = 0.0;
        bool have_direction = false;
        for (int attempt = 0; attempt < 60; ++attempt) {
            Banded Hs = H;
            if (tau > 0.0)
                for (int j = 0; j < ws.n; ++j) Hs.at(j, 0) += tau * ws.mass[j];
            if (ldlt_solve(std::move(Hs), neg_grad, p)) {
                double descent = 0.0;
                for (int j = 0; j < ws.n; ++j) descent += p[j] * grad[j];
                if (descent < 0.0) {
                    have_direction = true;
                    break;
                }
            }
            tau = (tau == 0.0) ? 1e-6 : tau * 10.0;
            if (tau > 1e12) break;
        }

        bool progressed = false;
        if (have_direction) {
            const double U0 = potential_energy(state.f, ws, config);
            double slope = 0.0;
            for (int j = 0; j < ws.n; ++j) slope += p[j] * grad[j];
            double alpha = 1.0;
            std::vector<double> trial(ws.n);
            while (alpha > 1e-14) {
                for (int j = 0; j < ws.n; ++j)
                    trial[j] = state.f[j] + alpha * p[j];
                if (in_space_domain(trial, config.space)) {
                    // Sufficient decrease of the energy, or (once energy
                    // differences fall below its own roundoff) of the
                    // force residual itself.
                    const double Ut = potential_energy(trial, ws, config);
                    const bool armijo = Ut <= U0 + 1e-4 * alpha * slope;
                    const double res_t = residual_of(trial);
                    const bool residual_drops = res_t <= 0.9 * res;
                    if (armijo || residual_drops || res_t < tolerance) {
                        state.f = trial;
                        progressed = true;
                        break;
                    }
                }
                alpha *= 0.5;
            }
        }

        if (!progressed) {
            // No direction makes measurable progress; accept when within the
            // precision attainable with double nodal values.
            const double best = residual_of(state.f);
            const double floor_now = residual_floor(H, ws, max_abs(state.f));
            if (best <= std::max(tolerance, floor_now)) {
                history.push_back(best);
                return {std::move(state), best, iterations, std::move(history)};
            }
            if (fallbacks >= 3)
                throw ConvergenceError(
                    "equilibrium solve stalled at residual " + std::to_string(best),
                    history);
            ++fallbacks;
            // Heavily damped dynamics as a globalization fallback.
            ProblemConfig damped = config;
            damped.mass_growth_rate = 2.0;
            RadialState relax{state.f, std::vector<double>(ws.n, 0.0), 0.0};
            const double dt = stable_dt(relax, damped);
            const int steps = static_cast<int>(std::ceil(5.0 / dt));
            for (int s = 0; s < steps; ++s)
                relax = step_dynamics(std::move(relax), damped, dt);
            state.f = relax.f;
        }
    }

    const double final_res = residual_of(state.f);
    const Banded H = hessian(state.f, ws, config);
    if (final_res <= std::max(tolerance, residual_floor(H, ws, max_abs(state.f)))) {
        history.push_back(final_res);
        return {std::move(state), final_res, iterations, std::move(history)};
    }
    throw ConvergenceError("equilibrium solve did not converge within " +
                               std::to_string(max_iterations) + " iterations",
                           history);
}

RadialState initial_condition(const ProblemConfig& config) {
    EquilibriumResult eq = solve_equilibrium(config);
    RadialState state = std::move(eq.state);
    const double L = config.grid.r_max - config.grid.r_min;
    if (config.perturbation.amplitude != 0.0) {
        for (int j = 0; j < config.grid.n; ++j) {
            const double s = (config.grid.node(j) - config.grid.r_min) / L;
            state.f[j] += config.perturbation.amplitude *
                          std::sin(config.perturbation.mode * M_PI * s);
        }
        check_space_domain(state.f, config.space);
    }
    state.time = 0.0;
    return state;
}

SimulationResult simulate(const ProblemConfig& config) {
    config.validate();
    const Workspace ws(config);
    RadialState state = initial_condition(config);

    double scale = 1.0;
    for (double v : state.f) scale = std::max(scale, std::abs(v));
    for (double v : state.f_t) scale = std::max(scale, std::abs(v));
    const double blow_up_limit = 1e3 * scale;
    const double gamma = config.mass_growth_rate;

    SimulationResult result;
    const auto record = [&](const RadialState& s) {
        for (std::size_t j = 1; j < s.f.size(); ++j)
            if (!(s.f[j] > s.f[j - 1]))
                throw std::runtime_error(
                    "f stopped being strictly increasing at t = " +
                    std::to_string(s.time));
        result.series.push_back(
            {s.time, boundary_distance(s), total_energy(s, config)});
        if ((result.series.size() - 1) % 10 == 0) result.snapshots.push_back(s);
    };
    record(state);

    auto a = acceleration(state.f, ws, config);
    double t = 0.0;
    std::size_t sample = 1;
    while (t < config.t_end - 1e-12) {
        // Hold dt fixed across each output interval so samples land on the
        // lattice; re-estimate the stability bound at every interval.
        const double interval =
            std::min(config.output_interval, config.t_end - t);
        const double dt_bound = config.dt_auto ? stable_dt(state, config) : config.dt;
        const int steps = std::max(1, static_cast<int>(std::ceil(interval / dt_bound - 1e-9)));
        const double dt = interval / steps;

        for (int s = 0; s < steps; ++s) {
            for (int j = 0; j < ws.n; ++j)
                state.f_t[j] += 0.5 * dt * (a[j] - gamma * state.f_t[j]);
            for (int j = 0; j < ws.n; ++j) state.f[j] += dt * state.f_t[j];
            a = acceleration(state.f, ws, config);
            const double denom = 1.0 + 0.5 * dt * gamma;
            for (int j = 0; j < ws.n; ++j)
                state.f_t[j] = (state.f_t[j] + 0.5 * dt * a[j]) / denom;
        }
        t = sample * config.output_interval;
        if (t > config.t_end) t = config.t_end;
        ++sample;
        state.time = t;

        for (double v : state.f_t) {
            if (!std::isfinite(v) || std::abs(v) > blow_up_limit)
                throw BlowUpError("velocity exceeded the blow-up threshold at t = " +
                                      std::to_string(state.time),
                                  state.time);
        }
        record(state);
    }
    return result;
}

}  // namespace curvedyn

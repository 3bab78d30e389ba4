#include "curvedyn/runner.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "curvedyn/config.hpp"
#include "curvedyn/csvio.hpp"
#include "curvedyn/elasticity.hpp"
#include "curvedyn/pointdyn.hpp"

namespace curvedyn::cli {

namespace fs = std::filesystem;

double gradient_check_max_error(int count, double h, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> body_R(0.3, 1.0);
    std::uniform_real_distribution<double> space_r(0.3, 2.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> diag(0.6, 1.4);
    std::uniform_real_distribution<double> offdiag(-0.3, 0.3);

    const AzimuthalMetric body{CurvatureProfile::spherical(2.0)};
    const AzimuthalMetric space{CurvatureProfile::spherical(0.5)};
    const MaterialLaw material{0.0, 1.0};

    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
        Jet1 jet;
        jet.body_point = {body_R(rng), angle(rng)};
        jet.space_point = {space_r(rng), angle(rng)};
        jet.deriv = Mat2::diag(diag(rng), diag(rng));
        jet.deriv(0, 1) = offdiag(rng);
        jet.deriv(1, 0) = offdiag(rng);

        const StressDensity closed = stress_density(jet, body, space, material);
        StressDensity fd = fd_fiber_derivative(jet, body, space, material, h);
        const double rho = body.warp(jet.body_point[0]);
        fd.R_comp[0] *= rho;
        fd.R_comp[1] *= rho;
        fd.S_comp = rho * fd.S_comp;

        double scale = std::abs(closed.R_comp[0]);
        scale = std::max(scale, std::abs(closed.R_comp[1]));
        scale = std::max(scale, closed.S_comp.max_abs());
        scale = std::max(scale, 1e-12);
        double diff = std::abs(closed.R_comp[0] - fd.R_comp[0]);
        diff = std::max(diff, std::abs(closed.R_comp[1] - fd.R_comp[1]));
        diff = std::max(diff, (closed.S_comp - fd.S_comp).max_abs());
        worst = std::max(worst, diff / scale);
    }
    return worst;
}

namespace {

ProblemConfig make_config(const RunOptions& opt) {
    ProblemConfig cfg = opt.config_path.empty() ? ProblemConfig{}
                                                : load_config_file(opt.config_path);
    for (const auto& kv : opt.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ConfigError(0, "override '" + kv + "' is not key=value");
        apply_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    cfg.validate();
    return cfg;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path.string());
    out << text;
    if (!out) throw IoError("write failed: " + path.string());
}

int run_equilibrium(const RunOptions& opt, const ProblemConfig& cfg,
                    std::ostream& out) {
    const EquilibriumResult eq = solve_equilibrium(cfg);
    const fs::path dir{opt.out_dir};
    write_snapshot_csv((dir / "equilibrium.csv").string(), cfg.grid, eq.state);

    std::ostringstream rep;
    rep << "distance = " << format_double(boundary_distance(eq.state)) << "\n"
        << "residual = " << format_double(eq.residual) << "\n"
        << "iterations = " << eq.iterations << "\n";
    write_text(dir / "equilibrium_report.txt", rep.str());
    if (!opt.quiet) out << rep.str();
    return exit_ok;
}

int run_simulate(const RunOptions& opt, const ProblemConfig& cfg,
                 std::ostream& out) {
    const SimulationResult result = simulate(cfg);
    const fs::path dir{opt.out_dir};
    write_series_csv((dir / "series.csv").string(), result.series);

    const fs::path snapdir = dir / "snapshots";
    fs::create_directories(snapdir);
    for (std::size_t i = 0; i < result.snapshots.size(); ++i) {
        std::ostringstream name;
        name << "snapshot_" << std::setw(6) << std::setfill('0') << i * 10 << ".csv";
        write_snapshot_csv((snapdir / name.str()).string(), cfg.grid,
                           result.snapshots[i]);
    }
    if (!opt.quiet) {
        const auto& last = result.series.back();
        out << "samples = " << result.series.size() << "\n"
            << "final distance = " << format_double(last.distance) << "\n"
            << "final total energy = " << format_double(last.energy.total) << "\n";
    }
    return exit_ok;
}

int run_geodesic(const RunOptions& opt, const ProblemConfig& cfg,
                 std::ostream& out) {
    const AzimuthalMetric metric{cfg.space};
    GeodesicOptions g = opt.geodesic;
    if (g.r0 < 0.0) {
        g.r0 = (cfg.space.kind == WarpKind::Spherical)
                   ? 0.5 * M_PI / std::sqrt(cfg.space.curvature)
                   : 1.0;
    }
    if (std::isnan(g.vtheta0)) g.vtheta0 = 1.0 / metric.warp(g.r0);

    const ParticleState start{g.r0, g.theta0, g.vr0, g.vtheta0, 1.0};
    const Trajectory traj = integrate_particle(start, metric, nullptr, g.dt, g.steps);
    write_trajectory_csv((fs::path{opt.out_dir} / "trajectory.csv").string(),
                         traj, metric);
    if (!opt.quiet) {
        const auto& last = traj.states.back();
        out << "steps completed = " << traj.states.size() - 1 << "\n"
            << "completed = " << (traj.completed ? "yes" : "no") << "\n"
            << "final r = " << format_double(last.r) << "\n"
            << "speed2 drift = "
            << format_double(speed_squared(last, metric) -
                             speed_squared(traj.states.front(), metric))
            << "\n";
    }
    return traj.completed ? exit_ok : exit_blowup;
}

int run_check_gradients(const RunOptions& opt, std::ostream& out) {
    const double err = gradient_check_max_error(100, 1e-5, opt.seed);
    out << "max relative error = " << format_double(err) << "\n";
    return err < 1e-6 ? exit_ok : exit_check_failed;
}

int dispatch(const RunOptions& opt, std::ostream& out, std::ostream& err);

int run_sweep(const RunOptions& opt, std::ostream& out) {
    const auto eq = opt.sweep.find('=');
    if (eq == std::string::npos)
        throw ConfigError(0, "--sweep expects key=v1,v2,...");
    const std::string key = opt.sweep.substr(0, eq);
    std::vector<std::string> values;
    std::stringstream ss(opt.sweep.substr(eq + 1));
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) values.push_back(item);
    if (values.empty()) throw ConfigError(0, "--sweep has no values");

    struct Child {
        std::string value;
        std::future<int> code;
        std::shared_ptr<std::ostringstream> log;
    };
    std::vector<Child> children;
    for (const auto& value : values) {
        RunOptions sub = opt;
        sub.sweep.clear();
        sub.overrides.push_back(key + "=" + value);
        sub.out_dir = (fs::path{opt.out_dir} / (key + "=" + value)).string();
        auto log = std::make_shared<std::ostringstream>();
        children.push_back({value,
                            std::async(std::launch::async,
                                       [sub, log] { return dispatch(sub, *log, *log); }),
                            log});
    }
    int worst = exit_ok;
    for (auto& child : children) {
        const int code = child.code.get();
        worst = std::max(worst, code);
        if (!opt.quiet)
            out << "[" << key << "=" << child.value << "] exit " << code << "\n"
                << child.log->str();
    }
    return worst;
}

int dispatch(const RunOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        fs::create_directories(opt.out_dir);
        if (!opt.sweep.empty()) return run_sweep(opt, out);
        if (opt.subcommand == "check-gradients") return run_check_gradients(opt, out);

        const ProblemConfig cfg = make_config(opt);
        if (opt.subcommand == "equilibrium") return run_equilibrium(opt, cfg, out);
        if (opt.subcommand == "simulate") return run_simulate(opt, cfg, out);
        if (opt.subcommand == "geodesic") return run_geodesic(opt, cfg, out);
        err << "error: kind=usage msg=\"unknown subcommand " << opt.subcommand
            << "\"\n";
        return exit_usage;
    } catch (const ConfigError& e) {
        err << "error: kind=config msg=\"" << e.what() << "\"\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: kind=config msg=\"" << e.what() << "\"\n";
        return exit_usage;
    } catch (const ConvergenceError& e) {
        err << "error: kind=convergence msg=\"" << e.what() << "\"\n";
        return exit_convergence;
    } catch (const BlowUpError& e) {
        err << "error: kind=blowup msg=\"" << e.what() << "\"\n";
        return exit_blowup;
    } catch (const IoError& e) {
        err << "error: kind=io msg=\"" << e.what() << "\"\n";
        return exit_io;
    } catch (const fs::filesystem_error& e) {
        err << "error: kind=io msg=\"" << e.what() << "\"\n";
        return exit_io;
    } catch (const std::exception& e) {
        err << "error: kind=runtime msg=\"" << e.what() << "\"\n";
        return exit_convergence;
    }
}

}  // namespace

int run(const RunOptions& options, std::ostream& out, std::ostream& err) {
    return dispatch(options, out, err);
}

}  // namespace curvedyn::cli

#include <CLI11.hpp>
#include <iostream>

#include "curvedyn/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Elastodynamics of residually-stressed annuli on constant-curvature surfaces"};
    app.require_subcommand(1);

    curvedyn::cli::RunOptions opt;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config_path, "Config file (key = value lines)");
        sub->add_option("--out", opt.out_dir, "Output directory")->capture_default_str();
        sub->add_option("--set", opt.overrides, "Override config entries (key=value)");
        sub->add_flag("--quiet", opt.quiet, "Suppress progress output");
        sub->add_option("--sweep", opt.sweep,
                        "Run once per value, concurrently (key=v1,v2,...)");
    };

    add_common(app.add_subcommand("equilibrium",
                                  "Solve the static boundary-value problem"));
    add_common(app.add_subcommand("simulate", "Integrate the radial wave equation"));

    auto* geo = app.add_subcommand("geodesic", "Integrate a point-mass geodesic");
    add_common(geo);
    geo->add_option("--r0", opt.geodesic.r0, "Start radius (default: equator)");
    geo->add_option("--theta0", opt.geodesic.theta0, "Start angle");
    geo->add_option("--vr0", opt.geodesic.vr0, "Initial radial velocity");
    geo->add_option("--vtheta0", opt.geodesic.vtheta0,
                    "Initial angular velocity (default: unit speed)");
    geo->add_option("--dt", opt.geodesic.dt, "Time step")->capture_default_str();
    geo->add_option("--steps", opt.geodesic.steps, "Step count")->capture_default_str();

    auto* check = app.add_subcommand("check-gradients",
                                     "Compare closed-form stress against finite differences");
    add_common(check);
    check->add_option("--seed", opt.seed, "Random jet seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    opt.subcommand = app.get_subcommands().front()->get_name();
    return curvedyn::cli::run(opt, std::cout, std::cerr);
}

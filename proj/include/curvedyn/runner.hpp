#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "curvedyn/solver.hpp"

namespace curvedyn::cli {

struct GeodesicOptions {
    // Negative r0 selects a default start: the equator for a spherical
    // space profile, r = 1 otherwise.
    double r0 = -1.0;
    double theta0 = 0.0;
    double vr0 = 0.0;
    // NaN selects unit azimuthal speed, vtheta = 1/warp(r0).
    double vtheta0 = std::numeric_limits<double>::quiet_NaN();
    double dt = 1e-3;
    int steps = 10000;
};

struct RunOptions {
    std::string subcommand;  // equilibrium | simulate | geodesic | check-gradients
    std::string config_path;  // empty -> built-in defaults
    std::string out_dir = ".";
    std::vector<std::string> overrides;  // "key=value"
    bool quiet = false;
    unsigned seed = 20240817;  // check-gradients jets
    GeodesicOptions geodesic;
    std::string sweep;  // "key=v1,v2,..." -> concurrent runs, one per value
};

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,
    exit_convergence = 3,
    exit_blowup = 4,
    exit_io = 5,
    exit_check_failed = 6,
};

/// Max relative disagreement between the closed-form stress density and the
/// finite-difference fiber derivative over `count` seeded random jets.
double gradient_check_max_error(int count, double h, unsigned seed);

/// Executes one subcommand; writes artifacts under options.out_dir, human
/// output to `out` and a single machine-parsable line to `err` on failure.
int run(const RunOptions& options, std::ostream& out, std::ostream& err);

}  // namespace curvedyn::cli

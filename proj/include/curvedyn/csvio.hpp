#pragma once

#include <stdexcept>
#include <string>

#include "curvedyn/pointdyn.hpp"
#include "curvedyn/solver.hpp"

namespace curvedyn {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Locale-independent decimal formatting with 17 significant digits.
std::string format_double(double value);

/// Snapshot CSV, header `R,f,ft`, one row per node.
void write_snapshot_csv(const std::string& path, const RadialGrid& grid,
                        const RadialState& state);

/// Series CSV, header `t,distance,kinetic,potential,total`.
void write_series_csv(const std::string& path,
                      const std::vector<SeriesSample>& series);

/// Trajectory CSV, header `t,r,theta,vr,vtheta,speed2`.
void write_trajectory_csv(const std::string& path, const Trajectory& trajectory,
                          const AzimuthalMetric& metric);

}  // namespace curvedyn

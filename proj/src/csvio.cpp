#include "curvedyn/csvio.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace curvedyn {

std::string format_double(double value) {
    char buf[40];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return {buf, ptr};
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    return out;
}

}  // namespace

void write_snapshot_csv(const std::string& path, const RadialGrid& grid,
                        const RadialState& state) {
    auto out = open_out(path);
    out << "R,f,ft\n";
    for (int j = 0; j < grid.n; ++j)
        out << format_double(grid.node(j)) << ',' << format_double(state.f[j])
            << ',' << format_double(state.f_t[j]) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

void write_series_csv(const std::string& path,
                      const std::vector<SeriesSample>& series) {
    auto out = open_out(path);
    out << "t,distance,kinetic,potential,total\n";
    for (const auto& s : series)
        out << format_double(s.t) << ',' << format_double(s.distance) << ','
            << format_double(s.energy.kinetic) << ','
            << format_double(s.energy.potential) << ','
            << format_double(s.energy.total) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

void write_trajectory_csv(const std::string& path, const Trajectory& trajectory,
                          const AzimuthalMetric& metric) {
    auto out = open_out(path);
    out << "t,r,theta,vr,vtheta,speed2\n";
    for (std::size_t i = 0; i < trajectory.states.size(); ++i) {
        const auto& s = trajectory.states[i];
        out << format_double(trajectory.time[i]) << ',' << format_double(s.r)
            << ',' << format_double(s.theta) << ',' << format_double(s.vr) << ','
            << format_double(s.vtheta) << ','
            << format_double(speed_squared(s, metric)) << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace curvedyn

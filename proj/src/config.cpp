#include "curvedyn/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "curvedyn/csvio.hpp"

namespace curvedyn {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view value, int line, const std::string& key) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError(line, "non-numeric value '" + std::string(value) +
                                    "' for key " + key);
    return out;
}

int parse_int(std::string_view value, int line, const std::string& key) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError(line, "non-integer value '" + std::string(value) +
                                    "' for key " + key);
    return out;
}

WarpKind parse_kind(std::string_view value, int line, const std::string& key) {
    if (value == "spherical") return WarpKind::Spherical;
    if (value == "hyperbolic") return WarpKind::Hyperbolic;
    if (value == "flat") return WarpKind::Flat;
    throw ConfigError(line, "unknown profile kind '" + std::string(value) +
                                "' for key " + key +
                                " (expected spherical|hyperbolic|flat)");
}

void set_key(ProblemConfig& cfg, const std::string& key, std::string_view value,
             int line) {
    if (key == "body.kind") {
        cfg.body.kind = parse_kind(value, line, key);
        if (cfg.body.kind == WarpKind::Flat) cfg.body.curvature = 0.0;
    } else if (key == "body.curvature") {
        cfg.body.curvature = parse_number(value, line, key);
    } else if (key == "space.kind") {
        cfg.space.kind = parse_kind(value, line, key);
        if (cfg.space.kind == WarpKind::Flat) cfg.space.curvature = 0.0;
    } else if (key == "space.curvature") {
        cfg.space.curvature = parse_number(value, line, key);
    } else if (key == "grid.r_min") {
        cfg.grid.r_min = parse_number(value, line, key);
    } else if (key == "grid.r_max") {
        cfg.grid.r_max = parse_number(value, line, key);
    } else if (key == "grid.n") {
        cfg.grid.n = parse_int(value, line, key);
    } else if (key == "dt") {
        if (value == "auto") {
            cfg.dt_auto = true;
            cfg.dt = 0.0;
        } else {
            cfg.dt_auto = false;
            cfg.dt = parse_number(value, line, key);
        }
    } else if (key == "t_end") {
        cfg.t_end = parse_number(value, line, key);
    } else if (key == "mass_growth_rate") {
        cfg.mass_growth_rate = parse_number(value, line, key);
    } else if (key == "perturbation.amplitude") {
        cfg.perturbation.amplitude = parse_number(value, line, key);
    } else if (key == "perturbation.mode") {
        cfg.perturbation.mode = parse_int(value, line, key);
    } else if (key == "output.interval") {
        cfg.output_interval = parse_number(value, line, key);
    } else {
        throw ConfigError(line, "unknown key '" + key + "'");
    }
}

void validate_profiles(const ProblemConfig& cfg, int line) {
    const auto check = [&](const CurvatureProfile& p, const char* which) {
        if (p.kind != WarpKind::Flat && !(p.curvature > 0.0))
            throw ConfigError(line, std::string(which) +
                                        ".curvature must be > 0 for a " +
                                        to_string(p.kind) + " profile");
        if (p.kind == WarpKind::Flat && p.curvature != 0.0)
            throw ConfigError(line, std::string(which) +
                                        ".curvature must be 0 for a flat profile");
    };
    check(cfg.body, "body");
    check(cfg.space, "space");
}

}  // namespace

ProblemConfig parse_config(std::string_view text) {
    ProblemConfig cfg;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        ++line_no;
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;

        const auto hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(line_no, "malformed line (expected key = value)");
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(line_no, "empty key");
        if (value.empty()) throw ConfigError(line_no, "empty value for key " + key);
        set_key(cfg, key, value, line_no);
    }

    validate_profiles(cfg, 0);
    try {
        cfg.validate();
    } catch (const std::invalid_argument& err) {
        throw ConfigError(0, err.what());
    }
    return cfg;
}

void apply_override(ProblemConfig& cfg, std::string_view key,
                    std::string_view value) {
    set_key(cfg, std::string(trim(key)), trim(value), 0);
}

std::string serialize_config(const ProblemConfig& cfg) {
    std::ostringstream out;
    out << "body.kind = " << to_string(cfg.body.kind) << "\n";
    out << "body.curvature = " << format_double(cfg.body.curvature) << "\n";
    out << "space.kind = " << to_string(cfg.space.kind) << "\n";
    out << "space.curvature = " << format_double(cfg.space.curvature) << "\n";
    out << "grid.r_min = " << format_double(cfg.grid.r_min) << "\n";
    out << "grid.r_max = " << format_double(cfg.grid.r_max) << "\n";
    out << "grid.n = " << cfg.grid.n << "\n";
    if (cfg.dt_auto)
        out << "dt = auto\n";
    else
        out << "dt = " << format_double(cfg.dt) << "\n";
    out << "t_end = " << format_double(cfg.t_end) << "\n";
    out << "mass_growth_rate = " << format_double(cfg.mass_growth_rate) << "\n";
    out << "perturbation.amplitude = " << format_double(cfg.perturbation.amplitude)
        << "\n";
    out << "perturbation.mode = " << cfg.perturbation.mode << "\n";
    out << "output.interval = " << format_double(cfg.output_interval) << "\n";
    return out.str();
}

ProblemConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace curvedyn

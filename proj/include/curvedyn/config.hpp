#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "curvedyn/solver.hpp"

namespace curvedyn {

struct ConfigError : std::runtime_error {
    ConfigError(int line_number, const std::string& message)
        : std::runtime_error("config line " + std::to_string(line_number) + ": " +
                             message),
          line(line_number) {}
    int line;
};

/// Parses a line-oriented `key = value` document ('#' starts a comment).
/// Missing keys fall back to the defaults of ProblemConfig; unknown keys,
/// malformed lines and domain-invalid values raise ConfigError with the
/// offending line number.
ProblemConfig parse_config(std::string_view text);

/// Applies a single `key=value` override (no line context, line = 0 in errors).
void apply_override(ProblemConfig& config, std::string_view key,
                    std::string_view value);

/// Emits a document that parse_config maps back to the same config.
std::string serialize_config(const ProblemConfig& config);

ProblemConfig load_config_file(const std::string& path);

}  // namespace curvedyn

#pragma once

#include <string>
#include <string_view>

#include "tiqm/sweep.hpp"

// Line-oriented `key = value` configuration with `#` comments.
// Keys: quantity, k, theta, kb_ratio, kj_ratio, rho_min, rho_max, rho_steps,
// k_min, k_max, k_steps, phi, variant, eigen_mode, seed. List keys take
// comma-separated values.
namespace tiqm::config {

// Real number or a multiple of pi: `0.5`, `pi`, `pi/4`, `3pi/8`, `3*pi/8`.
// Throws Error(config).
double parse_angle(std::string_view text);

// Applies one key to the spec. Throws Error(config) for unknown keys or bad values.
void apply_setting(sweep::SweepSpec& spec, std::string_view key, std::string_view value);

// Applies every line of `text` over `spec`; diagnostics name `source:line`.
void apply_config_text(sweep::SweepSpec& spec, std::string_view text,
                       const std::string& source = "<config>");

// Reads and applies a file. Throws Error(config) when unreadable.
void apply_config_file(sweep::SweepSpec& spec, const std::string& path);

}  // namespace tiqm::config

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcjulia/render.hpp"

namespace bcjulia {

/// Run settings shared by the CLI subcommands. Sources are layered as
/// defaults, then a key=value config file, then command-line flags.
struct Settings {
    int max_iter = 500;
    /// Unset: 1e-3 for point queries, half the cell pitch for slices.
    std::optional<double> de_threshold;
    double escape_safety = 1.0;
    int resolution = 65;
    double window_lo = -1.5;
    double window_hi = 1.5;
    Palette palette = default_palette();
    Rgb background{16, 16, 24};
    int threads = 0;  // 0: hardware concurrency

    IterParams iter_params() const;
    int thread_count() const;
};

/// Known config keys. Palette entries are `palette.<CLASS>` with a class
/// label such as palette.J2.
const std::vector<std::string>& config_keys();

/// Applies one key/value pair; throws ParseError naming unknown keys or
/// malformed values.
void apply_setting(Settings& s, std::string_view key, std::string_view value);

/// Applies a line-oriented `key = value` text; '#' starts a comment.
void apply_config_text(Settings& s, std::string_view text);
void apply_config_file(Settings& s, const std::string& path);

Rgb parse_rgb(std::string_view text);
/// "lo:hi"
std::pair<double, double> parse_window(std::string_view text);

}  // namespace bcjulia

#include "bcjulia/config.hpp"

#include <fmt/format.h>

#include <fstream>
#include <sstream>

#include "bcjulia/parallel.hpp"
#include "bcjulia/parse.hpp"

namespace bcjulia {
namespace {

int parse_int(std::string_view key, std::string_view value) {
    const double v = parse_real(value);
    if (v != static_cast<double>(static_cast<long long>(v)))
        throw ParseError(fmt::format("{}: expected an integer, got '{}'", key, value));
    return static_cast<int>(v);
}

}  // namespace

IterParams Settings::iter_params() const {
    IterParams p;
    p.max_iter = max_iter;
    p.escape_safety = escape_safety;
    if (de_threshold) p.de_threshold = *de_threshold;
    return p;
}

int Settings::thread_count() const { return threads > 0 ? threads : default_thread_count(); }

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "max_iter", "de_threshold", "escape_safety", "resolution", "window", "background", "threads",
        "palette.J2", "palette.K2_INTERIOR", "palette.F2_BOUNDED", "palette.F2_UNBOUNDED_MIXED",
        "palette.F2_UNBOUNDED"};
    return keys;
}

Rgb parse_rgb(std::string_view text) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw ParseError(fmt::format("colour needs r,g,b: '{}'", text));
    std::array<std::uint8_t, 3> c{};
    for (std::size_t k = 0; k < 3; ++k) {
        const int v = parse_int("colour", parts[k]);
        if (v < 0 || v > 255) throw ParseError(fmt::format("colour channel out of range: '{}'", parts[k]));
        c[k] = static_cast<std::uint8_t>(v);
    }
    return {c[0], c[1], c[2]};
}

std::pair<double, double> parse_window(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) throw ParseError(fmt::format("window needs lo:hi, got '{}'", text));
    const double lo = parse_real(parts[0]);
    const double hi = parse_real(parts[1]);
    if (!(hi > lo)) throw ParseError(fmt::format("window must satisfy lo < hi, got '{}'", text));
    return {lo, hi};
}

void apply_setting(Settings& s, std::string_view key, std::string_view value) {
    value = trim(value);
    if (key == "max_iter") {
        s.max_iter = parse_int(key, value);
        if (s.max_iter < 1) throw ParseError("max_iter must be >= 1");
    } else if (key == "de_threshold") {
        s.de_threshold = parse_real(value);
        if (!(*s.de_threshold > 0.0)) throw ParseError("de_threshold must be > 0");
    } else if (key == "escape_safety") {
        s.escape_safety = parse_real(value);
        if (!(s.escape_safety > 0.0)) throw ParseError("escape_safety must be > 0");
    } else if (key == "resolution") {
        s.resolution = parse_int(key, value);
        if (s.resolution < 2) throw ParseError("resolution must be >= 2");
    } else if (key == "window") {
        std::tie(s.window_lo, s.window_hi) = parse_window(value);
    } else if (key == "background") {
        s.background = parse_rgb(value);
    } else if (key == "threads") {
        s.threads = parse_int(key, value);
        if (s.threads < 0) throw ParseError("threads must be >= 0");
    } else if (key.starts_with("palette.")) {
        const auto cls = parse_bicomplex_class(key.substr(8));
        if (!cls) throw ParseError(fmt::format("unknown config key '{}'", key));
        s.palette[static_cast<std::size_t>(*cls)] = parse_rgb(value);
    } else {
        throw ParseError(fmt::format("unknown config key '{}'", key));
    }
}

void apply_config_text(Settings& s, std::string_view text) {
    std::istringstream in{std::string(text)};
    int lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        std::string_view v = line;
        if (const auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
        v = trim(v);
        if (v.empty()) continue;
        const auto eq = v.find('=');
        if (eq == std::string_view::npos) throw ParseError(fmt::format("config line {}: expected key=value", lineno));
        apply_setting(s, trim(v.substr(0, eq)), v.substr(eq + 1));
    }
}

void apply_config_file(Settings& s, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(fmt::format("cannot read config file '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    apply_config_text(s, ss.str());
}

}  // namespace bcjulia

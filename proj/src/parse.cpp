#include "bcjulia/parse.hpp"

#include <fmt/format.h>

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace bcjulia {

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    return text;
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t at = text.find(sep, start);
        out.emplace_back(trim(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
        if (at == std::string_view::npos) break;
        start = at + 1;
    }
    return out;
}

double parse_real(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
        throw ParseError(fmt::format("invalid real number '{}'", text));
    return v;
}

Bicomplex parse_bicomplex(std::string_view text) {
    text = trim(text);
    if (text.starts_with("e1e2(") && text.ends_with(")")) {
        const auto halves = split(text.substr(5, text.size() - 6), ';');
        if (halves.size() != 2) throw ParseError(fmt::format("idempotent literal needs two ';'-separated parts: '{}'", text));
        std::array<Complex, 2> w{};
        for (std::size_t k = 0; k < 2; ++k) {
            const auto parts = split(halves[k], ',');
            if (parts.size() != 2) throw ParseError(fmt::format("idempotent component needs re,im: '{}'", halves[k]));
            w[k] = Complex{parse_real(parts[0]), parse_real(parts[1])};
        }
        return from_idempotent({w[0], w[1]});
    }
    if (text.starts_with("(") && text.ends_with(")")) {
        const auto parts = split(text.substr(1, text.size() - 2), ',');
        if (parts.size() != 4) throw ParseError(fmt::format("bicomplex literal needs four reals: '{}'", text));
        return Bicomplex::from_coords(parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2]),
                                      parse_real(parts[3]));
    }
    throw ParseError(fmt::format("unrecognised bicomplex literal '{}'", text));
}

BicomplexPoly parse_poly(std::span<const std::string> tokens) {
    if (tokens.empty()) throw ParseError("empty polynomial specification");
    if (tokens[0] == "quad") {
        if (tokens.size() != 2 || !tokens[1].starts_with("c="))
            throw ParseError("expected 'quad c=<bicomplex>'");
        return BicomplexPoly::quadratic(parse_bicomplex(std::string_view(tokens[1]).substr(2)));
    }
    if (tokens[0] == "coeffs") {
        if (tokens.size() < 2) throw ParseError("'coeffs' needs at least one coefficient");
        std::vector<Bicomplex> c;
        for (std::size_t i = 1; i < tokens.size(); ++i) c.push_back(parse_bicomplex(tokens[i]));
        return BicomplexPoly(std::move(c));
    }
    throw ParseError(fmt::format("unknown polynomial form '{}' (expected quad or coeffs)", tokens[0]));
}

BicomplexPoly parse_poly(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    return parse_poly(tokens);
}

}  // namespace bcjulia

#pragma once

// Text formats for polynomials and points.
//
//   bicomplex literal:  (w0,w1,w2,w3)            four reals, w0 + w1 i1 + w2 i2 + w3 j
//                       e1e2(a,b;c,d)            (a + b i1) e1 + (c + d i1) e2
//   polynomial:         quad c=<literal>         w^2 + c
//                       coeffs <a0> <a1> ... <ad>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcjulia/poly.hpp"

namespace bcjulia {

Bicomplex parse_bicomplex(std::string_view text);
BicomplexPoly parse_poly(std::span<const std::string> tokens);
BicomplexPoly parse_poly(std::string_view text);

/// Strict real-number parse of the whole string.
double parse_real(std::string_view text);
std::vector<std::string> split(std::string_view text, char sep);
std::string_view trim(std::string_view text);

}  // namespace bcjulia

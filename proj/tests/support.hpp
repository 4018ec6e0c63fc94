#pragma once

// Test-only helpers. The oracles here work on the four real coordinates and
// the multiplication table of the units, independent of the library's
// (z1, z2) and idempotent code paths.

#include <array>
#include <cmath>
#include <random>

#include "bcjulia/core.hpp"

namespace bcjulia::testing {

using Coords = std::array<double, 4>;  // 1, i1, i2, j

/// Product of basis units e_a * e_b = sign * e_index, from the unit table:
/// i1^2 = i2^2 = -1, j^2 = 1, i1 i2 = j, i1 j = -i2, i2 j = -i1.
struct UnitProduct {
    int index;
    double sign;
};

inline constexpr UnitProduct kTable[4][4] = {
    {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
    {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
    {{2, 1}, {3, 1}, {0, -1}, {1, -1}},
    {{3, 1}, {2, -1}, {1, -1}, {0, 1}},
};

inline Coords table_mul(const Coords& a, const Coords& b) {
    Coords out{};
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) out[kTable[p][q].index] += kTable[p][q].sign * a[p] * b[q];
    return out;
}

inline Bicomplex table_mul(const Bicomplex& a, const Bicomplex& b) {
    const Coords c = table_mul(a.coords(), b.coords());
    return Bicomplex::from_coords(c[0], c[1], c[2], c[3]);
}

inline double distance(const Bicomplex& a, const Bicomplex& b) {
    const Coords x = a.coords(), y = b.coords();
    double s = 0;
    for (int k = 0; k < 4; ++k) s += (x[k] - y[k]) * (x[k] - y[k]);
    return std::sqrt(s);
}

inline bool close(const Bicomplex& a, const Bicomplex& b, double tol) { return distance(a, b) <= tol; }
inline bool close(const Complex& a, const Complex& b, double tol) { return std::abs(a - b) <= tol; }

inline Bicomplex random_bicomplex(std::mt19937_64& rng, double half) {
    std::uniform_real_distribution<double> u(-half, half);
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    return Bicomplex::from_coords(a, b, c, d);
}

}  // namespace bcjulia::testing

#pragma once

// Bicomplex numbers w = z1 + z2*i2 with z1, z2 in C(i1).
//
// Units: i1^2 = i2^2 = -1, j = i1*i2 = i2*i1, j^2 = 1. The four real
// coordinates are w = w0 + w1*i1 + w2*i2 + w3*j, i.e. z1 = w0 + w1*i1 and
// z2 = w2 + w3*i1.
//
// Idempotent coordinates: w = w1*e1 + w2*e2 with e1 = (1+j)/2, e2 = (1-j)/2,
// w1 = z1 - z2*i1 and w2 = z1 + z2*i1. Ring operations act componentwise there.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

#include "bcjulia/errors.hpp"

namespace bcjulia {

using Complex = std::complex<double>;

inline constexpr double kDefaultNullConeTol = 1e-12;

struct Bicomplex {
    Complex z1{};
    Complex z2{};

    static constexpr Bicomplex from_coords(double w0, double w1, double w2, double w3) {
        return {Complex{w0, w1}, Complex{w2, w3}};
    }
    constexpr std::array<double, 4> coords() const {
        return {z1.real(), z1.imag(), z2.real(), z2.imag()};
    }

    friend constexpr bool operator==(const Bicomplex&, const Bicomplex&) = default;
};

struct IdempotentPair {
    Complex w1{};
    Complex w2{};

    friend constexpr bool operator==(const IdempotentPair&, const IdempotentPair&) = default;
};

/// Hyperbolic (duplex) number x + y*j.
struct Duplex {
    double x = 0.0;
    double y = 0.0;
};

/// Value of |w|^2 in C(i2), stored as real part and i2 coefficient.
struct ModSqI2 {
    double re = 0.0;
    double i2 = 0.0;
};

/// Conjugation type. none is the identity; bar conjugates both complex
/// coordinates; swap negates z2; swap_bar does both.
enum class ConjKind : std::uint8_t { none = 0, bar = 1, swap = 2, swap_bar = 3 };

/// Composition in the Klein four-group. Each kind is its own inverse and the
/// product of two distinct non-identity kinds is the third.
constexpr ConjKind compose(ConjKind a, ConjKind b) {
    return static_cast<ConjKind>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

namespace units {
inline constexpr Bicomplex one{Complex{1, 0}, Complex{0, 0}};
inline constexpr Bicomplex i1{Complex{0, 1}, Complex{0, 0}};
inline constexpr Bicomplex i2{Complex{0, 0}, Complex{1, 0}};
inline constexpr Bicomplex j{Complex{0, 0}, Complex{0, 1}};
inline constexpr Bicomplex e1{Complex{0.5, 0}, Complex{0, 0.5}};
inline constexpr Bicomplex e2{Complex{0.5, 0}, Complex{0, -0.5}};
}  // namespace units

inline bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
inline bool is_finite(const Bicomplex& w) { return is_finite(w.z1) && is_finite(w.z2); }

inline Bicomplex add(const Bicomplex& a, const Bicomplex& b) { return {a.z1 + b.z1, a.z2 + b.z2}; }
inline Bicomplex sub(const Bicomplex& a, const Bicomplex& b) { return {a.z1 - b.z1, a.z2 - b.z2}; }
inline Bicomplex neg(const Bicomplex& a) { return {-a.z1, -a.z2}; }
inline Bicomplex scale(const Complex& s, const Bicomplex& a) { return {s * a.z1, s * a.z2}; }

inline Bicomplex mul(const Bicomplex& a, const Bicomplex& b) {
    return {a.z1 * b.z1 - a.z2 * b.z2, a.z1 * b.z2 + a.z2 * b.z1};
}

inline Bicomplex operator+(const Bicomplex& a, const Bicomplex& b) { return add(a, b); }
inline Bicomplex operator-(const Bicomplex& a, const Bicomplex& b) { return sub(a, b); }
inline Bicomplex operator-(const Bicomplex& a) { return neg(a); }
inline Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) { return mul(a, b); }

inline Bicomplex conj(ConjKind k, const Bicomplex& w) {
    switch (k) {
        case ConjKind::none: return w;
        case ConjKind::bar: return {std::conj(w.z1), std::conj(w.z2)};
        case ConjKind::swap: return {w.z1, -w.z2};
        case ConjKind::swap_bar: return {std::conj(w.z1), -std::conj(w.z2)};
    }
    return w;
}

/// w * w^{swap} = z1^2 + z2^2, a value in C(i1).
inline Complex mod_sq_i1(const Bicomplex& w) { return w.z1 * w.z1 + w.z2 * w.z2; }

/// w * w^{bar} = (|z1|^2 - |z2|^2) + 2 Re(z1 conj(z2)) i2.
inline ModSqI2 mod_sq_i2(const Bicomplex& w) {
    return {std::norm(w.z1) - std::norm(w.z2), 2.0 * (w.z1 * std::conj(w.z2)).real()};
}

/// w * w^{swap_bar} = (|z1|^2 + |z2|^2) - 2 Im(z1 conj(z2)) j.
inline Duplex mod_sq_j(const Bicomplex& w) {
    return {std::norm(w.z1) + std::norm(w.z2), -2.0 * (w.z1 * std::conj(w.z2)).imag()};
}

/// Euclidean norm in R^4.
inline double norm(const Bicomplex& w) { return std::sqrt(std::norm(w.z1) + std::norm(w.z2)); }

inline IdempotentPair to_idempotent(const Bicomplex& w) {
    const Complex z2i1{-w.z2.imag(), w.z2.real()};
    return {w.z1 - z2i1, w.z1 + z2i1};
}

inline Bicomplex from_idempotent(const IdempotentPair& p) {
    const Complex sum = p.w1 + p.w2;
    const Complex diff = p.w1 - p.w2;
    // z2 = (w1 - w2) * i1 / 2
    return {sum * 0.5, Complex{-diff.imag() * 0.5, diff.real() * 0.5}};
}

/// Norm computed from idempotent coordinates: sqrt((|w1|^2 + |w2|^2)/2).
inline double idempotent_norm(const IdempotentPair& p) {
    return std::sqrt(0.5 * (std::norm(p.w1) + std::norm(p.w2)));
}

/// True when w is a zero divisor up to rounding: the smaller idempotent
/// component is at most tol * max(1, norm(w)).
bool is_null_cone(const Bicomplex& w, double tol = kDefaultNullConeTol);

/// w^{-1} = w^{swap} / |w|^2_{i1}. Throws NullConeError for zero divisors.
Bicomplex inverse(const Bicomplex& w, double tol = kDefaultNullConeTol);

/// a / b via inverse(b).
Bicomplex divide(const Bicomplex& a, const Bicomplex& b, double tol = kDefaultNullConeTol);

/// a / b term by term in idempotent coordinates.
Bicomplex divide_idempotent(const Bicomplex& a, const Bicomplex& b, double tol = kDefaultNullConeTol);

}  // namespace bcjulia

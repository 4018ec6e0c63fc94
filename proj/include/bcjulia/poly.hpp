#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bcjulia/core.hpp"

namespace bcjulia {

/// Polynomial over C(i1), coefficients lowest degree first. Trailing exact
/// zeros are trimmed; the zero polynomial keeps a single zero coefficient and
/// reports degree -1.
class ComplexPoly {
public:
    ComplexPoly() : coeffs_{Complex{}} {}
    explicit ComplexPoly(std::vector<Complex> coeffs);

    int degree() const { return degree_; }
    bool is_zero() const { return degree_ < 0; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    const Complex& leading() const { return coeffs_.back(); }

    Complex operator()(const Complex& z) const;
    /// p(z) and p'(z) in one Horner pass.
    std::pair<Complex, Complex> eval_with_derivative(const Complex& z) const;

    ComplexPoly derivative() const;

    friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
    friend bool operator==(const ComplexPoly& a, const ComplexPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Complex> coeffs_;
    int degree_ = -1;
};

/// Polynomial over the bicomplex numbers, coefficients lowest degree first.
class BicomplexPoly {
public:
    BicomplexPoly() : coeffs_{Bicomplex{}} {}
    explicit BicomplexPoly(std::vector<Bicomplex> coeffs);

    /// w^2 + c
    static BicomplexPoly quadratic(const Bicomplex& c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Bicomplex>& coeffs() const { return coeffs_; }
    const Bicomplex& leading() const { return coeffs_.back(); }

    friend BicomplexPoly operator*(const BicomplexPoly& a, const BicomplexPoly& b);

private:
    std::vector<Bicomplex> coeffs_;
};

/// Horner evaluation in bicomplex arithmetic.
Bicomplex eval_direct(const BicomplexPoly& p, const Bicomplex& w);

/// Coefficientwise projection onto idempotent component `which` (1 or 2).
ComplexPoly project(const BicomplexPoly& p, int which);

/// Evaluates the two projected polynomials on the idempotent components of w
/// and recombines them.
Bicomplex eval_idempotent(const BicomplexPoly& p, const Bicomplex& w);

BicomplexPoly derivative(const BicomplexPoly& p);

/// Leading coefficient is a zero divisor.
bool is_degenerate(const BicomplexPoly& p, double tol = kDefaultNullConeTol);

/// max(2, (1 + sum_{k<d} |a_k|) / |a_d|). Beyond this radius every orbit
/// grows geometrically: |p(z)| >= (|a_d||z| - sum_{k<d}|a_k|) |z| with the
/// bracket > 1. Throws DegreeError for degree < 2.
double escape_radius(const ComplexPoly& p);

/// Human-readable form such as "z^2+0.26" or "z^2+(-0.123+0.745i1)".
std::string to_string(const ComplexPoly& p);

}  // namespace bcjulia

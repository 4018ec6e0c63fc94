#include "bcjulia/poly.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace bcjulia {
namespace {

Complex project_scalar(const Bicomplex& a, int which) {
    const IdempotentPair p = to_idempotent(a);
    if (which == 1) return p.w1;
    if (which == 2) return p.w2;
    throw std::invalid_argument("projection index must be 1 or 2");
}

std::string format_complex(const Complex& z) {
    if (z.imag() == 0.0) return fmt::format("{:.12g}", z.real());
    if (z.real() == 0.0) return fmt::format("{:.12g}i1", z.imag());
    return fmt::format("({:.12g}{:+.12g}i1)", z.real(), z.imag());
}

}  // namespace

ComplexPoly::ComplexPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == Complex{}) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(Complex{});
    degree_ = coeffs_.back() == Complex{} ? -1 : static_cast<int>(coeffs_.size()) - 1;
}

Complex ComplexPoly::operator()(const Complex& z) const {
    Complex acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::pair<Complex, Complex> ComplexPoly::eval_with_derivative(const Complex& z) const {
    Complex value = coeffs_.back();
    Complex slope{};
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
        slope = slope * z + value;
        value = value * z + *it;
    }
    return {value, slope};
}

ComplexPoly ComplexPoly::derivative() const {
    if (coeffs_.size() <= 1) return ComplexPoly{};
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return ComplexPoly(std::move(d));
}

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
    std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[i + k] += a.coeffs_[i] * b.coeffs_[k];
    return ComplexPoly(std::move(out));
}

BicomplexPoly::BicomplexPoly(std::vector<Bicomplex> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == Bicomplex{}) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(Bicomplex{});
}

BicomplexPoly BicomplexPoly::quadratic(const Bicomplex& c) { return BicomplexPoly({c, Bicomplex{}, units::one}); }

BicomplexPoly operator*(const BicomplexPoly& a, const BicomplexPoly& b) {
    std::vector<Bicomplex> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[i + k] = out[i + k] + a.coeffs_[i] * b.coeffs_[k];
    return BicomplexPoly(std::move(out));
}

Bicomplex eval_direct(const BicomplexPoly& p, const Bicomplex& w) {
    const auto& c = p.coeffs();
    Bicomplex acc = c.back();
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it) acc = acc * w + *it;
    return acc;
}

ComplexPoly project(const BicomplexPoly& p, int which) {
    std::vector<Complex> out;
    out.reserve(p.coeffs().size());
    for (const Bicomplex& a : p.coeffs()) out.push_back(project_scalar(a, which));
    return ComplexPoly(std::move(out));
}

Bicomplex eval_idempotent(const BicomplexPoly& p, const Bicomplex& w) {
    const IdempotentPair q = to_idempotent(w);
    return from_idempotent({project(p, 1)(q.w1), project(p, 2)(q.w2)});
}

BicomplexPoly derivative(const BicomplexPoly& p) {
    const auto& c = p.coeffs();
    if (c.size() <= 1) return BicomplexPoly{};
    std::vector<Bicomplex> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = scale(Complex{static_cast<double>(k), 0.0}, c[k]);
    return BicomplexPoly(std::move(d));
}

bool is_degenerate(const BicomplexPoly& p, double tol) { return is_null_cone(p.leading(), tol); }

double escape_radius(const ComplexPoly& p) {
    if (p.degree() < 2) throw DegreeError(fmt::format("escape radius needs degree >= 2, got {}", p.degree()));
    double lower = 1.0;
    for (int k = 0; k < p.degree(); ++k) lower += std::abs(p.coeffs()[static_cast<std::size_t>(k)]);
    return std::max(2.0, lower / std::abs(p.leading()));
}

std::string to_string(const ComplexPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (int k = p.degree(); k >= 0; --k) {
        const Complex a = c[static_cast<std::size_t>(k)];
        if (a == Complex{}) continue;
        std::string mono = k == 0 ? "" : (k == 1 ? "z" : fmt::format("z^{}", k));
        std::string coef;
        if (k > 0 && a == Complex{1, 0}) {
            coef = "";
        } else if (k > 0 && a == Complex{-1, 0}) {
            coef = "-";
        } else {
            coef = format_complex(a);
            if (k > 0) coef += "*";
        }
        std::string term = coef + mono;
        if (!out.empty() && term.front() != '-') out += '+';
        out += term;
    }
    return out;
}

}  // namespace bcjulia

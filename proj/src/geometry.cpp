#include "bcjulia/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bcjulia {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

void check_region(const PlanarRegion& r) {
    std::visit(Overloaded{[](const Ball1& b) {
                              if (!(b.radius > 0.0)) throw std::invalid_argument("ball radius must be positive");
                          },
                          [](const Rect1& q) {
                              if (!(q.re_max > q.re_min) || !(q.im_max > q.im_min))
                                  throw std::invalid_argument("rectangle must be nonempty");
                          }},
               r);
}

}  // namespace

bool contains(const PlanarRegion& r, const Complex& z) {
    return std::visit(Overloaded{[&](const Ball1& b) { return std::abs(z - b.center) < b.radius; },
                                 [&](const Rect1& q) {
                                     return z.real() > q.re_min && z.real() < q.re_max && z.imag() > q.im_min &&
                                            z.imag() < q.im_max;
                                 }},
                      r);
}

bool contains_closed(const PlanarRegion& r, const Complex& z) {
    return std::visit(Overloaded{[&](const Ball1& b) { return std::abs(z - b.center) <= b.radius; },
                                 [&](const Rect1& q) {
                                     return z.real() >= q.re_min && z.real() <= q.re_max && z.imag() >= q.im_min &&
                                            z.imag() <= q.im_max;
                                 }},
                      r);
}

Complex region_center(const PlanarRegion& r) {
    return std::visit(Overloaded{[](const Ball1& b) { return b.center; },
                                 [](const Rect1& q) {
                                     return Complex{0.5 * (q.re_min + q.re_max), 0.5 * (q.im_min + q.im_max)};
                                 }},
                      r);
}

Discus::Discus(const Bicomplex& c, double r1_, double r2_) : center(c), r1(r1_), r2(r2_) {
    if (!(r1 > 0.0) || !(r2 > 0.0)) throw std::invalid_argument("discus radii must be positive");
}

TCartesian TCartesian::from_discus(const Discus& d) {
    return {project_region(d, 1), project_region(d, 2)};
}

bool discus_contains(const Discus& d, const Bicomplex& w) {
    const IdempotentPair p = to_idempotent(w - d.center);
    return std::abs(p.w1) < d.r1 && std::abs(p.w2) < d.r2;
}

bool discus_contains_closed(const Discus& d, const Bicomplex& w) {
    const IdempotentPair p = to_idempotent(w - d.center);
    return std::abs(p.w1) <= d.r1 && std::abs(p.w2) <= d.r2;
}

bool tcartesian_contains(const TCartesian& t, const Bicomplex& w) {
    const IdempotentPair p = to_idempotent(w);
    return contains(t.region1, p.w1) && contains(t.region2, p.w2);
}

bool tcartesian_contains_closed(const TCartesian& t, const Bicomplex& w) {
    const IdempotentPair p = to_idempotent(w);
    return contains_closed(t.region1, p.w1) && contains_closed(t.region2, p.w2);
}

PlanarRegion project_region(const TCartesian& t, int which) {
    if (which == 1) return t.region1;
    if (which == 2) return t.region2;
    throw std::invalid_argument("projection index must be 1 or 2");
}

Ball1 project_region(const Discus& d, int which) {
    const IdempotentPair c = to_idempotent(d.center);
    if (which == 1) return {c.w1, d.r1};
    if (which == 2) return {c.w2, d.r2};
    throw std::invalid_argument("projection index must be 1 or 2");
}

std::vector<Complex> region_samples(const PlanarRegion& r, int n) {
    if (n < 1) throw std::invalid_argument("sample count must be >= 1");
    check_region(r);
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(n));
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    const double inv_phi = 1.0 / std::numbers::phi;
    std::visit(Overloaded{[&](const Ball1& b) {
                              for (int i = 0; i < n; ++i) {
                                  const double rho = b.radius * std::sqrt(double(i) / n);
                                  out.push_back(b.center + std::polar(rho, i * golden_angle));
                              }
                          },
                          [&](const Rect1& q) {
                              for (int i = 0; i < n; ++i) {
                                  const double u = (i + 0.5) / n;
                                  const double v = std::fmod(0.5 + i * inv_phi, 1.0);
                                  out.emplace_back(q.re_min + u * (q.re_max - q.re_min),
                                                   q.im_min + v * (q.im_max - q.im_min));
                              }
                          }},
               r);
    return out;
}

void for_each_grid_point(const TCartesian& t, int n1, int n2,
                         const std::function<void(const Bicomplex&)>& visit) {
    const std::vector<Complex> a = region_samples(t.region1, n1);
    const std::vector<Complex> b = region_samples(t.region2, n2);
    for (const Complex& u : a) {
        for (const Complex& v : b) visit(from_idempotent({u, v}));
    }
}

std::vector<Bicomplex> sample_grid(const TCartesian& t, int n1, int n2) {
    std::vector<Bicomplex> out;
    out.reserve(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));
    for_each_grid_point(t, n1, n2, [&](const Bicomplex& w) { out.push_back(w); });
    return out;
}

}  // namespace bcjulia

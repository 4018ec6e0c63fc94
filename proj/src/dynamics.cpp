#include "bcjulia/dynamics.hpp"

#include <fmt/format.h>

#include <array>
#include <cmath>
#include <stdexcept>

#include "bcjulia/parallel.hpp"

namespace bcjulia {
namespace {

constexpr int kExtraIterations = 2;

constexpr std::array<std::string_view, 3> kComponentNames = {"INTERIOR", "BOUNDARY", "EXTERIOR"};
constexpr std::array<std::string_view, kBicomplexClassCount> kClassNames = {
    "J2", "K2_INTERIOR", "F2_BOUNDED", "F2_UNBOUNDED_MIXED", "F2_UNBOUNDED"};

double bailout(const ComplexPoly& p, const IterParams& params) {
    if (params.escape_radius > 0.0) return params.escape_radius;
    return escape_radius(p) * params.escape_safety;
}

OrbitRecord run_orbit(const ComplexPoly& p, const Complex& z0, double radius, int max_iter) {
    const double r2 = radius * radius;
    OrbitRecord rec;
    Complex z = z0;
    Complex dz{1.0, 0.0};
    for (int n = 0;; ++n) {
        if (std::norm(z) > r2) {
            rec.escaped = true;
            rec.iters = n;
            // A few more steps past the bailout make the estimate less
            // sensitive to where exactly the orbit crossed it.
            for (int k = 0; k < kExtraIterations; ++k) {
                const auto [v, s] = p.eval_with_derivative(z);
                const Complex ndz = s * dz;
                if (!is_finite(v) || !is_finite(ndz)) break;
                z = v;
                dz = ndz;
            }
            const double mod = std::abs(z);
            rec.de = mod * std::log(mod) / std::abs(dz);
            break;
        }
        if (n == max_iter) {
            rec.iters = max_iter;
            break;
        }
        const auto [v, s] = p.eval_with_derivative(z);
        dz = s * dz;
        z = v;
    }
    rec.final_z = z;
    rec.final_dz = dz;
    return rec;
}

}  // namespace

void validate(const IterParams& params) {
    if (params.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    if (params.escape_radius < 0.0) throw std::invalid_argument("escape_radius must be >= 0");
    if (!(params.escape_safety > 0.0)) throw std::invalid_argument("escape_safety must be > 0");
    if (!(params.de_threshold > 0.0)) throw std::invalid_argument("de_threshold must be > 0");
    if (!(params.tol >= 0.0)) throw std::invalid_argument("tol must be >= 0");
}

std::string_view to_string(ComponentClass c) { return kComponentNames[static_cast<std::size_t>(c)]; }
std::string_view to_string(BicomplexClass c) { return kClassNames[static_cast<std::size_t>(c)]; }

std::optional<BicomplexClass> parse_bicomplex_class(std::string_view name) {
    for (std::size_t i = 0; i < kClassNames.size(); ++i)
        if (kClassNames[i] == name) return static_cast<BicomplexClass>(i);
    return std::nullopt;
}

BicomplexClass combine(ComponentClass c1, ComponentClass c2) {
    using C = ComponentClass;
    if (c1 == C::interior && c2 == C::interior) return BicomplexClass::k2_interior;
    if (c1 != C::exterior && c2 != C::exterior) return BicomplexClass::j2;
    if (c1 == C::exterior && c2 == C::exterior) return BicomplexClass::f2_unbounded;
    if (c1 == C::interior || c2 == C::interior) return BicomplexClass::f2_bounded;
    return BicomplexClass::f2_unbounded_mixed;
}

OrbitRecord iterate_complex(const ComplexPoly& p, const Complex& z0, const IterParams& params) {
    validate(params);
    if (p.degree() < 2) throw DegreeError(fmt::format("iteration needs degree >= 2, got {}", p.degree()));
    return run_orbit(p, z0, bailout(p, params), params.max_iter);
}

ComponentClass classify_orbit(const OrbitRecord& orbit, double de_threshold) {
    if (!orbit.escaped) return ComponentClass::interior;
    return orbit.de <= de_threshold ? ComponentClass::boundary : ComponentClass::exterior;
}

ComponentClass classify_component(const ComplexPoly& p, const Complex& z0, const IterParams& params) {
    return classify_orbit(iterate_complex(p, z0, params), params.de_threshold);
}

SplitSystem::SplitSystem(const BicomplexPoly& p, const IterParams& params) : poly_(p) {
    validate(params);
    if (p.degree() < 2) throw DegenerateError(fmt::format("polynomial degree {} < 2", p.degree()));
    if (is_degenerate(p, params.tol)) throw DegenerateError("leading coefficient lies in the null-cone");
    p1_ = project(p, 1);
    p2_ = project(p, 2);
    r1_ = bailout(p1_, params);
    r2_ = bailout(p2_, params);
}

OrbitRecord SplitSystem::iterate(int which, const Complex& z0, const IterParams& params) const {
    return run_orbit(component(which), z0, radius(which), params.max_iter);
}

BicomplexVerdict classify_point(const SplitSystem& sys, const Bicomplex& w, const IterParams& params) {
    const IdempotentPair q = to_idempotent(w);
    BicomplexVerdict v;
    v.orbit1 = sys.iterate(1, q.w1, params);
    v.orbit2 = sys.iterate(2, q.w2, params);
    v.c1 = classify_orbit(v.orbit1, params.de_threshold);
    v.c2 = classify_orbit(v.orbit2, params.de_threshold);
    v.cls = combine(v.c1, v.c2);
    return v;
}

BicomplexClass classify_bicomplex(const BicomplexPoly& p, const Bicomplex& w, const IterParams& params) {
    return classify_point(SplitSystem(p, params), w, params).cls;
}

BicomplexOrbit orbit_bicomplex(const SplitSystem& sys, const Bicomplex& w0, const IterParams& params) {
    const double radius = std::max(sys.radius(1), sys.radius(2));
    Bicomplex w = w0;
    for (int n = 0;; ++n) {
        const IdempotentPair q = to_idempotent(w);
        if (std::max(std::abs(q.w1), std::abs(q.w2)) > radius) return {true, n};
        if (n == params.max_iter) return {false, n};
        w = eval_direct(sys.poly(), w);
    }
}

BicomplexOrbit orbit_bicomplex(const BicomplexPoly& p, const Bicomplex& w, const IterParams& params) {
    return orbit_bicomplex(SplitSystem(p, params), w, params);
}

InvarianceReport julia_invariance_check(const BicomplexPoly& p, std::span<const Bicomplex> sample,
                                        const IterParams& params, int threads) {
    const SplitSystem sys(p, params);
    IterParams relaxed = params;
    relaxed.de_threshold = 2.0 * params.de_threshold;

    // 0: not J2, 1: J2 with J2 image, 2: violation
    std::vector<std::uint8_t> outcome(sample.size(), 0);
    parallel_for(sample.size(), threads, [&](std::size_t i) {
        if (classify_point(sys, sample[i], params).cls != BicomplexClass::j2) return;
        const Bicomplex image = eval_direct(p, sample[i]);
        outcome[i] = classify_point(sys, image, relaxed).cls == BicomplexClass::j2 ? 1 : 2;
    });

    InvarianceReport report;
    report.sampled = sample.size();
    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (outcome[i] == 0) continue;
        ++report.julia;
        if (outcome[i] == 2) {
            ++report.violations;
            report.violators.push_back(sample[i]);
        }
    }
    return report;
}

}  // namespace bcjulia

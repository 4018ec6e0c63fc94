#include "bcjulia/verify.hpp"

#include <fmt/format.h>

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "bcjulia/dynamics.hpp"
#include "bcjulia/parallel.hpp"

namespace bcjulia {
namespace {

using Rng = std::mt19937_64;

Bicomplex random_bicomplex(Rng& rng, double half) {
    std::uniform_real_distribution<double> u(-half, half);
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    return Bicomplex::from_coords(a, b, c, d);
}

double dist(const Bicomplex& a, const Bicomplex& b) { return norm(a - b); }

/// Tracks the worst ratio error/scale against a bound.
struct Worst {
    double bound;
    double value = 0.0;
    void see(double err, double scale) { value = std::max(value, err / std::max(scale, 1e-300)); }
    bool ok() const { return value <= bound; }
};

SuiteResult algebra(std::uint64_t seed, int) {
    Rng rng(seed);
    Worst comm{1e-12}, assoc{1e-12}, distrib{1e-12}, inv{1e-12};
    for (int i = 0; i < 10000; ++i) {
        const Bicomplex a = random_bicomplex(rng, 10), b = random_bicomplex(rng, 10), c = random_bicomplex(rng, 10);
        const double na = norm(a), nb = norm(b), nc = norm(c);
        comm.see(dist(a * b, b * a), na * nb);
        assoc.see(dist((a * b) * c, a * (b * c)), na * nb * nc);
        distrib.see(dist(a * (b + c), a * b + a * c), na * (nb + nc));
    }
    for (int i = 0; i < 1000; ++i) {
        const Bicomplex w = random_bicomplex(rng, 10);
        if (is_null_cone(w, 1e-6)) continue;
        inv.see(dist(w * inverse(w), units::one), 1.0);
    }
    const bool ok = comm.ok() && assoc.ok() && distrib.ok() && inv.ok();
    return {"algebra", ok,
            fmt::format("comm={:.3g} assoc={:.3g} distrib={:.3g} inverse={:.3g}", comm.value, assoc.value,
                        distrib.value, inv.value)};
}

SuiteResult klein(std::uint64_t seed, int) {
    Rng rng(seed);
    int mismatches = 0;
    for (int s = 0; s < 100; ++s) {
        const Bicomplex w = random_bicomplex(rng, 10);
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) {
                const auto cj = static_cast<ConjKind>(j), ck = static_cast<ConjKind>(k);
                if (conj(cj, conj(ck, w)) != conj(compose(cj, ck), w)) ++mismatches;
            }
        }
    }
    return {"klein", mismatches == 0, fmt::format("16 compositions x 100 samples, mismatches={}", mismatches)};
}

SuiteResult idempotent(std::uint64_t seed, int) {
    Rng rng(seed);
    Worst add_err{1e-12}, mul_err{1e-12}, div_err{1e-12}, round{1e-15};
    for (int i = 0; i < 10000; ++i) {
        const Bicomplex a = random_bicomplex(rng, 10), b = random_bicomplex(rng, 10);
        const IdempotentPair pa = to_idempotent(a), pb = to_idempotent(b);
        add_err.see(dist(from_idempotent({pa.w1 + pb.w1, pa.w2 + pb.w2}), a + b), norm(a) + norm(b));
        mul_err.see(dist(from_idempotent({pa.w1 * pb.w1, pa.w2 * pb.w2}), a * b), norm(a) * norm(b));
        if (!is_null_cone(b, 1e-6)) {
            const Bicomplex q = divide(a, b);
            div_err.see(dist(divide_idempotent(a, b), q), norm(a) * norm(inverse(b)));
        }
        round.see(dist(from_idempotent(to_idempotent(a)), a), norm(a));
    }
    const bool ok = add_err.ok() && mul_err.ok() && div_err.ok() && round.ok();
    return {"idempotent", ok,
            fmt::format("add={:.3g} mul={:.3g} div={:.3g} roundtrip={:.3g}", add_err.value, mul_err.value,
                        div_err.value, round.value)};
}

SuiteResult norm_suite(std::uint64_t seed, int) {
    Rng rng(seed);
    std::uniform_real_distribution<double> u(-10, 10);
    int failures = 0;
    double worst_product_ratio = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const Bicomplex f = random_bicomplex(rng, 10), g = random_bicomplex(rng, 10);
        const Complex a{u(rng), u(rng)};
        const double nf = norm(f), ng = norm(g);
        if (!(nf > 0.0)) ++failures;
        if (std::abs(norm(scale(a, f)) - std::abs(a) * nf) > 1e-12 * std::abs(a) * nf) ++failures;
        if (norm(f + g) > (nf + ng) * (1 + 1e-15)) ++failures;
        const double ratio = norm(f * g) / (nf * ng);
        worst_product_ratio = std::max(worst_product_ratio, ratio);
        if (ratio > std::sqrt(2.0) * (1 + 1e-15)) ++failures;
    }
    if (norm(Bicomplex{}) != 0.0) ++failures;
    const double witness = norm(units::e1 * units::e1) / (std::sqrt(2.0) * norm(units::e1) * norm(units::e1));
    if (std::abs(witness - 1.0) > 1e-12) ++failures;
    return {"norm", failures == 0,
            fmt::format("failures={} max |fg|/(|f||g|)={:.6f} e1 witness ratio={:.15f}", failures,
                        worst_product_ratio, witness)};
}

BicomplexPoly random_poly(Rng& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Bicomplex> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& a : c) a = random_bicomplex(rng, 2);
    return BicomplexPoly(std::move(c));
}

SuiteResult eval(std::uint64_t seed, int) {
    Rng rng(seed);
    Worst err{1e-10};
    for (int i = 0; i < 10000; ++i) {
        const BicomplexPoly p = random_poly(rng, 6);
        const Bicomplex w = random_bicomplex(rng, 2);
        // scale: the polynomial evaluated with absolute values
        double s = 0.0;
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) s = s * std::sqrt(2.0) * norm(w) + norm(*it);
        err.see(dist(eval_idempotent(p, w), eval_direct(p, w)), s);
    }
    return {"eval", err.ok(), fmt::format("max relative deviation={:.3g}", err.value)};
}

const std::vector<Bicomplex>& paper_parameters() {
    static const std::vector<Bicomplex> c = {
        Bicomplex::from_coords(0.27, 0, 0, 0),
        Bicomplex::from_coords(-1.754878, 0, 0, 0),
        from_idempotent({Complex{0.26, 0}, Complex{-1.754878, 0}}),
        from_idempotent({Complex{-0.123, 0.745}, Complex{-0.391, -0.587}}),
    };
    return c;
}

SuiteResult oracle(std::uint64_t seed, int threads) {
    Rng rng(seed);
    IterParams params;
    params.max_iter = 500;
    std::string detail;
    bool ok = true;
    for (const Bicomplex& c : paper_parameters()) {
        const BicomplexPoly p = BicomplexPoly::quadratic(c);
        const SplitSystem sys(p, params);
        std::vector<Bicomplex> pts(4096);
        for (auto& w : pts) w = random_bicomplex(rng, 2);
        std::vector<std::uint8_t> agree(pts.size());
        parallel_for(pts.size(), threads, [&](std::size_t i) {
            const IdempotentPair q = to_idempotent(pts[i]);
            const bool bounded = !sys.iterate(1, q.w1, params).escaped && !sys.iterate(2, q.w2, params).escaped;
            agree[i] = orbit_bicomplex(sys, pts[i], params).escaped != bounded;
        });
        std::size_t n = 0;
        for (auto a : agree) n += a;
        const double frac = double(n) / double(pts.size());
        ok = ok && frac >= 0.999;
        detail += fmt::format("{:.4f} ", frac);
    }
    return {"oracle", ok, "agreement " + detail};
}

SuiteResult symmetry(std::uint64_t seed, int) {
    Rng rng(seed);
    IterParams params;
    int mismatches = 0;
    for (const Bicomplex& c : paper_parameters()) {
        const SplitSystem sys(BicomplexPoly::quadratic(c), params);
        for (int i = 0; i < 1000; ++i) {
            const Bicomplex w = random_bicomplex(rng, 2);
            if (classify_point(sys, w, params).cls != classify_point(sys, -w, params).cls) ++mismatches;
        }
    }
    return {"symmetry", mismatches == 0, fmt::format("mismatches={}", mismatches)};
}

using SuiteFn = SuiteResult (*)(std::uint64_t, int);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"algebra", algebra}, {"klein", klein}, {"idempotent", idempotent}, {"norm", norm_suite},
        {"eval", eval},       {"oracle", oracle}, {"symmetry", symmetry}};
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry()) n.push_back(name);
        return n;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int threads) {
    for (const auto& [n, fn] : registry())
        if (n == name) return fn(seed, threads);
    throw std::invalid_argument(fmt::format("unknown suite '{}'", name));
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int threads) {
    std::vector<SuiteResult> out;
    for (const auto& [n, fn] : registry()) out.push_back(fn(seed, threads));
    return out;
}

}  // namespace bcjulia

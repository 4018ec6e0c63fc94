#include <doctest.h>

#include <cmath>
#include <random>

#include "bcjulia/core.hpp"
#include "support.hpp"

using namespace bcjulia;
using namespace bcjulia::testing;
namespace u = bcjulia::units;

TEST_CASE("add") {
    CHECK(add(u::one, u::i2) == Bicomplex{Complex{1, 0}, Complex{1, 0}});
    const Bicomplex w = Bicomplex::from_coords(1.5, -2, 3, 0.25);
    CHECK(add(w, Bicomplex{}) == w);
    CHECK(close(u::e1 + u::e2, u::one, 0.0));
}

TEST_CASE("mul matches the unit table") {
    CHECK(mul(u::i1, u::i2) == u::j);
    CHECK(mul(u::i2, u::i1) == u::j);
    CHECK(close(mul(u::e1, u::e2), Bicomplex{}, 0.0));
    // both factors are zero divisors
    const Bicomplex a = u::i1 + u::i2, b = u::i1 - u::i2;
    CHECK(norm(a) > 0);
    CHECK(norm(b) > 0);
    CHECK(close(mul(a, b), Bicomplex{}, 0.0));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const Bicomplex x = random_bicomplex(rng, 10), y = random_bicomplex(rng, 10);
        CHECK(close(mul(x, y), table_mul(x, y), 1e-12 * norm(x) * norm(y)));
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        const Bicomplex a = random_bicomplex(rng, 10), b = random_bicomplex(rng, 10), c = random_bicomplex(rng, 10);
        const double s = norm(a) * norm(b);
        REQUIRE(distance(a * b, b * a) <= 1e-12 * s);
        REQUIRE(distance((a * b) * c, a * (b * c)) <= 1e-12 * s * norm(c));
        REQUIRE(distance(a * (b + c), a * b + a * c) <= 1e-12 * norm(a) * (norm(b) + norm(c)));
    }
}

TEST_CASE("conjugations") {
    const Bicomplex w = Bicomplex::from_coords(1, 2, 3, 4);
    CHECK(conj(ConjKind::none, w) == w);
    CHECK(conj(ConjKind::bar, w).coords() == Coords{1, -2, 3, -4});
    CHECK(conj(ConjKind::swap, w).coords() == Coords{1, 2, -3, -4});
    CHECK(conj(ConjKind::swap_bar, w).coords() == Coords{1, -2, -3, 4});
    CHECK(conj(ConjKind::swap, u::one + u::i2) == u::one - u::i2);
    CHECK(conj(ConjKind::bar, conj(ConjKind::swap, w)) == conj(ConjKind::swap_bar, w));

    // The full Klein table, written out.
    constexpr int table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    std::mt19937_64 rng(3);
    for (int s = 0; s < 200; ++s) {
        const Bicomplex x = random_bicomplex(rng, 10), y = random_bicomplex(rng, 10);
        for (int j = 0; j < 4; ++j) {
            const auto cj = static_cast<ConjKind>(j);
            CHECK(conj(cj, conj(cj, x)) == x);
            CHECK(close(conj(cj, x + y), conj(cj, x) + conj(cj, y), 1e-12 * (norm(x) + norm(y))));
            CHECK(close(conj(cj, x * y), conj(cj, x) * conj(cj, y), 1e-12 * norm(x) * norm(y)));
            for (int k = 0; k < 4; ++k) {
                const auto ck = static_cast<ConjKind>(k);
                CHECK(compose(cj, ck) == static_cast<ConjKind>(table[j][k]));
                CHECK(conj(cj, conj(ck, x)) == conj(static_cast<ConjKind>(table[j][k]), x));
            }
        }
    }
}

TEST_CASE("square moduli") {
    CHECK(close(mod_sq_i1(u::i1 + u::i2), Complex{}, 0.0));
    CHECK(mod_sq_i1(u::one + u::i2) == Complex{2, 0});
    const IdempotentPair e1 = to_idempotent(u::e1);
    CHECK(close(mod_sq_i1(u::e1), e1.w1 * e1.w2, 1e-15));

    CHECK(mod_sq_i2(u::one).re == 1.0);
    CHECK(mod_sq_i2(u::one).i2 == 0.0);
    CHECK(mod_sq_i2(u::i2).re == -1.0);
    CHECK(mod_sq_i2(u::one + u::i2).re == 0.0);
    CHECK(mod_sq_i2(u::one + u::i2).i2 == 2.0);

    CHECK(mod_sq_j(u::one).x == 1.0);
    CHECK(mod_sq_j(u::one).y == 0.0);
    CHECK(mod_sq_j(u::i1 + u::i2).x == 2.0);
    CHECK(mod_sq_j(u::i1 + u::i2).y == -2.0);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        const Bicomplex w = random_bicomplex(rng, 10);
        const double n2 = norm(w) * norm(w);
        // each modulus equals the product with the matching conjugate
        const Bicomplex p2 = table_mul(w, conj(ConjKind::swap, w));
        CHECK(close(Complex{p2.z1}, mod_sq_i1(w), 1e-12 * n2));
        CHECK(std::abs(p2.z2) <= 1e-12 * n2);
        const Coords p1 = table_mul(w.coords(), conj(ConjKind::bar, w).coords());
        CHECK(std::abs(p1[0] - mod_sq_i2(w).re) <= 1e-12 * n2);
        CHECK(std::abs(p1[2] - mod_sq_i2(w).i2) <= 1e-12 * n2);
        const Coords p3 = table_mul(w.coords(), conj(ConjKind::swap_bar, w).coords());
        CHECK(std::abs(p3[0] - mod_sq_j(w).x) <= 1e-12 * n2);
        CHECK(std::abs(p3[3] - mod_sq_j(w).y) <= 1e-12 * n2);
        const IdempotentPair q = to_idempotent(w);
        CHECK(close(mod_sq_i1(w), q.w1 * q.w2, 1e-12 * n2));
        CHECK(std::abs(mod_sq_j(w).x - n2) <= 1e-12 * n2);
    }
}

TEST_CASE("norm") {
    CHECK(norm(u::e1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(norm(u::one + u::j) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(norm(u::e1 * u::e1) == doctest::Approx(std::sqrt(2.0) * norm(u::e1) * norm(u::e1)).epsilon(1e-12));

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> d(-10, 10);
    for (int i = 0; i < 10000; ++i) {
        const Bicomplex f = random_bicomplex(rng, 10), g = random_bicomplex(rng, 10);
        const Complex a{d(rng), d(rng)};
        REQUIRE(norm(f * g) <= std::sqrt(2.0) * norm(f) * norm(g) * (1 + 1e-14));
        REQUIRE(norm(f + g) <= (norm(f) + norm(g)) * (1 + 1e-15));
        REQUIRE(std::abs(norm(scale(a, f)) - std::abs(a) * norm(f)) <= 1e-12 * std::abs(a) * norm(f));
        REQUIRE(std::abs(norm(f) - idempotent_norm(to_idempotent(f))) <= 1e-14 * norm(f));
    }
}

TEST_CASE("null cone") {
    CHECK(is_null_cone(Bicomplex{}, 0.0));
    CHECK(is_null_cone(u::i1 + u::i2));
    CHECK(is_null_cone(u::i1 - u::i2));
    CHECK(is_null_cone(u::e1));
    CHECK_FALSE(is_null_cone(u::one + u::i2));
    // z(i1 + i2) for several z
    for (const Complex z : {Complex{2, -1}, Complex{0.5, 3}, Complex{-7, 0}}) {
        CHECK(is_null_cone(scale(z, u::i1 + u::i2)));
        CHECK(is_null_cone(scale(z, u::i1 - u::i2)));
    }
    // exact inputs: zero test agrees with |w|^2_{i1} == 0
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int e = -2; e <= 2; ++e) {
                    const Bicomplex w = Bicomplex::from_coords(a, b, c, e);
                    CHECK(is_null_cone(w, 0.0) == (mod_sq_i1(w) == Complex{}));
                }
}

TEST_CASE("inverse") {
    CHECK(inverse(u::i1) == -u::i1);
    const Bicomplex w = u::one + u::i2;
    CHECK(close(inverse(w), Bicomplex{Complex{0.5, 0}, Complex{-0.5, 0}}, 1e-16));
    CHECK(close(table_mul(w, inverse(w)), u::one, 1e-15));
    CHECK_THROWS_AS(inverse(u::e1), NullConeError);
    CHECK_THROWS_AS(inverse(u::i1 + u::i2), NullConeError);
    CHECK_THROWS_AS(divide(u::one, u::e2), NullConeError);

    std::mt19937_64 rng(13);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        const Bicomplex x = random_bicomplex(rng, 10);
        if (is_null_cone(x, 1e-6)) continue;
        ++checked;
        REQUIRE(distance(x * inverse(x), u::one) <= 1e-12);
    }
    CHECK(checked > 990);
}

TEST_CASE("idempotent coordinates") {
    CHECK(close(to_idempotent(u::i2).w1, Complex{0, -1}, 0));
    CHECK(close(to_idempotent(u::i2).w2, Complex{0, 1}, 0));
    CHECK(close(to_idempotent(u::j).w1, Complex{1, 0}, 0));
    CHECK(close(to_idempotent(u::j).w2, Complex{-1, 0}, 0));
    CHECK(to_idempotent(u::e1) == IdempotentPair{Complex{1, 0}, Complex{0, 0}});
    CHECK(to_idempotent(u::e2) == IdempotentPair{Complex{0, 0}, Complex{1, 0}});

    std::mt19937_64 rng(17);
    for (int i = 0; i < 10000; ++i) {
        const Bicomplex a = random_bicomplex(rng, 10), b = random_bicomplex(rng, 10);
        const IdempotentPair pa = to_idempotent(a), pb = to_idempotent(b);
        REQUIRE(distance(from_idempotent(pa), a) <= 4e-16 * norm(a));
        const IdempotentPair pab = to_idempotent(table_mul(a, b));
        REQUIRE(std::abs(pab.w1 - pa.w1 * pb.w1) <= 1e-12 * norm(a) * norm(b));
        REQUIRE(std::abs(pab.w2 - pa.w2 * pb.w2) <= 1e-12 * norm(a) * norm(b));
        const IdempotentPair ps = to_idempotent(a + b);
        REQUIRE(std::abs(ps.w1 - (pa.w1 + pb.w1)) <= 1e-12 * (norm(a) + norm(b)));
        if (!is_null_cone(b, 1e-6)) {
            REQUIRE(distance(divide_idempotent(a, b), divide(a, b)) <= 1e-12 * norm(a) * norm(inverse(b)));
        }
    }
}

#include <doctest.h>

#include "qamgolay/gaussian_int.hpp"
#include "qamgolay/gbf.hpp"
#include "qamgolay/mixed_radix.hpp"
#include "qamgolay/sampling.hpp"
#include "qamgolay/z4.hpp"

using namespace qamgolay;

TEST_CASE("Z4 closes under ring operations") {
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            CHECK((Z4(a) + Z4(b)).v == (a + b) % 4);
            CHECK((Z4(a) - Z4(b)).v == ((a - b) % 4 + 4) % 4);
            CHECK((Z4(a) * Z4(b)).v == (a * b) % 4);
        }
    CHECK((-Z4(0)).v == 0);
    CHECK((-Z4(3)).v == 1);
}

TEST_CASE("GaussianInt conjugation and norm are multiplicative") {
    SplitMix64 rng(42);
    for (int i = 0; i < 200; ++i) {
        const GaussianInt a{static_cast<std::int64_t>(rng.next() % 2001) - 1000,
                            static_cast<std::int64_t>(rng.next() % 2001) - 1000};
        const GaussianInt b{static_cast<std::int64_t>(rng.next() % 2001) - 1000,
                            static_cast<std::int64_t>(rng.next() % 2001) - 1000};
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a * b).norm2() == a.norm2() * b.norm2());
    }
    CHECK(GaussianInt::unit(Z4(1)) * GaussianInt::unit(Z4(1)) == GaussianInt(-1, 0));
    CHECK(GaussianInt::unit(Z4(3)) == GaussianInt(0, -1));
}

TEST_CASE("mixed radix digits match the timekeeping example") {
    MixedRadix clock({60, 60, 24, 7});
    CHECK(clock.digits(323516) == std::vector<int>{56, 51, 17, 3});
    CHECK(clock.value({56, 51, 17, 3}) == 323516);
}

TEST_CASE("mixed radix basics") {
    MixedRadix r32({3, 2});
    CHECK(r32.digits(5) == std::vector<int>{2, 1});
    CHECK(MixedRadix({60, 60, 24, 7}).digits(0) == std::vector<int>{0, 0, 0, 0});
    CHECK_THROWS_AS(r32.digits(6), std::out_of_range);
    CHECK_THROWS_AS(r32.digits(-1), std::out_of_range);
    CHECK_THROWS_AS(MixedRadix({1, 2}), std::invalid_argument);
}

TEST_CASE("mixed radix round trip is the identity for every small system") {
    const std::vector<std::vector<int>> systems = {
        {2, 2}, {3, 2}, {2, 3}, {2, 2, 2}, {4, 4, 4}, {3, 2, 2}, {64}};
    for (const auto& sys : systems) {
        MixedRadix radix(sys);
        REQUIRE(radix.product() <= 64);
        for (std::int64_t p = 0; p < radix.product(); ++p) {
            CHECK(radix.value(radix.digits(p)) == p);
            for (std::size_t k = 0; k < sys.size(); ++k)
                CHECK(radix.digit(p, k) == radix.digits(p)[k]);
        }
    }
}

TEST_CASE("GBF evaluation") {
    Gbf f(2);
    f.add_term(0b11, Z4(2));   // 2 x1 x2
    CHECK(f.eval(0b11).v == 2);
    CHECK(f.eval(0b01).v == 0);

    Gbf g(2);                  // 2 x1 x2 + 3 x1 + 1
    g.add_term(0b11, Z4(2));
    g.add_term(0b01, Z4(3));
    g.add_term(0, Z4(1));
    CHECK(g.eval(0b01).v == 0);

    // Quadratic chain over two variables, identity order, no affine part.
    StandardGcsSpec spec;
    spec.m = 2;
    spec.pi = identity_perm(2);
    spec.c.assign(3, Z4(0));
    CHECK(standard_gbf(spec).eval(0b11).v == 2);

    CHECK_THROWS_AS(f.eval(0b100), std::invalid_argument);
}

TEST_CASE("GBF algebra") {
    const Gbf two_x1 = Gbf::var(2, 1).scaled(Z4(2));
    CHECK((two_x1 + two_x1).is_zero());

    Gbf sym(2);
    sym.add_term(0b11, Z4(2));
    CHECK(sym.permuted({2, 1}) == sym);

    const Gbf aff = Gbf::affine(2, {Z4(1), Z4(0)}, Z4(3));
    CHECK(aff.coeff(0b01).v == 1);
    CHECK(aff.coeff(0b10).v == 0);
    CHECK(aff.coeff(0).v == 3);
    CHECK(aff.degree() == 1);

    CHECK_THROWS_AS(sym.permuted({1, 1}), std::invalid_argument);
}

TEST_CASE("permute then evaluate equals evaluate at permuted point") {
    SplitMix64 rng(7);
    for (int round = 0; round < 50; ++round) {
        const int m = 2 + static_cast<int>(rng.next() % 4);
        Gbf f(m);
        for (int t = 0; t < 6; ++t)
            f.add_term(static_cast<std::uint32_t>(rng.next() % (1u << m)),
                       Z4(static_cast<int>(rng.next() % 4)));
        Perm pi = identity_perm(m);
        for (int i = m - 1; i > 0; --i)
            std::swap(pi[i], pi[static_cast<int>(rng.next() % (i + 1))]);
        const Gbf g = f.permuted(pi);
        for (std::uint32_t x = 0; x < (1u << m); ++x) {
            std::uint32_t px = 0;   // px_i = x_{pi(i)}
            for (int i = 1; i <= m; ++i)
                if (x & (1u << (pi[i - 1] - 1))) px |= 1u << (i - 1);
            CHECK(g.eval(x) == f.eval(px));
        }
    }
}

TEST_CASE("ANF is canonical: distinct term maps differ somewhere") {
    SplitMix64 rng(11);
    for (int round = 0; round < 40; ++round) {
        const int m = 2 + static_cast<int>(rng.next() % 9);   // up to 10
        Gbf f(m), g(m);
        for (int t = 0; t < 8; ++t) {
            f.add_term(static_cast<std::uint32_t>(rng.next() % (1u << m)),
                       Z4(static_cast<int>(rng.next() % 4)));
            g.add_term(static_cast<std::uint32_t>(rng.next() % (1u << m)),
                       Z4(static_cast<int>(rng.next() % 4)));
        }
        bool pointwise_equal = true;
        for (std::uint32_t x = 0; x < (1u << m) && pointwise_equal; ++x)
            pointwise_equal = f.eval(x) == g.eval(x);
        CHECK(pointwise_equal == (f == g));
    }
}

TEST_CASE("VGBF invariants") {
    VGbf v(3, 2);
    CHECK(v.q() == 3);
    CHECK(v.m() == 2);
    // Weighted value of the zero function vector: 4 + 2 + 1.
    CHECK(v.weighted_value(0) == GaussianInt(7, 0));
    CHECK_THROWS_AS(VGbf({Gbf(2), Gbf(3)}), std::invalid_argument);
}

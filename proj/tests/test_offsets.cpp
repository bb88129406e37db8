#include <doctest.h>

#include <cstdint>
#include <set>

#include "qamgolay/constructions.hpp"
#include "qamgolay/offsets.hpp"

using namespace qamgolay;

namespace {

std::vector<Z4> z4vec(std::initializer_list<int> xs) {
    std::vector<Z4> v;
    for (int x : xs) v.push_back(Z4(x));
    return v;
}

/// Independent image evaluator for the pair-enumeration oracle: integer
/// lattice arithmetic written from scratch against the defining sum.
struct PlainComplex {
    long long re = 0, im = 0;
    bool operator==(const PlainComplex& o) const { return re == o.re && im == o.im; }
};

PlainComplex oracle_image(int q0, const std::vector<int>& b) {
    PlainComplex acc{1LL << (q0 - 1), 0};
    for (int p = 1; p < q0; ++p) {
        const long long w = 1LL << (q0 - 1 - p);
        switch (b[p - 1]) {
            case 0: acc.re += w; break;
            case 1: acc.im += w; break;
            case 2: acc.re -= w; break;
            default: acc.im -= w; break;
        }
    }
    return acc;
}

std::int64_t oracle_nsgip_count(int q0) {
    const int n = q0 - 1;
    std::int64_t count = 0;
    const std::int64_t total = 1LL << (2 * n);
    for (std::int64_t i = 0; i < total; ++i)
        for (std::int64_t j = 0; j < total; ++j) {
            std::vector<int> bi(n), bj(n);
            std::int64_t ri = i, rj = j;
            for (int p = 0; p < n; ++p) {
                bi[p] = static_cast<int>(ri & 3);
                ri >>= 2;
                bj[p] = static_cast<int>(rj & 3);
                rj >>= 2;
            }
            const PlainComplex Qi = oracle_image(q0, bi), Qj = oracle_image(q0, bj);
            if (Qi.re * Qi.re + Qi.im * Qi.im != Qj.re * Qj.re + Qj.im * Qj.im) continue;
            if (Qi == Qj) continue;
            if (Qi.re == Qj.re && Qi.im == -Qj.im) continue;
            ++count;
        }
    return count;
}

} // namespace

TEST_CASE("the admissible triple set has exactly the 16 published values") {
    const auto& C = set_C();
    REQUIRE(C.size() == 16);
    const std::vector<CTriple> expected = {
        {0, 0, 0}, {0, 1, 3}, {0, 2, 2}, {0, 3, 1}, {1, 0, 2}, {1, 1, 1},
        {1, 2, 0}, {1, 3, 3}, {2, 0, 0}, {2, 1, 3}, {2, 2, 2}, {2, 3, 1},
        {3, 0, 2}, {3, 1, 1}, {3, 2, 0}, {3, 3, 3}};
    CHECK(C == expected);
    for (const auto& d : C) CHECK((Z4(2) * d.d0 + d.d1 + d.d2).is_zero());
}

TEST_CASE("class partition is 10/2/2/2") {
    CHECK(class_members(CClass::C1).size() == 10);
    CHECK(class_members(CClass::C2).size() == 2);
    CHECK(class_members(CClass::C3).size() == 2);
    CHECK(class_members(CClass::C4).size() == 2);
    CHECK(classify_C({1, 0, 2}) == CClass::C2);
    CHECK(classify_C({0, 0, 0}) == CClass::C4);
    CHECK(classify_C({3, 1, 1}) == CClass::C1);
    CHECK(classify_C({1, 2, 0}) == CClass::C3);
    CHECK_THROWS_AS(classify_C({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("weighted Gaussian images") {
    CHECK(gaussian_image(z4vec({0, 2})) == GaussianInt(5, 0));
    CHECK(gaussian_image(z4vec({1, 1})) == GaussianInt(4, 3));
    CHECK(gaussian_image(z4vec({0, 0})) == GaussianInt(7, 0));
}

TEST_CASE("pair enumeration matches the brute-force oracle") {
    CHECK(enumerate_nsgip(2).empty());
    for (int q0 = 2; q0 <= 4; ++q0)
        CHECK(static_cast<std::int64_t>(enumerate_nsgip(q0).size()) ==
              oracle_nsgip_count(q0));
    CHECK_THROWS_AS(enumerate_nsgip(1), std::invalid_argument);
}

TEST_CASE("pair enumeration at q0=3") {
    const auto pairs = enumerate_nsgip(3);
    CHECK(pairs.size() == 4);
    bool has_example = false;
    for (const auto& p : pairs) {
        CHECK(p.Q0 != p.Q1);
        CHECK(p.Q0 != p.Q1.conj());
        CHECK(p.Q0.norm2() == p.Q1.norm2());
        // The all-zero tuple would force a real image with a unique norm.
        CHECK(p.b != z4vec({0, 0}));
        CHECK(p.b_prime != z4vec({0, 0}));
        if (p.Q0 == GaussianInt(5, 0) && p.Q1 == GaussianInt(4, 3)) has_example = true;
    }
    CHECK(has_example);
}

TEST_CASE("d-vectors for q=6=3x2") {
    // Triples (0,1,3), (1,0,2) on the 3-factor and (3,1,2) on the 2-factor.
    DVectorFamily dv({3, 2}, DigitScheme::Plain,
                     {{{0, 1, 3}, {1, 0, 2}}, {{3, 1, 1}}});
    CHECK(dv.vec(1, 2) == z4vec({0, 3, 2, 0, 3, 2}));
    CHECK(dv.vec(2, 0) == z4vec({0, 0, 0, 3, 3, 3}));
    for (int k = 1; k <= 2; ++k) {
        const auto d0 = dv.vec(k, 0), d1 = dv.vec(k, 1), d2 = dv.vec(k, 2);
        for (int p = 0; p < 6; ++p)
            CHECK((Z4(2) * d0[p] + d1[p] + d2[p]).is_zero());
    }
}

TEST_CASE("d-vectors degenerate and error cases") {
    DVectorFamily zero({2, 2}, DigitScheme::Plain, {{{0, 0, 0}}, {{0, 0, 0}}});
    for (int k = 1; k <= 2; ++k)
        for (int i = 0; i < 3; ++i)
            CHECK(zero.vec(k, i) == z4vec({0, 0, 0, 0}));
    CHECK_THROWS_AS(DVectorFamily({2, 2}, DigitScheme::Plain, {{{0, 0, 1}}, {{0, 0, 0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(DVectorFamily({2, 2}, DigitScheme::LeadingRadix, {{{0, 0, 0}}}),
                    std::invalid_argument);
}

TEST_CASE("b-vectors for q=6=3x2") {
    Nsgip pair;
    pair.b = z4vec({0, 2});
    pair.b_prime = z4vec({1, 1});
    pair.Q0 = gaussian_image(pair.b);
    pair.Q1 = gaussian_image(pair.b_prime);
    const auto [b, bp] = build_b_vectors({3, 2}, pair);
    CHECK(b == z4vec({0, 0, 2, 0, 0, 2}));
    CHECK(bp == z4vec({0, 1, 1, 0, 1, 1}));

    const auto [b0, bp0] = build_b_vectors({3}, pair);
    CHECK(b0 == z4vec({0, 0, 2}));
    CHECK(bp0 == z4vec({0, 1, 1}));
}

TEST_CASE("coefficient matrix of the zero offset") {
    const VGbf zero(3, 2);
    const auto S = coefficient_matrix(zero, identity_perm(2));
    for (const auto& c : S.a) CHECK(c.is_zero());
    CHECK(S.nonzero_var_columns() == 0);
}

TEST_CASE("coefficient matrix of the tabulated q=6 offset") {
    // First construction, factorization 3x2, positions (m, omega) with
    // omega = 2 interior, m = 4, identity order, triples as in the
    // d-vector case above.
    Theorem1Spec spec;
    spec.q = 6;
    spec.factorization = {3, 2};
    spec.d_choices = {{{0, 1, 3}, {1, 0, 2}}, {{3, 1, 1}}};
    spec.base.m = 4;
    spec.base.pi = identity_perm(4);
    spec.base.c.assign(5, Z4(0));
    spec.omegas = {4, 2};
    const auto S = coefficient_matrix(theorem1_offset(spec).s, spec.base.pi);

    auto column = [&](int j) {
        std::vector<Z4> col;
        for (int p = 0; p < 6; ++p) col.push_back(S.at(p, j));
        return col;
    };
    CHECK(column(0) == z4vec({0, 0, 1, 3, 3, 0}));
    CHECK(column(2) == z4vec({0, 0, 0, 1, 1, 1}));   // the interior position
    CHECK(column(3) == z4vec({0, 0, 0, 1, 1, 1}));   // its right neighbor
    CHECK(column(4) == z4vec({0, 1, 0, 0, 1, 0}));   // the boundary position
    CHECK(column(1) == z4vec({0, 0, 0, 0, 0, 0}));
    CHECK(S.nonzero_var_columns() == 3);
}

TEST_CASE("single-position offsets have at most two nonzero variable columns") {
    const auto& C = set_C();
    for (int omega = 1; omega <= 2; ++omega)
        for (const auto& d1 : C)
            for (const auto& d2 : C) {
                const auto off =
                    cases_i_iii_offset(3, identity_perm(3), {d1, d2}, omega,
                                       MuSide::First);
                CHECK(coefficient_matrix(off.s, identity_perm(3)).nonzero_var_columns() <=
                      2);
            }
}

TEST_CASE("coefficient matrix rejects nonlinear components") {
    VGbf bad(2, 3);
    bad.comp(1).add_term(0b011, Z4(2));
    CHECK_THROWS_AS(coefficient_matrix(bad, identity_perm(3)), std::invalid_argument);
}

TEST_CASE("coefficient matrix is a bijection on affine offsets") {
    // Every q=2, m=2 affine offset: 4^(q*(m+1)) = 4096 of them.
    const Perm pi = {2, 1};
    std::set<CoefficientMatrix> seen;
    for (int code = 0; code < 4096; ++code) {
        int rest = code;
        std::vector<Gbf> comps;
        for (int p = 0; p < 2; ++p) {
            std::vector<Z4> c(2);
            const Z4 c0(rest & 3);
            rest >>= 2;
            for (auto& v : c) {
                v = Z4(rest & 3);
                rest >>= 2;
            }
            comps.push_back(Gbf::affine(2, c, c0));
        }
        const VGbf offset(comps);
        const auto S = coefficient_matrix(offset, pi);
        seen.insert(S);
        CHECK(offset_from_matrix(S, pi) == offset);
    }
    CHECK(seen.size() == 4096);
}

TEST_CASE("coefficient matrix CSV shape") {
    const VGbf zero(2, 2);
    const auto S = coefficient_matrix(zero, identity_perm(2));
    CHECK(CoefficientMatrix::csv_header(2, 2) == "q,m,c0,c1,c2,c3,c4,c5");
    CHECK(S.csv_row() == "2,2,0,0,0,0,0,0");
}

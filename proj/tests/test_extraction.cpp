#include <doctest.h>

#include "qamgolay/extraction.hpp"
#include "qamgolay/sampling.hpp"
#include "qamgolay/sequence.hpp"

using namespace qamgolay;

namespace {

StandardGcsSpec plain_base(int m) {
    StandardGcsSpec base;
    base.m = m;
    base.pi = identity_perm(m);
    base.c.assign(m + 1, Z4(0));
    return base;
}

Gbf chain_f(int m) {
    Gbf f(m);
    for (int j = 1; j < m; ++j) f.add_term((1u << (j - 1)) | (1u << j), Z4(2));
    return f;
}

std::vector<GbfMatrix2x2> all_h_seeds(int m) {
    return std::vector<GbfMatrix2x2>(m + 1, GbfMatrix2x2::bh_tilde(m, {0, 0, 0}));
}

} // namespace

TEST_CASE("selector identities hold symbolically and pointwise") {
    CHECK(matrix_identities_check(1));
    CHECK(matrix_identities_check(99));
}

TEST_CASE("single-seed chain extraction returns the seed") {
    const auto seed = GbfMatrix2x2::bh_tilde(0, {1, 1, 1});
    CHECK(gbf_chain_extract({seed}, {}) == seed);
}

TEST_CASE("all-Hadamard chain gives the quadratic ladder matrix") {
    for (int m = 2; m <= 4; ++m) {
        const auto M = extract_gbf_matrix(all_h_seeds(m));
        const Gbf f = chain_f(m);
        const Gbf a = Gbf::var(m, 1).scaled(Z4(2));
        const Gbf b = Gbf::var(m, m).scaled(Z4(2));
        CHECK(M.e[0][0] == f);
        CHECK(M.e[0][1] == f + b);
        CHECK(M.e[1][0] == f + a);
        CHECK(M.e[1][1] == f + a + b);
    }
}

TEST_CASE("extraction agrees with direct product plus pointwise inversion") {
    for (int m = 2; m <= 4; ++m) {
        GaussianInt h[2][2] = {{{1, 0}, {1, 0}}, {{1, 0}, {-1, 0}}};
        LaurentMatrix2x2 U = LaurentMatrix2x2::from_constant(m, h);
        for (int j = 1; j <= m; ++j)
            U = U * LaurentMatrix2x2::delay(m, j) *
                LaurentMatrix2x2::from_constant(m, h);
        CHECK(gbf_matrix_from_generating(U) == extract_gbf_matrix(all_h_seeds(m)));
    }
}

TEST_CASE("ANF recovery round trip") {
    SplitMix64 rng(321);
    for (int round = 0; round < 30; ++round) {
        const int m = 1 + static_cast<int>(rng.next() % 5);
        std::vector<Z4> values(1u << m);
        for (auto& v : values) v = Z4(static_cast<int>(rng.next() % 4));
        const Gbf f = gbf_from_values(m, values);
        for (std::uint32_t x = 0; x < (1u << m); ++x) CHECK(f.eval(x) == values[x]);
    }
}

TEST_CASE("closed form equals chain extraction, first construction") {
    SpecSampler sampler(1001);
    for (int round = 0; round < 6; ++round) {
        const int m = 2 + static_cast<int>(sampler.rng().next() % 3);
        const auto spec = sampler.sample_t1(m, {2, 2}, MuSide::First);
        CHECK(vgbf_matrix_closed_form(spec) == vgbf_matrix_extracted(spec));
    }
    for (int round = 0; round < 4; ++round) {
        const auto spec = sampler.sample_t1(4, {3, 2}, MuSide::Last,
                                            SpecSampler::Boundary::AtM);
        CHECK(vgbf_matrix_closed_form(spec) == vgbf_matrix_extracted(spec));
    }
}

TEST_CASE("closed form equals chain extraction, second construction") {
    SpecSampler sampler(1002);
    for (CaseAB kase : {CaseAB::A, CaseAB::B}) {
        const PuKind kind = kase == CaseAB::A ? PuKind::Ma : PuKind::Mb;
        for (int round = 0; round < 4; ++round) {
            const auto spec = sampler.sample_t2(4, {3, 2}, kase, MuSide::First);
            CHECK(vgbf_matrix_closed_form(spec, kind) ==
                  vgbf_matrix_extracted(spec, kind));
        }
        const auto spec0 = sampler.sample_t2(4, {3}, kase, MuSide::Last);
        CHECK(vgbf_matrix_closed_form(spec0, kind) ==
              vgbf_matrix_extracted(spec0, kind));
    }
}

TEST_CASE("generating matrix of the extracted functions equals the built matrix") {
    SpecSampler sampler(1003);
    SUBCASE("first construction") {
        const auto spec = sampler.sample_t1(3, {2, 2}, MuSide::First);
        CHECK(vgbf_matrix_extracted(spec).generating_matrix() == build_M1(spec));
    }
    SUBCASE("second construction, case a") {
        const auto spec = sampler.sample_t2(4, {3, 2}, CaseAB::A, MuSide::First);
        CHECK(vgbf_matrix_extracted(spec, PuKind::Ma).generating_matrix() ==
              build_Ma(spec));
    }
    SUBCASE("second construction, case b") {
        const auto spec = sampler.sample_t2(5, {3, 2}, CaseAB::B, MuSide::Last);
        CHECK(vgbf_matrix_extracted(spec, PuKind::Mb).generating_matrix() ==
              build_Mb(spec));
    }
}

TEST_CASE("matrix rows and columns are complementary array pairs") {
    SpecSampler sampler(1004);
    const auto spec = sampler.sample_t1(4, {2, 2}, MuSide::First);
    const auto M = vgbf_matrix_closed_form(spec);
    for (int u = 0; u < 2; ++u) {
        CHECK(is_gap(array_from_vgbf(M.entry(u, 0)), array_from_vgbf(M.entry(u, 1))));
        CHECK(is_gap(array_from_vgbf(M.entry(0, u)), array_from_vgbf(M.entry(1, u))));
    }
    const auto spec2 = sampler.sample_t2(5, {3, 2}, CaseAB::B, MuSide::First);
    const auto M2 = vgbf_matrix_closed_form(spec2, PuKind::Mb);
    CHECK(is_gap(array_from_vgbf(M2.entry(0, 0)), array_from_vgbf(M2.entry(1, 0))));
}

TEST_CASE("matrix corners reproduce the construction pairs at identity order") {
    SpecSampler sampler(1005);
    SUBCASE("first construction, both sides") {
        auto spec = sampler.sample_t1(3, {2, 2}, MuSide::First,
                                      SpecSampler::Boundary::AtZero);
        spec.base.pi = identity_perm(3);
        spec.base.c.assign(4, Z4(0));
        spec.base.c_prime = Z4(0);
        const auto M = vgbf_matrix_closed_form(spec);
        const auto off_first = theorem1_offset(spec);
        auto spec_last = spec;
        spec_last.mu_side = MuSide::Last;
        const auto off_last = theorem1_offset(spec_last);
        const auto [f, g_first] = build_pair(spec.base, off_first);
        const auto [f2, g_last] = build_pair(spec_last.base, off_last);
        CHECK(M.entry(0, 0) == f);
        CHECK(M.entry(1, 0) == g_first);   // first column pairs with mu at x1
        CHECK(M.entry(0, 1) == g_last);    // first row pairs with mu at xm
    }
    SUBCASE("second construction, case a") {
        auto spec = sampler.sample_t2(4, {3, 2}, CaseAB::A, MuSide::First);
        spec.base.pi = identity_perm(4);
        spec.base.c.assign(5, Z4(0));
        const auto M = vgbf_matrix_closed_form(spec, PuKind::Ma);
        const auto [f, g] = build_pair(spec.base, theorem2_offset(spec));
        CHECK(M.entry(0, 0) == f);
        CHECK(M.entry(1, 0) == g);
    }
}

TEST_CASE("sequences of matrix rows project to complementary pairs") {
    SpecSampler sampler(1006);
    const auto spec = sampler.sample_t2(4, {3, 2}, CaseAB::A, MuSide::First);
    const auto M = vgbf_matrix_closed_form(spec, PuKind::Ma);
    CHECK(is_gcp(sequence_from_vgbf(M.entry(0, 0)), sequence_from_vgbf(M.entry(1, 0))));
    CHECK(is_gcp(sequence_from_vgbf(M.entry(0, 0)), sequence_from_vgbf(M.entry(0, 1))));
}

TEST_CASE("plain base spec helper keeps the ladder form") {
    // Anchor: the closed form at all-zero choices is the ladder matrix
    // replicated q times.
    Theorem1Spec spec;
    spec.q = 4;
    spec.factorization = {2, 2};
    spec.d_choices = {{{0, 0, 0}}, {{0, 0, 0}}};
    spec.omegas = {0, 2};
    spec.base = plain_base(3);
    const auto M = vgbf_matrix_closed_form(spec);
    const auto ladder = extract_gbf_matrix(all_h_seeds(3));
    for (int p = 0; p < 4; ++p) CHECK(M.comps[p] == ladder);
}

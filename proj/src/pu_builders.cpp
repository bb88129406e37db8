#include "qamgolay/pu_builders.hpp"

#include <stdexcept>

namespace qamgolay {

namespace {

Gi2x2 bh_entries(const CTriple& d) {
    Gi2x2 h;
    h.e[0][0] = GaussianInt::unit(d.d0);
    h.e[0][1] = GaussianInt::unit(d.d0 + d.d2);
    h.e[1][0] = GaussianInt::unit(d.d0 + d.d1);
    h.e[1][1] = -GaussianInt::unit(d.d0 + d.d1 + d.d2);
    return h;
}

LaurentMatrix2x2 constant_matrix(int m, const Gi2x2& g) {
    return LaurentMatrix2x2::from_constant(m, g.e);
}

/// Position j (0..m) of the chain: the factor's weighted sum where a position
/// was chosen, the plain Hadamard everywhere else.
Gi2x2 chain_unit(int j, const std::vector<int>& omegas,
                 const std::vector<Gi2x2>& sums) {
    for (std::size_t k = 0; k < omegas.size(); ++k)
        if (omegas[k] == j) return sums[k];
    return bh_entries(CTriple(0, 0, 0));
}

/// Same at the single-component level: the factor's selected matrix.
Gi2x2 chain_unit_component(int j, const std::vector<int>& omegas,
                           const DVectorFamily& dv, std::int64_t p) {
    for (std::size_t k = 0; k < omegas.size(); ++k)
        if (omegas[k] == j)
            return bh_entries(dv.triple_at(static_cast<int>(k) + 1, p));
    return bh_entries(CTriple(0, 0, 0));
}

std::vector<Gi2x2> factor_sums(const std::vector<int>& factorization,
                               const std::vector<std::vector<CTriple>>& d_choices,
                               WeightVariant variant) {
    std::vector<Gi2x2> out;
    const int t = static_cast<int>(d_choices.size());
    for (int k = 1; k <= t; ++k)
        out.push_back(weighted_bh_sum(k, factorization, d_choices, variant));
    return out;
}

} // namespace

bool in_bh0(const CTriple& d) { return d.valid(); }

BhMatrix bh_matrix(const CTriple& d) {
    BhMatrix h;
    h.d = d;
    const Gi2x2 g = bh_entries(d);
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) h.e[u][v] = g.e[u][v];
    return h;
}

Gi2x2 weighted_bh_sum(int k, const std::vector<int>& factorization,
                      const std::vector<std::vector<CTriple>>& d_choices,
                      WeightVariant variant) {
    const int lead = variant == WeightVariant::LeadingRadix ? 1 : 0;
    const int t = static_cast<int>(factorization.size()) - lead;
    if (k < 1 || k > t) throw std::out_of_range("weighted_bh_sum: factor index");
    const int qk = factorization[lead + k - 1];
    if (static_cast<int>(d_choices[k - 1].size()) != qk - 1)
        throw std::invalid_argument("weighted_bh_sum: factor needs q_k-1 triples");
    std::int64_t place = 1;
    for (int i = 0; i < lead + k - 1; ++i) place *= factorization[i];
    Gi2x2 acc{};
    for (int p = 0; p < qk; ++p) {
        const CTriple d = p == 0 ? CTriple(0, 0, 0) : d_choices[k - 1][p - 1];
        if (!in_bh0(d))
            throw std::invalid_argument("weighted_bh_sum: choice outside the admissible set");
        const std::int64_t w = std::int64_t(1) << ((qk - 1 - p) * place);
        const Gi2x2 h = bh_entries(d);
        for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v) acc.e[u][v] += w * h.e[u][v];
    }
    return acc;
}

LaurentMatrix2x2 build_M1(const Theorem1Spec& spec) {
    spec.validate();
    const int m = spec.m();
    const auto sums = factor_sums(spec.factorization, spec.d_choices,
                                  WeightVariant::Plain);
    LaurentMatrix2x2 M = constant_matrix(m, chain_unit(0, spec.omegas, sums));
    for (int j = 1; j <= m; ++j)
        M = M * LaurentMatrix2x2::delay(m, j) *
            constant_matrix(m, chain_unit(j, spec.omegas, sums));
    return M;
}

LaurentMatrix2x2 build_M1_component(const Theorem1Spec& spec, std::int64_t p) {
    spec.validate();
    const int m = spec.m();
    DVectorFamily dv(spec.factorization, DigitScheme::Plain, spec.d_choices);
    LaurentMatrix2x2 M =
        constant_matrix(m, chain_unit_component(0, spec.omegas, dv, p));
    for (int j = 1; j <= m; ++j)
        M = M * LaurentMatrix2x2::delay(m, j) *
            constant_matrix(m, chain_unit_component(j, spec.omegas, dv, p));
    return M;
}

LaurentMatrix2x2 build_Ma(const Theorem2Spec& spec) {
    spec.validate();
    if (spec.kase != CaseAB::A)
        throw std::invalid_argument("build_Ma: spec must carry case a bounds");
    const int m = spec.m();
    const auto sums = factor_sums(spec.factorization, spec.d_choices,
                                  WeightVariant::LeadingRadix);
    LaurentMatrix2x2 M = constant_matrix(m, chain_unit(0, spec.omegas, sums));
    for (int j = 1; j <= spec.upsilon - 1; ++j)
        M = M * LaurentMatrix2x2::delay(m, j) *
            constant_matrix(m, chain_unit(j, spec.omegas, sums));
    M = M * LaurentMatrix2x2::diagonal(m, spec.nsgip.Q0, spec.nsgip.Q1);
    for (int j = spec.upsilon; j <= m; ++j)
        M = M * LaurentMatrix2x2::delay(m, j) *
            constant_matrix(m, chain_unit(j, spec.omegas, sums));
    return M;
}

LaurentMatrix2x2 build_Mb(const Theorem2Spec& spec) {
    spec.validate();
    if (spec.kase != CaseAB::B)
        throw std::invalid_argument("build_Mb: spec must carry case b bounds");
    const int m = spec.m();
    const auto sums = factor_sums(spec.factorization, spec.d_choices,
                                  WeightVariant::LeadingRadix);
    LaurentMatrix2x2 M = constant_matrix(m, chain_unit(0, spec.omegas, sums));
    for (int j = 1; j <= spec.upsilon1 - 1; ++j)
        M = M * LaurentMatrix2x2::delay(m, j) *
            constant_matrix(m, chain_unit(j, spec.omegas, sums));
    M = M * LaurentMatrix2x2::delay(m, spec.upsilon1);
    LaurentMatrix2x2 inner =
        constant_matrix(m, chain_unit(spec.upsilon1, spec.omegas, sums));
    for (int j = spec.upsilon1 + 1; j <= spec.upsilon2 - 1; ++j)
        inner = inner * LaurentMatrix2x2::delay(m, j) *
                constant_matrix(m, chain_unit(j, spec.omegas, sums));
    // Off-diagonal entries carry the conjugated partner. The entrywise mask
    // [[Q0, Q1], [conj(Q1), conj(Q0)]] is also para-unitary, but its
    // function-side matrix swaps the two position coefficients and no longer
    // matches the case-b offsets; this one does.
    const GaussianInt mask[2][2] = {
        {spec.nsgip.Q0, spec.nsgip.Q1.conj()},
        {spec.nsgip.Q1, spec.nsgip.Q0.conj()}};
    M = M * inner.hadamard(mask);
    for (int j = spec.upsilon2; j <= m; ++j)
        M = M * LaurentMatrix2x2::delay(m, j) *
            constant_matrix(m, chain_unit(j, spec.omegas, sums));
    return M;
}

LaurentMatrix2x2 build_Ma_component(const Theorem2Spec& spec, std::int64_t p) {
    spec.validate();
    const int m = spec.m();
    DVectorFamily dv(spec.factorization, DigitScheme::LeadingRadix, spec.d_choices);
    MixedRadix radix(spec.factorization);
    const int d0 = radix.digit(p, 0);
    const Z4 b = d0 == 0 ? Z4(0) : spec.nsgip.b[d0 - 1];
    const Z4 bp = d0 == 0 ? Z4(0) : spec.nsgip.b_prime[d0 - 1];
    LaurentMatrix2x2 M =
        constant_matrix(m, chain_unit_component(0, spec.omegas, dv, p));
    for (int j = 1; j <= spec.upsilon - 1; ++j)
        M = M * LaurentMatrix2x2::delay(m, j) *
            constant_matrix(m, chain_unit_component(j, spec.omegas, dv, p));
    M = M * LaurentMatrix2x2::diagonal(m, GaussianInt::unit(b), GaussianInt::unit(bp));
    for (int j = spec.upsilon; j <= m; ++j)
        M = M * LaurentMatrix2x2::delay(m, j) *
            constant_matrix(m, chain_unit_component(j, spec.omegas, dv, p));
    return M;
}

LaurentMatrix2x2 build_Mb_component(const Theorem2Spec& spec, std::int64_t p) {
    spec.validate();
    const int m = spec.m();
    DVectorFamily dv(spec.factorization, DigitScheme::LeadingRadix, spec.d_choices);
    MixedRadix radix(spec.factorization);
    const int d0 = radix.digit(p, 0);
    const Z4 b = d0 == 0 ? Z4(0) : spec.nsgip.b[d0 - 1];
    const Z4 bp = d0 == 0 ? Z4(0) : spec.nsgip.b_prime[d0 - 1];
    LaurentMatrix2x2 M =
        constant_matrix(m, chain_unit_component(0, spec.omegas, dv, p));
    for (int j = 1; j <= spec.upsilon1 - 1; ++j)
        M = M * LaurentMatrix2x2::delay(m, j) *
            constant_matrix(m, chain_unit_component(j, spec.omegas, dv, p));
    M = M * LaurentMatrix2x2::delay(m, spec.upsilon1);
    LaurentMatrix2x2 inner =
        constant_matrix(m, chain_unit_component(spec.upsilon1, spec.omegas, dv, p));
    for (int j = spec.upsilon1 + 1; j <= spec.upsilon2 - 1; ++j)
        inner = inner * LaurentMatrix2x2::delay(m, j) *
                constant_matrix(m, chain_unit_component(j, spec.omegas, dv, p));
    const GaussianInt mask[2][2] = {
        {GaussianInt::unit(b), GaussianInt::unit(-bp)},
        {GaussianInt::unit(bp), GaussianInt::unit(-b)}};
    M = M * inner.hadamard(mask);
    for (int j = spec.upsilon2; j <= m; ++j)
        M = M * LaurentMatrix2x2::delay(m, j) *
            constant_matrix(m, chain_unit_component(j, spec.omegas, dv, p));
    return M;
}

} // namespace qamgolay

#include "qamgolay/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qamgolay {

namespace {

std::int64_t product_of(const std::vector<int>& v) {
    std::int64_t p = 1;
    for (int x : v) p *= x;
    return p;
}

/// Adds coeff * x_{pi(pos)} to f, dropping the fake positions 0 and m+1.
void add_position_term(Gbf& f, const Perm& pi, int pos, Z4 coeff) {
    const int m = f.m();
    if (pos < 1 || pos > m) return;
    f.add_term(1u << (pi[pos - 1] - 1), coeff);
}

VGbf mu_vector(int q, int m, const Perm& pi, MuSide side,
               const std::optional<int>& mu_k, const std::vector<int>& omegas,
               const DVectorFamily* dv) {
    const int boundary = side == MuSide::First ? 0 : m;
    int adjust_k = 0;   // 1-based factor whose vector corrects the difference
    for (std::size_t k = 0; k < omegas.size(); ++k)
        if (omegas[k] == boundary) adjust_k = static_cast<int>(k) + 1;
    if (mu_k) {
        if (*mu_k < 1 || *mu_k > static_cast<int>(omegas.size()) ||
            omegas[*mu_k - 1] != boundary)
            throw std::invalid_argument(
                "mu_k: boundary branch requested without a boundary position");
        adjust_k = *mu_k;
    }
    VGbf mu(q, m);
    const int pos = side == MuSide::First ? 1 : m;
    std::vector<Z4> adj;
    if (adjust_k != 0)
        adj = dv->vec(adjust_k, side == MuSide::First ? 1 : 2);
    for (int p = 0; p < q; ++p) {
        add_position_term(mu.comp(p), pi, pos, Z4(2));
        if (adjust_k != 0) mu.comp(p).add_term(0u, adj[p]);
    }
    return mu;
}

void validate_omegas(const std::vector<int>& omegas, std::size_t t, int m) {
    if (omegas.size() != t)
        throw std::invalid_argument("one position per factor expected");
    for (int w : omegas)
        if (w < 0 || w > m) throw std::invalid_argument("position outside [0, m]");
    std::set<int> uniq(omegas.begin(), omegas.end());
    if (uniq.size() != omegas.size())
        throw std::invalid_argument("positions must be pairwise distinct");
}

} // namespace

void StandardGcsSpec::validate() const {
    if (m < 1) throw std::invalid_argument("StandardGcsSpec: m must be >= 1");
    validate_perm(pi, m);
    if (static_cast<int>(c.size()) != m + 1)
        throw std::invalid_argument("StandardGcsSpec: need m+1 affine coefficients");
}

Gbf standard_gbf(const StandardGcsSpec& spec) {
    spec.validate();
    Gbf f(spec.m);
    for (int j = 1; j < spec.m; ++j) {
        const std::uint32_t mask =
            (1u << (spec.pi[j - 1] - 1)) | (1u << (spec.pi[j] - 1));
        f.add_term(mask, Z4(2));
    }
    f.add_term(0u, spec.c[0]);
    for (int j = 1; j <= spec.m; ++j) f.add_term(1u << (j - 1), spec.c[j]);
    return f;
}

std::pair<Gbf, Gbf> standard_gcp(const StandardGcsSpec& spec) {
    Gbf f = standard_gbf(spec);
    Gbf g = f;
    const int pos = spec.side == MuSide::First ? 1 : spec.m;
    g.add_term(1u << (spec.pi[pos - 1] - 1), Z4(2));
    g.add_term(0u, spec.c_prime);
    return {f, g};
}

void Theorem1Spec::validate() const {
    base.validate();
    if (factorization.empty())
        throw std::invalid_argument("Theorem1Spec: factorization must be nonempty");
    for (int f : factorization)
        if (f < 2) throw std::invalid_argument("Theorem1Spec: every factor must be >= 2");
    if (product_of(factorization) != q)
        throw std::invalid_argument("Theorem1Spec: factorization does not multiply to q");
    validate_omegas(omegas, factorization.size(), base.m);
}

OffsetPair theorem1_offset(const Theorem1Spec& spec) {
    spec.validate();
    DVectorFamily dv(spec.factorization, DigitScheme::Plain, spec.d_choices);
    const int m = spec.m(), t = dv.t();
    VGbf s(spec.q, m);
    for (int k = 1; k <= t; ++k) {
        const auto d0 = dv.vec(k, 0), d1 = dv.vec(k, 1), d2 = dv.vec(k, 2);
        const int w = spec.omegas[k - 1];
        for (int p = 0; p < spec.q; ++p) {
            add_position_term(s.comp(p), spec.base.pi, w, d1[p]);
            add_position_term(s.comp(p), spec.base.pi, w + 1, d2[p]);
            s.comp(p).add_term(0u, d0[p]);
        }
    }
    VGbf mu = mu_vector(spec.q, m, spec.base.pi, spec.mu_side, spec.mu_k,
                        spec.omegas, &dv);
    return {std::move(s), std::move(mu)};
}

void Theorem2Spec::validate() const {
    base.validate();
    if (factorization.empty())
        throw std::invalid_argument("Theorem2Spec: factorization must be nonempty");
    if (factorization[0] < 3)
        throw std::invalid_argument("Theorem2Spec: leading factor must be >= 3");
    for (std::size_t k = 1; k < factorization.size(); ++k)
        if (factorization[k] < 2)
            throw std::invalid_argument("Theorem2Spec: every factor must be >= 2");
    if (product_of(factorization) != q)
        throw std::invalid_argument("Theorem2Spec: factorization does not multiply to q");
    validate_omegas(omegas, factorization.size() - 1, base.m);
    if (nsgip.q0() != factorization[0])
        throw std::invalid_argument("Theorem2Spec: pair does not match the leading factor");
    const int m = base.m;
    if (kase == CaseAB::A) {
        if (upsilon < 2 || upsilon > m - 1)
            throw std::invalid_argument("Theorem2Spec: case a needs 2 <= v <= m-1");
    } else {
        if (upsilon1 < 1 || upsilon1 > m - 2 || upsilon2 < upsilon1 + 2 || upsilon2 > m)
            throw std::invalid_argument(
                "Theorem2Spec: case b needs 1 <= v1 <= m-2 and v1+2 <= v2 <= m");
    }
}

OffsetPair theorem2_offset(const Theorem2Spec& spec) {
    spec.validate();
    DVectorFamily dv(spec.factorization, DigitScheme::LeadingRadix, spec.d_choices);
    const int m = spec.m(), t = dv.t();
    VGbf s(spec.q, m);
    for (int k = 1; k <= t; ++k) {
        const auto d0 = dv.vec(k, 0), d1 = dv.vec(k, 1), d2 = dv.vec(k, 2);
        const int w = spec.omegas[k - 1];
        for (int p = 0; p < spec.q; ++p) {
            add_position_term(s.comp(p), spec.base.pi, w, d1[p]);
            add_position_term(s.comp(p), spec.base.pi, w + 1, d2[p]);
            s.comp(p).add_term(0u, d0[p]);
        }
    }
    const auto [b, bp] = build_b_vectors(spec.factorization, spec.nsgip);
    for (int p = 0; p < spec.q; ++p) {
        if (spec.kase == CaseAB::A) {
            add_position_term(s.comp(p), spec.base.pi, spec.upsilon, bp[p] - b[p]);
        } else {
            add_position_term(s.comp(p), spec.base.pi, spec.upsilon1, bp[p] - b[p]);
            add_position_term(s.comp(p), spec.base.pi, spec.upsilon2, -bp[p] - b[p]);
        }
        s.comp(p).add_term(0u, b[p]);
    }
    VGbf mu = mu_vector(spec.q, m, spec.base.pi, spec.mu_side, spec.mu_k,
                        spec.omegas, &dv);
    return {std::move(s), std::move(mu)};
}

std::pair<VGbf, VGbf> build_pair(const StandardGcsSpec& base, const OffsetPair& offset) {
    if (offset.s.q() != offset.mu.q())
        throw std::invalid_argument("build_pair: offset and pairing difference disagree on q");
    if (offset.s.m() != base.m || offset.mu.m() != base.m)
        throw std::invalid_argument("build_pair: variable count mismatch");
    const Gbf f = standard_gbf(base);
    VGbf fv = offset.s.plus_scalar(f);
    VGbf gv = fv + offset.mu;
    return {std::move(fv), std::move(gv)};
}

OffsetPair cases_i_iii_offset(int m, const Perm& pi,
                              const std::vector<CTriple>& triples,
                              int omega, MuSide side) {
    const int q = static_cast<int>(triples.size()) + 1;
    validate_perm(pi, m);
    if (omega < 0 || omega > m)
        throw std::invalid_argument("cases_i_iii_offset: position outside [0, m]");
    for (const auto& d : triples)
        if (!d.valid())
            throw std::invalid_argument("cases_i_iii_offset: triple outside the admissible set");
    VGbf s(q, m), mu(q, m);
    const int pos = side == MuSide::First ? 1 : m;
    // A position on the pairing side's boundary loses its linear term to the
    // fake variable; the difference then needs that coefficient back as a
    // constant, or the pair fails at the even shifts.
    const bool correct =
        (side == MuSide::First && omega == 0) || (side == MuSide::Last && omega == m);
    for (int p = 0; p < q; ++p) {
        const CTriple d = p == 0 ? CTriple(0, 0, 0) : triples[p - 1];
        s.comp(p).add_term(0u, d.d0);
        add_position_term(s.comp(p), pi, omega, d.d1);
        add_position_term(s.comp(p), pi, omega + 1, d.d2);
        add_position_term(mu.comp(p), pi, pos, Z4(2));
        if (correct) mu.comp(p).add_term(0u, side == MuSide::First ? d.d1 : d.d2);
    }
    return {std::move(s), std::move(mu)};
}

namespace {

OffsetPair b_vector_offset(int m, const Perm& pi, const Nsgip& pair, MuSide side,
                           const std::vector<std::pair<int, bool>>& positions) {
    validate_perm(pi, m);
    const int q = pair.q0();
    std::vector<Z4> b{Z4(0)}, bp{Z4(0)};
    b.insert(b.end(), pair.b.begin(), pair.b.end());
    bp.insert(bp.end(), pair.b_prime.begin(), pair.b_prime.end());
    VGbf s(q, m), mu(q, m);
    const int pos = side == MuSide::First ? 1 : m;
    for (int p = 0; p < q; ++p) {
        s.comp(p).add_term(0u, b[p]);
        for (auto [v, negated] : positions) {
            const Z4 coeff = negated ? -bp[p] - b[p] : bp[p] - b[p];
            add_position_term(s.comp(p), pi, v, coeff);
        }
        add_position_term(mu.comp(p), pi, pos, Z4(2));
    }
    return {std::move(s), std::move(mu)};
}

} // namespace

OffsetPair case_iv_offset(int m, const Perm& pi, const Nsgip& pair,
                          int upsilon, MuSide side) {
    if (upsilon < 2 || upsilon > m - 1)
        throw std::invalid_argument("case_iv_offset: needs 2 <= v <= m-1");
    return b_vector_offset(m, pi, pair, side, {{upsilon, false}});
}

OffsetPair case_v_offset(int m, const Perm& pi, const Nsgip& pair,
                         int upsilon1, int upsilon2, MuSide side) {
    if (upsilon1 < 1 || upsilon1 > m - 2 || upsilon2 < upsilon1 + 2 || upsilon2 > m)
        throw std::invalid_argument("case_v_offset: needs 1 <= v1 <= m-2, v1+2 <= v2 <= m");
    return b_vector_offset(m, pi, pair, side, {{upsilon1, false}, {upsilon2, true}});
}

} // namespace qamgolay

#include "qamgolay/extraction.hpp"

#include <stdexcept>

#include "qamgolay/sampling.hpp"

namespace qamgolay {

GbfMatrix2x2::GbfMatrix2x2(int m) {
    for (auto& row : e)
        for (auto& f : row) f = Gbf(m);
}

GbfMatrix2x2 GbfMatrix2x2::J(int m) {
    GbfMatrix2x2 M(m);
    for (auto& row : M.e)
        for (auto& f : row) f = Gbf::constant(m, Z4(1));
    return M;
}

GbfMatrix2x2 GbfMatrix2x2::A(int m) {
    GbfMatrix2x2 M(m);
    M.e[1][0] = Gbf::constant(m, Z4(1));
    M.e[1][1] = Gbf::constant(m, Z4(1));
    return M;
}

GbfMatrix2x2 GbfMatrix2x2::B(int m) {
    GbfMatrix2x2 M(m);
    M.e[0][1] = Gbf::constant(m, Z4(1));
    M.e[1][1] = Gbf::constant(m, Z4(1));
    return M;
}

GbfMatrix2x2 GbfMatrix2x2::D(int m, int j) {
    GbfMatrix2x2 M(m);
    Gbf one_minus = Gbf::constant(m, Z4(1));
    one_minus.add_term(1u << (j - 1), Z4(3));
    M.e[0][0] = std::move(one_minus);
    M.e[1][1] = Gbf::var(m, j);
    return M;
}

GbfMatrix2x2 GbfMatrix2x2::from_z4(int m, const Z4 (&c)[2][2]) {
    GbfMatrix2x2 M(m);
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) M.e[u][v] = Gbf::constant(m, c[u][v]);
    return M;
}

GbfMatrix2x2 GbfMatrix2x2::bh_tilde(int m, const CTriple& d) {
    const Z4 c[2][2] = {{d.d0, d.d0 + d.d2},
                        {d.d0 + d.d1, d.d0 + d.d1 + d.d2 + Z4(2)}};
    return from_z4(m, c);
}

GbfMatrix2x2 GbfMatrix2x2::operator+(const GbfMatrix2x2& o) const {
    GbfMatrix2x2 r(m());
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) r.e[u][v] = e[u][v] + o.e[u][v];
    return r;
}

GbfMatrix2x2 GbfMatrix2x2::operator-(const GbfMatrix2x2& o) const {
    GbfMatrix2x2 r(m());
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) r.e[u][v] = e[u][v] - o.e[u][v];
    return r;
}

GbfMatrix2x2 GbfMatrix2x2::operator*(const GbfMatrix2x2& o) const {
    GbfMatrix2x2 r(m());
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v)
            r.e[u][v] = e[u][0] * o.e[0][v] + e[u][1] * o.e[1][v];
    return r;
}

GbfMatrix2x2 GbfMatrix2x2::scaled(const Gbf& f) const {
    GbfMatrix2x2 r(m());
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) r.e[u][v] = e[u][v] * f;
    return r;
}

bool GbfMatrix2x2::operator==(const GbfMatrix2x2& o) const {
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v)
            if (e[u][v] != o.e[u][v]) return false;
    return true;
}

LaurentMatrix2x2 GbfMatrix2x2::generating_matrix() const {
    const int mm = m();
    LaurentMatrix2x2 M(mm);
    const std::uint32_t len = 1u << mm;
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v)
            for (std::uint32_t x = 0; x < len; ++x) {
                std::vector<int> exps(mm);
                for (int j = 0; j < mm; ++j) exps[j] = (x >> j) & 1;
                M.e[u][v].add_term(LaurentPoly::pack(exps),
                                   GaussianInt::unit(e[u][v].eval(x)));
            }
    return M;
}

VGbf VgbfMatrix2x2::entry(int u, int v) const {
    std::vector<Gbf> fs;
    fs.reserve(comps.size());
    for (const auto& c : comps) fs.push_back(c.e[u][v]);
    return VGbf(std::move(fs));
}

LaurentMatrix2x2 VgbfMatrix2x2::generating_matrix() const {
    LaurentMatrix2x2 M(m());
    const int qq = q();
    for (int p = 0; p < qq; ++p) {
        const GaussianInt w{std::int64_t(1) << (qq - 1 - p), 0};
        M = M + comps[p].generating_matrix().scaled(w);
    }
    return M;
}

GbfMatrix2x2 gbf_chain_extract(const std::vector<GbfMatrix2x2>& seeds,
                               const std::vector<int>& vars) {
    if (seeds.empty()) throw std::invalid_argument("gbf_chain_extract: no seeds");
    if (vars.size() + 1 != seeds.size())
        throw std::invalid_argument("gbf_chain_extract: need one variable between seeds");
    const int m = seeds[0].m();
    GbfMatrix2x2 G = seeds[0];
    const GbfMatrix2x2 J = GbfMatrix2x2::J(m);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const GbfMatrix2x2 D = GbfMatrix2x2::D(m, vars[i]);
        G = G * D * J + J * D * seeds[i + 1];
    }
    return G;
}

GbfMatrix2x2 extract_gbf_matrix(const std::vector<GbfMatrix2x2>& seeds) {
    const int m = static_cast<int>(seeds.size()) - 1;
    std::vector<int> vars(m);
    for (int j = 0; j < m; ++j) vars[j] = j + 1;
    return gbf_chain_extract(seeds, vars);
}

namespace {

Gbf quadratic_chain(int m) {
    Gbf f(m);
    for (int j = 1; j < m; ++j)
        f.add_term((1u << (j - 1)) | (1u << j), Z4(2));
    return f;
}

template <typename Spec>
Spec normalized(const Spec& spec) {
    Spec n = spec;
    n.base.pi = identity_perm(spec.m());
    n.base.c.assign(spec.m() + 1, Z4(0));
    n.base.c_prime = Z4(0);
    n.mu_k.reset();
    return n;
}

VgbfMatrix2x2 closed_form_from(const VGbf& s, const VGbf& mu_first,
                               const VGbf& mu_last) {
    const int m = s.m();
    const Gbf f = quadratic_chain(m);
    VgbfMatrix2x2 out;
    for (int p = 0; p < s.q(); ++p) {
        GbfMatrix2x2 Mp(m);
        const Gbf base = f + s.comp(p);
        Mp.e[0][0] = base;
        Mp.e[0][1] = base + mu_last.comp(p);
        Mp.e[1][0] = base + mu_first.comp(p);
        Mp.e[1][1] = base + mu_first.comp(p) + mu_last.comp(p);
        out.comps.push_back(std::move(Mp));
    }
    return out;
}

} // namespace

VgbfMatrix2x2 vgbf_matrix_closed_form(const Theorem1Spec& spec) {
    Theorem1Spec n = normalized(spec);
    n.mu_side = MuSide::First;
    const OffsetPair first = theorem1_offset(n);
    n.mu_side = MuSide::Last;
    const OffsetPair last = theorem1_offset(n);
    return closed_form_from(first.s, first.mu, last.mu);
}

VgbfMatrix2x2 vgbf_matrix_closed_form(const Theorem2Spec& spec, PuKind kind) {
    if ((kind == PuKind::Ma) != (spec.kase == CaseAB::A) || kind == PuKind::M1)
        throw std::invalid_argument("vgbf_matrix_closed_form: kind does not match case");
    Theorem2Spec n = normalized(spec);
    n.mu_side = MuSide::First;
    const OffsetPair first = theorem2_offset(n);
    n.mu_side = MuSide::Last;
    const OffsetPair last = theorem2_offset(n);
    return closed_form_from(first.s, first.mu, last.mu);
}

namespace {

std::vector<GbfMatrix2x2> component_seeds(int m, const std::vector<int>& omegas,
                                          const DVectorFamily& dv, std::int64_t p) {
    std::vector<GbfMatrix2x2> seeds;
    seeds.reserve(m + 1);
    for (int j = 0; j <= m; ++j) {
        CTriple d(0, 0, 0);
        for (std::size_t k = 0; k < omegas.size(); ++k)
            if (omegas[k] == j) d = dv.triple_at(static_cast<int>(k) + 1, p);
        seeds.push_back(GbfMatrix2x2::bh_tilde(m, d));
    }
    return seeds;
}

GbfMatrix2x2 j_diag(int m, Z4 alpha, Z4 beta) {
    const Z4 c[2][2] = {{alpha, beta}, {alpha, beta}};
    return GbfMatrix2x2::from_z4(m, c);
}

} // namespace

VgbfMatrix2x2 vgbf_matrix_extracted(const Theorem1Spec& spec) {
    spec.validate();
    const int m = spec.m();
    DVectorFamily dv(spec.factorization, DigitScheme::Plain, spec.d_choices);
    VgbfMatrix2x2 out;
    for (std::int64_t p = 0; p < spec.q; ++p)
        out.comps.push_back(extract_gbf_matrix(component_seeds(m, spec.omegas, dv, p)));
    return out;
}

VgbfMatrix2x2 vgbf_matrix_extracted(const Theorem2Spec& spec, PuKind kind) {
    spec.validate();
    if ((kind == PuKind::Ma) != (spec.kase == CaseAB::A) || kind == PuKind::M1)
        throw std::invalid_argument("vgbf_matrix_extracted: kind does not match case");
    const int m = spec.m();
    DVectorFamily dv(spec.factorization, DigitScheme::LeadingRadix, spec.d_choices);
    MixedRadix radix(spec.factorization);
    VgbfMatrix2x2 out;
    for (std::int64_t p = 0; p < spec.q; ++p) {
        auto seeds = component_seeds(m, spec.omegas, dv, p);
        const int d0 = radix.digit(p, 0);
        const Z4 b = d0 == 0 ? Z4(0) : spec.nsgip.b[d0 - 1];
        const Z4 bp = d0 == 0 ? Z4(0) : spec.nsgip.b_prime[d0 - 1];
        if (kind == PuKind::Ma) {
            // A constant diagonal right after seed v-1 folds into that seed.
            seeds[spec.upsilon - 1] = seeds[spec.upsilon - 1] + j_diag(m, b, bp);
            out.comps.push_back(extract_gbf_matrix(seeds));
        } else {
            // The masked middle block becomes one composite seed.
            std::vector<GbfMatrix2x2> mid(seeds.begin() + spec.upsilon1,
                                          seeds.begin() + spec.upsilon2);
            std::vector<int> mid_vars;
            for (int j = spec.upsilon1 + 1; j <= spec.upsilon2 - 1; ++j)
                mid_vars.push_back(j);
            const Z4 mask[2][2] = {{b, -bp}, {bp, -b}};
            GbfMatrix2x2 block =
                gbf_chain_extract(mid, mid_vars) + GbfMatrix2x2::from_z4(m, mask);
            std::vector<GbfMatrix2x2> outer(seeds.begin(),
                                            seeds.begin() + spec.upsilon1);
            outer.push_back(std::move(block));
            outer.insert(outer.end(), seeds.begin() + spec.upsilon2, seeds.end());
            std::vector<int> outer_vars;
            for (int j = 1; j <= spec.upsilon1; ++j) outer_vars.push_back(j);
            for (int j = spec.upsilon2; j <= m; ++j) outer_vars.push_back(j);
            out.comps.push_back(gbf_chain_extract(outer, outer_vars));
        }
    }
    return out;
}

Gbf gbf_from_values(int m, const std::vector<Z4>& values) {
    const std::uint32_t len = 1u << m;
    if (values.size() != len)
        throw std::invalid_argument("gbf_from_values: need 2^m values");
    std::vector<Z4> a = values;
    for (int j = 0; j < m; ++j)
        for (std::uint32_t x = 0; x < len; ++x)
            if (x & (1u << j)) a[x] -= a[x ^ (1u << j)];
    Gbf f(m);
    for (std::uint32_t mask = 0; mask < len; ++mask) f.add_term(mask, a[mask]);
    return f;
}

GbfMatrix2x2 gbf_matrix_from_generating(const LaurentMatrix2x2& M) {
    const int m = M.m;
    const std::uint32_t len = 1u << m;
    GbfMatrix2x2 out(m);
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) {
            std::vector<Z4> vals(len);
            for (std::uint32_t x = 0; x < len; ++x) {
                std::vector<int> exps(m);
                for (int j = 0; j < m; ++j) exps[j] = (x >> j) & 1;
                const GaussianInt c = M.e[u][v].coeff(exps);
                bool found = false;
                for (int k = 0; k < 4 && !found; ++k)
                    if (c == GaussianInt::unit(Z4(k))) {
                        vals[x] = Z4(k);
                        found = true;
                    }
                if (!found)
                    throw std::invalid_argument(
                        "gbf_matrix_from_generating: coefficient is not a fourth root of unity");
            }
            out.e[u][v] = gbf_from_values(m, vals);
        }
    return out;
}

bool matrix_identities_check(std::uint64_t seed) {
    const int m = 1;
    const GbfMatrix2x2 J = GbfMatrix2x2::J(m), A = GbfMatrix2x2::A(m),
                       B = GbfMatrix2x2::B(m), D = GbfMatrix2x2::D(m, 1);
    const Gbf x = Gbf::var(m, 1);
    bool ok = (J * D * J == J) && (A * D * J == A) && (B * D * J == J.scaled(x)) &&
              (J * D * A == J.scaled(x)) && (J * D * B == B);
    // Same five relations evaluated pointwise at x = 0 and x = 1.
    for (std::uint32_t pt = 0; pt < 2 && ok; ++pt) {
        auto val = [pt](const GbfMatrix2x2& M, int u, int v) {
            return M.e[u][v].eval(pt);
        };
        const GbfMatrix2x2 lhs[5] = {J * D * J, A * D * J, B * D * J, J * D * A,
                                     J * D * B};
        const GbfMatrix2x2 rhs[5] = {J, A, J.scaled(x), J.scaled(x), B};
        for (int i = 0; i < 5 && ok; ++i)
            for (int u = 0; u < 2; ++u)
                for (int v = 0; v < 2; ++v)
                    ok = ok && val(lhs[i], u, v) == val(rhs[i], u, v);
    }
    // Transport rules on random matrices over two and three variables.
    SplitMix64 rng(seed);
    for (int round = 0; round < 8 && ok; ++round) {
        const int mm = 2 + static_cast<int>(rng.next() % 2);
        GbfMatrix2x2 M(mm);
        for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v)
                for (int trial = 0; trial < 4; ++trial)
                    M.e[u][v].add_term(
                        static_cast<std::uint32_t>(rng.next() % (1u << mm)),
                        Z4(static_cast<int>(rng.next() % 4)));
        const Z4 alpha(static_cast<int>(rng.next() % 4));
        const Z4 beta(static_cast<int>(rng.next() % 4));
        const LaurentMatrix2x2 gen = M.generating_matrix();
        ok = ok && (M + j_diag(mm, alpha, beta)).generating_matrix() ==
                       gen * LaurentMatrix2x2::diagonal(mm, GaussianInt::unit(alpha),
                                                        GaussianInt::unit(beta));
        Z4 cz[2][2];
        GaussianInt cu[2][2];
        for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v) {
                cz[u][v] = Z4(static_cast<int>(rng.next() % 4));
                cu[u][v] = GaussianInt::unit(cz[u][v]);
            }
        ok = ok && (M + GbfMatrix2x2::from_z4(mm, cz)).generating_matrix() ==
                       gen.hadamard(cu);
    }
    return ok;
}

} // namespace qamgolay

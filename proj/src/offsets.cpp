#include "qamgolay/offsets.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qamgolay {

const std::vector<CTriple>& set_C() {
    static const std::vector<CTriple> table = [] {
        std::vector<CTriple> v;
        for (int d0 = 0; d0 < 4; ++d0)
            for (int d1 = 0; d1 < 4; ++d1)
                for (int d2 = 0; d2 < 4; ++d2) {
                    CTriple d(d0, d1, d2);
                    if (d.valid()) v.push_back(d);
                }
        return v;   // lexicographic: d2 is determined by (d0,d1)
    }();
    return table;
}

CClass classify_C(const CTriple& d) {
    if (!d.valid())
        throw std::invalid_argument("classify_C: triple does not satisfy 2*d0+d1+d2=0");
    const bool z1 = d.d1.is_zero(), z2 = d.d2.is_zero();
    if (!z1 && !z2) return CClass::C1;
    if (z1 && !z2) return CClass::C2;
    if (!z1 && z2) return CClass::C3;
    return CClass::C4;
}

const std::vector<CTriple>& class_members(CClass c) {
    static const std::array<std::vector<CTriple>, 4> parts = [] {
        std::array<std::vector<CTriple>, 4> p;
        for (const auto& d : set_C()) p[static_cast<int>(classify_C(d))].push_back(d);
        return p;
    }();
    return parts[static_cast<int>(c)];
}

GaussianInt gaussian_image(const std::vector<Z4>& b) {
    const int q0 = static_cast<int>(b.size()) + 1;
    GaussianInt acc{std::int64_t(1) << (q0 - 1), 0};
    for (int p = 1; p < q0; ++p)
        acc += (std::int64_t(1) << (q0 - 1 - p)) * GaussianInt::unit(b[p - 1]);
    return acc;
}

std::vector<Nsgip> enumerate_nsgip(int q0) {
    if (q0 < 2) throw std::invalid_argument("enumerate_nsgip: q0 must be >= 2");
    const int n = q0 - 1;
    const std::int64_t total = std::int64_t(1) << (2 * n);  // 4^n
    std::vector<std::vector<Z4>> tuples(total);
    std::vector<GaussianInt> images(total);
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::vector<Z4> b(n);
        std::int64_t rest = idx;
        for (int p = n - 1; p >= 0; --p) {  // lexicographic in (b_1..b_{q0-1})
            b[p] = Z4(static_cast<int>(rest & 3));
            rest >>= 2;
        }
        tuples[idx] = std::move(b);
        images[idx] = gaussian_image(tuples[idx]);
    }
    std::vector<Nsgip> out;
    for (std::int64_t i = 0; i < total; ++i)
        for (std::int64_t j = 0; j < total; ++j) {
            const GaussianInt &Q0 = images[i], &Q1 = images[j];
            if (Q0.norm2() != Q1.norm2()) continue;
            if (Q0 == Q1 || Q0 == Q1.conj()) continue;
            out.push_back(Nsgip{tuples[i], tuples[j], Q0, Q1});
        }
    return out;
}

DVectorFamily::DVectorFamily(std::vector<int> factorization, DigitScheme scheme,
                             std::vector<std::vector<CTriple>> choices)
    : radix_(std::move(factorization)), scheme_(scheme), choices_(std::move(choices)) {
    const int t = static_cast<int>(choices_.size());
    const int expected = static_cast<int>(radix_.size()) -
                         (scheme_ == DigitScheme::LeadingRadix ? 1 : 0);
    if (t != expected)
        throw std::invalid_argument("DVectorFamily: one choice list per factor expected");
    if (scheme_ == DigitScheme::LeadingRadix && radix_.radix(0) < 3)
        throw std::invalid_argument("DVectorFamily: leading radix must be >= 3");
    for (int k = 1; k <= t; ++k) {
        const int qk = radix_.radix(digit_index(k));
        if (static_cast<int>(choices_[k - 1].size()) != qk - 1)
            throw std::invalid_argument("DVectorFamily: factor needs q_k-1 triples");
        for (const auto& d : choices_[k - 1])
            if (!d.valid())
                throw std::invalid_argument("DVectorFamily: choice outside the admissible set");
    }
}

int DVectorFamily::digit_index(int k) const {
    return scheme_ == DigitScheme::LeadingRadix ? k : k - 1;
}

CTriple DVectorFamily::triple_at(int k, std::int64_t p) const {
    if (k < 1 || k > t()) throw std::out_of_range("DVectorFamily: factor index");
    const int digit = radix_.digit(p, digit_index(k));
    if (digit == 0) return CTriple(0, 0, 0);
    return choices_[k - 1][digit - 1];
}

std::vector<Z4> DVectorFamily::vec(int k, int i) const {
    if (i < 0 || i > 2) throw std::out_of_range("DVectorFamily: component index");
    std::vector<Z4> v(q());
    for (std::int64_t p = 0; p < q(); ++p) v[p] = triple_at(k, p).at(i);
    return v;
}

std::pair<std::vector<Z4>, std::vector<Z4>>
build_b_vectors(const std::vector<int>& factorization_with_leading, const Nsgip& pair) {
    MixedRadix radix(factorization_with_leading);
    const int q0 = radix.radix(0);
    if (pair.q0() != q0)
        throw std::invalid_argument("build_b_vectors: pair does not match the leading radix");
    std::vector<Z4> full_b{Z4(0)}, full_bp{Z4(0)};   // b_0 = b'_0 = 0
    full_b.insert(full_b.end(), pair.b.begin(), pair.b.end());
    full_bp.insert(full_bp.end(), pair.b_prime.begin(), pair.b_prime.end());
    const std::int64_t q = radix.product();
    std::vector<Z4> b(q), bp(q);
    for (std::int64_t p = 0; p < q; ++p) {
        const int d0 = radix.digit(p, 0);
        b[p] = full_b[d0];
        bp[p] = full_bp[d0];
    }
    return {b, bp};
}

int CoefficientMatrix::nonzero_var_columns() const {
    int count = 0;
    for (int j = 1; j <= m; ++j) {
        bool nz = false;
        for (int p = 0; p < q && !nz; ++p) nz = !at(p, j).is_zero();
        count += nz;
    }
    return count;
}

std::string CoefficientMatrix::csv_header(int q, int m) {
    std::ostringstream os;
    os << "q,m";
    for (int i = 0; i < q * (m + 1); ++i) os << ",c" << i;
    return os.str();
}

std::string CoefficientMatrix::csv_row() const {
    std::ostringstream os;
    os << q << ',' << m;
    for (const Z4& c : a) os << ',' << int(c.v);
    return os.str();
}

CoefficientMatrix coefficient_matrix(const VGbf& s, const Perm& pi) {
    const int m = s.m();
    validate_perm(pi, m);
    CoefficientMatrix S;
    S.q = s.q();
    S.m = m;
    S.a.assign(static_cast<std::size_t>(S.q) * (m + 1), Z4(0));
    for (int p = 0; p < S.q; ++p) {
        const Gbf& f = s.comp(p);
        if (f.degree() > 1)
            throw std::invalid_argument("coefficient_matrix: offset component is not affine");
        S.at(p, 0) = f.coeff(0u);
        for (int j = 1; j <= m; ++j)
            S.at(p, j) = f.coeff(1u << (pi[j - 1] - 1));
    }
    return S;
}

VGbf offset_from_matrix(const CoefficientMatrix& S, const Perm& pi) {
    validate_perm(pi, S.m);
    std::vector<Gbf> comps;
    comps.reserve(S.q);
    for (int p = 0; p < S.q; ++p) {
        Gbf f(S.m);
        f.add_term(0u, S.at(p, 0));
        for (int j = 1; j <= S.m; ++j)
            f.add_term(1u << (pi[j - 1] - 1), S.at(p, j));
        comps.push_back(std::move(f));
    }
    return VGbf(std::move(comps));
}

} // namespace qamgolay

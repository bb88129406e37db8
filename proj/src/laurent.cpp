#include "qamgolay/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qamgolay {

LaurentPoly::LaurentPoly(int m) : m_(m) {
    if (m < 0 || m > kMaxVars)
        throw std::invalid_argument("LaurentPoly: variable count out of range");
}

LaurentPoly LaurentPoly::constant(int m, GaussianInt c) {
    LaurentPoly p(m);
    p.add_term(pack(std::vector<int>(m, 0)), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int m, int j, int e, GaussianInt c) {
    if (j < 1 || j > m) throw std::invalid_argument("LaurentPoly::monomial: bad variable");
    std::vector<int> exps(m, 0);
    exps[j - 1] = e;
    LaurentPoly p(m);
    p.add_term(pack(exps), c);
    return p;
}

std::uint64_t LaurentPoly::pack(const std::vector<int>& exps) {
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < exps.size(); ++j) {
        const int biased = exps[j] + kBias;
        if (biased < 0 || biased > 15)
            throw std::out_of_range("LaurentPoly: exponent outside representable range");
        key |= static_cast<std::uint64_t>(biased) << (4 * j);
    }
    return key;
}

std::vector<int> LaurentPoly::unpack(std::uint64_t key) const {
    std::vector<int> exps(m_);
    for (int j = 0; j < m_; ++j)
        exps[j] = static_cast<int>((key >> (4 * j)) & 0xF) - kBias;
    return exps;
}

GaussianInt LaurentPoly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(pack(exps));
    return it == terms_.end() ? GaussianInt{} : it->second;
}

void LaurentPoly::add_term(std::uint64_t key, GaussianInt c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (m_ != o.m_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
    LaurentPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    if (m_ != o.m_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
    LaurentPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

std::uint64_t LaurentPoly::key_mul(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t key = 0;
    for (int j = 0; j < m_; ++j) {
        const int ea = static_cast<int>((a >> (4 * j)) & 0xF) - kBias;
        const int eb = static_cast<int>((b >> (4 * j)) & 0xF) - kBias;
        const int biased = ea + eb + kBias;
        if (biased < 0 || biased > 15)
            throw std::out_of_range("LaurentPoly: exponent overflow in product");
        key |= static_cast<std::uint64_t>(biased) << (4 * j);
    }
    return key;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (m_ != o.m_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
    LaurentPoly r(m_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(key_mul(ka, kb), ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(GaussianInt c) const {
    LaurentPoly r(m_);
    for (const auto& [k, cc] : terms_) r.add_term(k, c * cc);
    return r;
}

LaurentPoly LaurentPoly::conj_reciprocal() const {
    LaurentPoly r(m_);
    for (const auto& [k, c] : terms_) {
        std::vector<int> exps = unpack(k);
        for (int& e : exps) e = -e;
        r.add_term(pack(exps), c.conj());
    }
    return r;
}

bool LaurentPoly::is_constant(GaussianInt* c) const {
    if (terms_.empty()) {
        if (c) *c = GaussianInt{};
        return true;
    }
    const std::uint64_t zero_key = pack(std::vector<int>(m_, 0));
    if (terms_.size() == 1 && terms_.begin()->first == zero_key) {
        if (c) *c = terms_.begin()->second;
        return true;
    }
    return false;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.re << "," << c.im << ")";
        const auto exps = unpack(k);
        for (int j = 0; j < m_; ++j)
            if (exps[j] != 0) os << "*z" << (j + 1) << "^" << exps[j];
    }
    return os.str();
}

LaurentMatrix2x2::LaurentMatrix2x2(int m_vars) : m(m_vars) {
    for (auto& row : e)
        for (auto& p : row) p = LaurentPoly(m);
}

LaurentMatrix2x2 LaurentMatrix2x2::from_constant(int m, const GaussianInt (&c)[2][2]) {
    LaurentMatrix2x2 M(m);
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) M.e[u][v] = LaurentPoly::constant(m, c[u][v]);
    return M;
}

LaurentMatrix2x2 LaurentMatrix2x2::delay(int m, int j) {
    LaurentMatrix2x2 M(m);
    M.e[0][0] = LaurentPoly::constant(m, {1, 0});
    M.e[1][1] = LaurentPoly::monomial(m, j, 1, {1, 0});
    return M;
}

LaurentMatrix2x2 LaurentMatrix2x2::diagonal(int m, GaussianInt a, GaussianInt d) {
    LaurentMatrix2x2 M(m);
    M.e[0][0] = LaurentPoly::constant(m, a);
    M.e[1][1] = LaurentPoly::constant(m, d);
    return M;
}

LaurentMatrix2x2 LaurentMatrix2x2::operator*(const LaurentMatrix2x2& o) const {
    LaurentMatrix2x2 r(m);
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v)
            r.e[u][v] = e[u][0] * o.e[0][v] + e[u][1] * o.e[1][v];
    return r;
}

LaurentMatrix2x2 LaurentMatrix2x2::operator+(const LaurentMatrix2x2& o) const {
    LaurentMatrix2x2 r(m);
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) r.e[u][v] = e[u][v] + o.e[u][v];
    return r;
}

LaurentMatrix2x2 LaurentMatrix2x2::scaled(GaussianInt c) const {
    LaurentMatrix2x2 r(m);
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) r.e[u][v] = e[u][v].scaled(c);
    return r;
}

LaurentMatrix2x2 LaurentMatrix2x2::dagger_reciprocal() const {
    LaurentMatrix2x2 r(m);
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) r.e[u][v] = e[v][u].conj_reciprocal();
    return r;
}

LaurentMatrix2x2 LaurentMatrix2x2::hadamard(const GaussianInt (&c)[2][2]) const {
    LaurentMatrix2x2 r(m);
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) r.e[u][v] = e[u][v].scaled(c[u][v]);
    return r;
}

bool LaurentMatrix2x2::operator==(const LaurentMatrix2x2& o) const {
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v)
            if (!(e[u][v] == o.e[u][v])) return false;
    return m == o.m;
}

std::string LaurentMatrix2x2::dump() const {
    std::ostringstream os;
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) {
            std::vector<std::pair<std::vector<int>, GaussianInt>> lines;
            for (const auto& [k, c] : e[u][v].terms())
                lines.emplace_back(e[u][v].unpack(k), c);
            std::sort(lines.begin(), lines.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (const auto& [exps, c] : lines) {
                os << "entry(" << u << "," << v << "): " << c.re << "," << c.im << " @";
                for (int x : exps) os << ' ' << x;
                os << '\n';
            }
        }
    return os.str();
}

std::pair<bool, std::int64_t> is_paraunitary(const LaurentMatrix2x2& M) {
    const LaurentMatrix2x2 P = M * M.dagger_reciprocal();
    GaussianInt c00, c11;
    if (!P.e[0][1].is_zero() || !P.e[1][0].is_zero()) return {false, 0};
    if (!P.e[0][0].is_constant(&c00) || !P.e[1][1].is_constant(&c11)) return {false, 0};
    if (!(c00 == c11) || !c00.is_real()) return {false, 0};
    return {true, c00.re};
}

} // namespace qamgolay

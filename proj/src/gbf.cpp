#include "qamgolay/gbf.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace qamgolay {

Perm identity_perm(int m) {
    Perm pi(m);
    for (int i = 0; i < m; ++i) pi[i] = i + 1;
    return pi;
}

void validate_perm(const Perm& pi, int m) {
    if (static_cast<int>(pi.size()) != m)
        throw std::invalid_argument("permutation has wrong size");
    std::vector<char> seen(m, 0);
    for (int v : pi) {
        if (v < 1 || v > m || seen[v - 1])
            throw std::invalid_argument("permutation is not a bijection of {1..m}");
        seen[v - 1] = 1;
    }
}

Gbf::Gbf(int m) : m_(m) {
    if (m < 0 || m > 31) throw std::invalid_argument("Gbf: m out of range");
}

Gbf Gbf::constant(int m, Z4 c) {
    Gbf f(m);
    f.add_term(0u, c);
    return f;
}

Gbf Gbf::var(int m, int j) {
    if (j < 1 || j > m) throw std::invalid_argument("Gbf::var: index out of range");
    Gbf f(m);
    f.add_term(1u << (j - 1), Z4(1));
    return f;
}

Gbf Gbf::affine(int m, const std::vector<Z4>& c, Z4 c0) {
    if (static_cast<int>(c.size()) != m)
        throw std::invalid_argument("Gbf::affine: coefficient count mismatch");
    Gbf f(m);
    f.add_term(0u, c0);
    for (int j = 1; j <= m; ++j) f.add_term(1u << (j - 1), c[j - 1]);
    return f;
}

Z4 Gbf::coeff(std::uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Z4(0) : it->second;
}

void Gbf::add_term(std::uint32_t mask, Z4 c) {
    if (mask >> m_) throw std::invalid_argument("Gbf::add_term: monomial uses unknown variable");
    if (c.is_zero() && !terms_.count(mask)) return;
    auto [it, inserted] = terms_.try_emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else if (c.is_zero()) {
        terms_.erase(it);
    }
}

int Gbf::degree() const {
    int d = 0;
    for (const auto& [mask, c] : terms_) d = std::max(d, std::popcount(mask));
    return d;
}

Z4 Gbf::eval(std::uint32_t x) const {
    if (x >> m_) throw std::invalid_argument("Gbf::eval: point has wrong dimension");
    Z4 acc(0);
    for (const auto& [mask, c] : terms_)
        if ((mask & x) == mask) acc += c;
    return acc;
}

void Gbf::check_same_m(const Gbf& o) const {
    if (m_ != o.m_) throw std::invalid_argument("Gbf: variable count mismatch");
}

Gbf Gbf::operator+(const Gbf& o) const {
    check_same_m(o);
    Gbf r = *this;
    for (const auto& [mask, c] : o.terms_) r.add_term(mask, c);
    return r;
}

Gbf Gbf::operator-(const Gbf& o) const {
    check_same_m(o);
    Gbf r = *this;
    for (const auto& [mask, c] : o.terms_) r.add_term(mask, -c);
    return r;
}

Gbf Gbf::operator-() const {
    Gbf r(m_);
    for (const auto& [mask, c] : terms_) r.add_term(mask, -c);
    return r;
}

Gbf Gbf::operator*(const Gbf& o) const {
    check_same_m(o);
    Gbf r(m_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(ma | mb, ca * cb);   // x_j^2 = x_j, so masks just union
    return r;
}

Gbf Gbf::scaled(Z4 c) const {
    Gbf r(m_);
    for (const auto& [mask, cc] : terms_) r.add_term(mask, c * cc);
    return r;
}

bool Gbf::operator<(const Gbf& o) const {
    if (m_ != o.m_) return m_ < o.m_;
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
        [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first < b.first : a.second < b.second;
        });
}

Gbf Gbf::permuted(const Perm& pi) const {
    validate_perm(pi, m_);
    Gbf r(m_);
    for (const auto& [mask, c] : terms_) {
        std::uint32_t nm = 0;
        for (int i = 1; i <= m_; ++i)
            if (mask & (1u << (i - 1))) nm |= 1u << (pi[i - 1] - 1);
        r.add_term(nm, c);
    }
    return r;
}

std::string Gbf::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << int(c.v);
        for (int j = 1; j <= m_; ++j)
            if (mask & (1u << (j - 1))) os << "*x" << j;
    }
    return os.str();
}

VGbf::VGbf(int q, int m) : comps_(q, Gbf(m)) {
    if (q < 1) throw std::invalid_argument("VGbf: q must be positive");
}

VGbf::VGbf(std::vector<Gbf> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw std::invalid_argument("VGbf: empty component list");
    for (const auto& f : comps_)
        if (f.m() != comps_[0].m())
            throw std::invalid_argument("VGbf: components disagree on variable count");
}

VGbf VGbf::operator+(const VGbf& o) const {
    if (q() != o.q()) throw std::invalid_argument("VGbf: component count mismatch");
    std::vector<Gbf> out;
    out.reserve(comps_.size());
    for (int p = 0; p < q(); ++p) out.push_back(comps_[p] + o.comps_[p]);
    return VGbf(std::move(out));
}

VGbf VGbf::permuted(const Perm& pi) const {
    std::vector<Gbf> out;
    out.reserve(comps_.size());
    for (const auto& f : comps_) out.push_back(f.permuted(pi));
    return VGbf(std::move(out));
}

VGbf VGbf::plus_scalar(const Gbf& f) const {
    std::vector<Gbf> out;
    out.reserve(comps_.size());
    for (const auto& g : comps_) out.push_back(g + f);
    return VGbf(std::move(out));
}

GaussianInt VGbf::weighted_value(std::uint32_t x) const {
    GaussianInt acc;
    const int qq = q();
    for (int p = 0; p < qq; ++p)
        acc += (std::int64_t(1) << (qq - 1 - p)) * GaussianInt::unit(comps_[p].eval(x));
    return acc;
}

} // namespace qamgolay

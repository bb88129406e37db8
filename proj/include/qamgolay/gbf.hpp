#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qamgolay/z4.hpp"
#include "qamgolay/gaussian_int.hpp"

namespace qamgolay {

/// Permutation of {1..m}. perm[i-1] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int m);
void validate_perm(const Perm& pi, int m);

/// Generalized Boolean function F2^m -> Z4 in algebraic normal form.
///
/// Monomials are bitmasks over variable indices 1..m (bit j-1 set means x_j
/// appears; the empty mask is the constant term). Zero coefficients are never
/// stored, so equal term maps mean equal functions and vice versa.
class Gbf {
public:
    Gbf() = default;
    explicit Gbf(int m);

    static Gbf constant(int m, Z4 c);
    static Gbf var(int m, int j);                       // x_j, 1-based
    static Gbf affine(int m, const std::vector<Z4>& c, Z4 c0);

    int m() const { return m_; }
    const std::map<std::uint32_t, Z4>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of a monomial (zero if absent).
    Z4 coeff(std::uint32_t mask) const;
    /// Adds c to the coefficient of the monomial, pruning zeros.
    void add_term(std::uint32_t mask, Z4 c);

    /// Largest monomial size, 0 for constants and the zero function.
    int degree() const;
    bool is_affine() const { return degree() <= 1; }

    /// Value at the point with x_j = bit j-1 of x.
    Z4 eval(std::uint32_t x) const;

    Gbf operator+(const Gbf& o) const;
    Gbf operator-(const Gbf& o) const;
    Gbf operator-() const;
    Gbf operator*(const Gbf& o) const;                  // pointwise product, in ANF
    Gbf scaled(Z4 c) const;
    Gbf& operator+=(const Gbf& o) { *this = *this + o; return *this; }

    bool operator==(const Gbf& o) const { return m_ == o.m_ && terms_ == o.terms_; }
    bool operator!=(const Gbf& o) const { return !(*this == o); }
    bool operator<(const Gbf& o) const;                 // total order for containers

    /// Substitutes argument i by x_{pi(i)}: result(x) = f(x_{pi(1)},...,x_{pi(m)}).
    Gbf permuted(const Perm& pi) const;

    std::string str() const;

private:
    int m_ = 0;
    std::map<std::uint32_t, Z4> terms_;

    void check_same_m(const Gbf& o) const;
};

/// Vectorial GBF: q stacked components, all over the same variable count.
class VGbf {
public:
    VGbf() = default;
    VGbf(int q, int m);
    explicit VGbf(std::vector<Gbf> comps);

    int q() const { return static_cast<int>(comps_.size()); }
    int m() const { return comps_.empty() ? 0 : comps_[0].m(); }
    const Gbf& comp(int p) const { return comps_.at(p); }
    Gbf& comp(int p) { return comps_.at(p); }
    const std::vector<Gbf>& comps() const { return comps_; }

    VGbf operator+(const VGbf& o) const;
    VGbf permuted(const Perm& pi) const;
    /// Adds the same scalar GBF to every component.
    VGbf plus_scalar(const Gbf& f) const;

    /// xi-weighted value at a point: sum_p 2^(q-1-p) * xi^(f_p(x)).
    GaussianInt weighted_value(std::uint32_t x) const;

    bool operator==(const VGbf& o) const { return comps_ == o.comps_; }
    bool operator!=(const VGbf& o) const { return !(*this == o); }

private:
    std::vector<Gbf> comps_;
};

} // namespace qamgolay

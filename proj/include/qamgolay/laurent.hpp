#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qamgolay/gaussian_int.hpp"

namespace qamgolay {

/// Sparse multivariate Laurent polynomial in z_1..z_m with Gaussian-integer
/// coefficients. Exponent vectors are packed 4 bits per variable with bias
/// +2, so each exponent lives in [-2, 13]; chain products only ever need
/// {0,1} and the para-unitary check needs {-1,0,1}. Supports m <= 16.
class LaurentPoly {
public:
    static constexpr int kMaxVars = 16;
    static constexpr int kBias = 2;

    LaurentPoly() = default;
    explicit LaurentPoly(int m);

    static LaurentPoly constant(int m, GaussianInt c);
    /// c * z_j^e
    static LaurentPoly monomial(int m, int j, int e, GaussianInt c);

    int m() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::uint64_t, GaussianInt>& terms() const { return terms_; }

    static std::uint64_t pack(const std::vector<int>& exps);
    std::vector<int> unpack(std::uint64_t key) const;

    GaussianInt coeff(const std::vector<int>& exps) const;
    void add_term(std::uint64_t key, GaussianInt c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(GaussianInt c) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }

    /// Substitutes z -> 1/z and conjugates every coefficient.
    LaurentPoly conj_reciprocal() const;

    bool operator==(const LaurentPoly& o) const { return m_ == o.m_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// True iff the polynomial is the constant c (c may be zero).
    bool is_constant(GaussianInt* c = nullptr) const;

    std::string str() const;

private:
    int m_ = 0;
    std::map<std::uint64_t, GaussianInt> terms_;

    std::uint64_t key_mul(std::uint64_t a, std::uint64_t b) const;
};

/// 2x2 matrix of Laurent polynomials sharing one variable count.
struct LaurentMatrix2x2 {
    int m = 0;
    LaurentPoly e[2][2];

    explicit LaurentMatrix2x2(int m_vars = 0);

    static LaurentMatrix2x2 from_constant(int m, const GaussianInt (&c)[2][2]);
    /// diag(1, z_j)
    static LaurentMatrix2x2 delay(int m, int j);
    static LaurentMatrix2x2 diagonal(int m, GaussianInt a, GaussianInt d);

    LaurentMatrix2x2 operator*(const LaurentMatrix2x2& o) const;
    LaurentMatrix2x2 operator+(const LaurentMatrix2x2& o) const;
    LaurentMatrix2x2 scaled(GaussianInt c) const;
    /// Hermitian transpose with z -> 1/z applied entrywise.
    LaurentMatrix2x2 dagger_reciprocal() const;
    /// Entrywise product with a constant matrix.
    LaurentMatrix2x2 hadamard(const GaussianInt (&c)[2][2]) const;

    bool operator==(const LaurentMatrix2x2& o) const;

    /// Sorted text dump, one line per term: "entry(u,v): re,im @ e1 .. em".
    std::string dump() const;
};

/// Exact check of M(z) M^dagger(1/z) = c I. Returns the pass flag and, on
/// success, the real constant c.
std::pair<bool, std::int64_t> is_paraunitary(const LaurentMatrix2x2& M);

} // namespace qamgolay

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qamgolay/gaussian_int.hpp"
#include "qamgolay/gbf.hpp"
#include "qamgolay/mixed_radix.hpp"
#include "qamgolay/z4.hpp"

namespace qamgolay {

/// Z4 triple (d0,d1,d2) with 2*d0 + d1 + d2 = 0. These are exactly the
/// admissible parameter triples of the order-2 Butson Hadamard matrices used
/// throughout.
struct CTriple {
    Z4 d0, d1, d2;

    constexpr CTriple() = default;
    constexpr CTriple(Z4 a, Z4 b, Z4 c) : d0(a), d1(b), d2(c) {}
    constexpr CTriple(int a, int b, int c) : d0(a), d1(b), d2(c) {}

    constexpr auto operator<=>(const CTriple&) const = default;

    constexpr bool valid() const { return (Z4(2) * d0 + d1 + d2).is_zero(); }
    constexpr Z4 at(int i) const { return i == 0 ? d0 : (i == 1 ? d1 : d2); }
};

enum class CClass { C1, C2, C3, C4 };

/// The 16 admissible triples, in a fixed canonical order (lexicographic).
const std::vector<CTriple>& set_C();

/// Class by vanishing pattern of (d1, d2): C1 none, C2 only d1, C3 only d2,
/// C4 both. Throws if the triple is not admissible.
CClass classify_C(const CTriple& d);

const std::vector<CTriple>& class_members(CClass c);

/// Weighted Gaussian-integer image of (b_1..b_{q0-1}):
/// 2^(q0-1) + sum_p 2^(q0-1-p) xi^(b_p).
GaussianInt gaussian_image(const std::vector<Z4>& b);

/// A pair of weighted images with equal magnitude that are neither equal nor
/// conjugate. Ordered: (Q0,Q1) and (Q1,Q0) are distinct ingredients.
struct Nsgip {
    std::vector<Z4> b;        // length q0-1
    std::vector<Z4> b_prime;  // length q0-1
    GaussianInt Q0, Q1;

    int q0() const { return static_cast<int>(b.size()) + 1; }
    bool operator==(const Nsgip& o) const { return b == o.b && b_prime == o.b_prime; }
};

/// All ordered pairs over the 4^(q0-1) images satisfying the magnitude /
/// distinctness / non-conjugacy conditions, in lexicographic (b, b') order.
std::vector<Nsgip> enumerate_nsgip(int q0);

/// The two digit conventions used by the offset constructions: the plain one
/// indexes factors 1..t of q = q1*...*qt; the leading-radix one prepends q0
/// and indexes factors 0..t of q = q0*q1*...*qt.
enum class DigitScheme { Plain, LeadingRadix };

/// d-vectors for one ordered factorization. choices[k] lists the triples for
/// digit values 1..q_k-1 of factor k (1-based k); digit 0 is pinned to
/// (0,0,0). vec(k, i) has length q and entry p equal to d_i at digit_k(p).
class DVectorFamily {
public:
    DVectorFamily(std::vector<int> factorization, DigitScheme scheme,
                  std::vector<std::vector<CTriple>> choices);

    int q() const { return static_cast<int>(radix_.product()); }
    int t() const { return static_cast<int>(choices_.size()); }
    DigitScheme scheme() const { return scheme_; }
    const MixedRadix& radix() const { return radix_; }
    const std::vector<std::vector<CTriple>>& choices() const { return choices_; }

    /// k in 1..t, i in {0,1,2}.
    std::vector<Z4> vec(int k, int i) const;
    /// The triple selected by component p under factor k.
    CTriple triple_at(int k, std::int64_t p) const;

private:
    MixedRadix radix_;            // full radix list, least significant first
    DigitScheme scheme_;
    std::vector<std::vector<CTriple>> choices_;
    int digit_index(int k) const; // position of factor k's digit in radix_
};

/// b-vectors for the leading-radix scheme: entry p is b at digit_0(p), with
/// b_0 = 0 prepended to the pair's lists.
std::pair<std::vector<Z4>, std::vector<Z4>>
build_b_vectors(const std::vector<int>& factorization_with_leading, const Nsgip& pair);

/// q x (m+1) Z4 matrix: column 0 holds the constant coefficients, column j
/// the coefficients of x_{pi(j)}. Canonical fingerprint of an affine offset
/// for a fixed pi.
struct CoefficientMatrix {
    int q = 0;
    int m = 0;
    std::vector<Z4> a;   // row-major, q rows, m+1 columns

    Z4 at(int p, int j) const { return a.at(static_cast<std::size_t>(p) * (m + 1) + j); }
    Z4& at(int p, int j) { return a.at(static_cast<std::size_t>(p) * (m + 1) + j); }

    auto operator<=>(const CoefficientMatrix&) const = default;

    /// Count of nonzero columns among the variable columns 1..m.
    int nonzero_var_columns() const;

    std::string csv_row() const;
    static std::string csv_header(int q, int m);
};

/// Reads the affine offset back into its matrix. Throws if any component has
/// degree above 1.
CoefficientMatrix coefficient_matrix(const VGbf& s, const Perm& pi);

/// Inverse of coefficient_matrix for the same pi.
VGbf offset_from_matrix(const CoefficientMatrix& S, const Perm& pi);

} // namespace qamgolay

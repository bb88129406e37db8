#pragma once

#include <cstdint>
#include <vector>

#include "qamgolay/constructions.hpp"
#include "qamgolay/gbf.hpp"
#include "qamgolay/laurent.hpp"
#include "qamgolay/pu_builders.hpp"

namespace qamgolay {

/// 2x2 matrix over the GBF ring Z4[x_1..x_m]/(x_j^2 - x_j). Matrix products
/// use the pointwise-product ring structure, which is exactly what the
/// array-to-function transport needs.
struct GbfMatrix2x2 {
    GbfMatrix2x2() = default;
    explicit GbfMatrix2x2(int m);

    Gbf e[2][2];

    int m() const { return e[0][0].m(); }

    static GbfMatrix2x2 J(int m);                  // all-ones
    static GbfMatrix2x2 A(int m);                  // ones in the bottom row
    static GbfMatrix2x2 B(int m);                  // ones in the right column
    static GbfMatrix2x2 D(int m, int j);           // diag(1 - x_j, x_j)
    static GbfMatrix2x2 from_z4(int m, const Z4 (&c)[2][2]);
    /// Function-side image of the Butson matrix with the given triple:
    /// d0*J + d1*A + d2*B + diag(0, 2).
    static GbfMatrix2x2 bh_tilde(int m, const CTriple& d);

    GbfMatrix2x2 operator+(const GbfMatrix2x2& o) const;
    GbfMatrix2x2 operator-(const GbfMatrix2x2& o) const;
    GbfMatrix2x2 operator*(const GbfMatrix2x2& o) const;
    GbfMatrix2x2 scaled(const Gbf& f) const;

    bool operator==(const GbfMatrix2x2& o) const;

    /// Entrywise generating function sum_x xi^(entry(x)) z^x.
    LaurentMatrix2x2 generating_matrix() const;
};

/// q stacked component matrices; entry (u,v) is the V-GBF of that corner.
struct VgbfMatrix2x2 {
    std::vector<GbfMatrix2x2> comps;

    int q() const { return static_cast<int>(comps.size()); }
    int m() const { return comps.empty() ? 0 : comps[0].m(); }

    VGbf entry(int u, int v) const;
    bool operator==(const VgbfMatrix2x2& o) const { return comps == o.comps; }

    /// 2^(q-1-p)-weighted sum of the component generating matrices.
    LaurentMatrix2x2 generating_matrix() const;
};

/// Function-side transport of a product chain
/// seeds[0] * D(z_{vars[0]}) * seeds[1] * ... * D(z_{vars.back()}) * seeds.back().
/// Seeds may use variables of their own as long as they avoid the chain
/// variables. vars are 1-based variable indices over a shared m.
GbfMatrix2x2 gbf_chain_extract(const std::vector<GbfMatrix2x2>& seeds,
                               const std::vector<int>& vars);

/// Chain with one seed per position 0..m and the full variable ladder.
GbfMatrix2x2 extract_gbf_matrix(const std::vector<GbfMatrix2x2>& seeds);

/// Closed-form matrices for the three constructions, with the identity
/// variable order. The first column pair is (f, f + mu_first) and the first
/// row pair is (f, f + mu_last) of the matching offset construction.
enum class PuKind { M1, Ma, Mb };

VgbfMatrix2x2 vgbf_matrix_closed_form(const Theorem1Spec& spec);
VgbfMatrix2x2 vgbf_matrix_closed_form(const Theorem2Spec& spec, PuKind kind);

/// Component-by-component chain extraction of the same matrices; independent
/// of the closed form and used as its standing cross-check.
VgbfMatrix2x2 vgbf_matrix_extracted(const Theorem1Spec& spec);
VgbfMatrix2x2 vgbf_matrix_extracted(const Theorem2Spec& spec, PuKind kind);

/// Recovers a GBF matrix from a QPSK generating matrix whose coefficients are
/// all fourth roots of unity. Pointwise logarithm plus ANF inversion.
GbfMatrix2x2 gbf_matrix_from_generating(const LaurentMatrix2x2& M);

/// Pointwise-log/ANF recovery of a single function from its truth table.
Gbf gbf_from_values(int m, const std::vector<Z4>& values);

/// Self-checks of the transport identities used above: the five selector
/// relations (J D J = J and friends) both symbolically and at x in {0,1},
/// and the two generating-matrix transport rules on seeded random matrices.
bool matrix_identities_check(std::uint64_t seed = 1);

} // namespace qamgolay

#pragma once

#include <cstdint>
#include <vector>

#include "qamgolay/constructions.hpp"
#include "qamgolay/laurent.hpp"
#include "qamgolay/offsets.hpp"

namespace qamgolay {

/// Order-2 Butson Hadamard matrix with fourth-root entries,
/// [[xi^d0, xi^(d0+d2)], [xi^(d0+d1), -xi^(d0+d1+d2)]].
struct BhMatrix {
    CTriple d;
    GaussianInt e[2][2];
};

BhMatrix bh_matrix(const CTriple& d);

/// Membership in the admissible subset (2*d0 + d1 + d2 = 0).
bool in_bh0(const CTriple& d);

enum class WeightVariant { Plain, LeadingRadix };

/// Weighted sum over one factor's matrices: sum_p 2^((q_k-1-p) * place) *
/// H(choice_p), where place is the product of the preceding factors (the
/// LeadingRadix variant counts the leading radix into the place value).
/// choices[k-1] must hold q_k - 1 triples for digits 1..q_k-1.
struct Gi2x2 {
    GaussianInt e[2][2];
};

Gi2x2 weighted_bh_sum(int k, const std::vector<int>& factorization,
                      const std::vector<std::vector<CTriple>>& d_choices,
                      WeightVariant variant);

/// First-construction matrix: U0 * prod_j (D(z_j) * Uj), with the weighted
/// sum sitting at each chosen position and the plain Hadamard elsewhere.
LaurentMatrix2x2 build_M1(const Theorem1Spec& spec);

/// Second-construction matrices with the Gaussian-integer pair inserted as a
/// diagonal factor (case a) or an entrywise mask around a middle block
/// (case b).
LaurentMatrix2x2 build_Ma(const Theorem2Spec& spec);
LaurentMatrix2x2 build_Mb(const Theorem2Spec& spec);

/// Per-component QPSK chains whose 2^(q-1-p)-weighted sum reproduces the full
/// matrices above.
LaurentMatrix2x2 build_M1_component(const Theorem1Spec& spec, std::int64_t p);
LaurentMatrix2x2 build_Ma_component(const Theorem2Spec& spec, std::int64_t p);
LaurentMatrix2x2 build_Mb_component(const Theorem2Spec& spec, std::int64_t p);

} // namespace qamgolay

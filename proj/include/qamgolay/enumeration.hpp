#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qamgolay/offsets.hpp"

namespace qamgolay {

/// One enumeration result: the published closed form next to the size of the
/// actually generated, deduplicated family.
struct CountReport {
    std::string family;
    int q = 0;
    int m = 0;
    std::int64_t formula = 0;
    std::int64_t generated = 0;

    bool match() const { return formula == generated; }
    std::string csv_row() const;
    static std::string csv_header();
};

/// (m!/2) * 4^(m+1), the count of distinct quaternary seeds.
std::int64_t count_standard_gcs(int m);

/// Brute-force seed enumeration (all permutations and affine parts, deduped
/// in normal form). Small m only; the independent route for the count above.
std::int64_t count_standard_gcs_bruteforce(int m);

/// Closed-form size of the identified new-offset family for an ordered
/// factorization q = q1*...*qt:
/// (m+1) * (m-t)!/(m-2t+1)! * prod_k (14^(q_k-1) - 2*2^(q_k-1)).
std::int64_t lower_bound_new_offsets(int m, const std::vector<int>& factorization);

/// Published polynomial values for the q=4 and q=6 offset families:
/// prior linear / quadratic families and the new family's bound.
std::vector<CountReport> table1_row(int q, int m);

/// All offsets from the 2x2 factorization of 4 with both triples in the
/// doubly-nonvanishing class and positions at distance >= 2 avoiding the
/// {0,m} pair. Returns the deduplicated coefficient matrices, sorted.
std::vector<CoefficientMatrix> enumerate_new_offsets_q4(int m);

/// The four q=6 families (two factorization orders of the first construction
/// plus both cases of the second) under their class and position rules.
/// Sorted union; the per-case lists are exposed for the disjointness check.
struct Q6Cases {
    std::vector<CoefficientMatrix> case1, case2, case3, case4;
    std::vector<CoefficientMatrix> all;   // deduplicated union
};
Q6Cases enumerate_new_offsets_q6_cases(int m);
std::vector<CoefficientMatrix> enumerate_new_offsets_q6(int m);

/// The general identified family behind lower_bound_new_offsets: per-factor
/// triple tables avoiding the all-zero class, never all in one of the mixed
/// classes, positions pairwise at distance >= 2 avoiding the {0,m} pair.
std::vector<CoefficientMatrix> enumerate_thm1_family(int m,
                                                     const std::vector<int>& factorization);

} // namespace qamgolay

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qamgolay/gbf.hpp"
#include "qamgolay/offsets.hpp"

namespace qamgolay {

enum class MuSide { First, Last };

/// Quaternary seed: the quadratic chain over a variable permutation plus an
/// affine part. Either member of the associated pair is a standard sequence.
struct StandardGcsSpec {
    int m = 1;
    Perm pi;                 // permutation of {1..m}
    std::vector<Z4> c;       // c_0..c_m; c[j] multiplies x_j for j >= 1
    Z4 c_prime;
    MuSide side = MuSide::First;

    void validate() const;
};

/// 2*sum_j x_{pi(j)} x_{pi(j+1)} + sum_j c_j x_j + c_0.
Gbf standard_gbf(const StandardGcsSpec& spec);

/// The seed and its partner f + 2 x_{pi(1)} + c' (or pi(m) for side Last).
std::pair<Gbf, Gbf> standard_gcp(const StandardGcsSpec& spec);

/// Offset plus pairing difference, both with q components.
struct OffsetPair {
    VGbf s;
    VGbf mu;
};

/// First construction: offsets from an ordered factorization q = q1*...*qt
/// (every factor >= 2) with one admissible-triple table per factor, placed at
/// distinct positions omega_k in [0, m]. Positions 0 and m touch the fake
/// variables x_{pi(0)} and x_{pi(m+1)}, whose terms are dropped.
struct Theorem1Spec {
    int q = 0;
    std::vector<int> factorization;                // q1..qt
    std::vector<std::vector<CTriple>> d_choices;   // [k-1][p_k-1]
    std::vector<int> omegas;                       // size t, distinct, in [0,m]
    MuSide mu_side = MuSide::First;
    std::optional<int> mu_k;                       // 1-based factor claiming the boundary
    StandardGcsSpec base;

    int m() const { return base.m; }
    void validate() const;
};

OffsetPair theorem1_offset(const Theorem1Spec& spec);

enum class CaseAB { A, B };

/// Second construction: leading radix q0 >= 3 carries a non-symmetrical
/// Gaussian-integer pair; the remaining factors carry triple tables as in the
/// first construction.
struct Theorem2Spec {
    int q = 0;
    std::vector<int> factorization;                // q0, q1..qt
    std::vector<std::vector<CTriple>> d_choices;   // for factors 1..t
    std::vector<int> omegas;                       // size t
    Nsgip nsgip;
    CaseAB kase = CaseAB::A;
    int upsilon = 0;                               // case a: 2 <= v <= m-1
    int upsilon1 = 0, upsilon2 = 0;                // case b: 1<=v1<=m-2, v1+2<=v2<=m
    MuSide mu_side = MuSide::First;
    std::optional<int> mu_k;
    StandardGcsSpec base;

    int m() const { return base.m; }
    int q0() const { return factorization.empty() ? 0 : factorization[0]; }
    void validate() const;
};

OffsetPair theorem2_offset(const Theorem2Spec& spec);

/// f_p = f + s_p and g = f + mu on top of a shared quaternary seed.
std::pair<VGbf, VGbf> build_pair(const StandardGcsSpec& base, const OffsetPair& offset);

/// Generalized cases I-III: a single triple per component p = 1..q-1 at one
/// position omega. Written directly against the single-position formulas, so
/// it double-checks the mixed-radix route. When omega sits on the pairing
/// side's boundary the difference carries the per-component correction.
OffsetPair cases_i_iii_offset(int m, const Perm& pi,
                              const std::vector<CTriple>& triples,
                              int omega, MuSide side);

/// Generalized case IV: b-vector offset at one interior position.
OffsetPair case_iv_offset(int m, const Perm& pi, const Nsgip& pair,
                          int upsilon, MuSide side);

/// Generalized case V: b-vector offset at two positions at distance >= 2.
OffsetPair case_v_offset(int m, const Perm& pi, const Nsgip& pair,
                         int upsilon1, int upsilon2, MuSide side);

} // namespace qamgolay

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qamgolay/gaussian_int.hpp"
#include "qamgolay/gbf.hpp"

namespace qamgolay {

/// Length 2^m sequence over a weighted constellation, exact Gaussian-integer
/// values. Index order: x_1 is the least significant bit of the time index y
/// (y = sum_j x_j 2^(j-1)).
struct QamSequence {
    int q = 1;
    std::vector<GaussianInt> values;

    std::int64_t length() const { return static_cast<std::int64_t>(values.size()); }
};

/// m-dimensional 2 x 2 x ... x 2 array, entries indexed by the bitmask of
/// (x_1..x_m) with x_1 in bit 0.
struct QamArray {
    int q = 1;
    int m = 0;
    std::vector<GaussianInt> values;   // size 2^m
};

QamSequence sequence_from_vgbf(const VGbf& f);
QamArray array_from_vgbf(const VGbf& f);

/// Aperiodic autocorrelation at shift tau, 1-L <= tau <= L-1. Out-of-range
/// products contribute zero.
GaussianInt seq_autocorrelation(const QamSequence& F, std::int64_t tau);

/// True iff C_F(tau) + C_G(tau) = 0 exactly for every tau != 0.
bool is_gcp(const QamSequence& F, const QamSequence& G);

/// Array autocorrelation at a shift vector with components in {-1,0,1}.
GaussianInt array_autocorrelation(const QamArray& F, const std::vector<int>& tau);

/// True iff the correlation sums vanish at all 3^m - 1 nonzero shifts.
bool is_gap(const QamArray& F, const QamArray& G);

QamSequence project_to_sequence(const QamArray& F);

/// Closure move on an array pair given by V-GBFs: variable relabeling plus an
/// affine scalar added to every component. Preserves the pair property.
std::pair<VGbf, VGbf> gap_closure(const VGbf& f, const VGbf& g,
                                  const Perm& pi, const Gbf& affine);

} // namespace qamgolay

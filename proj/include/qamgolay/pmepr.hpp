#pragma once

#include <vector>

#include "qamgolay/sequence.hpp"

namespace qamgolay {

/// Oversampled instantaneous power of the carrier sum of one sequence.
struct EnvelopeProfile {
    int oversampling = 1;
    std::vector<double> power;   // |sum_y F(y) e^(2 pi i y theta)|^2 on the grid
    double peak = 0.0;
    double mean = 0.0;
    double pmepr = 0.0;          // peak / mean
};

EnvelopeProfile envelope_power(const QamSequence& F, int oversampling);

/// Largest grid deviation of |S_F|^2 + |S_G|^2 from the constant
/// C_F(0) + C_G(0). Zero (up to rounding) exactly for complementary pairs.
double power_complementarity(const QamSequence& F, const QamSequence& G,
                             int oversampling);

} // namespace qamgolay

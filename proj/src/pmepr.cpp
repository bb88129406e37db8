#include "qamgolay/pmepr.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace qamgolay {

namespace {

std::vector<std::complex<double>> carrier_sums(const QamSequence& F, int oversampling) {
    const std::int64_t L = F.length();
    const std::int64_t N = L * oversampling;
    std::vector<std::complex<double>> S(N);
    for (std::int64_t i = 0; i < N; ++i) {
        const double theta = static_cast<double>(i) / static_cast<double>(N);
        std::complex<double> acc = 0.0;
        for (std::int64_t y = 0; y < L; ++y) {
            const double phase = 2.0 * std::numbers::pi * static_cast<double>(y) * theta;
            acc += std::complex<double>(static_cast<double>(F.values[y].re),
                                        static_cast<double>(F.values[y].im)) *
                   std::polar(1.0, phase);
        }
        S[i] = acc;
    }
    return S;
}

} // namespace

EnvelopeProfile envelope_power(const QamSequence& F, int oversampling) {
    if (F.values.empty()) throw std::invalid_argument("envelope_power: empty sequence");
    if (oversampling < 1)
        throw std::invalid_argument("envelope_power: oversampling must be >= 1");
    EnvelopeProfile out;
    out.oversampling = oversampling;
    const auto S = carrier_sums(F, oversampling);
    out.power.reserve(S.size());
    double sum = 0.0;
    for (const auto& s : S) {
        const double p = std::norm(s);
        out.power.push_back(p);
        out.peak = std::max(out.peak, p);
        sum += p;
    }
    out.mean = sum / static_cast<double>(S.size());
    out.pmepr = out.peak / out.mean;
    return out;
}

double power_complementarity(const QamSequence& F, const QamSequence& G,
                             int oversampling) {
    if (F.length() != G.length())
        throw std::invalid_argument("power_complementarity: length mismatch");
    const auto SF = carrier_sums(F, oversampling);
    const auto SG = carrier_sums(G, oversampling);
    const double target =
        static_cast<double>(seq_autocorrelation(F, 0).re + seq_autocorrelation(G, 0).re);
    double dev = 0.0;
    for (std::size_t i = 0; i < SF.size(); ++i)
        dev = std::max(dev, std::abs(std::norm(SF[i]) + std::norm(SG[i]) - target));
    return dev;
}

} // namespace qamgolay

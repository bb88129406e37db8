#include "qamgolay/sequence.hpp"

#include <stdexcept>

namespace qamgolay {

QamSequence sequence_from_vgbf(const VGbf& f) {
    QamSequence s;
    s.q = f.q();
    const std::int64_t len = std::int64_t(1) << f.m();
    s.values.reserve(len);
    for (std::int64_t y = 0; y < len; ++y)
        s.values.push_back(f.weighted_value(static_cast<std::uint32_t>(y)));
    return s;
}

QamArray array_from_vgbf(const VGbf& f) {
    QamArray a;
    a.q = f.q();
    a.m = f.m();
    const std::int64_t len = std::int64_t(1) << f.m();
    a.values.reserve(len);
    for (std::int64_t x = 0; x < len; ++x)
        a.values.push_back(f.weighted_value(static_cast<std::uint32_t>(x)));
    return a;
}

GaussianInt seq_autocorrelation(const QamSequence& F, std::int64_t tau) {
    const std::int64_t L = F.length();
    if (tau <= -L || tau >= L)
        throw std::out_of_range("seq_autocorrelation: |tau| must be < length");
    GaussianInt acc;
    if (tau >= 0) {
        for (std::int64_t y = 0; y + tau < L; ++y)
            acc += F.values[y + tau] * F.values[y].conj();
    } else {
        for (std::int64_t y = -tau; y < L; ++y)
            acc += F.values[y + tau] * F.values[y].conj();
    }
    return acc;
}

bool is_gcp(const QamSequence& F, const QamSequence& G) {
    if (F.length() != G.length())
        throw std::invalid_argument("is_gcp: length mismatch");
    const std::int64_t L = F.length();
    // C(-tau) = conj(C(tau)), so positive shifts suffice.
    for (std::int64_t tau = 1; tau < L; ++tau)
        if (!(seq_autocorrelation(F, tau) + seq_autocorrelation(G, tau)).is_zero())
            return false;
    return true;
}

GaussianInt array_autocorrelation(const QamArray& F, const std::vector<int>& tau) {
    if (static_cast<int>(tau.size()) != F.m)
        throw std::invalid_argument("array_autocorrelation: shift dimension mismatch");
    for (int t : tau)
        if (t < -1 || t > 1)
            throw std::out_of_range("array_autocorrelation: shift component outside {-1,0,1}");
    const std::uint32_t len = 1u << F.m;
    GaussianInt acc;
    for (std::uint32_t x = 0; x < len; ++x) {
        std::uint32_t xs = x;
        bool defined = true;
        for (int j = 0; j < F.m && defined; ++j) {
            const int xj = (x >> j) & 1;
            const int v = xj + tau[j];
            if (v < 0 || v > 1) defined = false;
            else if (v != xj) xs ^= 1u << j;
        }
        if (defined) acc += F.values[xs] * F.values[x].conj();
    }
    return acc;
}

bool is_gap(const QamArray& F, const QamArray& G) {
    if (F.m != G.m)
        throw std::invalid_argument("is_gap: dimension mismatch");
    std::vector<int> tau(F.m, -1);
    // Walk all 3^m shift vectors in odometer order.
    for (;;) {
        bool nonzero = false;
        for (int t : tau) nonzero |= (t != 0);
        if (nonzero &&
            !(array_autocorrelation(F, tau) + array_autocorrelation(G, tau)).is_zero())
            return false;
        int j = 0;
        while (j < F.m && tau[j] == 1) tau[j++] = -1;
        if (j == F.m) break;
        ++tau[j];
    }
    return true;
}

QamSequence project_to_sequence(const QamArray& F) {
    // y = sum_j x_j 2^(j-1) is exactly the stored index, so this is the
    // identity on the value vector.
    QamSequence s;
    s.q = F.q;
    s.values = F.values;
    return s;
}

std::pair<VGbf, VGbf> gap_closure(const VGbf& f, const VGbf& g,
                                  const Perm& pi, const Gbf& affine) {
    if (affine.degree() > 1)
        throw std::invalid_argument("gap_closure: scalar part must be affine");
    if (f.q() != g.q() || f.m() != g.m())
        throw std::invalid_argument("gap_closure: pair shape mismatch");
    return {f.permuted(pi).plus_scalar(affine), g.permuted(pi).plus_scalar(affine)};
}

} // namespace qamgolay

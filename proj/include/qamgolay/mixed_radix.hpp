#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qamgolay {

/// Mixed radix numeral system. Radices are stored least significant first,
/// so digit k has place value radices[0] * ... * radices[k-1].
class MixedRadix {
public:
    MixedRadix() = default;
    explicit MixedRadix(std::vector<int> radices) : radices_(std::move(radices)) {
        for (int r : radices_)
            if (r < 2) throw std::invalid_argument("MixedRadix: every radix must be >= 2");
    }

    const std::vector<int>& radices() const { return radices_; }
    std::size_t size() const { return radices_.size(); }
    int radix(std::size_t k) const { return radices_.at(k); }

    std::int64_t product() const {
        std::int64_t p = 1;
        for (int r : radices_) p *= r;
        return p;
    }

    /// Digits of p, least significant first.
    std::vector<int> digits(std::int64_t p) const {
        if (p < 0 || p >= product())
            throw std::out_of_range("MixedRadix::digits: value out of range");
        std::vector<int> d(radices_.size());
        for (std::size_t k = 0; k < radices_.size(); ++k) {
            d[k] = static_cast<int>(p % radices_[k]);
            p /= radices_[k];
        }
        return d;
    }

    /// Single digit of p at position k, without materializing the whole vector.
    int digit(std::int64_t p, std::size_t k) const {
        if (p < 0 || p >= product())
            throw std::out_of_range("MixedRadix::digit: value out of range");
        for (std::size_t i = 0; i < k; ++i) p /= radices_.at(i);
        return static_cast<int>(p % radices_.at(k));
    }

    /// Inverse of digits().
    std::int64_t value(const std::vector<int>& digits) const {
        if (digits.size() != radices_.size())
            throw std::invalid_argument("MixedRadix::value: digit count mismatch");
        std::int64_t p = 0, place = 1;
        for (std::size_t k = 0; k < radices_.size(); ++k) {
            if (digits[k] < 0 || digits[k] >= radices_[k])
                throw std::out_of_range("MixedRadix::value: digit out of range");
            p += place * digits[k];
            place *= radices_[k];
        }
        return p;
    }

private:
    std::vector<int> radices_;
};

} // namespace qamgolay

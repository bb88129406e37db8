#pragma once

#include <cstdint>
#include <compare>
#include <string>

#include "qamgolay/z4.hpp"

namespace qamgolay {

/// Exact Gaussian integer re + im*xi, xi = sqrt(-1). No rounding anywhere.
struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussianInt() = default;
    constexpr GaussianInt(std::int64_t r, std::int64_t i) : re(r), im(i) {}

    constexpr auto operator<=>(const GaussianInt&) const = default;

    constexpr GaussianInt conj() const { return {re, -im}; }
    /// Squared magnitude, a nonnegative ordinary integer.
    constexpr std::int64_t norm2() const { return re * re + im * im; }
    constexpr bool is_zero() const { return re == 0 && im == 0; }
    constexpr bool is_real() const { return im == 0; }

    friend constexpr GaussianInt operator+(GaussianInt a, GaussianInt b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend constexpr GaussianInt operator-(GaussianInt a, GaussianInt b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend constexpr GaussianInt operator*(GaussianInt a, GaussianInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend constexpr GaussianInt operator*(std::int64_t s, GaussianInt a) {
        return {s * a.re, s * a.im};
    }
    constexpr GaussianInt operator-() const { return {-re, -im}; }

    GaussianInt& operator+=(GaussianInt o) { *this = *this + o; return *this; }
    GaussianInt& operator-=(GaussianInt o) { *this = *this - o; return *this; }
    GaussianInt& operator*=(GaussianInt o) { *this = *this * o; return *this; }

    /// xi^k for k in Z4.
    static constexpr GaussianInt unit(Z4 k) {
        switch (k.v) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            case 2: return {-1, 0};
            default: return {0, -1};
        }
    }

    std::string str() const;
};

} // namespace qamgolay

#pragma once

#include <cstdint>
#include <compare>

namespace qamgolay {

/// Residue class ring Z4. Values are always normalized to {0,1,2,3}.
struct Z4 {
    std::uint8_t v = 0;

    constexpr Z4() = default;
    constexpr explicit Z4(int x) : v(static_cast<std::uint8_t>(((x % 4) + 4) % 4)) {}

    constexpr auto operator<=>(const Z4&) const = default;

    constexpr bool is_zero() const { return v == 0; }

    friend constexpr Z4 operator+(Z4 a, Z4 b) { return Z4(a.v + b.v); }
    friend constexpr Z4 operator-(Z4 a, Z4 b) { return Z4(a.v + 4 - b.v); }
    friend constexpr Z4 operator*(Z4 a, Z4 b) { return Z4(a.v * b.v); }
    constexpr Z4 operator-() const { return Z4(4 - v); }

    Z4& operator+=(Z4 o) { *this = *this + o; return *this; }
    Z4& operator-=(Z4 o) { *this = *this - o; return *this; }
    Z4& operator*=(Z4 o) { *this = *this * o; return *this; }
};

inline constexpr Z4 operator""_z4(unsigned long long x) { return Z4(static_cast<int>(x % 4)); }

} // namespace qamgolay

#pragma once

#include <cmath>
#include <compare>
#include <cstdint>

namespace basinlab {

// Circle coordinate in [0,1) stored as a 64-bit fixed-point fraction k/2^64.
// Addition and small-integer multiplication wrap mod 2^64, which is exactly
// arithmetic mod 1 on the circle.  The tripling map x -> 3x (mod 1) becomes
// k -> 3k (mod 2^64) with no rounding at all; the multiplicative order of 3
// mod 2^64 is 2^62, so exact base orbits have no short artificial cycles.
struct Frac {
    std::uint64_t bits = 0;

    constexpr Frac() = default;
    constexpr explicit Frac(std::uint64_t b) : bits(b) {}

    static Frac from_double(double v) {
        double u = v - std::floor(v);
        if (!(u >= 0.0) || u >= 1.0) u = 0.0;
        long double scaled = static_cast<long double>(u) * 18446744073709551616.0L;
        long double r = std::roundl(scaled);
        if (r >= 18446744073709551616.0L) return Frac{0};
        return Frac{static_cast<std::uint64_t>(r)};
    }

    double to_double() const { return std::ldexp(static_cast<double>(bits), -64); }

    friend constexpr Frac operator+(Frac a, Frac b) { return Frac{a.bits + b.bits}; }
    friend constexpr Frac operator-(Frac a, Frac b) { return Frac{a.bits - b.bits}; }
    // n*x mod 1
    friend constexpr Frac operator*(std::uint64_t n, Frac a) { return Frac{n * a.bits}; }
    friend constexpr auto operator<=>(Frac, Frac) = default;

    static constexpr Frac half() { return Frac{std::uint64_t(1) << 63}; }
    static constexpr Frac zero() { return Frac{0}; }
};

// Nearest fixed-point value of (x + whole)/3; error at most 2^-65.
inline Frac div3(Frac x, unsigned whole) {
    using u128 = unsigned __int128;
    u128 num = static_cast<u128>(x.bits) + (static_cast<u128>(whole) << 64);
    u128 q = num / 3;
    if (num % 3 == 2) ++q;
    return Frac{static_cast<std::uint64_t>(q)};
}

}  // namespace basinlab

#pragma once

#include <cstdint>

namespace basinlab {

// Counter-based generator (SplitMix64 finalizer).  Output depends only on the
// key, never on call order, so concurrent workers draw identical streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t slot) {
    return splitmix64(seed ^ splitmix64(stream ^ splitmix64(slot)));
}

inline double to_unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// R2 low-discrepancy lattice directions (inverse powers of the plastic number).
inline constexpr double kLatticeAlpha1 = 0.7548776662466927;
inline constexpr double kLatticeAlpha2 = 0.5698402909980532;

// s-th point of a unit-square lattice with per-stream offset.
inline void lattice_point(std::uint64_t seed, std::uint64_t stream, std::uint64_t s,
                          double& u, double& v) {
    const double ou = to_unit_double(counter_hash(seed, stream, 0));
    const double ov = to_unit_double(counter_hash(seed, stream, 1));
    u = ou + static_cast<double>(s) * kLatticeAlpha1;
    v = ov + static_cast<double>(s) * kLatticeAlpha2;
    u -= static_cast<std::uint64_t>(u);
    v -= static_cast<std::uint64_t>(v);
}

}  // namespace basinlab

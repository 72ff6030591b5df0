#pragma once

#include <cmath>
#include <cstdint>
#include <span>

namespace steinlab::rng {

inline std::uint64_t fmix64(std::uint64_t k) {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    k *= 0xc4ceb9fe1a85ec53ULL;
    k ^= k >> 33;
    return k;
}

/// Counter-based stream: the i-th draw's randomness is a pure function of
/// (seed, i), so chunked parallel execution reproduces the serial sequence
/// exactly.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t index)
        : state_(fmix64(seed + 0x9e3779b97f4a7c15ULL * (index + 1))) {}

    std::uint64_t next_u64() {  // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in (0, 1].
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
    }

    /// Standard normals via Box-Muller.
    void fill_normal(std::span<double> out) {
        constexpr double two_pi = 6.283185307179586476925286766559;
        std::size_t i = 0;
        while (i < out.size()) {
            const double u1 = next_unit();
            const double u2 = next_unit();
            const double r = std::sqrt(-2.0 * std::log(u1));
            out[i++] = r * std::cos(two_pi * u2);
            if (i < out.size()) out[i++] = r * std::sin(two_pi * u2);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace steinlab::rng

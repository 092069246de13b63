#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace cellfade {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

// Self-contained xoshiro256++ generator. The standard <random> distributions
// are implementation-defined, so uniform/normal mapping is done here to keep
// seeded outputs bitwise reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : state_) w = detail::splitmix64(sm);
    }

    // Derives an independent stream from (seed, tags...). Streams for
    // bootstrap replicates, fleet members, multistarts etc. are all built
    // this way so the draw order never depends on scheduling.
    template <class... Tags>
    static Rng stream(std::uint64_t seed, Tags... tags) {
        std::uint64_t sm = seed;
        detail::splitmix64(sm);
        ((sm ^= detail::splitmix64(sm) + static_cast<std::uint64_t>(tags)), ...);
        return Rng(detail::splitmix64(sm));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Box-Muller; the pair's second value is cached.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = 1.0 - uniform01(); // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

    // Uniform index in [0, n).
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>((static_cast<unsigned __int128>(next()) *
                                         static_cast<unsigned __int128>(n)) >> 64);
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = index(i);
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4]{};
    double cached_ = 0.0;
    bool has_cached_ = false;
};

// Mixes tags into a derived 64-bit seed (for nested deterministic solvers).
template <class... Tags>
std::uint64_t derive_seed(std::uint64_t seed, Tags... tags) {
    std::uint64_t sm = seed;
    detail::splitmix64(sm);
    ((sm ^= detail::splitmix64(sm) + static_cast<std::uint64_t>(tags)), ...);
    return detail::splitmix64(sm);
}

} // namespace cellfade

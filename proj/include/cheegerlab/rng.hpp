#pragma once

// Seeded random streams with reproducible output.
//
// std::mt19937_64 is bit-exact across platforms, but the standard
// distributions are not; gaussians are produced by an explicit
// Box-Muller transform so that a (seed, stream) pair pins every byte
// of downstream output.

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace cheegerlab {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stable 64-bit hash of a label, for deriving independent substreams.
inline std::uint64_t hash_label(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    // Substream derivation from the construction seed; independent of how
    // many draws already happened on this stream.
    Rng fork(std::uint64_t salt) const { return Rng(splitmix64(seed_ ^ splitmix64(salt))); }
    Rng fork(std::string_view label) const { return fork(hash_label(label)); }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t bits() { return engine_(); }

    // Uniform in (0, 1); never returns 0 so logs and Box-Muller are safe.
    double uniform() {
        const std::uint64_t u = engine_() >> 11;  // 53 random bits
        return (static_cast<double>(u) + 0.5) * (1.0 / 9007199254740992.0);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t uniform_index(std::uint64_t n) { return engine_() % n; }

    double gaussian() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace cheegerlab

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace bpsp {

/// Master seed for every random stream in the library.
struct Seed {
    std::uint64_t value = 0;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives a substream seed from a parent seed and a list of indices.
/// Order matters: derive(s, {a, b}) != derive(s, {b, a}) in general.
inline Seed derive_seed(Seed parent, std::initializer_list<std::uint64_t> indices) {
    std::uint64_t h = splitmix64(parent.value);
    for (std::uint64_t idx : indices) {
        h = splitmix64(h ^ splitmix64(idx + 0x632be59bd9b4e019ULL));
    }
    return Seed{h};
}

/// Deterministic 64-bit generator. The distribution helpers are written out
/// here instead of using <random> distributions, whose output is
/// implementation-defined.
class Rng {
public:
    explicit Rng(Seed seed) : engine_(splitmix64(seed.value)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % bound);
        std::uint64_t r = next();
        while (r >= limit) {
            r = next();
        }
        return r % bound;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace bpsp

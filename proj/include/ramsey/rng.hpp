#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace ramsey {

// Deterministic random source.  mt19937_64's output stream is pinned down by
// the standard, and the bounded draw below avoids std::uniform_int_distribution,
// whose mapping is implementation-defined.
struct rng {
    std::mt19937_64 eng;

    explicit rng(std::uint64_t seed) : eng(seed) {}

    static constexpr const char* algorithm = "mt19937_64";

    std::uint64_t next() { return eng(); }

    // uniform in [0, bound), rejection sampled
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::domain_error("rng::below: zero bound");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = eng();
        } while (x >= limit);
        return x % bound;
    }

    bool coin() { return (eng() >> 63) != 0; }

    // uniform double in [0, 1)
    double unit01() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
};

// Stateless per-edge hash coloring: lets huge colorings be queried without
// materializing the pair array.  splitmix64 finalizer.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_edge(std::uint64_t seed, std::int64_t u, std::int64_t v) {
    if (u > v) { auto t = u; u = v; v = t; }
    std::uint64_t h = splitmix64(seed ^ 0x243f6a8885a308d3ull);
    h = splitmix64(h ^ static_cast<std::uint64_t>(u));
    h = splitmix64(h ^ static_cast<std::uint64_t>(v));
    return h;
}

inline std::uint64_t hash_triple(std::uint64_t seed, std::int64_t a, std::int64_t b, std::int64_t c) {
    std::uint64_t h = splitmix64(seed ^ 0x452821e638d01377ull);
    h = splitmix64(h ^ static_cast<std::uint64_t>(a));
    h = splitmix64(h ^ static_cast<std::uint64_t>(b));
    h = splitmix64(h ^ static_cast<std::uint64_t>(c));
    return h;
}

} // namespace ramsey

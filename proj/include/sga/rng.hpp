#ifndef SGA_RNG_HPP
#define SGA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace sga {

// All randomized operations draw through these helpers so that output depends
// only on the seed, not on the standard library's distribution internals or
// on thread scheduling. Work units (restarts, samples) get their own stream
// via derive_seed, which keeps results identical for any thread count.

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ mix64(stream + 1));
}

// Unbiased integer in [0, n) by rejection.
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do { v = rng(); } while (v >= limit);
    return v % n;
}

inline double rand_unit(std::mt19937_64& rng) {
    return (rng() >> 11) * 0x1.0p-53;
}

// Box-Muller; one value per call, deterministic across platforms.
inline double rand_gauss(std::mt19937_64& rng) {
    double u1 = rand_unit(rng);
    double u2 = rand_unit(rng);
    while (u1 <= 0.0) u1 = rand_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// Fisher-Yates using rand_below.
template <typename Vec>
void rand_shuffle(std::mt19937_64& rng, Vec& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = (std::size_t)rand_below(rng, i);
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace sga

#endif

#pragma once

#include <cstdint>
#include <random>

namespace tgp {

// splitmix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Child stream seed. Injective in `child` for a fixed `parent`.
//
// Seeds are derived as a chain:
//   run        = derive_seed(master_seed, run_index)
//   generation = derive_seed(run, generation)      (generation 0 = initialization)
//   group      = derive_seed(generation, group_index)
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t child) noexcept
{
    return splitmix64(parent ^ splitmix64(child));
}

// Deterministic random source. Draws are defined on top of the raw
// mt19937_64 output so that sequences do not depend on the standard
// library's distribution implementations.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // Uniform in [0, 1) with 53 bits of resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return uniform() < p; }

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace tgp

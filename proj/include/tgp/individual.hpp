#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "tgp/tree.hpp"

namespace tgp {

inline constexpr std::int64_t kNoParent = -1;

// Population indices (in the previous generation) of the individuals an
// offspring was bred from. Copies have a single parent.
struct Lineage {
    std::array<std::int64_t, 2> parents { kNoParent, kNoParent };

    friend bool operator==(const Lineage&, const Lineage&) = default;
};

struct Individual {
    ProgramTree genome;
    int fitness = 0;
    // Timer units: node visits (cost model) or nanoseconds (wall clock).
    std::uint64_t eval_duration = 0;
    std::size_t size = 0;
    bool evaluated = false;
    Lineage lineage;

    static Individual from(ProgramTree genome)
    {
        Individual ind;
        ind.size = genome.size();
        ind.genome = std::move(genome);
        return ind;
    }

    friend bool operator==(const Individual&, const Individual&) = default;
};

} // namespace tgp

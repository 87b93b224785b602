#pragma once

#include <cstddef>
#include <vector>

#include "tgp/rng.hpp"
#include "tgp/tree.hpp"

namespace tgp {

struct DepthRange {
    int min = 2;
    int max = 6;
};

// "full": every branch reaches exactly `depth`.
ProgramTree build_full(int depth, int num_bits, Rng& rng);
// "grow": primitives drawn uniformly from functions and inputs above `depth`,
// inputs only at `depth`. The root may be a terminal.
ProgramTree build_grow(int depth, int num_bits, Rng& rng);

// Tree i uses depth min + (i/2) mod (max-min+1), grow for even i and full
// for odd i. Throws UsageError if count < 1 or the range is invalid.
std::vector<ProgramTree> ramped_half_and_half(std::size_t count, DepthRange depths, int num_bits, Rng& rng);

} // namespace tgp

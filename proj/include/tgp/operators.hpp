#pragma once

#include <cstddef>
#include <span>

#include "tgp/individual.hpp"
#include "tgp/rng.hpp"
#include "tgp/tree.hpp"

namespace tgp {

// Samples k members uniformly with replacement and returns the index of the
// fittest; the first sampled wins ties. Throws UsageError on an empty
// population, k < 1, or an unevaluated individual.
std::size_t tournament_select(std::span<const Individual> population, int k, Rng& rng);

// Same, restricted to `members` (indices into population). Returns a population index.
std::size_t tournament_select(std::span<const Individual> population, std::span<const std::size_t> members, int k, Rng& rng);

namespace detail {
// No precondition checks; callers validate the population once up front.
std::size_t tournament_unchecked(std::span<const Individual> population, std::span<const std::size_t> members, int k, Rng& rng);
} // namespace detail

struct CrossoverParams {
    int max_depth = 17;
    // Probability of picking a function node as the crossover point
    // (when the tree has one); otherwise a terminal is picked.
    double internal_bias = 0.9;
};

struct CrossoverOffspring {
    ProgramTree first;
    ProgramTree second;
    // Set when the child exceeded max_depth and was replaced by its parent.
    bool first_fallback = false;
    bool second_fallback = false;
};

// Node position chosen with the internal-node bias.
std::size_t pick_crossover_point(const ProgramTree& tree, double internal_bias, Rng& rng);

// Swaps one subtree of each parent. An over-deep child is replaced by a copy
// of the parent it was built from.
CrossoverOffspring subtree_crossover(const ProgramTree& a, const ProgramTree& b, Rng& rng, const CrossoverParams& params = {});

} // namespace tgp

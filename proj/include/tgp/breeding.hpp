#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tgp/fitness.hpp"
#include "tgp/grouping.hpp"
#include "tgp/individual.hpp"
#include "tgp/operators.hpp"
#include "tgp/rng.hpp"
#include "tgp/timing.hpp"

namespace tgp {

// Operator rates; defaults follow the classic Koza parity tableau.
struct BreedPlan {
    double crossover_prob = 0.9;
    double reproduction_prob = 0.1;
    int tournament_k = 7;
    // Best individuals copied unchanged into each breeding pool's offspring.
    // Clamped to the pool size.
    std::size_t elitism = 0;
    int max_depth = 17;
    double internal_bias = 0.9;

    // Throws ConfigError naming the offending field.
    void validate() const;
    CrossoverParams crossover() const noexcept { return { max_depth, internal_bias }; }
};

// One generational step over the whole population: elites first, then with
// probability crossover_prob two tournament winners are crossed (both children
// kept while slots remain), otherwise one winner is copied. Copies keep their
// evaluation; crossover children are unevaluated.
// Throws UsageError if |population| < 2 or any individual is unevaluated.
std::vector<Individual> standard_breed(std::span<const Individual> population, const BreedPlan& plan, Rng& rng);

// Breeds `members` (population indices, in increasing order) into
// members.size() offspring. A single-member pool can only copy.
std::vector<Individual> breed_pool(std::span<const Individual> population, std::span<const std::size_t> members, const BreedPlan& plan, Rng& rng);

// Stream for group g within a generation whose seed is `generation_seed`.
inline std::uint64_t group_seed(std::uint64_t generation_seed, std::size_t group) noexcept
{
    return derive_seed(generation_seed, group);
}

// Selection, crossover and evaluation run independently inside each group,
// one group per task on up to `workers` threads. Group g breeds with
// Rng(group_seed(generation_seed, g)) over its members in index order and
// contributes exactly |group g| offspring; offspring are concatenated in group
// order. The result does not depend on `workers` under the cost model.
std::vector<Individual> group_breed(std::span<const Individual> population, const GroupPartition& partition, const BreedPlan& plan,
    const FitnessCaseTable& table, TimerMode mode, unsigned workers, std::uint64_t generation_seed);

// Single-threaded rendition of group_breed: evaluate (if needed), sort by
// duration, split into `group_count` groups, then breed and evaluate the
// groups one after another.
std::vector<Individual> sequential_emulation_breed(std::span<const Individual> population, std::size_t group_count, const BreedPlan& plan,
    const FitnessCaseTable& table, TimerMode mode, std::uint64_t generation_seed);

} // namespace tgp

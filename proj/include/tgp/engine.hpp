#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tgp/breeding.hpp"
#include "tgp/grouping.hpp"
#include "tgp/init.hpp"
#include "tgp/timing.hpp"

namespace tgp {

struct ExperimentConfig {
    int num_bits = 12;
    std::size_t population_size = 1024;
    int generations = 50;
    std::size_t groups = 1;
    int runs = 30;
    TimerMode timer_mode = TimerMode::CostModel;
    unsigned workers = 1;
    std::uint64_t master_seed = 0;
    BreedPlan plan;
    DepthRange init_depth;

    // Throws ConfigError naming the offending key.
    void validate() const;
    // Rough node-visit budget; paper-scale settings exceed it.
    bool is_long_running() const noexcept;
};

struct GenerationStats {
    int generation = 0;
    int best_fitness = 0;
    double avg_fitness = 0.0;
    double avg_size = 0.0;
    double avg_duration = 0.0;
    std::size_t max_size = 0;

    friend bool operator==(const GenerationStats&, const GenerationStats&) = default;
};

// Entries for generations 0 (initial population) through config.generations.
struct RunResult {
    ExperimentConfig config;
    std::vector<GenerationStats> per_generation;
    int run_index = 0;
    std::uint64_t seed_used = 0;
};

GenerationStats compute_stats(int generation, std::span<const Individual> population);

inline std::uint64_t run_seed(std::uint64_t master_seed, int run_index) noexcept
{
    return derive_seed(master_seed, static_cast<std::uint64_t>(run_index));
}

// Everything that happened in one breeding step, for instrumentation.
struct GenerationEvent {
    int generation; // generation being produced (>= 1)
    std::span<const Individual> parents;
    const GroupPartition& partition;
    std::span<const Individual> offspring;
};

using GenerationObserver = std::function<void(const GenerationEvent&)>;

// Initializes with ramped half-and-half, evaluates generation 0, then repeats
// partition_by_time -> group_breed for each generation. Errors are rethrown
// as tgp::Error annotated with the generation number.
RunResult run_one(const ExperimentConfig& config, int run_index, const GenerationObserver& observer = {});

// config.runs independent runs ordered by run_index. Runs execute
// concurrently when there is more than one run and more than one worker; each
// run then breeds single-threaded.
std::vector<RunResult> run_experiment(const ExperimentConfig& config);

struct AggregateRow {
    int generation = 0;
    double best_fitness_mean = 0.0;
    double best_fitness_sd = 0.0;
    double avg_fitness_mean = 0.0;
    double avg_fitness_sd = 0.0;
    double avg_size_mean = 0.0;
    double avg_size_sd = 0.0;
    double avg_duration_mean = 0.0;

    friend bool operator==(const AggregateRow&, const AggregateRow&) = default;
};

// Per-generation means and sample (n-1) standard deviations across runs; the
// SD of a single run is 0. Throws UsageError on an empty list or mixed
// generation counts.
std::vector<AggregateRow> aggregate(std::span<const RunResult> results);

} // namespace tgp

#include "tgp/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tgp/errors.hpp"
#include "tgp/parallel.hpp"

namespace tgp {

void ExperimentConfig::validate() const
{
    if (num_bits < kMinBits || num_bits > kMaxBits) {
        throw ConfigError("bits", "must be in [" + std::to_string(kMinBits) + ", " + std::to_string(kMaxBits) + "]");
    }
    if (population_size < 2) {
        throw ConfigError("pop", "must be >= 2");
    }
    if (generations < 1) {
        throw ConfigError("gens", "must be >= 1");
    }
    if (groups < 1 || groups > population_size) {
        throw ConfigError("groups", "must be in [1, pop]");
    }
    if (runs < 1) {
        throw ConfigError("runs", "must be >= 1");
    }
    if (workers < 1) {
        throw ConfigError("workers", "must be >= 1");
    }
    plan.validate();
    if (plan.elitism > population_size) {
        throw ConfigError("elitism", "must not exceed pop");
    }
    if (init_depth.min < 1 || init_depth.max < init_depth.min) {
        throw ConfigError("init-depth", "need 1 <= min <= max");
    }
    if (init_depth.max > plan.max_depth) {
        throw ConfigError("max-depth", "must be >= the maximum initial depth");
    }
}

bool ExperimentConfig::is_long_running() const noexcept
{
    // Assume trees around 100 nodes once bloat sets in.
    const double visits = 100.0 * static_cast<double>(population_size) * (generations + 1) * runs * std::ldexp(1.0, num_bits);
    return visits > 5e10;
}

GenerationStats compute_stats(int generation, std::span<const Individual> population)
{
    GenerationStats s;
    s.generation = generation;
    if (population.empty()) {
        return s;
    }
    double fitness = 0.0;
    double size = 0.0;
    double duration = 0.0;
    s.best_fitness = population.front().fitness;
    for (const auto& ind : population) {
        s.best_fitness = std::max(s.best_fitness, ind.fitness);
        s.max_size = std::max(s.max_size, ind.size);
        fitness += ind.fitness;
        size += static_cast<double>(ind.size);
        duration += static_cast<double>(ind.eval_duration);
    }
    const auto n = static_cast<double>(population.size());
    s.avg_fitness = fitness / n;
    s.avg_size = size / n;
    s.avg_duration = duration / n;
    return s;
}

namespace {

RunResult run_one_with(const ExperimentConfig& config, int run_index, unsigned workers, const GenerationObserver& observer)
{
    config.validate();
    const FitnessCaseTable table(config.num_bits);

    RunResult result;
    result.config = config;
    result.run_index = run_index;
    result.seed_used = run_seed(config.master_seed, run_index);
    result.per_generation.reserve(static_cast<std::size_t>(config.generations) + 1);

    int generation = 0;
    try {
        Rng init_rng(derive_seed(result.seed_used, 0));
        std::vector<Individual> population;
        population.reserve(config.population_size);
        for (auto& tree : ramped_half_and_half(config.population_size, config.init_depth, config.num_bits, init_rng)) {
            population.push_back(Individual::from(std::move(tree)));
        }
        auto records = evaluate_population(population, table, config.timer_mode, workers);
        result.per_generation.push_back(compute_stats(0, population));

        for (generation = 1; generation <= config.generations; ++generation) {
            const auto partition = partition_by_time(records, config.groups);
            auto offspring = group_breed(population, partition, config.plan, table, config.timer_mode, workers,
                derive_seed(result.seed_used, static_cast<std::uint64_t>(generation)));
            if (observer) {
                observer(GenerationEvent { generation, population, partition, offspring });
            }
            population = std::move(offspring);
            // Offspring were evaluated inside their groups; this only collects records.
            records = evaluate_population(population, table, config.timer_mode, workers);
            result.per_generation.push_back(compute_stats(generation, population));
        }
    } catch (const std::exception& e) {
        throw Error("generation " + std::to_string(generation) + ": " + e.what());
    }
    return result;
}

} // namespace

RunResult run_one(const ExperimentConfig& config, int run_index, const GenerationObserver& observer)
{
    return run_one_with(config, run_index, config.workers, observer);
}

std::vector<RunResult> run_experiment(const ExperimentConfig& config)
{
    config.validate();
    const auto runs = static_cast<std::size_t>(config.runs);
    const bool across_runs = runs > 1 && config.workers > 1;
    const unsigned outer = across_runs ? config.workers : 1;
    const unsigned inner = across_runs ? 1 : config.workers;

    std::vector<RunResult> results(runs);
    auto failure = parallel_for(runs, outer, [&](std::size_t r) {
        results[r] = run_one_with(config, static_cast<int>(r), inner, {});
    });
    if (failure) {
        try {
            std::rethrow_exception(failure->error);
        } catch (const std::exception& e) {
            throw Error("run " + std::to_string(failure->index) + ": " + e.what());
        }
    }
    return results;
}

namespace {

struct MeanSd {
    double mean;
    double sd;
};

template <typename Get>
MeanSd mean_sd(std::span<const RunResult> results, std::size_t g, Get get)
{
    const auto n = static_cast<double>(results.size());
    double sum = 0.0;
    for (const auto& r : results) {
        sum += get(r.per_generation[g]);
    }
    const double mean = sum / n;
    if (results.size() < 2) {
        return { mean, 0.0 };
    }
    double ss = 0.0;
    for (const auto& r : results) {
        const double d = get(r.per_generation[g]) - mean;
        ss += d * d;
    }
    return { mean, std::sqrt(ss / (n - 1.0)) };
}

} // namespace

std::vector<AggregateRow> aggregate(std::span<const RunResult> results)
{
    if (results.empty()) {
        throw UsageError("nothing to aggregate");
    }
    const std::size_t gens = results.front().per_generation.size();
    for (const auto& r : results) {
        if (r.per_generation.size() != gens) {
            throw UsageError("runs have different generation counts");
        }
    }

    std::vector<AggregateRow> rows;
    rows.reserve(gens);
    for (std::size_t g = 0; g < gens; ++g) {
        AggregateRow row;
        row.generation = results.front().per_generation[g].generation;
        const auto best = mean_sd(results, g, [](const GenerationStats& s) { return static_cast<double>(s.best_fitness); });
        const auto fit = mean_sd(results, g, [](const GenerationStats& s) { return s.avg_fitness; });
        const auto size = mean_sd(results, g, [](const GenerationStats& s) { return s.avg_size; });
        const auto dur = mean_sd(results, g, [](const GenerationStats& s) { return s.avg_duration; });
        row.best_fitness_mean = best.mean;
        row.best_fitness_sd = best.sd;
        row.avg_fitness_mean = fit.mean;
        row.avg_fitness_sd = fit.sd;
        row.avg_size_mean = size.mean;
        row.avg_size_sd = size.sd;
        row.avg_duration_mean = dur.mean;
        rows.push_back(row);
    }
    return rows;
}

} // namespace tgp

#include "tgp/timing.hpp"

#include <chrono>

#include "tgp/errors.hpp"
#include "tgp/parallel.hpp"

namespace tgp {

std::string to_string(TimerMode mode) { return mode == TimerMode::WallClock ? "wall" : "cost"; }

TimerMode parse_timer_mode(const std::string& text)
{
    if (text == "wall") {
        return TimerMode::WallClock;
    }
    if (text == "cost") {
        return TimerMode::CostModel;
    }
    throw ConfigError("timer", "expected 'cost' or 'wall', got '" + text + "'");
}

EvalRecord record_of(const Individual& ind, std::size_t index)
{
    return { index, ind.eval_duration, ind.fitness, ind.size };
}

EvalRecord timed_evaluate(Individual& ind, const FitnessCaseTable& table, TimerMode mode, std::size_t index)
{
    if (ind.evaluated) {
        return record_of(ind, index);
    }
    if (mode == TimerMode::WallClock) {
        const auto start = std::chrono::steady_clock::now();
        const int fitness = evaluate(ind.genome, table);
        const auto stop = std::chrono::steady_clock::now();
        ind.fitness = fitness;
        ind.eval_duration = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    } else {
        const auto outcome = evaluate_counted(ind.genome, table);
        ind.fitness = outcome.fitness;
        ind.eval_duration = outcome.node_visits;
    }
    ind.size = ind.genome.size();
    ind.evaluated = true;
    return record_of(ind, index);
}

std::vector<EvalRecord> evaluate_population(std::span<Individual> population, const FitnessCaseTable& table, TimerMode mode, unsigned workers)
{
    if (workers < 1) {
        throw UsageError("workers must be >= 1");
    }
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < population.size(); ++i) {
        if (!population[i].evaluated) {
            pending.push_back(i);
        }
    }
    auto failure = parallel_for(pending.size(), workers, [&](std::size_t k) {
        timed_evaluate(population[pending[k]], table, mode, pending[k]);
    });
    if (failure) {
        const std::size_t index = pending[failure->index];
        try {
            std::rethrow_exception(failure->error);
        } catch (const std::exception& e) {
            throw EvaluationError("individual " + std::to_string(index) + ": " + e.what());
        }
    }

    std::vector<EvalRecord> records;
    records.reserve(population.size());
    for (std::size_t i = 0; i < population.size(); ++i) {
        records.push_back(record_of(population[i], i));
    }
    return records;
}

} // namespace tgp

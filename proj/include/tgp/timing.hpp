#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tgp/fitness.hpp"
#include "tgp/individual.hpp"

namespace tgp {

enum class TimerMode {
    // Monotonic elapsed nanoseconds of the evaluation call.
    WallClock,
    // size(genome) * 2^num_bits node visits; exactly reproducible.
    CostModel,
};

std::string to_string(TimerMode mode);
// Accepts "wall" and "cost". Throws ConfigError("timer", ...) otherwise.
TimerMode parse_timer_mode(const std::string& text);

struct EvalRecord {
    std::size_t individual_index = 0;
    std::uint64_t duration = 0;
    int fitness = 0;
    std::size_t size = 0;

    friend bool operator==(const EvalRecord&, const EvalRecord&) = default;
};

// Evaluates and times `ind` unless it is already marked evaluated, in which
// case the cached values are returned untouched.
EvalRecord timed_evaluate(Individual& ind, const FitnessCaseTable& table, TimerMode mode, std::size_t index = 0);

// Record built from an evaluated individual's cached values.
EvalRecord record_of(const Individual& ind, std::size_t index);

// Evaluates every unevaluated individual using up to `workers` threads.
// Records come back in population order. On failure throws EvaluationError
// naming the lowest failing index.
std::vector<EvalRecord> evaluate_population(std::span<Individual> population, const FitnessCaseTable& table, TimerMode mode, unsigned workers);

} // namespace tgp

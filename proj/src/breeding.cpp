#include "tgp/breeding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tgp/errors.hpp"
#include "tgp/parallel.hpp"

namespace tgp {

void BreedPlan::validate() const
{
    auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!in_unit(crossover_prob)) {
        throw ConfigError("xo-prob", "must be in [0, 1]");
    }
    if (!in_unit(reproduction_prob) || std::abs(crossover_prob + reproduction_prob - 1.0) > 1e-9) {
        throw ConfigError("reproduction-prob", "crossover and reproduction probabilities must sum to 1");
    }
    if (tournament_k < 1) {
        throw ConfigError("tournament", "must be >= 1");
    }
    if (max_depth < 0) {
        throw ConfigError("max-depth", "must be >= 0");
    }
    if (!in_unit(internal_bias)) {
        throw ConfigError("internal-bias", "must be in [0, 1]");
    }
}

namespace {

Individual copy_of(const Individual& parent, std::size_t parent_index)
{
    Individual child = parent;
    child.lineage = Lineage { { static_cast<std::int64_t>(parent_index), kNoParent } };
    return child;
}

Individual child_of(ProgramTree genome, std::size_t first, std::size_t second)
{
    Individual child = Individual::from(std::move(genome));
    child.lineage = Lineage { { static_cast<std::int64_t>(first), static_cast<std::int64_t>(second) } };
    return child;
}

void require_all_evaluated(std::span<const Individual> population)
{
    for (std::size_t i = 0; i < population.size(); ++i) {
        if (!population[i].evaluated) {
            throw UsageError("individual " + std::to_string(i) + " has not been evaluated");
        }
    }
}

std::vector<Individual> breed_pool_unchecked(std::span<const Individual> population, std::span<const std::size_t> members, const BreedPlan& plan, Rng& rng)
{
    const std::size_t target = members.size();
    std::vector<Individual> offspring;
    offspring.reserve(target);

    const std::size_t elites = std::min(plan.elitism, target);
    if (elites > 0) {
        std::vector<std::size_t> ranked(members.begin(), members.end());
        std::stable_sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
            return population[a].fitness > population[b].fitness;
        });
        for (std::size_t e = 0; e < elites; ++e) {
            offspring.push_back(copy_of(population[ranked[e]], ranked[e]));
        }
    }

    const auto xo = plan.crossover();
    while (offspring.size() < target) {
        if (members.size() >= 2 && rng.chance(plan.crossover_prob)) {
            const std::size_t a = detail::tournament_unchecked(population, members, plan.tournament_k, rng);
            const std::size_t b = detail::tournament_unchecked(population, members, plan.tournament_k, rng);
            auto children = subtree_crossover(population[a].genome, population[b].genome, rng, xo);
            offspring.push_back(child_of(std::move(children.first), a, b));
            if (offspring.size() < target) {
                offspring.push_back(child_of(std::move(children.second), b, a));
            }
        } else {
            const std::size_t p = detail::tournament_unchecked(population, members, plan.tournament_k, rng);
            offspring.push_back(copy_of(population[p], p));
        }
    }
    return offspring;
}

std::vector<std::size_t> sorted_members(std::span<const std::size_t> members)
{
    std::vector<std::size_t> sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end());
    return sorted;
}

// Breeds and evaluates group g.
std::vector<Individual> breed_group(std::span<const Individual> population, const GroupPartition& partition, std::size_t g,
    const BreedPlan& plan, const FitnessCaseTable& table, TimerMode mode, std::uint64_t generation_seed)
{
    Rng rng(group_seed(generation_seed, g));
    const auto members = sorted_members(partition.members(g));
    auto offspring = breed_pool_unchecked(population, members, plan, rng);
    for (auto& child : offspring) {
        timed_evaluate(child, table, mode);
    }
    return offspring;
}

void check_group_inputs(std::span<const Individual> population, const GroupPartition& partition, const BreedPlan& plan)
{
    if (partition.population_size() != population.size()) {
        throw UsageError("partition covers " + std::to_string(partition.population_size()) + " individuals but population has "
            + std::to_string(population.size()));
    }
    plan.validate();
    require_all_evaluated(population);
}

std::vector<Individual> concatenate(std::vector<std::vector<Individual>>& per_group, std::size_t total)
{
    std::vector<Individual> out;
    out.reserve(total);
    for (auto& group : per_group) {
        std::move(group.begin(), group.end(), std::back_inserter(out));
    }
    return out;
}

} // namespace

std::vector<Individual> breed_pool(std::span<const Individual> population, std::span<const std::size_t> members, const BreedPlan& plan, Rng& rng)
{
    plan.validate();
    for (auto m : members) {
        if (m >= population.size()) {
            throw UsageError("pool member " + std::to_string(m) + " outside population");
        }
        if (!population[m].evaluated) {
            throw UsageError("individual " + std::to_string(m) + " has not been evaluated");
        }
    }
    if (members.empty()) {
        return {};
    }
    return breed_pool_unchecked(population, members, plan, rng);
}

std::vector<Individual> standard_breed(std::span<const Individual> population, const BreedPlan& plan, Rng& rng)
{
    if (population.size() < 2) {
        throw UsageError("standard breeding needs at least 2 individuals");
    }
    plan.validate();
    require_all_evaluated(population);
    std::vector<std::size_t> all(population.size());
    std::iota(all.begin(), all.end(), std::size_t { 0 });
    return breed_pool_unchecked(population, all, plan, rng);
}

std::vector<Individual> group_breed(std::span<const Individual> population, const GroupPartition& partition, const BreedPlan& plan,
    const FitnessCaseTable& table, TimerMode mode, unsigned workers, std::uint64_t generation_seed)
{
    check_group_inputs(population, partition, plan);
    if (workers < 1) {
        throw UsageError("workers must be >= 1");
    }

    std::vector<std::vector<Individual>> per_group(partition.group_count());
    auto failure = parallel_for(partition.group_count(), workers, [&](std::size_t g) {
        per_group[g] = breed_group(population, partition, g, plan, table, mode, generation_seed);
    });
    if (failure) {
        try {
            std::rethrow_exception(failure->error);
        } catch (const std::exception& e) {
            throw EvaluationError("group " + std::to_string(failure->index) + ": " + e.what());
        }
    }
    return concatenate(per_group, population.size());
}

std::vector<Individual> sequential_emulation_breed(std::span<const Individual> population, std::size_t group_count, const BreedPlan& plan,
    const FitnessCaseTable& table, TimerMode mode, std::uint64_t generation_seed)
{
    std::vector<Individual> evaluated(population.begin(), population.end());
    const auto records = evaluate_population(evaluated, table, mode, 1);
    const auto partition = partition_by_time(records, group_count);
    check_group_inputs(evaluated, partition, plan);

    std::vector<std::vector<Individual>> per_group;
    per_group.reserve(partition.group_count());
    for (std::size_t g = 0; g < partition.group_count(); ++g) {
        per_group.push_back(breed_group(evaluated, partition, g, plan, table, mode, generation_seed));
    }
    return concatenate(per_group, evaluated.size());
}

} // namespace tgp

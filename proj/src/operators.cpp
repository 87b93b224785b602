#include "tgp/operators.hpp"

#include "tgp/errors.hpp"

namespace tgp {

namespace {

template <typename IndexOf>
std::size_t run_tournament(std::span<const Individual> population, std::size_t n, int k, Rng& rng, IndexOf index_of)
{
    if (n == 0) {
        throw UsageError("tournament over an empty population");
    }
    if (k < 1) {
        throw UsageError("tournament size must be >= 1");
    }
    std::size_t best = index_of(rng.below(n));
    for (int i = 1; i < k; ++i) {
        const std::size_t candidate = index_of(rng.below(n));
        if (population[candidate].fitness > population[best].fitness) {
            best = candidate;
        }
    }
    return best;
}

void require_evaluated(std::span<const Individual> population, std::size_t index)
{
    if (index >= population.size()) {
        throw UsageError("member index " + std::to_string(index) + " outside population");
    }
    if (!population[index].evaluated) {
        throw UsageError("tournament over unevaluated individual " + std::to_string(index));
    }
}

} // namespace

std::size_t tournament_select(std::span<const Individual> population, int k, Rng& rng)
{
    for (std::size_t i = 0; i < population.size(); ++i) {
        require_evaluated(population, i);
    }
    return run_tournament(population, population.size(), k, rng, [](std::size_t i) { return i; });
}

std::size_t tournament_select(std::span<const Individual> population, std::span<const std::size_t> members, int k, Rng& rng)
{
    for (auto m : members) {
        require_evaluated(population, m);
    }
    return run_tournament(population, members.size(), k, rng, [&](std::size_t i) { return members[i]; });
}

std::size_t detail::tournament_unchecked(std::span<const Individual> population, std::span<const std::size_t> members, int k, Rng& rng)
{
    return run_tournament(population, members.size(), k, rng, [&](std::size_t i) { return members[i]; });
}

std::size_t pick_crossover_point(const ProgramTree& tree, double internal_bias, Rng& rng)
{
    const std::size_t functions = tree.function_count();
    const bool want_function = rng.chance(internal_bias);
    const bool use_function = want_function && functions > 0;
    const std::size_t pool = use_function ? functions : tree.size() - functions;
    auto target = rng.below(pool);
    const auto nodes = tree.nodes();
    for (std::size_t pos = 0; pos < nodes.size(); ++pos) {
        if (nodes[pos].is_terminal() != use_function && target-- == 0) {
            return pos;
        }
    }
    return 0; // unreachable for a well-formed tree
}

CrossoverOffspring subtree_crossover(const ProgramTree& a, const ProgramTree& b, Rng& rng, const CrossoverParams& params)
{
    const std::size_t pa = pick_crossover_point(a, params.internal_bias, rng);
    const std::size_t pb = pick_crossover_point(b, params.internal_bias, rng);

    CrossoverOffspring out { a.replace_subtree(pa, b.subtree(pb)), b.replace_subtree(pb, a.subtree(pa)) };
    if (out.first.depth() > params.max_depth) {
        out.first = a;
        out.first_fallback = true;
    }
    if (out.second.depth() > params.max_depth) {
        out.second = b;
        out.second_fallback = true;
    }
    return out;
}

} // namespace tgp

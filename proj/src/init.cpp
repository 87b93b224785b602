#include "tgp/init.hpp"

#include <string>

#include "tgp/errors.hpp"

namespace tgp {

namespace {

void build(std::vector<Primitive>& out, int remaining, bool full, int num_bits, Rng& rng)
{
    const auto n_inputs = static_cast<std::uint64_t>(num_bits);
    constexpr auto n_functions = std::size(kFunctionSet);
    if (remaining == 0) {
        out.push_back(Primitive::terminal(static_cast<std::uint8_t>(rng.below(n_inputs))));
        return;
    }
    if (full) {
        out.push_back(Primitive::function(kFunctionSet[rng.below(n_functions)]));
    } else {
        const auto pick = rng.below(n_functions + n_inputs);
        if (pick >= n_functions) {
            out.push_back(Primitive::terminal(static_cast<std::uint8_t>(pick - n_functions)));
            return;
        }
        out.push_back(Primitive::function(kFunctionSet[pick]));
    }
    build(out, remaining - 1, full, num_bits, rng);
    build(out, remaining - 1, full, num_bits, rng);
}

ProgramTree build_tree(int depth, bool full, int num_bits, Rng& rng)
{
    if (depth < 0) {
        throw UsageError("tree depth must be non-negative");
    }
    if (num_bits < 1) {
        throw UsageError("need at least one input terminal");
    }
    std::vector<Primitive> nodes;
    build(nodes, depth, full, num_bits, rng);
    return ProgramTree(std::move(nodes));
}

} // namespace

ProgramTree build_full(int depth, int num_bits, Rng& rng) { return build_tree(depth, true, num_bits, rng); }

ProgramTree build_grow(int depth, int num_bits, Rng& rng) { return build_tree(depth, false, num_bits, rng); }

std::vector<ProgramTree> ramped_half_and_half(std::size_t count, DepthRange depths, int num_bits, Rng& rng)
{
    if (count < 1) {
        throw UsageError("ramped half-and-half needs count >= 1");
    }
    if (depths.min < 1 || depths.max < depths.min) {
        throw UsageError("invalid depth range [" + std::to_string(depths.min) + ", " + std::to_string(depths.max) + "]");
    }
    const auto span = static_cast<std::size_t>(depths.max - depths.min + 1);
    std::vector<ProgramTree> trees;
    trees.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const int depth = depths.min + static_cast<int>((i / 2) % span);
        trees.push_back(i % 2 == 0 ? build_grow(depth, num_bits, rng) : build_full(depth, num_bits, rng));
    }
    return trees;
}

} // namespace tgp

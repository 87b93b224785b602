#include "tgp/fitness.hpp"

#include <bit>
#include <string>

#include "tgp/errors.hpp"

namespace tgp {

FitnessCaseTable::FitnessCaseTable(int num_bits)
    : num_bits_(num_bits)
{
    if (num_bits < kMinBits || num_bits > kMaxBits) {
        throw ConfigError("bits", "must be in [" + std::to_string(kMinBits) + ", " + std::to_string(kMaxBits) + "], got " + std::to_string(num_bits));
    }
    const std::size_t cases = case_count();
    const std::size_t words = (cases + 63) / 64;
    mask_ = cases >= 64 ? ~std::uint64_t { 0 } : (std::uint64_t { 1 } << cases) - 1;
    inputs_.assign(static_cast<std::size_t>(num_bits) * words, 0);
    targets_.assign(words, 0);
    for (std::size_t j = 0; j < cases; ++j) {
        const std::uint64_t bit = std::uint64_t { 1 } << (j % 64);
        const std::size_t w = j / 64;
        for (int i = 0; i < num_bits; ++i) {
            if ((j >> i) & 1U) {
                inputs_[static_cast<std::size_t>(i) * words + w] |= bit;
            }
        }
        if (std::popcount(j) % 2 == 0) {
            targets_[w] |= bit;
        }
    }
}

std::vector<FitnessCaseTable::Case> FitnessCaseTable::cases() const
{
    std::vector<Case> out;
    out.reserve(case_count());
    for (std::uint32_t j = 0; j < case_count(); ++j) {
        out.push_back({ j, std::popcount(j) % 2 == 0 });
    }
    return out;
}

FitnessCaseTable build_case_table(int num_bits) { return FitnessCaseTable(num_bits); }

EvalOutcome evaluate_counted(const ProgramTree& genome, const FitnessCaseTable& table)
{
    const int hi = genome.max_input();
    if (hi >= table.num_bits()) {
        throw EvaluationError("input x" + std::to_string(hi) + " out of range for " + std::to_string(table.num_bits()) + "-bit table");
    }

    const auto nodes = genome.nodes();
    const auto targets = table.target_words();
    const std::uint64_t per_word = table.cases_per_word();

    std::vector<std::uint64_t> stack;
    stack.reserve(nodes.size());

    EvalOutcome out;
    for (std::size_t w = 0; w < table.word_count(); ++w) {
        stack.clear();
        // Reverse prefix order: children are on the stack before their parent.
        for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
            std::uint64_t value;
            if (it->is_terminal()) {
                value = table.input_words(it->input)[w];
            } else {
                const std::uint64_t a = stack.back();
                stack.pop_back();
                const std::uint64_t b = stack.back();
                stack.pop_back();
                switch (it->op) {
                case Op::And: value = a & b; break;
                case Op::Or: value = a | b; break;
                case Op::Nand: value = ~(a & b); break;
                case Op::Nor: value = ~(a | b); break;
                default: value = 0; break;
                }
            }
            stack.push_back(value);
            out.node_visits += per_word;
        }
        const std::uint64_t hits = ~(stack.back() ^ targets[w]) & table.word_mask();
        out.fitness += std::popcount(hits);
    }
    return out;
}

} // namespace tgp

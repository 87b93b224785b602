#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tgp/tree.hpp"

namespace tgp {

inline constexpr int kMinBits = 2;
inline constexpr int kMaxBits = 16;

// Complete even-parity truth table. Case j assigns input i the value (j >> i) & 1;
// its target is 1 iff popcount(j) is even.
//
// Internally the table is bit-sliced: bit t of word w holds case 64*w + t.
class FitnessCaseTable {
public:
    struct Case {
        std::uint32_t inputs;
        bool target;

        bool input(int i) const noexcept { return ((inputs >> i) & 1U) != 0; }
    };

    // Throws ConfigError("bits", ...) unless kMinBits <= num_bits <= kMaxBits.
    explicit FitnessCaseTable(int num_bits);

    int num_bits() const noexcept { return num_bits_; }
    std::size_t case_count() const noexcept { return std::size_t { 1 } << num_bits_; }
    std::vector<Case> cases() const;

    std::size_t word_count() const noexcept { return targets_.size(); }
    std::span<const std::uint64_t> input_words(int i) const noexcept
    {
        return { inputs_.data() + static_cast<std::size_t>(i) * word_count(), word_count() };
    }
    std::span<const std::uint64_t> target_words() const noexcept { return targets_; }
    // Mask of valid case bits in word w (all ones except for tables under 64 cases).
    std::uint64_t word_mask() const noexcept { return mask_; }
    // Number of cases held in each word.
    std::size_t cases_per_word() const noexcept { return case_count() < 64 ? case_count() : 64; }

private:
    int num_bits_;
    std::uint64_t mask_;
    std::vector<std::uint64_t> inputs_;
    std::vector<std::uint64_t> targets_;
};

FitnessCaseTable build_case_table(int num_bits);

struct EvalOutcome {
    int fitness = 0;
    // (node, fitness case) pairs computed; always size(genome) * 2^num_bits.
    std::uint64_t node_visits = 0;
};

// Counts the fitness cases on which the tree output equals the parity target.
// Every node is computed for every case. Throws EvaluationError when the tree
// references an input outside the table.
EvalOutcome evaluate_counted(const ProgramTree& genome, const FitnessCaseTable& table);

inline int evaluate(const ProgramTree& genome, const FitnessCaseTable& table)
{
    return evaluate_counted(genome, table).fitness;
}

} // namespace tgp

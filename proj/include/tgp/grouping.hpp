#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tgp/timing.hpp"

namespace tgp {

// Population split into contiguous slices of the duration-sorted order.
// Group 0 holds the fastest individuals. Sizes differ by at most one and the
// larger groups come first.
class GroupPartition {
public:
    GroupPartition() = default;
    // Throws UsageError unless `groups` is a partition of [0, N) into non-empty groups.
    explicit GroupPartition(std::vector<std::vector<std::size_t>> groups);

    std::size_t group_count() const noexcept { return groups_.size(); }
    std::size_t population_size() const noexcept { return owner_.size(); }
    // Members in duration order.
    std::span<const std::size_t> members(std::size_t group) const { return groups_.at(group); }
    const std::vector<std::vector<std::size_t>>& groups() const noexcept { return groups_; }

    // Throws UsageError for an index outside the population.
    std::size_t group_of(std::size_t individual_index) const;

    friend bool operator==(const GroupPartition&, const GroupPartition&) = default;

private:
    std::vector<std::vector<std::size_t>> groups_;
    std::vector<std::size_t> owner_;
};

// Stable-sorts by (duration, individual_index) and deals the order into G
// slices; with N = qG + r the first r groups get q+1 members.
// Throws ConfigError("groups", ...) unless 1 <= G <= N, and UsageError if the
// record indices are not a permutation of [0, N).
GroupPartition partition_by_time(std::span<const EvalRecord> records, std::size_t group_count);

inline std::size_t group_of(const GroupPartition& partition, std::size_t individual_index)
{
    return partition.group_of(individual_index);
}

} // namespace tgp

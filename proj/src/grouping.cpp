#include "tgp/grouping.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "tgp/errors.hpp"

namespace tgp {

namespace {
constexpr auto kUnassigned = std::numeric_limits<std::size_t>::max();
}

GroupPartition::GroupPartition(std::vector<std::vector<std::size_t>> groups)
    : groups_(std::move(groups))
{
    std::size_t total = 0;
    for (const auto& g : groups_) {
        if (g.empty()) {
            throw UsageError("partition contains an empty group");
        }
        total += g.size();
    }
    owner_.assign(total, kUnassigned);
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
        for (auto idx : groups_[gi]) {
            if (idx >= total || owner_[idx] != kUnassigned) {
                throw UsageError("partition groups are not a disjoint cover of the population");
            }
            owner_[idx] = gi;
        }
    }
}

std::size_t GroupPartition::group_of(std::size_t individual_index) const
{
    if (individual_index >= owner_.size()) {
        throw UsageError("individual " + std::to_string(individual_index) + " is not in the partition");
    }
    return owner_[individual_index];
}

GroupPartition partition_by_time(std::span<const EvalRecord> records, std::size_t group_count)
{
    const std::size_t n = records.size();
    if (n == 0) {
        throw UsageError("cannot partition an empty population");
    }
    if (group_count < 1 || group_count > n) {
        throw ConfigError("groups", "must be in [1, " + std::to_string(n) + "], got " + std::to_string(group_count));
    }

    std::vector<const EvalRecord*> order;
    order.reserve(n);
    for (const auto& r : records) {
        order.push_back(&r);
    }
    std::sort(order.begin(), order.end(), [](const EvalRecord* a, const EvalRecord* b) {
        return a->duration != b->duration ? a->duration < b->duration : a->individual_index < b->individual_index;
    });

    const std::size_t q = n / group_count;
    const std::size_t r = n % group_count;
    std::vector<std::vector<std::size_t>> groups(group_count);
    std::size_t pos = 0;
    for (std::size_t g = 0; g < group_count; ++g) {
        const std::size_t take = q + (g < r ? 1 : 0);
        groups[g].reserve(take);
        for (std::size_t k = 0; k < take; ++k) {
            groups[g].push_back(order[pos++]->individual_index);
        }
    }
    // The constructor rejects duplicate or out-of-range indices.
    return GroupPartition(std::move(groups));
}

} // namespace tgp

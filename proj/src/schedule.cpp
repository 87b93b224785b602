#include "tgp/schedule.hpp"

#include <algorithm>
#include <numeric>

#include "tgp/errors.hpp"

namespace tgp {

ScheduleReport schedule_report(std::span<const std::uint64_t> durations, unsigned workers)
{
    if (workers < 1) {
        throw UsageError("schedule needs at least one worker");
    }
    std::vector<std::size_t> order(durations.size());
    std::iota(order.begin(), order.end(), std::size_t { 0 });
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return durations[a] > durations[b]; });

    ScheduleReport report;
    report.busy.assign(workers, 0);
    for (auto job : order) {
        auto least = std::min_element(report.busy.begin(), report.busy.end());
        *least += durations[job];
    }
    report.makespan = *std::max_element(report.busy.begin(), report.busy.end());
    const auto total = std::accumulate(report.busy.begin(), report.busy.end(), std::uint64_t { 0 });
    if (report.makespan > 0) {
        report.utilization = static_cast<double>(total) / (static_cast<double>(workers) * static_cast<double>(report.makespan));
    }
    return report;
}

ScheduleReport schedule_report(std::span<const EvalRecord> records, unsigned workers)
{
    std::vector<std::uint64_t> durations;
    durations.reserve(records.size());
    for (const auto& r : records) {
        durations.push_back(r.duration);
    }
    return schedule_report(durations, workers);
}

} // namespace tgp

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tgp/timing.hpp"

namespace tgp {

// Longest-processing-time dispatch of evaluation jobs onto identical workers.
// Report only; evolution never consults it.
struct ScheduleReport {
    std::uint64_t makespan = 0;
    std::vector<std::uint64_t> busy; // per worker
    // total work / (workers * makespan); 1 when there is no work.
    double utilization = 1.0;
};

// Jobs sorted by decreasing duration (ties by position) are each assigned to
// the least-loaded worker (lowest index on ties). Throws UsageError if workers < 1.
ScheduleReport schedule_report(std::span<const std::uint64_t> durations, unsigned workers);
ScheduleReport schedule_report(std::span<const EvalRecord> records, unsigned workers);

} // namespace tgp

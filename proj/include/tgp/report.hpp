#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tgp/engine.hpp"

namespace tgp {

inline constexpr std::string_view kCsvVersionLine = "# tgp-csv v1; *_sd columns are sample standard deviations (n-1)";
inline constexpr std::string_view kCsvHeader
    = "generation,best_fitness_mean,best_fitness_sd,avg_fitness_mean,avg_fitness_sd,avg_size_mean,avg_size_sd,avg_duration_mean";

// Shortest decimal that round-trips to the same double, '.' separator.
std::string format_number(double value);

// Aggregate rows for one group count.
struct GroupSeries {
    std::size_t groups = 0;
    std::vector<AggregateRow> rows;
};

void write_csv(std::ostream& out, std::span<const AggregateRow> rows);
// Long format: a leading `groups` column followed by the per-run columns.
void write_combined_csv(std::ostream& out, std::span<const GroupSeries> series);

// Reads either layout; series appear in order of first occurrence. A file
// without a `groups` column yields one series with groups = 0.
// Throws UsageError on a header mismatch, malformed row, or no data rows.
std::vector<GroupSeries> read_csv(std::istream& in);

enum class Metric { AvgSize, BestFitness, AvgFitness };

std::string to_string(Metric metric);
// Throws UsageError listing the valid names.
Metric parse_metric(const std::string& name);
double metric_value(const AggregateRow& row, Metric metric);

// Line chart with one polyline per series, generation on x and the metric on y.
std::string render_svg(std::span<const GroupSeries> series, Metric metric);

} // namespace tgp

#include "tgp/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "tgp/errors.hpp"

namespace tgp {

std::string format_number(double value)
{
    std::array<char, 64> buf {};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

namespace {

void write_row(std::ostream& out, const AggregateRow& r)
{
    out << r.generation << ',' << format_number(r.best_fitness_mean) << ',' << format_number(r.best_fitness_sd) << ','
        << format_number(r.avg_fitness_mean) << ',' << format_number(r.avg_fitness_sd) << ',' << format_number(r.avg_size_mean) << ','
        << format_number(r.avg_size_sd) << ',' << format_number(r.avg_duration_mean) << '\n';
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        fields.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            return fields;
        }
        start = pos + 1;
    }
}

template <typename T>
T parse_field(std::string_view text, std::size_t line_no)
{
    T value {};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc {} || res.ptr != text.data() + text.size()) {
        throw UsageError("line " + std::to_string(line_no) + ": bad number '" + std::string(text) + "'");
    }
    return value;
}

} // namespace

void write_csv(std::ostream& out, std::span<const AggregateRow> rows)
{
    out << kCsvVersionLine << '\n' << kCsvHeader << '\n';
    for (const auto& r : rows) {
        write_row(out, r);
    }
}

void write_combined_csv(std::ostream& out, std::span<const GroupSeries> series)
{
    out << kCsvVersionLine << '\n' << "groups," << kCsvHeader << '\n';
    for (const auto& s : series) {
        for (const auto& r : s.rows) {
            out << s.groups << ',';
            write_row(out, r);
        }
    }
}

std::vector<GroupSeries> read_csv(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    bool combined = false;
    std::vector<GroupSeries> series;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!have_header) {
            if (line == kCsvHeader) {
                combined = false;
            } else if (line == "groups," + std::string(kCsvHeader)) {
                combined = true;
            } else {
                throw UsageError("line " + std::to_string(line_no) + ": unexpected CSV header");
            }
            have_header = true;
            continue;
        }
        const auto fields = split(line, ',');
        const std::size_t expected = combined ? 9 : 8;
        if (fields.size() != expected) {
            throw UsageError("line " + std::to_string(line_no) + ": expected " + std::to_string(expected) + " fields");
        }
        std::size_t f = 0;
        const std::size_t groups = combined ? parse_field<std::size_t>(fields[f++], line_no) : 0;
        AggregateRow r;
        r.generation = parse_field<int>(fields[f++], line_no);
        r.best_fitness_mean = parse_field<double>(fields[f++], line_no);
        r.best_fitness_sd = parse_field<double>(fields[f++], line_no);
        r.avg_fitness_mean = parse_field<double>(fields[f++], line_no);
        r.avg_fitness_sd = parse_field<double>(fields[f++], line_no);
        r.avg_size_mean = parse_field<double>(fields[f++], line_no);
        r.avg_size_sd = parse_field<double>(fields[f++], line_no);
        r.avg_duration_mean = parse_field<double>(fields[f++], line_no);

        auto it = std::find_if(series.begin(), series.end(), [&](const GroupSeries& s) { return s.groups == groups; });
        if (it == series.end()) {
            series.push_back({ groups, {} });
            it = series.end() - 1;
        }
        it->rows.push_back(r);
    }
    if (series.empty()) {
        throw UsageError("CSV contains no data rows");
    }
    return series;
}

std::string to_string(Metric metric)
{
    switch (metric) {
    case Metric::AvgSize: return "avg_size";
    case Metric::BestFitness: return "best_fitness";
    case Metric::AvgFitness: return "avg_fitness";
    }
    return "?";
}

Metric parse_metric(const std::string& name)
{
    for (auto m : { Metric::AvgSize, Metric::BestFitness, Metric::AvgFitness }) {
        if (name == to_string(m)) {
            return m;
        }
    }
    throw UsageError("unknown metric '" + name + "' (valid: avg_size, best_fitness, avg_fitness)");
}

double metric_value(const AggregateRow& row, Metric metric)
{
    switch (metric) {
    case Metric::AvgSize: return row.avg_size_mean;
    case Metric::BestFitness: return row.best_fitness_mean;
    case Metric::AvgFitness: return row.avg_fitness_mean;
    }
    return 0.0;
}

namespace {

constexpr double kWidth = 760;
constexpr double kHeight = 480;
constexpr double kLeft = 80;
constexpr double kRight = 150;
constexpr double kTop = 40;
constexpr double kBottom = 60;

constexpr std::array<const char*, 10> kPalette { "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2",
    "#7f7f7f", "#bcbd22", "#17becf" };

std::string fixed2(double v)
{
    std::array<char, 48> buf {};
    std::snprintf(buf.data(), buf.size(), "%.2f", v);
    return buf.data();
}

std::string tick_label(double v)
{
    std::array<char, 48> buf {};
    std::snprintf(buf.data(), buf.size(), "%.4g", v);
    return buf.data();
}

} // namespace

std::string render_svg(std::span<const GroupSeries> series, Metric metric)
{
    if (series.empty()) {
        throw UsageError("nothing to plot");
    }
    double x_hi = 1;
    double y_lo = std::numeric_limits<double>::infinity();
    double y_hi = -std::numeric_limits<double>::infinity();
    for (const auto& s : series) {
        for (const auto& r : s.rows) {
            x_hi = std::max(x_hi, static_cast<double>(r.generation));
            y_lo = std::min(y_lo, metric_value(r, metric));
            y_hi = std::max(y_hi, metric_value(r, metric));
        }
    }
    if (!std::isfinite(y_lo)) {
        throw UsageError("nothing to plot");
    }
    if (y_lo >= 0 && y_lo < 0.5 * y_hi) {
        y_lo = 0;
    }
    if (y_hi - y_lo < 1e-12) {
        y_lo -= 1;
        y_hi += 1;
    }
    const double pad = 0.05 * (y_hi - y_lo);
    y_hi += pad;
    if (y_lo != 0) {
        y_lo -= pad;
    }

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + plot_w * x / x_hi; };
    auto py = [&](double y) { return kTop + plot_h * (1.0 - (y - y_lo) / (y_hi - y_lo)); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth
        << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << fixed2(kLeft + plot_w / 2) << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << to_string(metric)
        << " by generation</text>\n";

    // axes
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w << "\" y2=\"" << kTop + plot_h
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
    constexpr int kTicks = 5;
    for (int t = 0; t <= kTicks; ++t) {
        const double gx = x_hi * t / kTicks;
        const double gy = y_lo + (y_hi - y_lo) * t / kTicks;
        svg << "<text x=\"" << fixed2(px(gx)) << "\" y=\"" << fixed2(kTop + plot_h + 18) << "\" text-anchor=\"middle\">"
            << tick_label(gx) << "</text>\n";
        svg << "<text x=\"" << fixed2(kLeft - 6) << "\" y=\"" << fixed2(py(gy) + 4) << "\" text-anchor=\"end\">" << tick_label(gy)
            << "</text>\n";
        svg << "<line x1=\"" << fixed2(kLeft) << "\" y1=\"" << fixed2(py(gy)) << "\" x2=\"" << fixed2(kLeft + plot_w) << "\" y2=\""
            << fixed2(py(gy)) << "\" stroke=\"#dddddd\"/>\n";
    }
    svg << "<text class=\"x-label\" x=\"" << fixed2(kLeft + plot_w / 2) << "\" y=\"" << fixed2(kHeight - 15)
        << "\" text-anchor=\"middle\">generation</text>\n";
    svg << "<text class=\"y-label\" x=\"20\" y=\"" << fixed2(kTop + plot_h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
        << fixed2(kTop + plot_h / 2) << ")\">" << to_string(metric) << "</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        const char* colour = kPalette[i % kPalette.size()];
        const std::string label = s.groups == 0 ? "series" : "G=" + std::to_string(s.groups);
        svg << "<polyline data-groups=\"" << s.groups << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < s.rows.size(); ++k) {
            if (k > 0) {
                svg << ' ';
            }
            svg << fixed2(px(s.rows[k].generation)) << ',' << fixed2(py(metric_value(s.rows[k], metric)));
        }
        svg << "\"/>\n";
        const double ly = kTop + 10 + 18.0 * static_cast<double>(i);
        const double lx = kLeft + plot_w + 15;
        svg << "<line x1=\"" << fixed2(lx) << "\" y1=\"" << fixed2(ly) << "\" x2=\"" << fixed2(lx + 20) << "\" y2=\"" << fixed2(ly)
            << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << fixed2(lx + 26) << "\" y=\"" << fixed2(ly + 4) << "\">" << label << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace tgp

#include "tgp/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "tgp/errors.hpp"

namespace tgp {

namespace {

constexpr std::array<std::string_view, 14> kKeys { "bits", "pop", "gens", "groups", "runs", "seed", "timer", "workers", "tournament",
    "xo-prob", "max-depth", "elitism", "init-min-depth", "init-max-depth" };

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T parse_as(const std::string& key, const std::string& value)
{
    T out {};
    const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
    if (value.empty() || res.ec != std::errc {} || res.ptr != value.data() + value.size()) {
        throw ConfigError(key, "cannot parse '" + value + "'");
    }
    return out;
}

} // namespace

std::span<const std::string_view> config_keys() { return kKeys; }

void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value)
{
    if (key == "bits") {
        config.num_bits = parse_as<int>(key, value);
    } else if (key == "pop") {
        config.population_size = parse_as<std::size_t>(key, value);
    } else if (key == "gens") {
        config.generations = parse_as<int>(key, value);
    } else if (key == "groups") {
        config.groups = parse_as<std::size_t>(key, value);
    } else if (key == "runs") {
        config.runs = parse_as<int>(key, value);
    } else if (key == "seed") {
        config.master_seed = parse_as<std::uint64_t>(key, value);
    } else if (key == "timer") {
        config.timer_mode = parse_timer_mode(value);
    } else if (key == "workers") {
        config.workers = parse_as<unsigned>(key, value);
    } else if (key == "tournament") {
        config.plan.tournament_k = parse_as<int>(key, value);
    } else if (key == "xo-prob") {
        const auto p = parse_as<double>(key, value);
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ConfigError(key, "must be in [0, 1]");
        }
        config.plan.crossover_prob = p;
        config.plan.reproduction_prob = 1.0 - p;
    } else if (key == "max-depth") {
        config.plan.max_depth = parse_as<int>(key, value);
    } else if (key == "elitism") {
        config.plan.elitism = parse_as<std::size_t>(key, value);
    } else if (key == "init-min-depth") {
        config.init_depth.min = parse_as<int>(key, value);
    } else if (key == "init-max-depth") {
        config.init_depth.max = parse_as<int>(key, value);
    } else {
        throw ConfigError(key, "unknown key");
    }
}

std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string& text)
{
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto content = trim(line);
        if (content.empty() || content.front() == '#') {
            continue;
        }
        const auto eq = content.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("", "line " + std::to_string(line_no) + ": expected key=value");
        }
        auto key = trim(std::string_view(content).substr(0, eq));
        auto value = trim(std::string_view(content).substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("", "line " + std::to_string(line_no) + ": empty key");
        }
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config", "cannot read '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::vector<std::size_t> parse_group_list(const std::string& text)
{
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto value = parse_as<std::size_t>("groups", trim(item));
        if (value < 1) {
            throw ConfigError("groups", "group counts must be >= 1");
        }
        if (std::find(out.begin(), out.end(), value) != out.end()) {
            throw ConfigError("groups", "duplicate group count " + std::to_string(value));
        }
        out.push_back(value);
    }
    if (out.empty()) {
        throw ConfigError("groups", "empty list");
    }
    return out;
}

} // namespace tgp

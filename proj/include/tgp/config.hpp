#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tgp/engine.hpp"

namespace tgp {

// Keys accepted in config files; each has a `--key` flag twin.
//   bits pop gens groups runs seed timer workers tournament xo-prob
//   max-depth elitism init-min-depth init-max-depth
std::span<const std::string_view> config_keys();

// Throws ConfigError(key, ...) for an unknown key or unparsable value.
void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value);

// Flat `key = value` text. Blank lines and lines starting with '#' are skipped.
// Order of appearance is preserved. Throws ConfigError on a malformed line.
std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string& text);
std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path);

// Comma-separated group counts, e.g. "1,2,4,8". Throws ConfigError("groups", ...).
std::vector<std::size_t> parse_group_list(const std::string& text);

} // namespace tgp

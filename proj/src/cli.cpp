#include "tgp/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tgp/config.hpp"
#include "tgp/engine.hpp"
#include "tgp/errors.hpp"
#include "tgp/report.hpp"

namespace tgp {

namespace {

namespace fs = std::filesystem;

const std::map<std::string, std::string> kFlagHelp {
    { "bits", "parity problem width (required unless given in --config)" },
    { "pop", "population size" },
    { "gens", "generations after the initial population" },
    { "groups", "evaluation-time groups" },
    { "runs", "independent runs" },
    { "seed", "master seed" },
    { "timer", "duration source: cost|wall" },
    { "workers", "worker threads" },
    { "tournament", "tournament size" },
    { "xo-prob", "crossover probability (the rest is reproduction)" },
    { "max-depth", "maximum tree depth after crossover" },
    { "elitism", "elites copied per group" },
    { "init-min-depth", "minimum ramped half-and-half depth" },
    { "init-max-depth", "maximum ramped half-and-half depth" },
};

struct ExperimentFlags {
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
    std::string config_path;
};

void add_experiment_flags(CLI::App& cmd, ExperimentFlags& flags, const std::string& groups_help)
{
    for (auto key : config_keys()) {
        const std::string k(key);
        const auto& help = k == "groups" ? groups_help : kFlagHelp.at(k);
        flags.options[k] = cmd.add_option("--" + k, flags.values[k], help);
    }
    cmd.add_option("--config", flags.config_path, "key=value config file; flags take precedence");
}

struct ResolvedConfig {
    ExperimentConfig config;
    std::string groups_text; // raw, for sweeps
};

ResolvedConfig resolve(const ExperimentFlags& flags)
{
    ResolvedConfig out;
    bool have_bits = false;
    auto apply = [&](const std::string& key, const std::string& value) {
        if (key == "groups") {
            out.groups_text = value;
            return;
        }
        apply_setting(out.config, key, value);
        have_bits = have_bits || key == "bits";
    };
    if (!flags.config_path.empty()) {
        for (const auto& [key, value] : read_config_file(flags.config_path)) {
            apply(key, value);
        }
    }
    for (const auto& [key, option] : flags.options) {
        if (option->count() > 0) {
            apply(key, flags.values.at(key));
        }
    }
    if (!have_bits) {
        throw ConfigError("bits", "missing --bits (or bits= in --config)");
    }
    return out;
}

void write_file(const fs::path& path, const std::string& content)
{
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw Error("cannot open '" + path.string() + "' for writing");
    }
    file << content;
    if (!file.flush()) {
        throw Error("failed writing '" + path.string() + "'");
    }
}

void warn_if_long(const ExperimentConfig& config, std::ostream& err)
{
    if (config.is_long_running()) {
        err << "warning: this configuration is long-running (paper scale); expect hours rather than minutes\n";
    }
}

std::vector<AggregateRow> run_aggregate(const ExperimentConfig& config)
{
    const auto results = run_experiment(config);
    return aggregate(results);
}

int cmd_run(const ExperimentFlags& flags, const std::string& out_path, std::ostream& out, std::ostream& err)
{
    auto resolved = resolve(flags);
    if (!resolved.groups_text.empty()) {
        apply_setting(resolved.config, "groups", resolved.groups_text);
    }
    resolved.config.validate();
    warn_if_long(resolved.config, err);

    std::ostringstream csv;
    write_csv(csv, run_aggregate(resolved.config));
    if (out_path.empty()) {
        out << csv.str();
    } else {
        write_file(out_path, csv.str());
    }
    return kExitOk;
}

int cmd_sweep(const ExperimentFlags& flags, const std::string& out_dir, const std::string& prefix, std::ostream& err)
{
    auto resolved = resolve(flags);
    const auto groups = parse_group_list(resolved.groups_text.empty() ? "1,2,4,8,16,32,64,128" : resolved.groups_text);
    for (auto g : groups) {
        if (g > resolved.config.population_size) {
            throw ConfigError("groups", "group count " + std::to_string(g) + " exceeds pop");
        }
    }
    resolved.config.validate();
    warn_if_long(resolved.config, err);

    const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
    if (!fs::is_directory(dir)) {
        throw Error("output directory '" + dir.string() + "' does not exist");
    }

    std::vector<GroupSeries> all;
    for (auto g : groups) {
        auto config = resolved.config;
        config.groups = g;
        GroupSeries series { g, run_aggregate(config) };
        std::ostringstream csv;
        write_csv(csv, series.rows);
        write_file(dir / (prefix + "_g" + std::to_string(g) + ".csv"), csv.str());
        err << "groups=" << g << " done\n";
        all.push_back(std::move(series));
    }
    std::ostringstream combined;
    write_combined_csv(combined, all);
    write_file(dir / (prefix + "_all.csv"), combined.str());
    return kExitOk;
}

int cmd_plot(const std::string& csv_path, const std::string& metric_name, const std::string& out_path, std::ostream& out)
{
    const Metric metric = parse_metric(metric_name);
    std::ifstream in(csv_path);
    if (!in) {
        throw Error("cannot read '" + csv_path + "'");
    }
    const auto series = read_csv(in);
    const auto svg = render_svg(series, metric);
    if (out_path.empty()) {
        out << svg;
    } else {
        write_file(out_path, svg);
    }
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app { "Tree GP with evaluation-time grouped breeding", "tgp" };
    app.require_subcommand(1);

    ExperimentFlags run_flags;
    std::string run_out;
    auto* run = app.add_subcommand("run", "run an experiment and print the per-generation aggregate CSV");
    add_experiment_flags(*run, run_flags, "evaluation-time groups (1 = standard GP)");
    run->add_option("--out", run_out, "CSV output path (default: stdout)");

    ExperimentFlags sweep_flags;
    std::string sweep_out;
    std::string sweep_prefix = "sweep";
    auto* sweep = app.add_subcommand("sweep", "run one experiment per group count");
    add_experiment_flags(*sweep, sweep_flags, "comma-separated group counts (default 1,2,4,8,16,32,64,128)");
    sweep->add_option("--out", sweep_out, "output directory (default: .)");
    sweep->add_option("--prefix", sweep_prefix, "output file prefix");

    std::string plot_csv;
    std::string plot_metric = "avg_size";
    std::string plot_out;
    auto* plot = app.add_subcommand("plot", "render a CSV as an SVG line chart");
    plot->add_option("csv", plot_csv, "CSV produced by run or sweep")->required();
    plot->add_option("--metric", plot_metric, "avg_size | best_fitness | avg_fitness");
    plot->add_option("--out", plot_out, "SVG output path (default: stdout)");

    auto* version = app.add_subcommand("version", "print the version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*version) {
            out << "tgp " << kVersion << '\n';
            return kExitOk;
        }
        if (*run) {
            return cmd_run(run_flags, run_out, out, err);
        }
        if (*sweep) {
            return cmd_sweep(sweep_flags, sweep_out, sweep_prefix, err);
        }
        if (*plot) {
            return cmd_plot(plot_csv, plot_metric, plot_out, out);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace tgp

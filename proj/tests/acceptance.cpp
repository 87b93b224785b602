// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "tgp/breeding.hpp"
#include "tgp/engine.hpp"
#include "tgp/grouping.hpp"
#include "tgp/report.hpp"
#include "tgp/schedule.hpp"

using namespace tgp;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, const std::function<Outcome()>& check)
{
    Outcome o;
    try {
        o = check();
    } catch (const std::exception& e) {
        o = { false, std::string("exception: ") + e.what() };
    }
    std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
}

std::string fmt(const char* pattern, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

// bits=8, pop=512, gens=40, runs=10, cost model, seed=42.
ExperimentConfig replication_config(std::size_t groups)
{
    ExperimentConfig c;
    c.num_bits = 8;
    c.population_size = 512;
    c.generations = 40;
    c.runs = 10;
    c.timer_mode = TimerMode::CostModel;
    c.master_seed = 42;
    c.groups = groups;
    return c;
}

std::string combined_csv(const std::vector<GroupSeries>& series)
{
    std::ostringstream out;
    write_combined_csv(out, series);
    return out.str();
}

std::vector<GroupSeries> replication()
{
    std::vector<GroupSeries> series;
    for (std::size_t g : { 1, 32 }) {
        series.push_back({ g, aggregate(run_experiment(replication_config(g))) });
    }
    return series;
}

std::vector<Individual> initial_population(const ExperimentConfig& c, std::uint64_t seed, const FitnessCaseTable& table)
{
    Rng rng(seed);
    std::vector<Individual> pop;
    for (auto& t : ramped_half_and_half(c.population_size, c.init_depth, c.num_bits, rng)) {
        pop.push_back(Individual::from(std::move(t)));
    }
    evaluate_population(pop, table, c.timer_mode, 1);
    return pop;
}

ExperimentConfig random_config(Rng& rng)
{
    ExperimentConfig c;
    c.num_bits = 3 + static_cast<int>(rng.below(5));
    c.population_size = 10 + rng.below(190);
    c.generations = 3 + static_cast<int>(rng.below(8));
    c.groups = 1 + rng.below(std::min<std::size_t>(c.population_size, 40));
    c.master_seed = rng.next();
    c.plan.tournament_k = 1 + static_cast<int>(rng.below(7));
    c.plan.crossover_prob = rng.uniform();
    c.plan.reproduction_prob = 1.0 - c.plan.crossover_prob;
    c.plan.elitism = rng.below(3);
    c.plan.max_depth = 6 + static_cast<int>(rng.below(12));
    return c;
}

std::vector<EvalRecord> records_of(const std::vector<Individual>& pop)
{
    std::vector<EvalRecord> out;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        out.push_back(record_of(pop[i], i));
    }
    return out;
}

} // namespace

int main()
{
    std::vector<GroupSeries> first_replication;

    report("C1", "scaled size reduction (G=32 vs G=1)", [&] {
        first_replication = replication();
        const double base = first_replication[0].rows.back().avg_size_mean;
        const double grouped = first_replication[1].rows.back().avg_size_mean;
        const double ratio = grouped / base;
        return Outcome { ratio <= 0.60, fmt("final avg_size G=1 %.2f, G=32 %.2f, ratio %.3f (need <= 0.60)", base, grouped, ratio) };
    });

    report("C2", "fitness preservation (G=32 vs G=1)", [&] {
        if (first_replication.empty()) {
            first_replication = replication();
        }
        const double base = first_replication[0].rows.back().best_fitness_mean;
        const double grouped = first_replication[1].rows.back().best_fitness_mean;
        const double ratio = grouped / base;
        return Outcome { ratio >= 0.90, fmt("final best_fitness G=1 %.2f, G=32 %.2f, ratio %.3f (need >= 0.90)", base, grouped, ratio) };
    });

    report("C3", "one group reproduces standard GP exactly", [] {
        Rng rng(3003);
        int mismatches = 0;
        for (int trial = 0; trial < 20; ++trial) {
            const auto c = random_config(rng);
            const FitnessCaseTable table(c.num_bits);
            auto grouped = initial_population(c, c.master_seed, table);
            auto standard = grouped;
            for (int g = 1; g <= c.generations; ++g) {
                const auto gen_seed = derive_seed(c.master_seed, static_cast<std::uint64_t>(g));
                grouped = group_breed(grouped, partition_by_time(records_of(grouped), 1), c.plan, table, c.timer_mode, 1, gen_seed);
                Rng breed_rng(group_seed(gen_seed, 0));
                standard = standard_breed(standard, c.plan, breed_rng);
                evaluate_population(standard, table, c.timer_mode, 1);
                if (grouped != standard) {
                    ++mismatches;
                    break;
                }
            }
        }
        return Outcome { mismatches == 0, fmt("20 random configs, %d trajectory mismatches", mismatches) };
    });

    report("C4", "parallel and sequential group breeding agree", [] {
        Rng rng(4004);
        int mismatches = 0;
        int steps = 0;
        for (int trial = 0; trial < 10; ++trial) {
            const auto c = random_config(rng);
            const FitnessCaseTable table(c.num_bits);
            auto pop = initial_population(c, c.master_seed, table);
            for (int g = 1; g <= c.generations; ++g) {
                const auto gen_seed = derive_seed(c.master_seed, static_cast<std::uint64_t>(g));
                const auto sequential = sequential_emulation_breed(pop, c.groups, c.plan, table, c.timer_mode, gen_seed);
                const auto partition = partition_by_time(records_of(pop), c.groups);
                for (unsigned w : { 1U, 2U, 4U, 8U }) {
                    if (group_breed(pop, partition, c.plan, table, c.timer_mode, w, gen_seed) != sequential) {
                        ++mismatches;
                    }
                }
                ++steps;
                pop = sequential;
            }
        }
        return Outcome { mismatches == 0, fmt("10 random configs, %d generations x 4 worker counts, %d mismatches", steps, mismatches) };
    });

    report("C5", "partition properties", [] {
        Rng rng(5005);
        int violations = 0;
        for (int trial = 0; trial < 10000; ++trial) {
            const std::size_t n = 1 + rng.below(1000);
            const std::size_t g = 1 + rng.below(n);
            const std::uint64_t spread = trial % 2 == 0 ? 1 + rng.below(5) : 1 + rng.below(1000000);
            std::vector<EvalRecord> records(n);
            for (std::size_t i = 0; i < n; ++i) {
                records[i] = { i, rng.below(spread), 0, 1 };
            }
            const auto p = partition_by_time(records, g);
            bool ok = p.group_count() == g;
            std::vector<std::size_t> flat;
            std::vector<std::size_t> sizes;
            for (const auto& grp : p.groups()) {
                flat.insert(flat.end(), grp.begin(), grp.end());
                sizes.push_back(grp.size());
            }
            auto sorted = flat;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; ok && i < n; ++i) {
                ok = sorted.size() == n && sorted[i] == i;
            }
            for (std::size_t i = 1; ok && i < n; ++i) {
                ok = records[flat[i - 1]].duration <= records[flat[i]].duration;
            }
            const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
            ok = ok && *hi - *lo <= 1 && std::is_sorted(sizes.begin(), sizes.end(), std::greater<>());
            violations += ok ? 0 : 1;
        }
        return Outcome { violations == 0, fmt("10000 random partitions, %d violations", violations) };
    });

    report("C6", "fitness matches brute-force truth tables", [] {
        Rng rng(6006);
        int mismatches = 0;
        for (int bits : { 2, 3, 4 }) {
            const FitnessCaseTable table(bits);
            for (int i = 0; i < 1000; ++i) {
                const auto tree = oracle::random_tree(static_cast<int>(rng.below(9)), bits, rng);
                mismatches += evaluate(tree, table) == oracle::brute_force_fitness(tree, bits).fitness ? 0 : 1;
            }
        }
        return Outcome { mismatches == 0, fmt("3000 trees, %d mismatches", mismatches) };
    });

    report("C7", "no cross-group crossover", [] {
        std::size_t crossovers = 0;
        std::size_t violations = 0;
        for (std::size_t groups : { 8, 32 }) {
            run_one(replication_config(groups), 0, [&](const GenerationEvent& ev) {
                std::size_t slot = 0;
                for (std::size_t g = 0; g < ev.partition.group_count(); ++g) {
                    for (std::size_t k = 0; k < ev.partition.members(g).size(); ++k, ++slot) {
                        const auto& parents = ev.offspring[slot].lineage.parents;
                        if (parents[1] == kNoParent) {
                            continue;
                        }
                        ++crossovers;
                        for (auto p : parents) {
                            violations += ev.partition.group_of(static_cast<std::size_t>(p)) == g ? 0 : 1;
                        }
                    }
                }
            });
        }
        return Outcome { violations == 0 && crossovers > 0, fmt("%zu crossover children inspected, %zu cross-group parents", crossovers, violations) };
    });

    report("C8", "replication is byte-for-byte deterministic", [&] {
        if (first_replication.empty()) {
            first_replication = replication();
        }
        const auto a = combined_csv(first_replication);
        const auto b = combined_csv(replication());
        return Outcome { a == b, fmt("combined CSV %zu bytes, identical: %s", a.size(), a == b ? "yes" : "no") };
    });

    Rng schedule_rng(9009);
    std::vector<std::pair<std::vector<std::uint64_t>, unsigned>> sets;
    for (int t = 0; t < 1000; ++t) {
        std::vector<std::uint64_t> d(1 + schedule_rng.below(8));
        for (auto& v : d) {
            v = 1 + schedule_rng.below(100);
        }
        sets.emplace_back(std::move(d), static_cast<unsigned>(1 + schedule_rng.below(3)));
    }

    report("C9a", "schedule makespan lower bounds", [&] {
        int violations = 0;
        for (const auto& [d, w] : sets) {
            const auto r = schedule_report(d, w);
            const auto total = std::accumulate(d.begin(), d.end(), std::uint64_t { 0 });
            const bool ok = r.makespan >= *std::max_element(d.begin(), d.end())
                && static_cast<double>(r.makespan) >= static_cast<double>(total) / w;
            violations += ok ? 0 : 1;
        }
        return Outcome { violations == 0, fmt("1000 random sets, %d violations", violations) };
    });

    report("C9b", "LPT makespan equals the exhaustive optimum (N<=8, workers<=3)", [&] {
        int mismatches = 0;
        std::string example;
        for (const auto& [d, w] : sets) {
            const auto lpt = schedule_report(d, w).makespan;
            const auto opt = oracle::exhaustive_makespan(d, w);
            if (lpt != opt) {
                if (mismatches == 0) {
                    example = "; e.g. workers=" + std::to_string(w) + " durations {";
                    for (std::size_t i = 0; i < d.size(); ++i) {
                        example += (i ? "," : "") + std::to_string(d[i]);
                    }
                    example += "}: LPT " + std::to_string(lpt) + " vs optimum " + std::to_string(opt);
                }
                ++mismatches;
            }
        }
        return Outcome { mismatches == 0, fmt("1000 random sets, %d differ from the optimum", mismatches) + example };
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

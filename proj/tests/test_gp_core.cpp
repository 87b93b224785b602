#include <doctest.h>

#include <cmath>
#include <set>

#include "oracle.hpp"
#include "tgp/errors.hpp"
#include "tgp/fitness.hpp"
#include "tgp/init.hpp"
#include "tgp/operators.hpp"
#include "tgp/tree.hpp"

using namespace tgp;

namespace {

ProgramTree x(std::uint8_t i) { return ProgramTree::input(i); }

ProgramTree full_tree(int depth)
{
    return depth == 0 ? x(0) : ProgramTree::make(Op::And, full_tree(depth - 1), full_tree(depth - 1));
}

Individual evaluated(ProgramTree t, int fitness)
{
    auto ind = Individual::from(std::move(t));
    ind.fitness = fitness;
    ind.evaluated = true;
    return ind;
}

bool well_formed(const ProgramTree& t)
{
    try {
        ProgramTree copy(std::vector<Primitive>(t.nodes().begin(), t.nodes().end()));
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

} // namespace

TEST_SUITE("gp_core")
{
    TEST_CASE("case table for two bits")
    {
        const auto table = build_case_table(2);
        const auto cases = table.cases();
        REQUIRE(cases.size() == 4);
        // (x0, x1) -> target
        CHECK(cases[0].target == true);  // (0,0)
        CHECK(cases[1].target == false); // (1,0)
        CHECK(cases[2].target == false); // (0,1)
        CHECK(cases[3].target == true);  // (1,1)
        CHECK(cases[1].input(0));
        CHECK_FALSE(cases[1].input(1));
    }

    TEST_CASE("case table sizes and targets")
    {
        CHECK(build_case_table(12).case_count() == 4096);
        CHECK(build_case_table(12).cases().size() == 4096);

        const auto three = build_case_table(3).cases();
        CHECK(std::count_if(three.begin(), three.end(), [](const auto& c) { return c.target; }) == 4);

        for (int bits = 2; bits <= 10; ++bits) {
            std::set<std::uint32_t> seen;
            for (const auto& c : build_case_table(bits).cases()) {
                seen.insert(c.inputs);
                CHECK(c.target == oracle::even_parity(c.inputs, bits));
            }
            CHECK(seen.size() == (std::size_t { 1 } << bits));
        }
    }

    TEST_CASE("case table rejects out-of-range widths")
    {
        CHECK_THROWS_AS(build_case_table(1), ConfigError);
        CHECK_THROWS_AS(build_case_table(17), ConfigError);
        try {
            build_case_table(0);
        } catch (const ConfigError& e) {
            CHECK(e.key() == "bits");
        }
    }

    TEST_CASE("evaluate worked examples")
    {
        const auto two = build_case_table(2);
        CHECK(evaluate(x(0), two) == 2);
        CHECK(evaluate(ProgramTree::make(Op::Nor, x(0), x(1)), two) == 3);
        CHECK_THROWS_AS(evaluate(x(2), two), EvaluationError);
    }

    TEST_CASE("evaluate agrees with the brute-force interpreter")
    {
        Rng rng(7);
        for (int bits : { 2, 3, 4, 5, 6, 7, 9 }) {
            const auto table = build_case_table(bits);
            for (int i = 0; i < 200; ++i) {
                const auto tree = oracle::random_tree(static_cast<int>(rng.below(8)), bits, rng);
                const auto expected = oracle::brute_force_fitness(tree, bits);
                const auto got = evaluate_counted(tree, table);
                REQUIRE(got.fitness == expected.fitness);
                CHECK(got.fitness >= 0);
                CHECK(got.fitness <= (1 << bits));
                // Work model: every node on every case.
                CHECK(expected.visits == tree.size() * table.case_count());
                CHECK(got.node_visits == expected.visits);
            }
        }
    }

    TEST_CASE("size and depth")
    {
        CHECK(tree_size(x(3)) == 1);
        CHECK(tree_depth(x(3)) == 0);
        const auto and01 = ProgramTree::make(Op::And, x(0), x(1));
        CHECK(tree_size(and01) == 3);
        CHECK(tree_depth(and01) == 1);
        for (int d = 0; d <= 10; ++d) {
            const auto t = full_tree(d);
            CHECK(tree_size(t) == (std::size_t { 1 } << (d + 1)) - 1);
            CHECK(tree_depth(t) == d);
        }
        const auto lopsided = ProgramTree::make(Op::Or, x(0), ProgramTree::make(Op::Nand, x(1), and01));
        CHECK(lopsided.depth() == 3);
        CHECK(lopsided.to_string() == "(or x0 (nand x1 (and x0 x1)))");
        CHECK(lopsided.node_depth(4) == 2);
        CHECK(lopsided.node_depth(5) == 3);
        CHECK(lopsided.subtree_end(2) == 7);
    }

    TEST_CASE("malformed prefix sequences are rejected")
    {
        CHECK_THROWS_AS(ProgramTree(std::vector<Primitive> {}), std::invalid_argument);
        CHECK_THROWS_AS(ProgramTree(std::vector { Primitive::function(Op::And), Primitive::terminal(0) }), std::invalid_argument);
        CHECK_THROWS_AS(ProgramTree(std::vector { Primitive::terminal(0), Primitive::terminal(1) }), std::invalid_argument);
    }

    TEST_CASE("ramped half-and-half")
    {
        Rng rng(1);
        const auto tiny = ramped_half_and_half(2, { 1, 1 }, 4, rng);
        REQUIRE(tiny.size() == 2);
        for (const auto& t : tiny) {
            CHECK(t.depth() <= 1);
        }
        CHECK(tiny[1].depth() == 1); // full

        const auto trees = ramped_half_and_half(500, { 2, 6 }, 8, rng);
        REQUIRE(trees.size() == 500);
        int deepest = 0;
        for (std::size_t i = 0; i < trees.size(); ++i) {
            CHECK(well_formed(trees[i]));
            CHECK(trees[i].max_input() < 8);
            deepest = std::max(deepest, trees[i].depth());
            if (i % 2 == 1) {
                const int d = 2 + static_cast<int>((i / 2) % 5);
                CHECK(trees[i].depth() == d);
                CHECK(trees[i].size() == (std::size_t { 1 } << (d + 1)) - 1);
            }
        }
        CHECK(deepest <= 6);
        CHECK(deepest >= 5);

        Rng a(99), b(99);
        CHECK(ramped_half_and_half(64, { 2, 6 }, 5, a) == ramped_half_and_half(64, { 2, 6 }, 5, b));

        CHECK_THROWS_AS(ramped_half_and_half(0, { 2, 6 }, 5, a), UsageError);
        CHECK_THROWS_AS(ramped_half_and_half(3, { 0, 6 }, 5, a), UsageError);
        CHECK_THROWS_AS(ramped_half_and_half(3, { 4, 3 }, 5, a), UsageError);
    }

    TEST_CASE("tournament basics")
    {
        Rng rng(3);
        std::vector<Individual> one { evaluated(x(0), 5) };
        CHECK(tournament_select(one, 7, rng) == 0);

        std::vector<Individual> empty;
        CHECK_THROWS_AS(tournament_select(empty, 3, rng), UsageError);
        CHECK_THROWS_AS(tournament_select(one, 0, rng), UsageError);
        std::vector<Individual> raw { Individual::from(x(0)) };
        CHECK_THROWS_AS(tournament_select(raw, 2, rng), UsageError);
    }

    TEST_CASE("tournament ties go to the first sampled")
    {
        std::vector<Individual> pop;
        for (int i = 0; i < 6; ++i) {
            pop.push_back(evaluated(x(0), 10));
        }
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            Rng replay(seed);
            const auto first = replay.below(pop.size());
            Rng rng(seed);
            CHECK(tournament_select(pop, 4, rng) == first);
        }
    }

    TEST_CASE("k=1 tournament is a uniform draw")
    {
        std::vector<Individual> pop;
        for (int i = 0; i < 5; ++i) {
            pop.push_back(evaluated(x(0), i));
        }
        Rng rng(11);
        std::vector<int> hits(5);
        constexpr int kTrials = 50000;
        for (int t = 0; t < kTrials; ++t) {
            ++hits[tournament_select(pop, 1, rng)];
        }
        // Chi-square with 4 dof; 18.47 is the 0.999 quantile.
        double chi2 = 0;
        for (int h : hits) {
            const double e = kTrials / 5.0;
            chi2 += (h - e) * (h - e) / e;
        }
        CHECK(chi2 < 18.47);
    }

    TEST_CASE("k=n tournament picks the maximum with the analytic probability")
    {
        constexpr std::size_t n = 10;
        std::vector<Individual> pop;
        for (std::size_t i = 0; i < n; ++i) {
            pop.push_back(evaluated(x(0), static_cast<int>((i * 7) % n)));
        }
        const auto best = static_cast<std::size_t>(std::max_element(pop.begin(), pop.end(), [](auto& a, auto& b) { return a.fitness < b.fitness; }) - pop.begin());
        Rng rng(2024);
        constexpr int kTrials = 10000;
        int wins = 0;
        for (int t = 0; t < kTrials; ++t) {
            wins += tournament_select(pop, static_cast<int>(n), rng) == best ? 1 : 0;
        }
        const double p = 1.0 - std::pow(1.0 - 1.0 / n, static_cast<double>(n));
        const double sigma = std::sqrt(p * (1 - p) / kTrials);
        CHECK(static_cast<double>(wins) / kTrials >= p - 4 * sigma);
        CHECK(static_cast<double>(wins) / kTrials <= p + 4 * sigma);
    }

    TEST_CASE("crossover of two terminals swaps roots")
    {
        Rng rng(5);
        for (int i = 0; i < 20; ++i) {
            const auto kids = subtree_crossover(x(0), x(1), rng);
            CHECK(kids.first == x(1));
            CHECK(kids.second == x(0));
        }
    }

    TEST_CASE("crossover conserves nodes and respects the depth limit")
    {
        Rng rng(17);
        int fallbacks = 0;
        for (int i = 0; i < 10000; ++i) {
            const auto a = oracle::random_tree(static_cast<int>(rng.below(17)) + 1, 6, rng, 0.8);
            const auto b = oracle::random_tree(static_cast<int>(rng.below(17)) + 1, 6, rng, 0.8);
            const auto kids = subtree_crossover(a, b, rng, { 17, 0.9 });
            REQUIRE(well_formed(kids.first));
            REQUIRE(well_formed(kids.second));
            CHECK(kids.first.depth() <= 17);
            CHECK(kids.second.depth() <= 17);
            if (!kids.first_fallback && !kids.second_fallback) {
                CHECK(kids.first.size() + kids.second.size() == a.size() + b.size());
            } else {
                ++fallbacks;
            }
            if (kids.first_fallback) {
                CHECK(kids.first == a);
            }
        }
        CHECK(fallbacks > 0);
    }

    TEST_CASE("over-deep children fall back to their parent")
    {
        Rng rng(8);
        const auto deep = full_tree(3);
        for (int i = 0; i < 200; ++i) {
            const auto kids = subtree_crossover(deep, deep, rng, { 3, 0.9 });
            CHECK(kids.first.depth() <= 3);
            CHECK(kids.second.depth() <= 3);
            if (kids.first_fallback) {
                CHECK(kids.first == deep);
            }
        }
    }

    TEST_CASE("crossover point honours the internal-node bias")
    {
        Rng rng(31);
        const auto t = full_tree(4); // 15 functions, 16 terminals
        int internal = 0;
        constexpr int kTrials = 20000;
        for (int i = 0; i < kTrials; ++i) {
            internal += t[pick_crossover_point(t, 0.9, rng)].is_terminal() ? 0 : 1;
        }
        CHECK(std::abs(static_cast<double>(internal) / kTrials - 0.9) < 0.01);
        CHECK(pick_crossover_point(x(0), 0.9, rng) == 0);
    }
}

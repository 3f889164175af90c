#include <gtest/gtest.h>

#include <random>

#include "pvc/constructions.hpp"
#include "pvc/enumerate.hpp"
#include "pvc/errors.hpp"
#include "pvc/solver.hpp"

using namespace pvc;

TEST(Solver, KnownValues) {
    EXPECT_EQ(chromatic_number(make_path(7)).chi, 3u);
    EXPECT_EQ(chromatic_number(make_cycle(5)).chi, 4u);
    EXPECT_EQ(chromatic_number(make_complete_binary_tree(4).to_graph()).chi, 3u);
    EXPECT_EQ(chromatic_number(make_t33_graph()).chi, 4u);
    EXPECT_EQ(chromatic_number(make_path(1)).chi, 1u);
}

TEST(Solver, WitnessIsValidAndTight) {
    for (const Graph& g : {make_path(9), make_cycle(7), make_t33_graph(), make_star(4)}) {
        const auto r = chromatic_number(g);
        ASSERT_EQ(r.status, SolveStatus::exact);
        EXPECT_EQ(r.lo, r.chi);
        EXPECT_EQ(r.hi, r.chi);
        EXPECT_EQ(r.witness.used(), r.chi);
        EXPECT_TRUE(is_valid_colouring(g, r.witness));
    }
}

TEST(BruteForce, KnownValues) {
    EXPECT_EQ(brute_force_chromatic(make_path(4), 3)->chi, 3u);
    EXPECT_EQ(brute_force_chromatic(make_path(1), 1)->chi, 1u);
    EXPECT_EQ(brute_force_chromatic(make_cycle(3), 3)->chi, 3u);
    EXPECT_FALSE(brute_force_chromatic(make_path(4), 2));
}

TEST(Solver, AgreesWithBruteForceOnSmallGraphs) {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const Graph& g : all_connected_graphs(n)) {
            const auto fast = chromatic_number(g);
            const auto slow = brute_force_chromatic(g, n);
            ASSERT_TRUE(slow);
            EXPECT_EQ(fast.chi, slow->chi);
        }
    }
}

TEST(Solver, MonotoneUnderConnectedSubgraphs) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 3 + trial % 5;
        const Graph g = random_connected_graph(n, 0.5, rng);
        const Graph h = random_edge_subgraph(g, rng);
        if (!h.is_connected()) continue;
        EXPECT_LE(chromatic_number(h).chi, chromatic_number(g).chi);
    }
}

TEST(Solver, SandwichedBetweenPathAndTreeBounds) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph t = random_tree(2 + trial % 11, rng);
        const auto chi = chromatic_number(t).chi;
        EXPECT_GE(chi, floor_log2(tree_longest_path(t)) + 1);
        EXPECT_LE(chi, floor_log2(t.order()) + 1);
    }
}

TEST(Solver, TinyBudgetReportsBounds) {
    SolverOptions opts;
    opts.time_budget_seconds = 1e-6;
    const Graph g = subdivide_random(make_complete_binary_tree(5), 3).to_graph();
    const auto r = chromatic_number(g, opts);
    EXPECT_LE(r.lo, r.hi);
    EXPECT_TRUE(is_valid_colouring(g, r.witness));
    if (r.status == SolveStatus::bounds) EXPECT_EQ(r.chi, r.lo);
}

TEST(Solver, RejectsDisconnectedOrEmpty) {
    EXPECT_THROW(chromatic_number(Graph(2)), InvalidInput);
    EXPECT_THROW(chromatic_number(Graph(0)), InvalidInput);
}

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pvc/constructions.hpp"
#include "pvc/enumerate.hpp"

using namespace pvc;
using pvc::testing::has_parity_path_oracle;

TEST(PathColouring, RulerSequence) {
    EXPECT_EQ(colour_path(1).colouring.colours(), (std::vector<Colour>{1}));
    const auto p7 = colour_path(7);
    EXPECT_EQ(p7.colouring.colours(), (std::vector<Colour>{1, 2, 1, 3, 1, 2, 1}));
    EXPECT_EQ(p7.colouring.k(), 3u);
    EXPECT_EQ(colour_path(8).colouring.used(), 4u);
}

TEST(PathColouring, ValidWithLogColours) {
    for (std::size_t n = 1; n <= 300; ++n) {
        const auto c = colour_path(n);
        EXPECT_EQ(c.colouring.used(), floor_log2(n) + 1);
        EXPECT_FALSE(find_parity_path_tree(make_path(n), c.colouring)) << n;
    }
}

TEST(CycleColouring, Examples) {
    EXPECT_EQ(colour_cycle(4).colouring.colours(), (std::vector<Colour>{1, 2, 1, 3}));
    EXPECT_EQ(colour_cycle(3).colouring.colours(), (std::vector<Colour>{1, 2, 3}));
    EXPECT_EQ(colour_cycle(10).colouring.used(), 5u);
}

TEST(CycleColouring, ValidAgainstOracle) {
    for (std::size_t n = 3; n <= 14; ++n) {
        const auto c = colour_cycle(n);
        EXPECT_EQ(c.colouring.used(), ceil_log2(n) + 1);
        EXPECT_FALSE(has_parity_path_oracle(make_cycle(n), c.colouring)) << n;
    }
}

TEST(CentroidColouring, Examples) {
    EXPECT_EQ(colour_tree_centroid(make_path(1)).colouring.used(), 1u);
    const auto p7 = colour_tree_centroid(make_path(7));
    EXPECT_EQ(p7.colouring.colours(), (std::vector<Colour>{3, 2, 3, 1, 3, 2, 3}));
    EXPECT_LE(colour_tree_centroid(make_complete_binary_tree(4).to_graph()).colouring.used(), 4u);
}

TEST(CentroidColouring, ValidAndUniqueMaximumOnRandomTrees) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 60;
        const Graph t = random_tree(n, rng);
        const auto c = colour_tree_centroid(t);
        EXPECT_LE(c.colouring.used(), floor_log2(n) + 1);
        EXPECT_FALSE(find_parity_path_tree(t, c.colouring));
        // Reversing levels makes the top centroid the unique largest colour on every path through it.
        std::vector<Colour> reversed(c.colouring.size());
        for (Vertex v = 0; v < reversed.size(); ++v)
            reversed[v] = static_cast<Colour>(c.colouring.k() + 1 - c.colouring[v]);
        EXPECT_TRUE(is_unique_maximum_on_tree(t, Colouring(c.colouring.k(), reversed)));
    }
}

TEST(RandomEliminationColouring, AlwaysValid) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph t = random_tree(1 + trial % 40, rng);
        const auto c = colour_tree_random_elimination(t, rng);
        EXPECT_FALSE(find_parity_path_tree(t, c.colouring));
        EXPECT_LE(c.colouring.used(), t.order());
    }
}

TEST(UniqueMaximum, RulerColouringHasIt) {
    EXPECT_TRUE(is_unique_maximum_on_tree(make_path(15), colour_path(15).colouring));
    EXPECT_FALSE(is_unique_maximum_on_tree(make_path(3), Colouring(2, {2, 1, 2})));
}

TEST(Logarithms, Values) {
    EXPECT_EQ(floor_log2(1), 0u);
    EXPECT_EQ(floor_log2(8), 3u);
    EXPECT_EQ(floor_log2(9), 3u);
    EXPECT_EQ(ceil_log2(1), 0u);
    EXPECT_EQ(ceil_log2(8), 3u);
    EXPECT_EQ(ceil_log2(9), 4u);
}

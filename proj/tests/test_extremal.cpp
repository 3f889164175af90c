#include <gtest/gtest.h>

#include "pvc/errors.hpp"
#include "pvc/extremal.hpp"

using namespace pvc;

TEST(ExtremalCount, Examples) {
    EXPECT_EQ(extremal_count(2, 1), 2);
    EXPECT_EQ(extremal_count(5, 0), 0);
    EXPECT_EQ(extremal_count(3, 3), 7);
    EXPECT_EQ(extremal_count(3, 1), 3);
    EXPECT_EQ(extremal_count(4, 2), 10);
}

TEST(ExtremalCount, ClosedFormExamples) {
    EXPECT_EQ(extremal_count_closed(3, 1), 3);
    EXPECT_EQ(extremal_count_closed(2, 1), 2);
    for (std::size_t l = 1; l <= 10; ++l) EXPECT_EQ(extremal_count_closed(l, 0), 0);
    EXPECT_THROW(extremal_count_closed(3, 3), DomainError);
}

TEST(ExtremalCount, ClosedFormMatchesRecursion) {
    for (std::size_t l = 1; l <= 40; ++l)
        for (std::size_t d = 0; d < l; ++d) ASSERT_EQ(extremal_count_closed(l, d), extremal_count(l, d));
}

TEST(ExtremalCount, PolynomialGrowth) {
    for (std::size_t l = 1; l <= 30; ++l)
        for (std::size_t d = 0; d <= l; ++d) EXPECT_LE(extremal_count(l, d), pow(BigInt(l), static_cast<unsigned>(d)));
}

TEST(Binomial, HockeyStickIdentity) {
    for (std::size_t n = 0; n <= 30; ++n)
        for (std::size_t r = 0; r <= n; ++r) {
            BigInt sum = 0;
            for (std::size_t i = r; i <= n; ++i) sum += binomial(i, r);
            ASSERT_EQ(sum, binomial(n + 1, r + 1));
        }
}

TEST(ExtremalTable, DerivationsAndConsistency) {
    const ExtremalTable table(12);
    EXPECT_TRUE(table.consistent());
    EXPECT_EQ(table.at(4, 0).derivation, Derivation::base_zero);
    EXPECT_EQ(table.at(3, 5).derivation, Derivation::base_complete);
    EXPECT_EQ(table.at(5, 2).derivation, Derivation::recursion);
    EXPECT_TRUE(table.at(5, 2).closed);
    EXPECT_EQ(*table.at(5, 2).closed, table.at(5, 2).value);
}

TEST(ExtremalTree, Examples) {
    const auto path = extremal_tree(3, 1);
    ASSERT_TRUE(path);
    EXPECT_EQ(path->order(), 3u);
    EXPECT_EQ(path->layers(), 3u);
    EXPECT_EQ(path->to_graph(), make_path(3));

    const auto b3 = extremal_tree(3, 3);
    ASSERT_TRUE(b3);
    EXPECT_EQ(*b3, make_complete_binary_tree(3));

    const auto t42 = extremal_tree(4, 2);
    ASSERT_TRUE(t42);
    EXPECT_EQ(BigInt(t42->order()), extremal_count(4, 2));
    EXPECT_FALSE(extremal_tree(4, 0));
}

TEST(ExtremalTree, SizeLayersAndExactSubdivisionDepth) {
    for (std::size_t l = 1; l <= 12; ++l)
        for (std::size_t d = 1; d <= l + 1; ++d) {
            const auto t = extremal_tree(l, d);
            ASSERT_TRUE(t);
            EXPECT_EQ(BigInt(t->order()), extremal_count(l, d));
            EXPECT_LE(t->layers(), l);
            EXPECT_EQ(max_complete_subdivision(*t), std::min(l, d));
        }
}

TEST(CompleteSubdivision, Examples) {
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(max_complete_subdivision(root_tree(make_path(n), 0)), 1u);
    for (std::size_t d = 1; d <= 6; ++d) EXPECT_EQ(max_complete_subdivision(make_complete_binary_tree(d)), d);
    EXPECT_EQ(max_complete_subdivision(subdivide_random(make_complete_binary_tree(4), 2)), 4u);
    EXPECT_EQ(max_complete_subdivision(std::optional<RootedBinaryTree>{}), 0u);
}

TEST(BruteForceExtremal, MatchesRecursionOnSmallLayers) {
    EXPECT_EQ(brute_force_extremal(2, 1), 2u);
    EXPECT_EQ(brute_force_extremal(3, 3), 7u);
    for (std::size_t l = 1; l <= 4; ++l)
        for (std::size_t d = 0; d <= l; ++d) EXPECT_EQ(BigInt(brute_force_extremal(l, d)), extremal_count(l, d));
    EXPECT_THROW(brute_force_extremal(6, 1), InvalidParameter);
}

TEST(BruteForceExtremal, OrderedTreeCounts) {
    EXPECT_EQ(ordered_tree_count(1), 2);
    EXPECT_EQ(ordered_tree_count(2), 5);
    EXPECT_EQ(ordered_tree_count(5), 458330);
}

TEST(BinaryTreeLowerBound, Values) {
    EXPECT_EQ(binary_tree_lower_bound(2), 2u);
    EXPECT_EQ(binary_tree_lower_bound(256), 3u);
    EXPECT_EQ(binary_tree_lower_bound(255), 2u);
    EXPECT_EQ(binary_tree_lower_bound(1), 1u);
    EXPECT_THROW(binary_tree_lower_bound(0), InvalidParameter);
}

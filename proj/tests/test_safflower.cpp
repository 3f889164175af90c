#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pvc/constructions.hpp"
#include "pvc/enumerate.hpp"
#include "pvc/errors.hpp"
#include "pvc/safflower.hpp"
#include "pvc/solver.hpp"

using namespace pvc;
using pvc::testing::nice_subtree_oracle;
using pvc::testing::random_colouring;

namespace {

RootedBinaryTree path_tree(std::size_t n) { return root_tree(make_path(n), 0); }

// Random rooted binary tree with a valid colouring from random elimination.
std::pair<RootedBinaryTree, Colouring> random_instance(std::size_t n, std::mt19937_64& rng) {
    const auto t = root_at_leaf(random_bounded_degree_tree(n, 3, rng));
    return {t, colour_tree_random_elimination(t.to_graph(), rng).colouring};
}

}  // namespace

TEST(NicelyColoured, Examples) {
    EXPECT_EQ(is_nicely_coloured(path_tree(1), Colouring(1, {1})), Colour{1});
    EXPECT_EQ(is_nicely_coloured(path_tree(3), Colouring(2, {1, 2, 1})), Colour{1});
    EXPECT_EQ(is_nicely_coloured(path_tree(3), Colouring(3, {1, 2, 3})), std::nullopt);
    EXPECT_THROW(is_nicely_coloured(path_tree(2), Colouring(1, {1, 1})), InvalidInput);
}

TEST(NiceSubtreeTable, Examples) {
    const auto single = nice_subtree_table(path_tree(1), Colouring(3, {2}));
    EXPECT_EQ(single.g(0, 2), 1u);
    EXPECT_EQ(single.g(0, 1), 0u);
    const auto t = path_tree(3);
    const auto table = nice_subtree_table(t, Colouring(2, {1, 2, 1}));
    EXPECT_EQ(table.g(0, 1), 2u);
    EXPECT_EQ(table.g(0, 2), 1u);
    EXPECT_EQ(table.maximiser(0, 1), (std::vector<Vertex>{0, 1, 2}));
}

TEST(NiceSubtreeTable, MatchesSubsetEnumeration) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + trial % 12;
        const auto t = root_at_leaf(random_bounded_degree_tree(n, 3, rng));
        // Arbitrary colourings: the table itself does not need validity.
        const auto col = random_colouring(n, 1 + trial % 3, rng);
        const NiceSubtreeTable table(t, col);
        for (Vertex v = 0; v < n; ++v)
            for (Colour c = 1; c <= col.k(); ++c)
                ASSERT_EQ(table.g(v, c), nice_subtree_oracle(t, col, v, c)) << "trial " << trial;
    }
}

TEST(NiceSubtreeTable, ChildSumIdentityOnRandomTrees) {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + trial % 50;
        const auto t = root_at_leaf(random_bounded_degree_tree(n, 3, rng));
        const auto col = random_colouring(n, 1 + trial % 4, rng);
        const NiceSubtreeTable table(t, col);
        for (Vertex v = 0; v < n; ++v) {
            std::size_t sum = 1;
            for (Vertex ch : t.children(v)) sum += table.g(ch, col[v]);
            ASSERT_EQ(table.g(v, col[v]), sum);
            const auto members = table.maximiser(v, col[v]);
            std::size_t nice = 0;
            for (Vertex u : members) nice += col[u] == col[v];
            EXPECT_EQ(nice, sum);
        }
    }
}

TEST(MainSafflower, Examples) {
    const auto one = build_main_safflower(path_tree(1), Colouring(1, {1}));
    EXPECT_EQ(one.num_nice(), 1u);
    EXPECT_EQ(one.trees.size(), 1u);

    const auto three = build_main_safflower(path_tree(3), Colouring(2, {1, 2, 1}));
    EXPECT_EQ(three.num_nice(), 3u);
    EXPECT_EQ(three.trees.size(), 3u);

    const RootedBinaryTree cherry(0, {{1, 2}, {}, {}});
    const Colouring cc(3, {1, 2, 3});
    const auto two = build_main_safflower(cherry, cc);
    EXPECT_EQ(two.num_nice(), 2u);
    EXPECT_TRUE(verify_safflower(cherry, two, cc));
}

TEST(MainSafflower, ValidOnRandomInstances) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 300; ++trial) {
        const auto [t, col] = random_instance(1 + trial % 80, rng);
        const auto s = build_main_safflower(t, col);
        EXPECT_TRUE(safflower_violations(t, s, col).empty());
        EXPECT_TRUE(last_common_vertex_property(t, s, col));
        EXPECT_LE(s.num_nice(), (std::size_t{1} << col.k()) - 1);
        EXPECT_EQ(audit_safflower(t, col).total(), 0u);
    }
}

TEST(MainSafflower, CorruptedSafflowerIsRejected) {
    const auto t = path_tree(3);
    const Colouring col(2, {1, 2, 1});
    auto s = build_main_safflower(t, col);
    ASSERT_TRUE(verify_safflower(t, s, col));
    // Claiming the middle vertex is nice in the first tree breaks niceness and vector distinctness.
    s.trees[0].vertices = {0, 1, 2};
    s.trees[0].nice_vertices = {0, 2};
    EXPECT_FALSE(verify_safflower(t, s, col));
    EXPECT_FALSE(safflower_violations(t, s, col).empty());
}

TEST(Certificate, SingleVertex) {
    const auto cert = nice_count_certificate(subdivide(make_complete_binary_tree(1), {}), Colouring(1, {1}));
    EXPECT_EQ(cert.d, 1u);
    EXPECT_EQ(cert.a, (std::vector<std::size_t>{1}));
    EXPECT_EQ(cert.num_nice, 1u);
}

TEST(Certificate, SubdividedB3WithCentroidColouring) {
    const auto t = subdivide(make_complete_binary_tree(3), EdgeLengths(7, 2));
    const auto col = colour_tree_centroid(t.to_graph()).colouring;
    const auto cert = nice_count_certificate(t, col);
    std::size_t sum = 0, need = 0;
    for (std::size_t ai : cert.a) {
        sum += ai;
        need += (std::size_t{1} << ai) - 1;
    }
    EXPECT_EQ(sum, 3u);
    EXPECT_GE(cert.num_nice, need);
    EXPECT_LE(cert.num_nice, (std::size_t{1} << cert.k) - 1);
}

TEST(Certificate, JsonShape) {
    const auto t = subdivide(make_complete_binary_tree(2), {1, 2, 1});
    const auto cert = nice_count_certificate(t, colour_tree_centroid(t.to_graph()).colouring);
    const auto j = cert.to_json();
    EXPECT_EQ(j["schema_version"], kCertificateSchemaVersion);
    for (const char* key : {"d", "k", "a", "num_nice", "bound", "stem", "nice_vertices"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["d"], 2);
}

TEST(Certificate, RejectsBadMarks) {
    EXPECT_THROW(subdivided_depth(make_complete_binary_tree(2)), InvalidInput);
    const RootedBinaryTree lopsided(0, {{1}, {}}, {true, true});
    EXPECT_THROW(subdivided_depth(lopsided), InvalidInput);
    EXPECT_EQ(subdivided_depth(subdivide_random(make_complete_binary_tree(4), 9)), 4u);
}

TEST(LowerBound, Values) {
    EXPECT_DOUBLE_EQ(subdivision_lower_bound(1), 1.0);
    EXPECT_DOUBLE_EQ(subdivision_lower_bound(16), 4.5);
    EXPECT_DOUBLE_EQ(subdivision_lower_bound(4), 2.0);
    EXPECT_THROW(subdivision_lower_bound(0), InvalidParameter);
}

TEST(LowerBound, ColourCountInequality) {
    EXPECT_TRUE(colour_count_inequality_holds(1, 1, {1}));
    EXPECT_TRUE(colour_count_inequality_holds(4, 2, {2, 2}));
    EXPECT_THROW(colour_count_inequality_holds(4, 1, {2, 2}), InvalidParameter);
    EXPECT_THROW(colour_count_inequality_holds(5, 2, {2, 2}), InvalidParameter);
}

TEST(LowerBound, AtMostParityChromaticNumberOfSubdivisions) {
    for (std::size_t d = 1; d <= 4; ++d) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const auto t = subdivide_random(make_complete_binary_tree(d), seed, 2);
            if (t.order() > 30) continue;
            const auto chi = chromatic_number(t.to_graph()).chi;
            EXPECT_GE(static_cast<double>(chi) + 1e-9, subdivision_lower_bound(d));
            const auto r = chromatic_number(t.to_graph());
            const auto cert = nice_count_certificate(t, r.witness);
            EXPECT_LE(cert.bound, static_cast<double>(cert.k) + 1e-9);
        }
    }
}

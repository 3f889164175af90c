#include <gtest/gtest.h>

#include <random>

#include "pvc/enumerate.hpp"
#include "pvc/errors.hpp"
#include "pvc/graph.hpp"

using namespace pvc;

TEST(Generators, PathSizes) {
    EXPECT_EQ(make_path(1).order(), 1u);
    EXPECT_EQ(make_path(1).size(), 0u);
    EXPECT_EQ(make_path(2).size(), 1u);
    EXPECT_EQ(make_path(7).order(), 7u);
    EXPECT_EQ(make_path(7).size(), 6u);
    EXPECT_TRUE(make_path(7).is_tree());
}

TEST(Generators, CycleSizes) {
    for (std::size_t n : {3u, 4u, 10u}) {
        const Graph c = make_cycle(n);
        EXPECT_EQ(c.order(), n);
        EXPECT_EQ(c.size(), n);
        for (Vertex v = 0; v < n; ++v) EXPECT_EQ(c.degree(v), 2u);
    }
}

TEST(Generators, CompleteBinaryTree) {
    EXPECT_EQ(make_complete_binary_tree(1).order(), 1u);
    EXPECT_EQ(make_complete_binary_tree(4).order(), 15u);
    const auto b3 = make_complete_binary_tree(3);
    EXPECT_EQ(b3.order(), 7u);
    std::size_t leaves = 0;
    for (Vertex v = 0; v < b3.order(); ++v) leaves += b3.is_leaf(v);
    EXPECT_EQ(leaves, 4u);
    EXPECT_EQ(b3.layers(), 3u);
}

TEST(Generators, T33Shape) {
    const Graph g = make_t33_graph();
    EXPECT_EQ(g.order(), 14u);
    EXPECT_EQ(g.size(), 13u);
    EXPECT_EQ(g.degree(7), 3u);
    EXPECT_GE(tree_longest_path(g), 6u);
    const auto t = make_t33();
    EXPECT_EQ(t.order(), 14u);
    EXPECT_TRUE(trees_isomorphic(t.to_graph(), g));
    EXPECT_EQ(t.to_graph().degree(t.root()), 1u);
}

TEST(Subdivide, VertexCounts) {
    const auto b2 = make_complete_binary_tree(2);
    EXPECT_EQ(subdivide(b2, {1, 1, 1}).to_graph(), b2.to_graph());
    EXPECT_EQ(subdivide(b2, {1, 2, 2}).order(), 5u);
    const auto b3 = make_complete_binary_tree(3);
    EXPECT_EQ(subdivide(b3, EdgeLengths(7, 3)).order(), 19u);
    EXPECT_THROW(subdivide(b2, {1, 0, 1}), InvalidParameter);
}

TEST(Subdivide, MainVertexCounts) {
    EXPECT_EQ(main_vertices(subdivide(make_complete_binary_tree(3), EdgeLengths(7, 2))).size(), 7u);
    EXPECT_EQ(main_vertices(subdivide(make_complete_binary_tree(1), {})).size(), 1u);
    EXPECT_EQ(main_vertices(subdivide_random(make_complete_binary_tree(4), 17)).size(), 15u);
    EXPECT_THROW(main_vertices(make_complete_binary_tree(2)), InvalidInput);
}

TEST(Subdivide, SeededOutputIsDeterministic) {
    const auto b4 = make_complete_binary_tree(4);
    EXPECT_EQ(subdivide_random(b4, 5), subdivide_random(b4, 5));
}

TEST(Subdivide, ContractingReplacementPathsRecoversTree) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto base = make_complete_binary_tree(1 + seed % 4);
        const auto sub = subdivide_random(base, seed, 5);
        Graph g = sub.to_graph();
        std::vector<bool> main = sub.main_marks();
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Edge& e : g.edges()) {
                if (main[e.u] && main[e.v]) continue;
                const bool merged_main = main[e.u] || main[e.v];
                g = contract_edge(g, e.u, e.v);
                main[e.u] = merged_main;
                main.erase(main.begin() + e.v);
                changed = true;
                break;
            }
        }
        EXPECT_TRUE(trees_isomorphic(g, base.to_graph())) << "seed " << seed;
    }
}

TEST(RootedTree, RejectsMalformedInput) {
    EXPECT_THROW(RootedBinaryTree(0, {{1, 2, 3}, {}, {}, {}}), InvalidInput);
    EXPECT_THROW(RootedBinaryTree(0, {{1}, {0}}), InvalidInput);
    EXPECT_THROW(Graph(2, {Edge(0, 0)}), InvalidInput);
    EXPECT_THROW(Graph(2, {Edge(0, 1), Edge(1, 0)}), InvalidInput);
}

TEST(RootedTree, RootingKeepsStructure) {
    const Graph p = make_path(5);
    const auto t = root_tree(p, 2);
    EXPECT_EQ(t.children(t.root()).size(), 2u);
    EXPECT_TRUE(trees_isomorphic(t.to_graph(), p));
    EXPECT_THROW(root_tree(make_star(3), 0), InvalidInput);
    EXPECT_EQ(root_at_leaf(make_star(3)).children(root_at_leaf(make_star(3)).root()).size(), 1u);
}

TEST(Isomorphism, ContractingB4EdgeGivesT33) {
    const Graph b4 = make_complete_binary_tree(4).to_graph();
    EXPECT_TRUE(trees_isomorphic(contract_edge(b4, 0, 1), make_t33_graph()));
    EXPECT_FALSE(trees_isomorphic(make_path(14), make_t33_graph()));
}

TEST(Enumeration, TreeCounts) {
    const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (std::size_t n = 1; n <= expected.size(); ++n) {
        const auto trees = all_trees(n);
        EXPECT_EQ(trees.size(), expected[n - 1]) << "n = " << n;
        for (const auto& t : trees) EXPECT_TRUE(t.is_tree());
    }
}

TEST(Enumeration, ConnectedGraphCounts) {
    const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112};
    for (std::size_t n = 1; n <= expected.size(); ++n) {
        const auto gs = all_connected_graphs(n);
        EXPECT_EQ(gs.size(), expected[n - 1]) << "n = " << n;
        for (const auto& g : gs) EXPECT_TRUE(g.is_connected());
    }
}

TEST(Enumeration, CanonicalFormIgnoresLabels) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_connected_graph(7, 0.4, rng);
        std::vector<Vertex> perm(7);
        for (Vertex v = 0; v < 7; ++v) perm[v] = v;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> relabelled;
        for (const Edge& e : g.edges()) relabelled.emplace_back(perm[e.u], perm[e.v]);
        EXPECT_EQ(graph_canonical_form(g), graph_canonical_form(Graph(7, relabelled)));
    }
}

TEST(RandomGraphs, HaveRequestedShape) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        EXPECT_TRUE(random_tree(1 + trial, rng).is_tree());
        const Graph b = random_bounded_degree_tree(2 + trial, 3, rng);
        EXPECT_TRUE(b.is_tree());
        EXPECT_LE(b.max_degree(), 3u);
        EXPECT_TRUE(random_connected_graph(2 + trial % 8, 0.3, rng).is_connected());
    }
}

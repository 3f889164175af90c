#include <gtest/gtest.h>

#include <random>

#include "pvc/enumerate.hpp"
#include "pvc/errors.hpp"
#include "pvc/io.hpp"

using namespace pvc;

TEST(GraphFormat, RoundTripsGraphs) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_connected_graph(1 + trial % 12, 0.3, rng);
        const auto back = parse_graph(graph_to_string(g));
        EXPECT_EQ(back.graph, g);
        EXPECT_FALSE(back.tree);
    }
}

TEST(GraphFormat, RoundTripsMarkedTrees) {
    const auto t = subdivide_random(make_complete_binary_tree(3), 4);
    const auto back = parse_graph(tree_to_string(t));
    ASSERT_TRUE(back.tree);
    EXPECT_EQ(*back.tree, t);
    EXPECT_EQ(back.graph, t.to_graph());
}

TEST(GraphFormat, IgnoresComments) {
    const auto f = parse_graph("c hello\np edge 2 1\nc mid\ne 1 2\n");
    EXPECT_EQ(f.graph, make_path(2));
}

TEST(GraphFormat, RejectsMalformedInput) {
    EXPECT_THROW(parse_graph(""), ParseError);
    EXPECT_THROW(parse_graph("p edge 2 1\n"), ParseError);
    EXPECT_THROW(parse_graph("p edge 2 1\ne 1 x\n"), ParseError);
    EXPECT_THROW(parse_graph("p edge 2 1\ne 1 3\n"), ParseError);
    EXPECT_THROW(parse_graph("p edge 2 1\ne 1 1\n"), std::invalid_argument);
    EXPECT_THROW(parse_graph("q 1\n"), ParseError);
}

TEST(ColouringFormat, RoundTrips) {
    const Colouring c(4, {1, 4, 2, 2, 3});
    EXPECT_EQ(parse_colouring(colouring_to_string(c)), c);
}

TEST(ColouringFormat, RejectsMalformedInput) {
    EXPECT_THROW(parse_colouring("v 1 1\n"), ParseError);
    EXPECT_THROW(parse_colouring("k 2\nv 1 3\n"), ParseError);
    EXPECT_THROW(parse_colouring("k 2\nv 2 1\n"), std::invalid_argument);
}

TEST(Json, CertificateUsesOneBasedIds) {
    ParityPathCertificate cert;
    cert.path.vertices = {0, 1};
    const auto j = certificate_to_json(cert);
    EXPECT_EQ(j["type"], "parity_path");
    EXPECT_EQ(j["vertices"], nlohmann::json({1, 2}));
    EXPECT_EQ(colouring_to_json(Colouring(2, {2, 1}))["colours"], nlohmann::json({2, 1}));
}

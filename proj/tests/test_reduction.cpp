#include <gtest/gtest.h>

#include <map>
#include <random>

#include "pvc/enumerate.hpp"
#include "pvc/errors.hpp"
#include "pvc/reduction.hpp"

using namespace pvc;

namespace {

std::map<Colour, int> colour_multiplicities(const Colouring& c) {
    std::map<Colour, int> m;
    for (Colour x : c.colours()) ++m[x];
    return m;
}

}  // namespace

TEST(Gadget, PathOnThreeVertices) {
    const auto gad = build_hampath_gadget(make_path(3));
    EXPECT_EQ(gad.host.order(), 12u);
    EXPECT_EQ(gad.host.size(), 13u);
    const auto m = colour_multiplicities(gad.colouring);
    EXPECT_EQ(m.size(), 6u);
    for (const auto& [c, count] : m) EXPECT_EQ(count, 2) << c;
    EXPECT_TRUE(gadget_invariant_violations(gad).empty());
}

TEST(Gadget, StarOnFourVertices) {
    const auto gad = build_hampath_gadget(make_star(3));
    EXPECT_EQ(gad.host.order(), 20u);
    EXPECT_TRUE(gadget_invariant_violations(gad).empty());
}

TEST(Gadget, EveryColourTwiceOnRandomGraphs) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 7;
        const auto gad = build_hampath_gadget(random_connected_graph(n, 0.4, rng));
        EXPECT_EQ(gad.host.order(), n * n + n);
        for (const auto& [c, count] : colour_multiplicities(gad.colouring)) EXPECT_EQ(count, 2);
        EXPECT_TRUE(gadget_invariant_violations(gad).empty());
        for (Vertex i = 0; i < n; ++i) {
            const auto path = gad.connecting_path(i);
            EXPECT_EQ(path.front(), gad.first_copy(i));
            EXPECT_EQ(path.back(), gad.second_copy(i));
        }
    }
}

TEST(Gadget, RejectsTinyGraphs) {
    EXPECT_THROW(build_hampath_gadget(make_path(1)), InvalidParameter);
}

TEST(HamiltonianPath, Examples) {
    EXPECT_TRUE(has_hamiltonian_path(make_path(3)));
    EXPECT_FALSE(has_hamiltonian_path(make_star(3)));
    EXPECT_TRUE(has_hamiltonian_path(make_cycle(5)));
    const auto p = find_hamiltonian_path(make_cycle(5));
    ASSERT_TRUE(p);
    EXPECT_TRUE(p->is_valid_in(make_cycle(5)));
    EXPECT_EQ(p->length(), 5u);
}

TEST(StitchedPath, IsAParityPath) {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (const Graph& g : all_connected_graphs(n)) {
            const auto ham = find_hamiltonian_path(g);
            if (!ham) continue;
            const auto gad = build_hampath_gadget(g);
            const Path p = stitch_parity_path(gad, *ham);
            EXPECT_TRUE(p.is_valid_in(gad.host));
            EXPECT_TRUE(parity_vector(gad.colouring, p.vertices).is_zero());
        }
    }
}

TEST(Equivalence, Examples) {
    const auto p3 = check_reduction_equivalence(make_path(3));
    EXPECT_EQ(p3.status, ReductionStatus::consistent);
    EXPECT_TRUE(p3.hamiltonian);
    EXPECT_EQ(p3.colouring_verdict, Verdict::invalid);

    const auto star = check_reduction_equivalence(make_star(3));
    EXPECT_EQ(star.status, ReductionStatus::consistent);
    EXPECT_FALSE(star.hamiltonian);
    EXPECT_EQ(star.colouring_verdict, Verdict::valid);

    const auto k3 = check_reduction_equivalence(make_complete_graph(3));
    EXPECT_EQ(k3.status, ReductionStatus::consistent);
    EXPECT_EQ(k3.colouring_verdict, Verdict::invalid);
}

TEST(Equivalence, AllConnectedGraphsUpToFiveVertices) {
    for (std::size_t n = 2; n <= 5; ++n)
        for (const Graph& g : all_connected_graphs(n))
            EXPECT_EQ(check_reduction_equivalence(g).status, ReductionStatus::consistent);
    EXPECT_EQ(to_string(ReductionStatus::inconclusive), "inconclusive");
}

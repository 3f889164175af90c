#pragma once

#include <random>

#include "pvc/graph.hpp"
#include "pvc/parity.hpp"

namespace pvc {

struct ColouringWithBound {
    Colouring colouring;
    /// Number of colours the construction guarantees.
    std::size_t claimed_bound = 0;
};

/// Ruler colouring of P_n: the vertex at 1-indexed position i gets
/// (trailing zero bits of i) + 1. Uses floor(log2 n) + 1 colours.
ColouringWithBound colour_path(std::size_t n);

/// First n-1 cycle vertices ruler-coloured, the last one gets a fresh colour.
/// Uses ceil(log2 n) + 1 colours.
ColouringWithBound colour_cycle(std::size_t n);

/// Recursive centroid decomposition. The centroid of each component receives the
/// colour of its recursion level (top level = 1); ties between two centroids go
/// to the smaller id. At most floor(log2 n) + 1 colours.
ColouringWithBound colour_tree_centroid(const Graph& tree);

/// Same recursion with a uniformly random vertex of each component in place of the
/// centroid. Always a parity vertex colouring; the only guaranteed bound is n.
ColouringWithBound colour_tree_random_elimination(const Graph& tree, std::mt19937_64& rng);

/// True iff on every path of the tree the largest colour occurs exactly once
/// (checked directly over all vertex pairs; trees only).
bool is_unique_maximum_on_tree(const Graph& tree, const Colouring& colouring);

std::size_t floor_log2(std::size_t n);
std::size_t ceil_log2(std::size_t n);

}  // namespace pvc

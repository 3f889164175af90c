#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pvc/graph.hpp"

namespace pvc {

/// All unlabelled trees on n vertices, one representative per isomorphism class,
/// in a deterministic order. Intended for n <= 14.
std::vector<Graph> all_trees(std::size_t n);

/// All connected graphs on n vertices up to isomorphism (n <= 7).
std::vector<Graph> all_connected_graphs(std::size_t n);

/// Canonical adjacency string minimised over all vertex permutations (n <= 8).
std::string graph_canonical_form(const Graph& g);

/// Uniform labelled tree via a random Prüfer sequence.
Graph random_tree(std::size_t n, std::mt19937_64& rng);

/// Uniform labelled tree with maximum degree at most `max_degree` (rejection on Prüfer sequences;
/// for max_degree 3 and n up to a few hundred this converges quickly).
Graph random_bounded_degree_tree(std::size_t n, std::size_t max_degree, std::mt19937_64& rng);

/// G(n, p) conditioned on connectivity (rejection sampling, then a spanning-tree repair).
Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng);

/// Random spanning subgraph obtained by keeping each edge with probability 1/2.
Graph random_edge_subgraph(const Graph& g, std::mt19937_64& rng);

}  // namespace pvc

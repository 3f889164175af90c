#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pvc {

using Vertex = std::uint32_t;

/// Undirected edge, normalised so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

/// Finite, undirected, simple graph on vertices 0..n-1.
///
/// Neighbour lists are kept sorted so that every traversal that walks them in
/// order visits vertices by ascending id; several verifiers rely on this for
/// deterministic certificates.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    /// Throws InvalidInput on self-loops, parallel edges or out-of-range ids.
    Graph(std::size_t n, const std::vector<Edge>& edges);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbours(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    std::size_t max_degree() const;
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges in ascending lexicographic order.
    std::vector<Edge> edges() const;

    bool is_connected() const;
    bool is_tree() const { return order() > 0 && size() + 1 == order() && is_connected(); }

    /// Subgraph induced by `keep` (ids renumbered in ascending order of the kept vertices).
    Graph induced(const std::vector<Vertex>& keep) const;
    /// Same vertex set, subset of the edges.
    Graph with_edges(const std::vector<Edge>& edges) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// Simple path given as an ordered vertex list.
struct Path {
    std::vector<Vertex> vertices;

    std::size_t length() const noexcept { return vertices.size(); }
    /// Non-empty, no repeated vertex, consecutive vertices adjacent in `g`.
    bool is_valid_in(const Graph& g) const;
    bool operator==(const Path&) const = default;
};

/// Rooted tree in which every vertex has at most two (ordered) children.
///
/// Optionally carries "main vertex" marks: the original vertices of a
/// subdivision. Trees produced by the generators are labelled in BFS order
/// from the root, children visited in list order.
class RootedBinaryTree {
public:
    /// Throws InvalidInput unless `children` describes a single tree rooted at
    /// `root` with every vertex having at most two children.
    RootedBinaryTree(Vertex root, std::vector<std::vector<Vertex>> children,
                     std::vector<bool> main_marks = {});

    std::size_t order() const noexcept { return children_.size(); }
    Vertex root() const noexcept { return root_; }
    std::span<const Vertex> children(Vertex v) const { return children_.at(v); }
    std::optional<Vertex> parent(Vertex v) const { return parent_.at(v); }

    bool is_leaf(Vertex v) const { return children_.at(v).empty(); }
    bool is_branched(Vertex v) const { return children_.at(v).size() >= 2; }
    std::size_t depth(Vertex v) const { return depth_.at(v); }
    /// Number of layers, i.e. 1 + maximum depth.
    std::size_t layers() const;

    bool has_main_marks() const noexcept { return !main_.empty(); }
    bool is_main(Vertex v) const { return !main_.empty() && main_.at(v); }
    const std::vector<bool>& main_marks() const noexcept { return main_; }

    /// Vertices in BFS order from the root.
    std::vector<Vertex> bfs_order() const;
    /// Children before parents.
    std::vector<Vertex> post_order() const;
    /// Vertices of the unique root-ward path from `v` up to `ancestor`, inclusive.
    /// Throws InvalidInput when `ancestor` is not an ancestor of `v`.
    std::vector<Vertex> path_up(Vertex v, Vertex ancestor) const;
    bool is_ancestor(Vertex ancestor, Vertex v) const;

    Graph to_graph() const;

    bool operator==(const RootedBinaryTree&) const = default;

private:
    Vertex root_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<std::optional<Vertex>> parent_;
    std::vector<std::size_t> depth_;
    std::vector<bool> main_;
};

/// Relabels vertices in BFS order (children in list order). Marks follow their vertices.
RootedBinaryTree relabel_bfs(const RootedBinaryTree& tree);

/// Roots an unrooted tree. Throws InvalidInput if `g` is not a tree or if some
/// vertex would get more than two children.
RootedBinaryTree root_tree(const Graph& g, Vertex root);

/// Roots a max-degree-3 tree at its smallest-id leaf so that no vertex has more than two children.
RootedBinaryTree root_at_leaf(const Graph& g);

// ---- generators -----------------------------------------------------------

Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_star(std::size_t leaves);
Graph make_complete_graph(std::size_t n);

/// B_d: 2^d - 1 vertices, vertex i has children 2i+1, 2i+2.
RootedBinaryTree make_complete_binary_tree(std::size_t d);

/// Two copies of B_3 with their roots joined. Copy 1 occupies ids 0..6, copy 2
/// ids 7..13, roots 0 and 7.
Graph make_t33_graph();
/// T_{3,3} rooted at a leaf of copy 1 (the only rootings with at most two
/// children per vertex are at leaves), BFS-relabelled.
RootedBinaryTree make_t33();

/// Per-edge replacement path lengths, indexed by the child endpoint; the entry
/// for the root is ignored (a single-vertex tree also accepts an empty list).
/// Length 1 keeps the edge.
using EdgeLengths = std::vector<std::size_t>;

constexpr std::size_t kDefaultMaxSubdivisionLength = 4;

/// Replaces every tree edge by a path of the given length. Original vertices are
/// marked as main vertices. Throws InvalidParameter on a zero length.
RootedBinaryTree subdivide(const RootedBinaryTree& tree, const EdgeLengths& lengths);
/// Lengths drawn uniformly from [1, max_length] with a seeded generator.
RootedBinaryTree subdivide_random(const RootedBinaryTree& tree, std::uint64_t seed,
                                  std::size_t max_length = kDefaultMaxSubdivisionLength);

/// The marked original vertices. Throws InvalidInput on an unmarked tree.
std::vector<Vertex> main_vertices(const RootedBinaryTree& subdivided);

// ---- structural helpers ---------------------------------------------------

/// Contracts edge {u, v}; the merged vertex keeps the smaller id, higher ids shift down.
Graph contract_edge(const Graph& g, Vertex u, Vertex v);

/// Canonical string of an unrooted tree (AHU encoding at the centre).
std::string tree_canonical_form(const Graph& tree);
bool trees_isomorphic(const Graph& a, const Graph& b);

/// Number of vertices on a longest path of a tree.
std::size_t tree_longest_path(const Graph& tree);

}  // namespace pvc

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pvc/graph.hpp"
#include "pvc/parity.hpp"

namespace pvc {

/// Colour c if the root, every leaf and every branched vertex of `tree` have
/// colour c. Throws InvalidInput if `colouring` is not a parity vertex colouring.
std::optional<Colour> is_nicely_coloured(const RootedBinaryTree& tree, const Colouring& colouring);

/// g_c(T_v) for every vertex v and colour c, together with enough information to
/// rebuild one maximum nicely coloured compatible subtree G_c(T_v).
///
/// With f_c(w) = 1 + best_c(left) + best_c(right) for a vertex w of colour c
/// (0 otherwise) and best_c(T_x) = max over u in T_x of f_c(u), g_c(T_v) is
/// best_c(T_v). Among equal optima the smallest vertex id is kept.
class NiceSubtreeTable {
public:
    NiceSubtreeTable(const RootedBinaryTree& tree, const Colouring& colouring);

    std::size_t k() const noexcept { return k_; }
    /// g_c(T_v); 0 for c outside 1..k.
    std::size_t g(Vertex v, Colour c) const;
    /// Root of the stored maximiser G_c(T_v), if g_c(T_v) > 0.
    std::optional<Vertex> maximiser_root(Vertex v, Colour c) const;
    /// Vertex set of the stored maximiser G_c(T_v), ascending ids (empty if g = 0).
    std::vector<Vertex> maximiser(Vertex v, Colour c) const;

private:
    std::size_t index(Vertex v, Colour c) const { return static_cast<std::size_t>(v) * (k_ + 1) + c; }
    void collect(Vertex u, Colour c, std::vector<Vertex>& out) const;

    const RootedBinaryTree* tree_;
    std::size_t k_;
    std::vector<std::size_t> best_;
    std::vector<Vertex> arg_;
};

/// Validates `colouring` on `tree` and builds the table. Throws InvalidInput on an invalid colouring.
NiceSubtreeTable nice_subtree_table(const RootedBinaryTree& tree, const Colouring& colouring);

/// One original tree of a safflower, rooted on the stem.
struct OriginalTree {
    Vertex root = 0;
    Colour nice_colour = 0;
    std::vector<Vertex> vertices;       // ascending ids
    std::vector<Vertex> nice_vertices;  // vertices coloured nice_colour, ascending
};

struct Safflower {
    /// Root-to-leaf path of the host tree; stem[i] is the root of trees[i].
    std::vector<Vertex> stem;
    std::vector<OriginalTree> trees;

    /// Num(F): total number of nicely coloured vertices.
    std::size_t num_nice() const;
};

/// Saff(T). Leaf: the root alone. One son: {r} prepended to Saff(T_s). Two sons:
/// the son with the larger g_c (ties: smaller id) hosts the original tree
/// r + G_c(T_s) + connecting path, and the stem continues into the other son.
/// Throws InvalidInput if `colouring` is not a parity vertex colouring of `tree`.
Safflower build_main_safflower(const RootedBinaryTree& tree, const Colouring& colouring);
Safflower build_main_safflower(const RootedBinaryTree& tree, const Colouring& colouring,
                               const NiceSubtreeTable& table);

/// Everything wrong with a claimed safflower embedded in `tree`; empty means valid.
/// Checks the stem, that original trees are disjoint nicely coloured compatible
/// subtrees, that the union carries no parity path, that the root-to-nice-vertex
/// parity vectors are pairwise distinct and nonzero, and Num <= 2^k - 1.
std::vector<std::string> safflower_violations(const RootedBinaryTree& tree, const Safflower& safflower,
                                              const Colouring& colouring);
bool verify_safflower(const RootedBinaryTree& tree, const Safflower& safflower, const Colouring& colouring);

/// For any two nice vertices, at least one has the colour of their last common
/// vertex on the paths from the safflower root.
bool last_common_vertex_property(const RootedBinaryTree& tree, const Safflower& safflower,
                                 const Colouring& colouring);

/// Per-property violation counts for one coloured tree (all zero on a correct instance).
struct SafflowerAudit {
    std::size_t table_identity = 0;   // g_c(T_v) = 1 + sum of g_c over the children, c = colour of v
    std::size_t verification = 0;     // safflower_violations non-empty
    std::size_t last_common = 0;      // last_common_vertex_property fails
    std::size_t original_vs_sub = 0;  // 2 Num(G_v) >= g_c(T_v) + 1 at leaf/branched stem vertices
    std::size_t stem_growth = 0;      // g_c(T_{m_i}) >= 2^{c(m_i)} - 1 on stem main vertices (subdivisions)
    std::size_t nice_count = 0;       // nice_count_certificate threw
    std::size_t checked_vertices = 0;

    std::size_t total() const {
        return table_identity + verification + last_common + original_vs_sub + stem_growth + nice_count;
    }
};

/// Runs every safflower property on one instance. Stem-growth and the lower-bound
/// certificate are only evaluated for marked subdivisions of a complete binary tree.
SafflowerAudit audit_safflower(const RootedBinaryTree& tree, const Colouring& colouring);

constexpr int kCertificateSchemaVersion = 1;

struct LowerBoundCertificate {
    std::size_t d = 0;
    std::size_t k = 0;
    std::vector<std::size_t> a;  // a[i-1] = stem main vertices coloured i
    std::size_t num_nice = 0;
    double bound = 0.0;
    Safflower safflower;

    nlohmann::json to_json() const;
};

/// Number of layers d of the complete binary tree that `subdivided` subdivides.
/// Throws InvalidInput if the main-vertex marks do not describe such a subdivision.
std::size_t subdivided_depth(const RootedBinaryTree& subdivided);

/// Extracts Saff, reads a_i off the d stem main vertices, and checks
/// sum a_i = d, Num >= sum (2^{a_i} - 1), Num <= 2^k - 1 and bound <= k.
/// A failed check throws InternalError.
LowerBoundCertificate nice_count_certificate(const RootedBinaryTree& subdivided, const Colouring& colouring);

/// Colours needed by any parity colouring of a subdivision of B_d:
/// max(sqrt d, sqrt d + log2(d) / 4 - 1/2). Throws InvalidParameter for d = 0.
double subdivision_lower_bound(std::size_t d);

/// Whether sum (2^{a_i} - 1) <= 2^k - 1 implies k >= subdivision_lower_bound(n).
/// Throws InvalidParameter unless the a_i sum to n and there are at most k of them.
bool colour_count_inequality_holds(std::size_t n, std::size_t k, const std::vector<std::size_t>& a);

}  // namespace pvc

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pvc/graph.hpp"

namespace pvc {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k); zero when k > n.
BigInt binomial(std::size_t n, std::size_t k);

/// A(l, d): the largest order of a rooted binary tree with at most l layers that
/// contains no subdivision of B_{d+1} as a compatible subgraph. Memoized recursion.
BigInt extremal_count(std::size_t l, std::size_t d);

/// Closed form sum_{i=0..d} (2^i - 1) C(l-i-1, l-d-1) + C(l, d) - 1.
/// Throws DomainError unless l > d.
BigInt extremal_count_closed(std::size_t l, std::size_t d);

enum class Derivation { base_zero, base_complete, recursion };

struct ExtremalEntry {
    BigInt value;
    Derivation derivation = Derivation::base_zero;
    /// Closed-form value where it applies (l > d).
    std::optional<BigInt> closed;
};

/// A(l, d) for 0 <= l, d <= l_max, filled bottom-up.
class ExtremalTable {
public:
    explicit ExtremalTable(std::size_t l_max);

    std::size_t l_max() const noexcept { return l_max_; }
    const ExtremalEntry& at(std::size_t l, std::size_t d) const;
    /// Whether recursion and closed form agree wherever both apply.
    bool consistent() const;

private:
    std::size_t l_max_;
    std::vector<ExtremalEntry> entries_;
};

/// The tree realising A(l, d): empty for d = 0, B_l for d >= l, otherwise a root
/// whose children carry extremal_tree(l-1, d) and extremal_tree(l-1, d-1).
/// BFS-labelled. nullopt stands for the empty tree.
std::optional<RootedBinaryTree> extremal_tree(std::size_t l, std::size_t d);

/// Largest s such that some subdivision of B_s is a compatible subgraph (0 for the empty tree).
std::size_t max_complete_subdivision(const RootedBinaryTree& tree);
std::size_t max_complete_subdivision(const std::optional<RootedBinaryTree>& tree);

constexpr std::size_t kBruteForceExtremalMaxLayers = 5;

/// Enumerates every rooted binary tree with ordered children and at most l layers
/// and returns the largest order among those without a compatible subdivision of
/// B_{d+1}. Containment is tested directly from the definition, not through
/// max_complete_subdivision. Throws InvalidParameter for l > 5 unless allow_large.
std::size_t brute_force_extremal(std::size_t l, std::size_t d, bool allow_large = false);

/// Number of ordered rooted binary trees with at most l layers, empty tree included.
BigInt ordered_tree_count(std::size_t l);

/// Lower bound on the parity chromatic number of an n-vertex binary tree: the
/// smallest integer b with b > cbrt(log2 n), decided exactly as 2^(b^3) > n.
/// Throws InvalidParameter for n = 0.
std::size_t binary_tree_lower_bound(std::size_t n);

}  // namespace pvc

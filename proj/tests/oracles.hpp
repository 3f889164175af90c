#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "pvc/graph.hpp"
#include "pvc/parity.hpp"

namespace pvc::testing {

// Plain DFS over every simple path, no pruning, no shared code with the verifiers.
inline bool extend_finds_parity_path(const Graph& g, const Colouring& col, std::vector<bool>& used,
                                     std::vector<int>& counts, Vertex v, std::size_t len) {
    if (len >= 2 && len % 2 == 0) {
        bool all_even = true;
        for (int c : counts)
            if (c % 2) { all_even = false; break; }
        if (all_even) return true;
    }
    for (Vertex w : g.neighbours(v)) {
        if (used[w]) continue;
        used[w] = true;
        ++counts[col[w]];
        const bool hit = extend_finds_parity_path(g, col, used, counts, w, len + 1);
        --counts[col[w]];
        used[w] = false;
        if (hit) return true;
    }
    return false;
}

inline bool has_parity_path_oracle(const Graph& g, const Colouring& col) {
    std::vector<bool> used(g.order(), false);
    std::vector<int> counts(col.k() + 1, 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        used[s] = true;
        ++counts[col[s]];
        const bool hit = extend_finds_parity_path(g, col, used, counts, s, 1);
        --counts[col[s]];
        used[s] = false;
        if (hit) return true;
    }
    return false;
}

// g_c(T_v) by enumerating connected vertex subsets of T_v (n <= 16): the subset's
// top vertex, its leaves and its branched vertices must all have colour c; the
// score is the number of subset vertices coloured c.
inline std::size_t nice_subtree_oracle(const RootedBinaryTree& t, const Colouring& col, Vertex v, Colour c) {
    std::vector<Vertex> sub;
    for (Vertex u = 0; u < t.order(); ++u)
        if (t.is_ancestor(v, u)) sub.push_back(u);
    const std::size_t m = sub.size();
    std::vector<int> pos(t.order(), -1);
    for (std::size_t i = 0; i < m; ++i) pos[sub[i]] = static_cast<int>(i);

    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        auto in = [&](Vertex u) { return pos[u] >= 0 && ((mask >> pos[u]) & 1); };
        std::size_t tops = 0, score = 0;
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            if (!((mask >> i) & 1)) continue;
            const Vertex u = sub[i];
            const auto p = t.parent(u);
            const bool top = !(p && in(*p));
            std::size_t kids = 0;
            for (Vertex ch : t.children(u))
                if (in(ch)) ++kids;
            if (top) ++tops;
            if ((top || kids != 1) && col[u] != c) ok = false;
            if (col[u] == c) ++score;
        }
        if (ok && tops == 1) best = std::max(best, score);
    }
    return best;
}

inline Colouring random_colouring(std::size_t n, std::size_t k, std::mt19937_64& rng) {
    std::uniform_int_distribution<Colour> pick(1, static_cast<Colour>(k));
    std::vector<Colour> c(n);
    for (auto& x : c) x = pick(rng);
    return Colouring(k, c);
}

}  // namespace pvc::testing

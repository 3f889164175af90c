#include "pvc/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "pvc/errors.hpp"

namespace pvc {

std::vector<Graph> all_trees(std::size_t n) {
    if (n == 0) throw InvalidParameter("all_trees: n must be at least 1");
    std::vector<Graph> level{Graph(1)};
    for (std::size_t m = 2; m <= n; ++m) {
        std::vector<Graph> next;
        std::set<std::string> seen;
        for (const Graph& t : level) {
            auto es = t.edges();
            for (Vertex v = 0; v < t.order(); ++v) {
                auto grown = es;
                grown.emplace_back(v, static_cast<Vertex>(m - 1));
                Graph g(m, grown);
                if (seen.insert(tree_canonical_form(g)).second) next.push_back(std::move(g));
            }
        }
        level = std::move(next);
    }
    return level;
}

std::string graph_canonical_form(const Graph& g) {
    const std::size_t n = g.order();
    if (n > 8) throw InvalidParameter("graph_canonical_form: n too large for permutation search");
    // Vertices are ordered by an isomorphism invariant (degree, then sorted
    // neighbour degrees); only orders consistent with it are tried.
    std::vector<std::vector<std::size_t>> key(n);
    for (Vertex v = 0; v < n; ++v) {
        key[v].push_back(g.degree(v));
        std::vector<std::size_t> nd;
        for (Vertex w : g.neighbours(v)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        key[v].insert(key[v].end(), nd.begin(), nd.end());
    }
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](Vertex a, Vertex b) { return key[a] != key[b] ? key[a] < key[b] : a < b; });
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && key[perm[j]] == key[perm[i]]) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::string best;
    std::string s(n * (n - 1) / 2, '0');
    // Odometer over the permutations of every block.
    for (;;) {
        std::size_t pos = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s[pos++] = g.adjacent(perm[i], perm[j]) ? '1' : '0';
        if (best.empty() || s > best) best = s;
        std::size_t b = 0;
        for (; b < blocks.size(); ++b) {
            auto first = perm.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
            auto last = perm.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
            if (std::next_permutation(first, last)) break;
        }
        if (b == blocks.size()) break;
    }
    std::string invariant;
    for (Vertex v : perm) invariant += std::to_string(key[v][0]) + ",";
    return std::to_string(n) + ":" + invariant + ":" + best;
}

std::vector<Graph> all_connected_graphs(std::size_t n) {
    if (n == 0 || n > 7) throw InvalidParameter("all_connected_graphs: n must be in [1, 7]");
    // All graphs up to isomorphism, grown one vertex at a time, then filtered.
    std::vector<Graph> level{Graph(1)};
    for (std::size_t m = 2; m <= n; ++m) {
        std::vector<Graph> next;
        std::set<std::string> seen;
        const auto fresh = static_cast<Vertex>(m - 1);
        for (const Graph& g : level) {
            const auto base = g.edges();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
                auto es = base;
                for (Vertex v = 0; v < fresh; ++v)
                    if (mask >> v & 1) es.emplace_back(v, fresh);
                Graph h(m, es);
                if (seen.insert(graph_canonical_form(h)).second) next.push_back(std::move(h));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (auto& g : level)
        if (g.is_connected()) out.push_back(std::move(g));
    return out;
}

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
    if (n == 0) throw InvalidParameter("random_tree: n must be at least 1");
    if (n == 1) return Graph(1);
    if (n == 2) return Graph(2, {Edge(0, 1)});
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    std::vector<Vertex> pruefer(n - 2);
    for (auto& x : pruefer) x = pick(rng);
    std::vector<std::size_t> degree(n, 1);
    for (Vertex x : pruefer) ++degree[x];
    std::set<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<Edge> es;
    for (Vertex x : pruefer) {
        Vertex leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        es.emplace_back(leaf, x);
        if (--degree[x] == 1) leaves.insert(x);
    }
    Vertex a = *leaves.begin();
    Vertex b = *std::next(leaves.begin());
    es.emplace_back(a, b);
    return Graph(n, es);
}

Graph random_bounded_degree_tree(std::size_t n, std::size_t max_degree, std::mt19937_64& rng) {
    if (n == 0) throw InvalidParameter("random_bounded_degree_tree: n must be at least 1");
    if (max_degree < 2 && n > 2) throw InvalidParameter("random_bounded_degree_tree: max_degree too small");
    // Random attachment: each new vertex hangs off a uniformly chosen vertex that still has room.
    std::vector<std::size_t> degree(n, 0);
    std::vector<Vertex> open{0};
    std::vector<Edge> es;
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
        const std::size_t slot = pick(rng);
        const Vertex u = open[slot];
        es.emplace_back(u, v);
        if (++degree[u] == max_degree) {
            open[slot] = open.back();
            open.pop_back();
        }
        ++degree[v];
        if (degree[v] < max_degree) open.push_back(v);
    }
    // Shuffle labels so that vertex 0 is not always the first attachment point.
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& e : es) e = Edge(perm[e.u], perm[e.v]);
    return Graph(n, es);
}

Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
    if (n == 0) throw InvalidParameter("random_connected_graph: n must be at least 1");
    std::bernoulli_distribution coin(p);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Edge> es;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j)
                if (coin(rng)) es.emplace_back(i, j);
        Graph g(n, es);
        if (g.is_connected()) return g;
    }
    // Fallback: overlay a random spanning tree.
    Graph t = random_tree(n, rng);
    std::set<Edge> es;
    for (const Edge& e : t.edges()) es.insert(e);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (coin(rng)) es.emplace(i, j);
    return Graph(n, std::vector<Edge>(es.begin(), es.end()));
}

Graph random_edge_subgraph(const Graph& g, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    std::vector<Edge> keep;
    for (const Edge& e : g.edges())
        if (coin(rng)) keep.push_back(e);
    return g.with_edges(keep);
}

}  // namespace pvc

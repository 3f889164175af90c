#include "pvc/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <random>
#include <set>

#include "pvc/errors.hpp"

namespace pvc {

Graph::Graph(std::size_t n) : adj_(n) {}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n) {
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw InvalidInput("edge endpoint out of range");
        }
        if (e.u == e.v) {
            throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
        }
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
            throw InvalidInput("parallel edge");
        }
    }
    edge_count_ = edges.size();
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& nb : adj_) best = std::max(best, nb.size());
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::is_connected() const {
    if (adj_.empty()) return false;
    std::vector<bool> seen(adj_.size(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : adj_[u]) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == adj_.size();
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
    std::vector<Vertex> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::int64_t> index(order(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) index.at(sorted[i]) = static_cast<std::int64_t>(i);
    std::vector<Edge> es;
    for (const Edge& e : edges()) {
        if (index[e.u] >= 0 && index[e.v] >= 0) {
            es.emplace_back(static_cast<Vertex>(index[e.u]), static_cast<Vertex>(index[e.v]));
        }
    }
    return Graph(sorted.size(), es);
}

Graph Graph::with_edges(const std::vector<Edge>& es) const {
    for (const Edge& e : es) {
        if (e.v >= order() || !adjacent(e.u, e.v)) throw InvalidInput("edge not in host graph");
    }
    return Graph(order(), es);
}

bool Path::is_valid_in(const Graph& g) const {
    if (vertices.empty()) return false;
    std::vector<bool> seen(g.order(), false);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Vertex v = vertices[i];
        if (v >= g.order() || seen[v]) return false;
        seen[v] = true;
        if (i > 0 && !g.adjacent(vertices[i - 1], v)) return false;
    }
    return true;
}

// ---- RootedBinaryTree ------------------------------------------------------

RootedBinaryTree::RootedBinaryTree(Vertex root, std::vector<std::vector<Vertex>> children,
                                   std::vector<bool> main_marks)
    : root_(root), children_(std::move(children)), main_(std::move(main_marks)) {
    const std::size_t n = children_.size();
    if (n == 0) throw InvalidInput("rooted tree must have at least one vertex");
    if (root_ >= n) throw InvalidInput("root out of range");
    if (!main_.empty() && main_.size() != n) throw InvalidInput("main-vertex marks have wrong length");
    parent_.assign(n, std::nullopt);
    for (Vertex v = 0; v < n; ++v) {
        if (children_[v].size() > 2) {
            throw InvalidInput("vertex " + std::to_string(v) + " has more than two children");
        }
        for (Vertex c : children_[v]) {
            if (c >= n) throw InvalidInput("child id out of range");
            if (c == root_) throw InvalidInput("root cannot be a child");
            if (parent_[c]) throw InvalidInput("vertex " + std::to_string(c) + " has two parents");
            parent_[c] = v;
        }
    }
    depth_.assign(n, 0);
    std::size_t reached = 0;
    std::queue<Vertex> q;
    q.push(root_);
    std::vector<bool> seen(n, false);
    seen[root_] = true;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        ++reached;
        for (Vertex c : children_[u]) {
            if (seen[c]) throw InvalidInput("cycle in child lists");
            seen[c] = true;
            depth_[c] = depth_[u] + 1;
            q.push(c);
        }
    }
    if (reached != n) throw InvalidInput("tree is not connected to its root");
}

std::size_t RootedBinaryTree::layers() const {
    return 1 + *std::max_element(depth_.begin(), depth_.end());
}

std::vector<Vertex> RootedBinaryTree::bfs_order() const {
    std::vector<Vertex> order{root_};
    order.reserve(children_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Vertex c : children_[order[i]]) order.push_back(c);
    }
    return order;
}

std::vector<Vertex> RootedBinaryTree::post_order() const {
    auto order = bfs_order();
    std::reverse(order.begin(), order.end());
    return order;
}

bool RootedBinaryTree::is_ancestor(Vertex ancestor, Vertex v) const {
    if (depth_.at(ancestor) > depth_.at(v)) return false;
    while (depth_[v] > depth_[ancestor]) v = *parent_[v];
    return v == ancestor;
}

std::vector<Vertex> RootedBinaryTree::path_up(Vertex v, Vertex ancestor) const {
    if (!is_ancestor(ancestor, v)) throw InvalidInput("path_up: not an ancestor");
    std::vector<Vertex> out{v};
    while (v != ancestor) {
        v = *parent_[v];
        out.push_back(v);
    }
    return out;
}

Graph RootedBinaryTree::to_graph() const {
    std::vector<Edge> es;
    for (Vertex v = 0; v < children_.size(); ++v) {
        for (Vertex c : children_[v]) es.emplace_back(v, c);
    }
    return Graph(children_.size(), es);
}

RootedBinaryTree relabel_bfs(const RootedBinaryTree& tree) {
    const auto order = tree.bfs_order();
    std::vector<Vertex> id(tree.order());
    for (std::size_t i = 0; i < order.size(); ++i) id[order[i]] = static_cast<Vertex>(i);
    std::vector<std::vector<Vertex>> ch(tree.order());
    std::vector<bool> marks;
    if (tree.has_main_marks()) marks.assign(tree.order(), false);
    for (Vertex v = 0; v < tree.order(); ++v) {
        for (Vertex c : tree.children(v)) ch[id[v]].push_back(id[c]);
        if (tree.has_main_marks()) marks[id[v]] = tree.is_main(v);
    }
    return RootedBinaryTree(0, std::move(ch), std::move(marks));
}

RootedBinaryTree root_tree(const Graph& g, Vertex root) {
    if (!g.is_tree()) throw InvalidInput("root_tree: input is not a tree");
    if (root >= g.order()) throw InvalidInput("root_tree: root out of range");
    std::vector<std::vector<Vertex>> ch(g.order());
    std::vector<bool> seen(g.order(), false);
    std::queue<Vertex> q;
    q.push(root);
    seen[root] = true;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbours(u)) {
            if (!seen[w]) {
                seen[w] = true;
                ch[u].push_back(w);
                q.push(w);
            }
        }
    }
    return relabel_bfs(RootedBinaryTree(root, std::move(ch)));
}

RootedBinaryTree root_at_leaf(const Graph& g) {
    if (!g.is_tree()) throw InvalidInput("root_at_leaf: input is not a tree");
    if (g.max_degree() > 3) throw InvalidInput("root_at_leaf: tree has a vertex of degree > 3");
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) <= 1) return root_tree(g, v);
    }
    throw InvalidInput("root_at_leaf: no leaf");
}

// ---- generators ------------------------------------------------------------

Graph make_path(std::size_t n) {
    if (n == 0) throw InvalidParameter("make_path: n must be at least 1");
    std::vector<Edge> es;
    for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

Graph make_cycle(std::size_t n) {
    if (n < 3) throw InvalidParameter("make_cycle: n must be at least 3");
    std::vector<Edge> es;
    for (Vertex i = 0; i < n; ++i) es.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, es);
}

Graph make_star(std::size_t leaves) {
    std::vector<Edge> es;
    for (Vertex i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph(leaves + 1, es);
}

Graph make_complete_graph(std::size_t n) {
    if (n == 0) throw InvalidParameter("make_complete_graph: n must be at least 1");
    std::vector<Edge> es;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, es);
}

RootedBinaryTree make_complete_binary_tree(std::size_t d) {
    if (d == 0) throw InvalidParameter("make_complete_binary_tree: d must be at least 1");
    if (d > 30) throw InvalidParameter("make_complete_binary_tree: d too large");
    const std::size_t n = (std::size_t{1} << d) - 1;
    std::vector<std::vector<Vertex>> ch(n);
    for (std::size_t i = 0; 2 * i + 2 < n; ++i) {
        ch[i] = {static_cast<Vertex>(2 * i + 1), static_cast<Vertex>(2 * i + 2)};
    }
    return RootedBinaryTree(0, std::move(ch));
}

Graph make_t33_graph() {
    std::vector<Edge> es;
    for (Vertex base : {Vertex{0}, Vertex{7}}) {
        for (Vertex i = 0; i < 3; ++i) {
            es.emplace_back(base + i, base + 2 * i + 1);
            es.emplace_back(base + i, base + 2 * i + 2);
        }
    }
    es.emplace_back(0, 7);
    return Graph(14, es);
}

RootedBinaryTree make_t33() {
    // Vertex 3 is the first leaf of copy 1.
    return root_tree(make_t33_graph(), 3);
}

RootedBinaryTree subdivide(const RootedBinaryTree& tree, const EdgeLengths& lengths) {
    if (lengths.size() != tree.order() && !(tree.order() == 1 && lengths.empty())) {
        throw InvalidParameter("subdivide: need one length per vertex (indexed by child)");
    }
    std::vector<std::vector<Vertex>> ch(tree.order());
    std::vector<bool> marks(tree.order(), true);
    for (Vertex v : tree.bfs_order()) {
        for (Vertex c : tree.children(v)) {
            const std::size_t len = lengths[c];
            if (len == 0) throw InvalidParameter("subdivide: edge length must be at least 1");
            Vertex prev = v;
            for (std::size_t i = 1; i < len; ++i) {
                const auto mid = static_cast<Vertex>(ch.size());
                ch.emplace_back();
                marks.push_back(false);
                ch[prev].push_back(mid);
                prev = mid;
            }
            ch[prev].push_back(c);
        }
    }
    return relabel_bfs(RootedBinaryTree(tree.root(), std::move(ch), std::move(marks)));
}

RootedBinaryTree subdivide_random(const RootedBinaryTree& tree, std::uint64_t seed,
                                  std::size_t max_length) {
    if (max_length == 0) throw InvalidParameter("subdivide_random: max_length must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dist(1, max_length);
    EdgeLengths lengths(tree.order(), 1);
    for (Vertex v = 0; v < tree.order(); ++v) {
        if (v != tree.root()) lengths[v] = dist(rng);
    }
    return subdivide(tree, lengths);
}

std::vector<Vertex> main_vertices(const RootedBinaryTree& subdivided) {
    if (!subdivided.has_main_marks()) throw InvalidInput("main_vertices: tree carries no main-vertex marks");
    std::vector<Vertex> out;
    for (Vertex v = 0; v < subdivided.order(); ++v) {
        if (subdivided.is_main(v)) out.push_back(v);
    }
    return out;
}

// ---- structural helpers ----------------------------------------------------

Graph contract_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.adjacent(u, v)) throw InvalidInput("contract_edge: vertices are not adjacent");
    const Vertex keep = std::min(u, v);
    const Vertex drop = std::max(u, v);
    auto map = [&](Vertex w) -> Vertex {
        if (w == drop) return keep;
        return w > drop ? w - 1 : w;
    };
    std::set<Edge> es;
    for (const Edge& e : g.edges()) {
        Vertex a = map(e.u);
        Vertex b = map(e.v);
        if (a != b) es.emplace(a, b);
    }
    return Graph(g.order() - 1, std::vector<Edge>(es.begin(), es.end()));
}

namespace {

std::string ahu_encode(const Graph& t, Vertex v, Vertex from) {
    std::vector<std::string> parts;
    for (Vertex w : t.neighbours(v)) {
        if (w != from) parts.push_back(ahu_encode(t, w, v));
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
}

std::vector<Vertex> tree_centres(const Graph& t) {
    const std::size_t n = t.order();
    if (n <= 2) {
        std::vector<Vertex> all;
        for (Vertex v = 0; v < n; ++v) all.push_back(v);
        return all;
    }
    std::vector<std::size_t> deg(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex leaf : layer) {
            for (Vertex w : t.neighbours(leaf)) {
                if (--deg[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
    if (!tree.is_tree()) throw InvalidInput("tree_canonical_form: input is not a tree");
    constexpr Vertex kNone = static_cast<Vertex>(-1);
    std::string best;
    for (Vertex c : tree_centres(tree)) {
        std::string enc = ahu_encode(tree, c, kNone);
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

bool trees_isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && tree_canonical_form(a) == tree_canonical_form(b);
}

std::size_t tree_longest_path(const Graph& tree) {
    if (!tree.is_tree()) throw InvalidInput("tree_longest_path: input is not a tree");
    auto farthest = [&](Vertex s) {
        std::vector<std::size_t> dist(tree.order(), 0);
        std::vector<bool> seen(tree.order(), false);
        std::queue<Vertex> q;
        q.push(s);
        seen[s] = true;
        Vertex last = s;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            last = u;
            for (Vertex w : tree.neighbours(u)) {
                if (!seen[w]) {
                    seen[w] = true;
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return std::pair{last, dist[last]};
    };
    auto [end, ignored] = farthest(0);
    (void)ignored;
    return farthest(end).second + 1;
}

}  // namespace pvc

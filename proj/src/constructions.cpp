#include "pvc/constructions.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "pvc/errors.hpp"

namespace pvc {

std::size_t floor_log2(std::size_t n) {
    if (n == 0) throw InvalidParameter("floor_log2(0)");
    return std::bit_width(n) - 1;
}

std::size_t ceil_log2(std::size_t n) {
    if (n == 0) throw InvalidParameter("ceil_log2(0)");
    return n == 1 ? 0 : std::bit_width(n - 1);
}

ColouringWithBound colour_path(std::size_t n) {
    if (n == 0) throw InvalidParameter("colour_path: n must be at least 1");
    std::vector<Colour> colours(n);
    for (std::size_t i = 1; i <= n; ++i) colours[i - 1] = static_cast<Colour>(std::countr_zero(i) + 1);
    const std::size_t k = floor_log2(n) + 1;
    return {Colouring(k, std::move(colours)), k};
}

ColouringWithBound colour_cycle(std::size_t n) {
    if (n < 3) throw InvalidParameter("colour_cycle: n must be at least 3");
    auto base = colour_path(n - 1);
    std::vector<Colour> colours = base.colouring.colours();
    const auto fresh = static_cast<Colour>(floor_log2(n - 1) + 2);
    colours.push_back(fresh);
    return {Colouring(fresh, std::move(colours)), fresh};
}

namespace {

/// Iterative centroid decomposition; `level[v]` receives the recursion depth (1-based).
/// With `rng` set, a uniformly random vertex of each component replaces the centroid.
void centroid_levels(const Graph& t, std::vector<Colour>& level, std::mt19937_64* rng = nullptr) {
    const std::size_t n = t.order();
    std::vector<bool> removed(n, false);
    std::vector<std::size_t> subtree(n, 0);
    std::vector<Vertex> parent(n, 0);

    struct Task {
        Vertex any;
        Colour depth;
    };
    std::vector<Task> work{{0, 1}};
    std::vector<Vertex> order;
    while (!work.empty()) {
        const Task task = work.back();
        work.pop_back();

        // Collect the component containing task.any in BFS order.
        order.assign(1, task.any);
        parent[task.any] = task.any;
        for (std::size_t i = 0; i < order.size(); ++i) {
            const Vertex u = order[i];
            for (Vertex w : t.neighbours(u)) {
                if (!removed[w] && w != parent[u]) {
                    parent[w] = u;
                    order.push_back(w);
                }
            }
        }
        const std::size_t size = order.size();
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            subtree[*it] = 1;
            for (Vertex w : t.neighbours(*it))
                if (!removed[w] && w != parent[*it]) subtree[*it] += subtree[w];
        }
        Vertex centroid = order.front();
        if (rng) {
            std::uniform_int_distribution<std::size_t> pick(0, size - 1);
            centroid = order[pick(*rng)];
        } else {
            std::size_t best = size + 1;
            for (Vertex u : order) {
                std::size_t worst = size - subtree[u];
                for (Vertex w : t.neighbours(u))
                    if (!removed[w] && w != parent[u]) worst = std::max(worst, subtree[w]);
                if (worst < best || (worst == best && u < centroid)) {
                    best = worst;
                    centroid = u;
                }
            }
        }
        level[centroid] = task.depth;
        removed[centroid] = true;
        // Reverse neighbour order keeps the stack processing components by ascending id.
        const auto nb = t.neighbours(centroid);
        for (auto it = nb.rbegin(); it != nb.rend(); ++it)
            if (!removed[*it]) work.push_back({*it, task.depth + 1});
    }
}

}  // namespace

ColouringWithBound colour_tree_centroid(const Graph& tree) {
    if (!tree.is_tree()) throw InvalidInput("colour_tree_centroid: input is not a tree");
    std::vector<Colour> level(tree.order(), 0);
    centroid_levels(tree, level);
    const Colour k = *std::max_element(level.begin(), level.end());
    return {Colouring(k, std::move(level)), floor_log2(tree.order()) + 1};
}

ColouringWithBound colour_tree_random_elimination(const Graph& tree, std::mt19937_64& rng) {
    if (!tree.is_tree()) throw InvalidInput("colour_tree_random_elimination: input is not a tree");
    std::vector<Colour> level(tree.order(), 0);
    centroid_levels(tree, level, &rng);
    const Colour k = *std::max_element(level.begin(), level.end());
    return {Colouring(k, std::move(level)), tree.order()};
}

bool is_unique_maximum_on_tree(const Graph& tree, const Colouring& colouring) {
    if (!tree.is_tree()) throw InvalidInput("is_unique_maximum_on_tree: input is not a tree");
    require_compatible(tree, colouring);
    const std::size_t n = tree.order();
    // For every start vertex, walk the tree tracking (max colour, multiplicity) along the path.
    struct State {
        Vertex v;
        Vertex from;
        Colour max;
        std::size_t count;
    };
    for (Vertex s = 0; s < n; ++s) {
        std::vector<State> stack{{s, s, colouring[s], 1}};
        while (!stack.empty()) {
            const State st = stack.back();
            stack.pop_back();
            if (st.count != 1) return false;
            for (Vertex w : tree.neighbours(st.v)) {
                if (w == st.from) continue;
                const Colour c = colouring[w];
                State next{w, st.v, st.max, st.count};
                if (c > st.max) {
                    next.max = c;
                    next.count = 1;
                } else if (c == st.max) {
                    ++next.count;
                }
                stack.push_back(next);
            }
        }
    }
    return true;
}

}  // namespace pvc

#include "pvc/extremal.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "pvc/errors.hpp"

namespace pvc {

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace {

BigInt pow2_minus_one(std::size_t e) { return (BigInt(1) << e) - 1; }

BigInt extremal_rec(std::size_t l, std::size_t d, std::map<std::pair<std::size_t, std::size_t>, BigInt>& memo) {
    if (d == 0) return 0;
    if (d >= l) return pow2_minus_one(l);
    const auto key = std::make_pair(l, d);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt v = extremal_rec(l - 1, d - 1, memo) + extremal_rec(l - 1, d, memo) + 1;
    memo.emplace(key, v);
    return v;
}

}  // namespace

BigInt extremal_count(std::size_t l, std::size_t d) {
    std::map<std::pair<std::size_t, std::size_t>, BigInt> memo;
    return extremal_rec(l, d, memo);
}

BigInt extremal_count_closed(std::size_t l, std::size_t d) {
    if (l <= d) throw DomainError("extremal_count_closed requires l > d");
    BigInt sum = 0;
    for (std::size_t i = 0; i <= d; ++i) sum += pow2_minus_one(i) * binomial(l - i - 1, l - d - 1);
    return sum + binomial(l, d) - 1;
}

ExtremalTable::ExtremalTable(std::size_t l_max) : l_max_(l_max), entries_((l_max + 1) * (l_max + 1)) {
    for (std::size_t l = 0; l <= l_max; ++l) {
        for (std::size_t d = 0; d <= l_max; ++d) {
            ExtremalEntry& e = entries_[l * (l_max + 1) + d];
            if (d == 0) {
                e.value = 0;
                e.derivation = Derivation::base_zero;
            } else if (d >= l) {
                e.value = pow2_minus_one(l);
                e.derivation = Derivation::base_complete;
            } else {
                e.value = at(l - 1, d - 1).value + at(l - 1, d).value + 1;
                e.derivation = Derivation::recursion;
            }
            if (l > d) e.closed = extremal_count_closed(l, d);
        }
    }
}

const ExtremalEntry& ExtremalTable::at(std::size_t l, std::size_t d) const {
    if (l > l_max_ || d > l_max_) throw InvalidParameter("ExtremalTable: index beyond l_max");
    return entries_[l * (l_max_ + 1) + d];
}

bool ExtremalTable::consistent() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const ExtremalEntry& e) { return !e.closed || *e.closed == e.value; });
}

// ---- extremal trees --------------------------------------------------------

namespace {

/// Appends the tree for (l, d) to `children`; returns its root or nullopt if empty.
std::optional<Vertex> grow(std::size_t l, std::size_t d, std::vector<std::vector<Vertex>>& children) {
    if (d == 0 || l == 0) return std::nullopt;
    const auto root = static_cast<Vertex>(children.size());
    children.emplace_back();
    // For d >= l both calls yield B_{l-1}, so the complete case needs no branch.
    for (std::size_t sub_d : {d, d - 1}) {
        if (auto c = grow(l - 1, sub_d, children)) children[root].push_back(*c);
    }
    return root;
}

}  // namespace

std::optional<RootedBinaryTree> extremal_tree(std::size_t l, std::size_t d) {
    std::vector<std::vector<Vertex>> children;
    const auto root = grow(l, d, children);
    if (!root) return std::nullopt;
    return relabel_bfs(RootedBinaryTree(*root, std::move(children)));
}

std::size_t max_complete_subdivision(const RootedBinaryTree& tree) {
    std::vector<std::size_t> value(tree.order(), 0);
    for (Vertex v : tree.post_order()) {
        const auto ch = tree.children(v);
        if (ch.empty()) {
            value[v] = 1;
        } else if (ch.size() == 1) {
            value[v] = value[ch[0]];
        } else {
            const std::size_t a = std::max(value[ch[0]], value[ch[1]]);
            const std::size_t b = std::min(value[ch[0]], value[ch[1]]);
            value[v] = a > b ? a : a + 1;
        }
    }
    return value[tree.root()];
}

std::size_t max_complete_subdivision(const std::optional<RootedBinaryTree>& tree) {
    return tree ? max_complete_subdivision(*tree) : 0;
}

// ---- brute force -----------------------------------------------------------

namespace {

constexpr int kEmpty = -1;

struct Shape {
    int left = kEmpty;
    int right = kEmpty;
};

}  // namespace

BigInt ordered_tree_count(std::size_t l) {
    BigInt t = 1;
    for (std::size_t i = 0; i < l; ++i) t = 1 + t * t;
    return t;
}

std::size_t brute_force_extremal(std::size_t l, std::size_t d, bool allow_large) {
    if (l > kBruteForceExtremalMaxLayers && !allow_large) {
        throw InvalidParameter("brute_force_extremal: l > 5 enumerates too many trees");
    }
    // levels[i] holds every non-empty ordered tree with at most i layers, as a pair
    // of subtrees drawn from levels[i-1] (kEmpty for a missing child).
    std::vector<std::vector<Shape>> levels(l + 1);
    for (std::size_t i = 1; i <= l; ++i) {
        const int below = static_cast<int>(levels[i - 1].size());
        levels[i].reserve(static_cast<std::size_t>(below + 1) * (below + 1));
        for (int a = kEmpty; a < below; ++a)
            for (int b = kEmpty; b < below; ++b) levels[i].push_back({a, b});
    }

    std::vector<std::vector<Vertex>> children;
    const std::function<Vertex(std::size_t, int)> build = [&](std::size_t level, int id) -> Vertex {
        const auto v = static_cast<Vertex>(children.size());
        children.emplace_back();
        const Shape s = levels[level][static_cast<std::size_t>(id)];
        for (int c : {s.left, s.right}) {
            if (c == kEmpty) continue;
            const Vertex w = build(level - 1, c);
            children[v].push_back(w);
        }
        return v;
    };

    const std::size_t target = d + 1;
    std::size_t best = 0;
    std::vector<std::vector<char>> anywhere;
    for (std::size_t id = 0; id < levels[l].size(); ++id) {
        children.clear();
        build(l, static_cast<int>(id));
        const std::size_t n = children.size();
        if (n <= best) continue;
        // anywhere[v][s]: the subtree of v has a compatible subdivision of B_s rooted
        // somewhere in it. Rooted at v means s = 1, or two children each of whose
        // subtrees has one of B_{s-1}. Children carry larger ids, so go backwards.
        anywhere.assign(n, std::vector<char>(target + 1, 0));
        for (std::size_t v = n; v-- > 0;) {
            for (std::size_t s = 1; s <= target; ++s) {
                bool rooted = s == 1;
                const auto& ch = children[v];
                if (!rooted && ch.size() == 2) rooted = anywhere[ch[0]][s - 1] && anywhere[ch[1]][s - 1];
                bool below = false;
                for (Vertex c : ch) below = below || anywhere[c][s];
                anywhere[v][s] = rooted || below;
            }
        }
        if (!anywhere[0][target]) best = n;
    }
    return best;
}

std::size_t binary_tree_lower_bound(std::size_t n) {
    if (n == 0) throw InvalidParameter("binary_tree_lower_bound: n must be at least 1");
    for (std::size_t b = 1;; ++b) {
        const std::size_t cube = b * b * b;
        if (cube >= 64 || (std::size_t{1} << cube) > n) return b;
    }
}

}  // namespace pvc

#include "pvc/solver.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "pvc/constructions.hpp"
#include "pvc/errors.hpp"

namespace pvc {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxSolverColours = 64;

struct Timeout {};

class ExactSearch {
public:
    ExactSearch(const Graph& g, std::optional<std::chrono::steady_clock::time_point> deadline)
        : g_(g), tree_(g.is_tree()), deadline_(deadline), colour_(g.order(), 0) {
        order_.resize(g.order());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        if (!tree_ && g.order() > 64) throw InvalidInput("general-graph solver supports at most 64 vertices");
    }

    /// Returns the first valid canonical colouring with at most k colours, if any.
    std::optional<std::vector<Colour>> try_k(std::size_t k) {
        k_ = k;
        std::fill(colour_.begin(), colour_.end(), 0);
        if (assign(0, 0)) return colour_;
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool assign(std::size_t i, Colour max_used) {
        if (i == order_.size()) return true;
        if ((++nodes_ & 0x3ff) == 0 && deadline_ && std::chrono::steady_clock::now() > *deadline_) throw Timeout{};
        const Vertex v = order_[i];
        const Colour limit = static_cast<Colour>(std::min<std::size_t>(k_, max_used + 1));
        for (Colour c = 1; c <= limit; ++c) {
            colour_[v] = c;
            const bool ok = tree_ ? no_new_parity_path_tree(v) : no_new_parity_path_general(v);
            if (ok && assign(i + 1, std::max(max_used, c))) return true;
        }
        colour_[v] = 0;
        return false;
    }

    static Mask bit(Colour c) { return Mask{1} << (c - 1); }

    // Forest case: every path through v splits into at most two arms hanging off
    // distinct neighbours. Arm vectors exclude v itself.
    bool no_new_parity_path_tree(Vertex v) {
        const Mask own = bit(colour_[v]);
        previous_.clear();
        for (Vertex a : g_.neighbours(v)) {
            if (!colour_[a]) continue;
            branch_.clear();
            stack_.clear();
            stack_.push_back({a, v, bit(colour_[a])});
            while (!stack_.empty()) {
                const auto [x, from, mask] = stack_.back();
                stack_.pop_back();
                if (mask == own) return false;  // path v..x
                branch_.push_back(mask);
                for (Vertex w : g_.neighbours(x)) {
                    if (w != from && colour_[w]) stack_.push_back({w, x, mask ^ bit(colour_[w])});
                }
            }
            for (Mask m : branch_) {
                if (std::binary_search(previous_.begin(), previous_.end(), m ^ own)) return false;
            }
            previous_.insert(previous_.end(), branch_.begin(), branch_.end());
            std::sort(previous_.begin(), previous_.end());
        }
        return true;
    }

    // General case: enumerate simple arms from v through coloured vertices, then
    // look for one arm, or two vertex-disjoint arms, closing a zero vector.
    bool no_new_parity_path_general(Vertex v) {
        const Mask own = bit(colour_[v]);
        arms_.clear();
        root_ = v;
        arm_dfs(v, Mask{1} << v, 0);
        by_colour_.clear();
        for (const auto& [vertices, colours] : arms_) {
            if (colours == own) return false;
            auto it = by_colour_.find(colours ^ own);
            if (it != by_colour_.end()) {
                for (Mask other : it->second)
                    if ((other & vertices) == 0) return false;
            }
            by_colour_[colours].push_back(vertices);
        }
        return true;
    }

    void arm_dfs(Vertex x, Mask visited, Mask colours) {
        for (Vertex w : g_.neighbours(x)) {
            if (!colour_[w] || (visited >> w & 1)) continue;
            const Mask vis = visited | (Mask{1} << w);
            const Mask col = colours ^ bit(colour_[w]);
            arms_.push_back({vis & ~(Mask{1} << root_), col});
            arm_dfs(w, vis, col);
        }
    }

    struct Frame {
        Vertex x;
        Vertex from;
        Mask mask;
    };

    const Graph& g_;
    bool tree_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::vector<Vertex> order_;
    std::vector<Colour> colour_;
    std::size_t k_ = 0;
    std::uint64_t nodes_ = 0;
    Vertex root_ = 0;
    std::vector<Mask> previous_;
    std::vector<Mask> branch_;
    std::vector<Frame> stack_;
    std::vector<std::pair<Mask, Mask>> arms_;
    std::unordered_map<Mask, std::vector<Mask>> by_colour_;
};

void require_solvable(const Graph& g) {
    if (g.order() == 0) throw InvalidInput("solver: empty graph");
    if (!g.is_connected()) throw InvalidInput("solver: graph is disconnected; solve each component separately");
}

}  // namespace

ChromaticResult chromatic_number(const Graph& g, const SolverOptions& options) {
    require_solvable(g);
    const auto start = std::chrono::steady_clock::now();
    std::optional<std::chrono::steady_clock::time_point> deadline;
    if (options.time_budget_seconds) {
        deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(*options.time_budget_seconds));
    }

    ChromaticResult result;
    ExactSearch search(g, deadline);
    std::size_t k = 1;
    try {
        for (;; ++k) {
            if (k > kMaxSolverColours) throw InternalError("solver: colour count exceeds 64");
            if (auto found = search.try_k(k)) {
                result.status = SolveStatus::exact;
                result.chi = result.lo = result.hi = k;
                result.witness = Colouring(k, std::move(*found));
                break;
            }
        }
    } catch (const Timeout&) {
        result.status = SolveStatus::bounds;
        result.lo = result.chi = k;
        if (g.is_tree()) {
            auto upper = colour_tree_centroid(g);
            result.hi = upper.colouring.k();
            result.witness = std::move(upper.colouring);
        } else {
            std::vector<Colour> distinct(g.order());
            std::iota(distinct.begin(), distinct.end(), Colour{1});
            result.hi = g.order();
            result.witness = Colouring(g.order(), std::move(distinct));
        }
    }
    result.nodes = search.nodes();
    result.wall_time = std::chrono::steady_clock::now() - start;
    if (result.status == SolveStatus::exact && !is_valid_colouring(g, result.witness)) {
        throw InternalError("solver produced an invalid witness");
    }
    return result;
}

std::optional<ChromaticResult> brute_force_chromatic(const Graph& g, std::size_t k_max) {
    if (g.order() == 0) throw InvalidInput("brute_force_chromatic: empty graph");
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = g.order();
    std::uint64_t tested = 0;
    std::vector<Colour> rgs(n, 0);

    for (std::size_t k = 1; k <= k_max && k <= n; ++k) {
        std::optional<std::vector<Colour>> hit;
        // Restricted growth strings with maximum exactly k, in lexicographic order.
        auto rec = [&](auto&& self, std::size_t i, Colour max_so_far) -> bool {
            if (max_so_far + (n - i) < k) return false;
            if (i == n) {
                if (max_so_far != k) return false;
                ++tested;
                Colouring c(k, rgs);
                const VerifyResult r = is_parity_vertex_colouring(g, c);
                if (r.verdict == Verdict::indeterminate) throw InternalError("oracle verification budget exhausted");
                if (r.verdict == Verdict::valid) {
                    hit = rgs;
                    return true;
                }
                return false;
            }
            const Colour top = static_cast<Colour>(std::min<std::size_t>(k, max_so_far + 1));
            for (Colour c = 1; c <= top; ++c) {
                rgs[i] = c;
                if (self(self, i + 1, std::max(max_so_far, c))) return true;
            }
            return false;
        };
        if (rec(rec, 0, 0)) {
            ChromaticResult result;
            result.status = SolveStatus::exact;
            result.chi = result.lo = result.hi = k;
            result.witness = Colouring(k, std::move(*hit));
            result.nodes = tested;
            result.wall_time = std::chrono::steady_clock::now() - start;
            return result;
        }
    }
    return std::nullopt;
}

}  // namespace pvc

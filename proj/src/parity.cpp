#include "pvc/parity.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>

#include "pvc/errors.hpp"

namespace pvc {

Colouring::Colouring(std::size_t k, std::vector<Colour> colours) : k_(k), colours_(std::move(colours)) {
    if (k_ == 0) throw InvalidParameter("colouring needs k >= 1");
    for (std::size_t v = 0; v < colours_.size(); ++v) {
        if (colours_[v] < 1 || colours_[v] > k_) {
            throw InvalidInput("vertex " + std::to_string(v) + " has colour " + std::to_string(colours_[v]) +
                               " outside 1.." + std::to_string(k_));
        }
    }
}

std::size_t Colouring::used() const {
    std::set<Colour> s(colours_.begin(), colours_.end());
    return s.size();
}

Colouring Colouring::restrict_to(const std::vector<Vertex>& vertices) const {
    std::vector<Colour> out;
    out.reserve(vertices.size());
    for (Vertex v : vertices) out.push_back(colours_.at(v));
    return Colouring(k_, std::move(out));
}

ParityVector& ParityVector::operator^=(const ParityVector& other) {
    if (other.k_ != k_) throw InvalidInput("parity vectors of different length");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

std::vector<int> ParityVector::bits() const {
    std::vector<int> out(k_);
    for (std::size_t i = 0; i < k_; ++i) out[i] = test(static_cast<Colour>(i + 1)) ? 1 : 0;
    return out;
}

std::string ParityVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < k_; ++i) {
        if (i) s += ',';
        s += test(static_cast<Colour>(i + 1)) ? '1' : '0';
    }
    return s + ")";
}

std::size_t ParityVector::hash() const noexcept {
    std::size_t h = k_ * 0x9e3779b97f4a7c15ULL;
    for (Word w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
}

ParityVector parity_vector(const Colouring& colouring, const std::vector<Vertex>& vertices) {
    ParityVector pv(colouring.k());
    for (Vertex v : vertices) {
        if (v >= colouring.size()) throw InvalidInput("vertex " + std::to_string(v) + " is not coloured");
        pv.flip(colouring[v]);
    }
    return pv;
}

bool ParityPathCertificate::verify(const Graph& g, const Colouring& colouring) const {
    if (!path.is_valid_in(g)) return false;
    if (path.length() % 2 != 0) return false;
    const ParityVector recomputed = parity_vector(colouring, path.vertices);
    return recomputed.is_zero() && recomputed == vector;
}

void require_compatible(const Graph& g, const Colouring& colouring) {
    if (colouring.size() != g.order()) {
        throw InvalidInput("colouring covers " + std::to_string(colouring.size()) + " vertices, graph has " +
                           std::to_string(g.order()));
    }
}

// ---- tree verifier ---------------------------------------------------------

namespace {

class LcaIndex {
public:
    LcaIndex(const std::vector<Vertex>& parent, const std::vector<std::size_t>& depth, Vertex root)
        : depth_(depth) {
        const std::size_t n = parent.size();
        levels_ = 1;
        while ((std::size_t{1} << levels_) < n) ++levels_;
        up_.assign(levels_, std::vector<Vertex>(n));
        for (Vertex v = 0; v < n; ++v) up_[0][v] = v == root ? root : parent[v];
        for (std::size_t j = 1; j < levels_; ++j)
            for (Vertex v = 0; v < n; ++v) up_[j][v] = up_[j - 1][up_[j - 1][v]];
    }

    Vertex lca(Vertex a, Vertex b) const {
        if (depth_[a] < depth_[b]) std::swap(a, b);
        std::size_t diff = depth_[a] - depth_[b];
        for (std::size_t j = 0; diff; ++j, diff >>= 1)
            if (diff & 1) a = up_[j][a];
        if (a == b) return a;
        for (std::size_t j = levels_; j-- > 0;) {
            if (up_[j][a] != up_[j][b]) {
                a = up_[j][a];
                b = up_[j][b];
            }
        }
        return up_[0][a];
    }

private:
    const std::vector<std::size_t>& depth_;
    std::size_t levels_;
    std::vector<std::vector<Vertex>> up_;
};

}  // namespace

std::optional<ParityPathCertificate> find_parity_path_tree(const Graph& tree, const Colouring& colouring) {
    if (!tree.is_tree()) throw InvalidInput("find_parity_path_tree: input is not a tree");
    require_compatible(tree, colouring);
    const std::size_t n = tree.order();
    const Vertex root = 0;

    std::vector<Vertex> parent(n, root);
    std::vector<std::size_t> depth(n, 0);
    std::vector<ParityVector> prefix(n, ParityVector(colouring.k()));
    std::vector<bool> seen(n, false);
    std::queue<Vertex> q;
    q.push(root);
    seen[root] = true;
    prefix[root].flip(colouring[root]);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : tree.neighbours(u)) {
            if (seen[w]) continue;
            seen[w] = true;
            parent[w] = u;
            depth[w] = depth[u] + 1;
            prefix[w] = prefix[u];
            prefix[w].flip(colouring[w]);
            q.push(w);
        }
    }
    const LcaIndex index(parent, depth, root);

    const std::size_t words = prefix[root].words().size();
    for (Vertex u = 0; u < n; ++u) {
        const auto& pu = prefix[u].words();
        for (Vertex v = u + 1; v < n; ++v) {
            const Vertex l = index.lca(u, v);
            // pv(u..v) = pv(root..u) ^ pv(root..v) ^ pv({lca})
            if ((depth[u] + depth[v] - 2 * depth[l] + 1) % 2 != 0) continue;
            const auto& pvw = prefix[v].words();
            const std::size_t bit = colouring[l] - 1;
            bool zero = true;
            for (std::size_t w = 0; w < words && zero; ++w) {
                ParityVector::Word x = pu[w] ^ pvw[w];
                if (w == bit / ParityVector::kWordBits) x ^= ParityVector::Word{1} << (bit % ParityVector::kWordBits);
                zero = x == 0;
            }
            if (!zero) continue;

            ParityPathCertificate cert;
            for (Vertex x = u; x != l; x = parent[x]) cert.path.vertices.push_back(x);
            cert.path.vertices.push_back(l);
            std::vector<Vertex> tail;
            for (Vertex x = v; x != l; x = parent[x]) tail.push_back(x);
            cert.path.vertices.insert(cert.path.vertices.end(), tail.rbegin(), tail.rend());
            cert.vector = parity_vector(colouring, cert.path.vertices);
            return cert;
        }
    }
    return std::nullopt;
}

// ---- general verifier ------------------------------------------------------

SearchBudget SearchBudget::with_seconds(double seconds) {
    SearchBudget b;
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(seconds));
    return b;
}

namespace {

class PathSearch {
public:
    PathSearch(const Graph& g, const Colouring& c, const SearchBudget& budget, const SearchOptions& options)
        : g_(g), colouring_(c), budget_(budget), options_(options), on_path_(g.order(), false),
          stamp_(g.order(), 0), colour_seen_(c.k() + 1, 0), pv_(c.k()) {}

    SearchResult run() {
        SearchResult result;
        for (Vertex s = 0; s < g_.order() && !stop_; ++s) {
            start_ = s;
            path_.assign(1, s);
            on_path_[s] = true;
            pv_.flip(colouring_[s]);
            extend(s);
            pv_.flip(colouring_[s]);
            on_path_[s] = false;
        }
        result.expansions = expansions_;
        if (found_) {
            result.status = SearchStatus::found;
            result.certificate = std::move(found_);
        } else {
            result.status = exhausted_ ? SearchStatus::budget_exhausted : SearchStatus::none;
        }
        return result;
    }

private:
    void extend(Vertex u) {
        if (++expansions_ > budget_.max_expansions ||
            (budget_.deadline && (expansions_ & 0xfff) == 0 && std::chrono::steady_clock::now() > *budget_.deadline)) {
            exhausted_ = true;
            stop_ = true;
            return;
        }
        if (path_.size() >= 2 && u > start_ && pv_.is_zero()) {
            found_ = ParityPathCertificate{Path{path_}, pv_};
            stop_ = true;
            return;
        }
        if (options_.prune_unreachable_colours && !pv_.is_zero() && !odd_colours_reachable(u)) return;
        for (Vertex w : g_.neighbours(u)) {
            if (on_path_[w]) continue;
            on_path_[w] = true;
            path_.push_back(w);
            pv_.flip(colouring_[w]);
            extend(w);
            pv_.flip(colouring_[w]);
            path_.pop_back();
            on_path_[w] = false;
            if (stop_) return;
        }
    }

    bool odd_colours_reachable(Vertex u) {
        ++epoch_;
        queue_.clear();
        for (Vertex w : g_.neighbours(u)) {
            if (!on_path_[w] && stamp_[w] != epoch_) {
                stamp_[w] = epoch_;
                queue_.push_back(w);
            }
        }
        for (std::size_t i = 0; i < queue_.size(); ++i) {
            const Vertex x = queue_[i];
            colour_seen_[colouring_[x]] = epoch_;
            for (Vertex w : g_.neighbours(x)) {
                if (!on_path_[w] && stamp_[w] != epoch_) {
                    stamp_[w] = epoch_;
                    queue_.push_back(w);
                }
            }
        }
        const auto& words = pv_.words();
        for (std::size_t wi = 0; wi < words.size(); ++wi) {
            for (ParityVector::Word w = words[wi]; w; w &= w - 1) {
                const auto c = static_cast<Colour>(wi * ParityVector::kWordBits + std::countr_zero(w) + 1);
                if (colour_seen_[c] != epoch_) return false;
            }
        }
        return true;
    }

    const Graph& g_;
    const Colouring& colouring_;
    const SearchBudget& budget_;
    const SearchOptions& options_;
    std::vector<bool> on_path_;
    std::vector<std::uint64_t> stamp_;
    std::vector<std::uint64_t> colour_seen_;
    std::vector<Vertex> queue_;
    std::uint64_t epoch_ = 0;
    std::vector<Vertex> path_;
    ParityVector pv_;
    Vertex start_ = 0;
    std::uint64_t expansions_ = 0;
    bool stop_ = false;
    bool exhausted_ = false;
    std::optional<ParityPathCertificate> found_;
};

}  // namespace

SearchResult find_parity_path_general(const Graph& g, const Colouring& colouring, const SearchBudget& budget,
                                      const SearchOptions& options) {
    require_compatible(g, colouring);
    return PathSearch(g, colouring, budget, options).run();
}

VerifyResult is_parity_vertex_colouring(const Graph& g, const Colouring& colouring, const SearchBudget& budget,
                                        const SearchOptions& options) {
    require_compatible(g, colouring);
    VerifyResult out;
    if (g.is_tree()) {
        out.certificate = find_parity_path_tree(g, colouring);
        out.verdict = out.certificate ? Verdict::invalid : Verdict::valid;
        return out;
    }
    SearchResult r = find_parity_path_general(g, colouring, budget, options);
    out.expansions = r.expansions;
    switch (r.status) {
        case SearchStatus::found:
            out.verdict = Verdict::invalid;
            out.certificate = std::move(r.certificate);
            break;
        case SearchStatus::none:
            out.verdict = Verdict::valid;
            break;
        case SearchStatus::budget_exhausted:
            out.verdict = Verdict::indeterminate;
            break;
    }
    return out;
}

bool is_valid_colouring(const Graph& g, const Colouring& colouring) {
    const VerifyResult r = is_parity_vertex_colouring(g, colouring);
    if (r.verdict == Verdict::indeterminate) throw InternalError("verification budget exhausted");
    return r.verdict == Verdict::valid;
}

}  // namespace pvc

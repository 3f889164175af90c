#include "pvc/safflower.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "pvc/errors.hpp"

namespace pvc {

namespace {

void require_valid(const RootedBinaryTree& tree, const Colouring& colouring) {
    const Graph g = tree.to_graph();
    require_compatible(g, colouring);
    if (find_parity_path_tree(g, colouring)) {
        throw InvalidInput("colouring is not a parity vertex colouring of the tree");
    }
}

Vertex lowest_common_ancestor(const RootedBinaryTree& tree, Vertex a, Vertex b) {
    while (tree.depth(a) > tree.depth(b)) a = *tree.parent(a);
    while (tree.depth(b) > tree.depth(a)) b = *tree.parent(b);
    while (a != b) {
        a = *tree.parent(a);
        b = *tree.parent(b);
    }
    return a;
}

}  // namespace

std::optional<Colour> is_nicely_coloured(const RootedBinaryTree& tree, const Colouring& colouring) {
    require_valid(tree, colouring);
    const Colour c = colouring[tree.root()];
    for (Vertex v = 0; v < tree.order(); ++v) {
        if ((tree.is_leaf(v) || tree.is_branched(v)) && colouring[v] != c) return std::nullopt;
    }
    return c;
}

// ---- nice subtree table ----------------------------------------------------

NiceSubtreeTable::NiceSubtreeTable(const RootedBinaryTree& tree, const Colouring& colouring)
    : tree_(&tree), k_(colouring.k()) {
    require_compatible(tree.to_graph(), colouring);
    const std::size_t slots = tree.order() * (k_ + 1);
    best_.assign(slots, 0);
    arg_.assign(slots, 0);
    for (Vertex v : tree.post_order()) {
        for (Colour c = 1; c <= k_; ++c) {
            std::size_t f = 0;
            if (colouring[v] == c) {
                f = 1;
                for (Vertex ch : tree.children(v)) f += best_[index(ch, c)];
            }
            std::size_t best = f;
            Vertex arg = v;
            for (Vertex ch : tree.children(v)) {
                const std::size_t b = best_[index(ch, c)];
                if (b == 0) continue;
                const Vertex a = arg_[index(ch, c)];
                if (b > best || (b == best && a < arg)) {
                    best = b;
                    arg = a;
                }
            }
            best_[index(v, c)] = best;
            arg_[index(v, c)] = arg;
        }
    }
}

std::size_t NiceSubtreeTable::g(Vertex v, Colour c) const {
    if (c < 1 || c > k_) return 0;
    return best_.at(index(v, c));
}

std::optional<Vertex> NiceSubtreeTable::maximiser_root(Vertex v, Colour c) const {
    if (g(v, c) == 0) return std::nullopt;
    return arg_[index(v, c)];
}

void NiceSubtreeTable::collect(Vertex u, Colour c, std::vector<Vertex>& out) const {
    out.push_back(u);
    for (Vertex ch : tree_->children(u)) {
        if (best_[index(ch, c)] == 0) continue;
        const Vertex w = arg_[index(ch, c)];
        const auto link = tree_->path_up(w, ch);
        out.insert(out.end(), link.begin() + 1, link.end());
        collect(w, c, out);
    }
}

std::vector<Vertex> NiceSubtreeTable::maximiser(Vertex v, Colour c) const {
    std::vector<Vertex> out;
    if (auto r = maximiser_root(v, c)) collect(*r, c, out);
    std::sort(out.begin(), out.end());
    return out;
}

NiceSubtreeTable nice_subtree_table(const RootedBinaryTree& tree, const Colouring& colouring) {
    require_valid(tree, colouring);
    return NiceSubtreeTable(tree, colouring);
}

// ---- main safflower --------------------------------------------------------

std::size_t Safflower::num_nice() const {
    std::size_t total = 0;
    for (const auto& t : trees) total += t.nice_vertices.size();
    return total;
}

Safflower build_main_safflower(const RootedBinaryTree& tree, const Colouring& colouring) {
    const NiceSubtreeTable table = nice_subtree_table(tree, colouring);
    return build_main_safflower(tree, colouring, table);
}

Safflower build_main_safflower(const RootedBinaryTree& tree, const Colouring& colouring,
                               const NiceSubtreeTable& table) {
    Safflower out;
    Vertex v = tree.root();
    for (;;) {
        const Colour c = colouring[v];
        OriginalTree t;
        t.root = v;
        t.nice_colour = c;
        t.vertices = {v};
        const auto ch = tree.children(v);
        std::optional<Vertex> next;
        if (ch.size() == 1) {
            next = ch[0];
        } else if (ch.size() == 2) {
            Vertex s = ch[0];
            Vertex other = ch[1];
            const std::size_t gs = table.g(s, c);
            const std::size_t go = table.g(other, c);
            if (go > gs || (go == gs && other < s)) std::swap(s, other);
            next = other;
            if (auto top = table.maximiser_root(s, c)) {
                const auto link = tree.path_up(*top, s);
                const auto body = table.maximiser(s, c);
                t.vertices.insert(t.vertices.end(), link.begin(), link.end());
                t.vertices.insert(t.vertices.end(), body.begin(), body.end());
                std::sort(t.vertices.begin(), t.vertices.end());
                t.vertices.erase(std::unique(t.vertices.begin(), t.vertices.end()), t.vertices.end());
            }
        }
        for (Vertex x : t.vertices)
            if (colouring[x] == c) t.nice_vertices.push_back(x);
        out.stem.push_back(v);
        out.trees.push_back(std::move(t));
        if (!next) break;
        v = *next;
    }
    return out;
}

// ---- verification ----------------------------------------------------------

std::vector<std::string> safflower_violations(const RootedBinaryTree& tree, const Safflower& saff,
                                              const Colouring& colouring) {
    std::vector<std::string> issues;
    const std::size_t n = tree.order();
    if (colouring.size() != n) return {"colouring does not match the host tree"};
    if (saff.stem.empty()) return {"empty stem"};
    if (saff.trees.size() != saff.stem.size()) return {"one original tree per stem vertex required"};
    for (Vertex v : saff.stem)
        if (v >= n) return {"stem vertex out of range"};
    for (std::size_t i = 0; i + 1 < saff.stem.size(); ++i) {
        if (tree.parent(saff.stem[i + 1]) != saff.stem[i]) issues.push_back("stem is not a downward path");
    }

    std::vector<int> owner(n, -1);
    std::vector<Vertex> all;
    for (std::size_t i = 0; i < saff.trees.size(); ++i) {
        const OriginalTree& t = saff.trees[i];
        const std::string tag = "original tree " + std::to_string(i) + ": ";
        if (t.root != saff.stem[i]) issues.push_back(tag + "root is not the stem vertex");
        bool in_range = true;
        for (Vertex x : t.vertices) {
            if (x >= n) {
                in_range = false;
                break;
            }
            if (owner[x] != -1) issues.push_back(tag + "overlaps another original tree");
            owner[x] = static_cast<int>(i);
            all.push_back(x);
        }
        if (!in_range) {
            issues.push_back(tag + "vertex out of range");
            continue;
        }
        if (std::find(t.vertices.begin(), t.vertices.end(), t.root) == t.vertices.end()) {
            issues.push_back(tag + "does not contain its root");
            continue;
        }
        if (colouring[t.root] != t.nice_colour) issues.push_back(tag + "root does not have the nice colour");
        std::vector<Vertex> expected_nice;
        for (Vertex x : t.vertices) {
            if (x != t.root && (!tree.parent(x) || owner[*tree.parent(x)] != static_cast<int>(i))) {
                issues.push_back(tag + "not a compatible subtree");
            }
            std::size_t inner_children = 0;
            for (Vertex ch : tree.children(x))
                if (std::find(t.vertices.begin(), t.vertices.end(), ch) != t.vertices.end()) ++inner_children;
            const bool structural = x == t.root || inner_children == 0 || inner_children == 2;
            if (structural && colouring[x] != t.nice_colour) {
                issues.push_back(tag + "vertex " + std::to_string(x) + " breaks the nice colour");
            }
            if (colouring[x] == t.nice_colour) expected_nice.push_back(x);
        }
        std::vector<Vertex> listed = t.nice_vertices;
        std::sort(listed.begin(), listed.end());
        std::sort(expected_nice.begin(), expected_nice.end());
        if (listed != expected_nice) issues.push_back(tag + "nice vertex list is wrong");
    }
    if (!issues.empty()) return issues;

    // The union is a subtree of the host; it must itself be properly coloured.
    std::sort(all.begin(), all.end());
    const Graph host = tree.to_graph();
    const Graph sub = host.induced(all);
    if (!sub.is_tree()) {
        issues.push_back("safflower is not connected");
        return issues;
    }
    if (find_parity_path_tree(sub, colouring.restrict_to(all))) issues.push_back("safflower contains a parity path");

    // Root-to-nice-vertex parity vectors: distinct and nonzero.
    const Vertex top = saff.stem.front();
    std::unordered_set<ParityVector, ParityVectorHash> seen;
    for (const auto& t : saff.trees) {
        for (Vertex x : t.nice_vertices) {
            const ParityVector pv = parity_vector(colouring, tree.path_up(x, top));
            if (pv.is_zero()) issues.push_back("zero root vector at vertex " + std::to_string(x));
            if (!seen.insert(pv).second) issues.push_back("repeated root vector at vertex " + std::to_string(x));
        }
    }
    if (colouring.k() < 64) {
        const std::size_t cap = (std::size_t{1} << colouring.k()) - 1;
        if (saff.num_nice() > cap) issues.push_back("Num exceeds 2^k - 1");
    }
    return issues;
}

bool verify_safflower(const RootedBinaryTree& tree, const Safflower& safflower, const Colouring& colouring) {
    return safflower_violations(tree, safflower, colouring).empty();
}

bool last_common_vertex_property(const RootedBinaryTree& tree, const Safflower& saff, const Colouring& colouring) {
    std::vector<Vertex> nice;
    for (const auto& t : saff.trees) nice.insert(nice.end(), t.nice_vertices.begin(), t.nice_vertices.end());
    for (std::size_t i = 0; i < nice.size(); ++i) {
        for (std::size_t j = i + 1; j < nice.size(); ++j) {
            const Vertex v = lowest_common_ancestor(tree, nice[i], nice[j]);
            if (colouring[nice[i]] != colouring[v] && colouring[nice[j]] != colouring[v]) return false;
        }
    }
    return true;
}

// ---- subdivisions of B_d ---------------------------------------------------

std::size_t subdivided_depth(const RootedBinaryTree& t) {
    if (!t.has_main_marks()) throw InvalidInput("tree carries no main-vertex marks");
    if (!t.is_main(t.root())) throw InvalidInput("root of a subdivision must be a main vertex");
    std::vector<std::size_t> main_depth(t.order(), 0);
    std::optional<std::size_t> leaf_depth;
    std::size_t mains = 0;
    for (Vertex v : t.bfs_order()) {
        if (auto p = t.parent(v)) main_depth[v] = main_depth[*p] + (t.is_main(*p) ? 1 : 0);
        const auto kids = t.children(v).size();
        if (t.is_main(v)) {
            ++mains;
            if (kids == 1) throw InvalidInput("main vertex with a single child");
            if (kids == 0) {
                if (leaf_depth && *leaf_depth != main_depth[v]) throw InvalidInput("main leaves at different depths");
                leaf_depth = main_depth[v];
            }
        } else if (kids != 1) {
            throw InvalidInput("subdivision vertex must have exactly one child");
        }
    }
    const std::size_t d = *leaf_depth + 1;
    if (d >= 63 || mains != (std::size_t{1} << d) - 1) throw InvalidInput("main vertices do not form B_d");
    return d;
}

nlohmann::json LowerBoundCertificate::to_json() const {
    nlohmann::json stem = nlohmann::json::array();
    for (Vertex v : safflower.stem) stem.push_back(v + 1);
    nlohmann::json nice = nlohmann::json::array();
    for (const auto& t : safflower.trees) {
        nlohmann::json ids = nlohmann::json::array();
        for (Vertex v : t.nice_vertices) ids.push_back(v + 1);
        nice.push_back(ids);
    }
    return {{"schema_version", kCertificateSchemaVersion},
            {"d", d},
            {"k", k},
            {"a", a},
            {"num_nice", num_nice},
            {"bound", bound},
            {"stem", stem},
            {"nice_vertices", nice}};
}

LowerBoundCertificate nice_count_certificate(const RootedBinaryTree& subdivided, const Colouring& colouring) {
    const std::size_t d = subdivided_depth(subdivided);
    LowerBoundCertificate cert;
    cert.d = d;
    cert.k = colouring.k();
    cert.safflower = build_main_safflower(subdivided, colouring);
    cert.num_nice = cert.safflower.num_nice();
    cert.a.assign(cert.k, 0);
    std::size_t on_stem = 0;
    for (Vertex v : cert.safflower.stem) {
        if (subdivided.is_main(v)) {
            ++on_stem;
            ++cert.a[colouring[v] - 1];
        }
    }
    if (on_stem != d) {
        throw InternalError("stem carries " + std::to_string(on_stem) + " main vertices, expected " +
                            std::to_string(d));
    }
    using boost::multiprecision::cpp_int;
    cpp_int required = 0;
    for (std::size_t ai : cert.a) required += (cpp_int(1) << ai) - 1;
    const cpp_int cap = (cpp_int(1) << cert.k) - 1;
    if (cpp_int(cert.num_nice) < required) throw InternalError("Num(Saff) below sum of 2^{a_i} - 1");
    if (cpp_int(cert.num_nice) > cap) throw InternalError("Num(Saff) exceeds 2^k - 1");
    cert.bound = subdivision_lower_bound(d);
    if (cert.bound > static_cast<double>(cert.k) + 1e-9) throw InternalError("lower bound exceeds k");
    return cert;
}

SafflowerAudit audit_safflower(const RootedBinaryTree& tree, const Colouring& colouring) {
    SafflowerAudit audit;
    const NiceSubtreeTable table = nice_subtree_table(tree, colouring);
    for (Vertex v = 0; v < tree.order(); ++v) {
        ++audit.checked_vertices;
        const Colour c = colouring[v];
        const auto ch = tree.children(v);
        std::size_t expected = 1;
        for (Vertex x : ch) expected += table.g(x, c);
        if (table.g(v, c) != expected) ++audit.table_identity;
    }

    const Safflower saff = build_main_safflower(tree, colouring, table);
    if (!verify_safflower(tree, saff, colouring)) ++audit.verification;
    if (!last_common_vertex_property(tree, saff, colouring)) ++audit.last_common;
    for (std::size_t i = 0; i < saff.stem.size(); ++i) {
        const Vertex v = saff.stem[i];
        if (!(tree.is_leaf(v) || tree.is_branched(v))) continue;
        if (2 * saff.trees[i].nice_vertices.size() < table.g(v, colouring[v]) + 1) ++audit.original_vs_sub;
    }

    if (!tree.has_main_marks()) return audit;
    try {
        subdivided_depth(tree);
    } catch (const InvalidInput&) {
        return audit;
    }
    // Stem main vertices from the leaf upwards; count same-coloured ones seen so far.
    std::vector<std::size_t> seen(colouring.k() + 1, 0);
    for (auto it = saff.stem.rbegin(); it != saff.stem.rend(); ++it) {
        if (!tree.is_main(*it)) continue;
        const Colour c = colouring[*it];
        const std::size_t count = ++seen[c];
        if (count < 63 && table.g(*it, c) + 1 < (std::size_t{1} << count)) ++audit.stem_growth;
    }
    try {
        (void)nice_count_certificate(tree, colouring);
    } catch (const InternalError&) {
        ++audit.nice_count;
    }
    return audit;
}

// ---- bounds ----------------------------------------------------------------

double subdivision_lower_bound(std::size_t d) {
    if (d == 0) throw InvalidParameter("subdivision_lower_bound: d must be at least 1");
    const double root = std::sqrt(static_cast<double>(d));
    return std::max(root, root + 0.25 * std::log2(static_cast<double>(d)) - 0.5);
}

bool colour_count_inequality_holds(std::size_t n, std::size_t k, const std::vector<std::size_t>& a) {
    if (n == 0 || k == 0) throw InvalidParameter("colour_count_inequality_holds: n and k must be at least 1");
    if (a.size() > k) throw InvalidParameter("colour_count_inequality_holds: more parts than colours");
    std::size_t sum = 0;
    for (std::size_t x : a) sum += x;
    if (sum != n) throw InvalidParameter("colour_count_inequality_holds: parts do not sum to n");
    using boost::multiprecision::cpp_int;
    cpp_int lhs = 0;
    for (std::size_t x : a) lhs += (cpp_int(1) << x) - 1;
    const bool premise = lhs <= (cpp_int(1) << k) - 1;
    if (!premise) return true;
    return static_cast<double>(k) + 1e-9 >= subdivision_lower_bound(n);
}

}  // namespace pvc

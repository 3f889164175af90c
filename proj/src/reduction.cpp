#include "pvc/reduction.hpp"

#include <chrono>
#include <map>

#include "pvc/errors.hpp"

namespace pvc {

Vertex GadgetInstance::inner(Vertex i, Vertex j) const {
    const std::size_t n = this->n();
    if (i == j || i >= n || j >= n) throw InvalidParameter("inner vertex index out of range");
    return static_cast<Vertex>(2 * n + i * (n - 1) + (j < i ? j : j - 1));
}

std::vector<Vertex> GadgetInstance::connecting_path(Vertex i) const {
    std::vector<Vertex> p{first_copy(i)};
    for (Vertex j = 0; j < n(); ++j)
        if (j != i) p.push_back(inner(i, j));
    p.push_back(second_copy(i));
    return p;
}

GadgetInstance build_hampath_gadget(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 2) throw InvalidParameter("build_hampath_gadget: need at least two vertices");
    GadgetInstance out;
    out.source = g;

    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        edges.emplace_back(e.u, e.v);
        edges.emplace_back(static_cast<Vertex>(n + e.u), static_cast<Vertex>(n + e.v));
    }
    std::vector<Colour> colours(n * n + n, 0);
    for (Vertex i = 0; i < n; ++i) {
        colours[out.first_copy(i)] = colours[out.second_copy(i)] = i + 1;
        const auto path = out.connecting_path(i);
        for (std::size_t t = 0; t + 1 < path.size(); ++t) edges.emplace_back(path[t], path[t + 1]);
        for (Vertex j = 0; j < n; ++j) {
            if (j == i) continue;
            const std::size_t hi = std::max(i, j) + 1;
            const std::size_t lo = std::min(i, j) + 1;
            colours[out.inner(i, j)] = static_cast<Colour>((hi - 1) * n + lo);
        }
    }
    out.host = Graph(n * n + n, edges);
    out.colouring = Colouring(n * n - 1, std::move(colours));
    return out;
}

std::vector<std::string> gadget_invariant_violations(const GadgetInstance& gadget) {
    std::vector<std::string> issues;
    const std::size_t n = gadget.n();
    const Graph& h = gadget.host;
    if (h.order() != n * n + n) issues.push_back("vertex count is not n^2 + n");
    if (h.size() != 2 * gadget.source.size() + n * n) issues.push_back("edge count is not 2|E| + n^2");
    if (gadget.colouring.size() != h.order()) {
        issues.push_back("colouring size mismatch");
        return issues;
    }
    std::map<Colour, std::size_t> uses;
    for (Colour c : gadget.colouring.colours()) ++uses[c];
    for (const auto& [c, count] : uses)
        if (count != 2) issues.push_back("colour " + std::to_string(c) + " used " + std::to_string(count) + " times");

    for (const Edge& e : gadget.source.edges()) {
        if (!h.adjacent(gadget.first_copy(e.u), gadget.first_copy(e.v)) ||
            !h.adjacent(gadget.second_copy(e.u), gadget.second_copy(e.v))) {
            issues.push_back("copy edges missing");
        }
    }
    std::vector<std::vector<Colour>> inner_colours(n);
    for (Vertex i = 0; i < n; ++i) {
        const auto p = gadget.connecting_path(i);
        if (!Path{p}.is_valid_in(h)) issues.push_back("P_" + std::to_string(i + 1) + " is not a path");
        if (gadget.colouring[p.front()] != i + 1 || gadget.colouring[p.back()] != i + 1) {
            issues.push_back("ends of P_" + std::to_string(i + 1) + " are miscoloured");
        }
        for (std::size_t t = 1; t + 1 < p.size(); ++t) inner_colours[i].push_back(gadget.colouring[p[t]]);
        std::sort(inner_colours[i].begin(), inner_colours[i].end());
        if (std::adjacent_find(inner_colours[i].begin(), inner_colours[i].end()) != inner_colours[i].end()) {
            issues.push_back("P_" + std::to_string(i + 1) + " repeats an inner colour");
        }
    }
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            std::vector<Colour> common;
            std::set_intersection(inner_colours[i].begin(), inner_colours[i].end(), inner_colours[j].begin(),
                                  inner_colours[j].end(), std::back_inserter(common));
            if (common.size() != 1 || gadget.colouring[gadget.inner(i, j)] != common[0] ||
                gadget.colouring[gadget.inner(j, i)] != common[0]) {
                issues.push_back("P_" + std::to_string(i + 1) + " and P_" + std::to_string(j + 1) +
                                 " do not share exactly the colour of v_{i,j}");
            }
        }
    }
    return issues;
}

// ---- Hamiltonian paths -----------------------------------------------------

namespace {

bool extend(const Graph& g, std::vector<Vertex>& path, std::vector<char>& used) {
    if (path.size() == g.order()) return true;
    for (Vertex w : g.neighbours(path.back())) {
        if (used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        if (extend(g, path, used)) return true;
        path.pop_back();
        used[w] = 0;
    }
    return false;
}

}  // namespace

std::optional<Path> find_hamiltonian_path(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    if (!g.is_connected()) return std::nullopt;
    std::vector<char> used(g.order(), 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        std::vector<Vertex> path{s};
        used[s] = 1;
        if (extend(g, path, used)) return Path{path};
        used[s] = 0;
    }
    return std::nullopt;
}

bool has_hamiltonian_path(const Graph& g) { return find_hamiltonian_path(g).has_value(); }

Path stitch_parity_path(const GadgetInstance& gadget, const Path& ham) {
    const Graph& g = gadget.source;
    if (ham.length() != g.order() || !ham.is_valid_in(g)) {
        throw InvalidInput("stitch_parity_path: not a Hamiltonian path of the source graph");
    }
    Path out;
    bool forward = true;  // forward: G' end first, leaving in G''
    for (Vertex v : ham.vertices) {
        auto p = gadget.connecting_path(v);
        if (!forward) std::reverse(p.begin(), p.end());
        out.vertices.insert(out.vertices.end(), p.begin(), p.end());
        forward = !forward;
    }
    return out;
}

// ---- equivalence -----------------------------------------------------------

std::string to_string(ReductionStatus status) {
    switch (status) {
        case ReductionStatus::consistent: return "consistent";
        case ReductionStatus::inconsistent: return "inconsistent";
        case ReductionStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

ReductionReport check_reduction_equivalence(const Graph& g, const SearchBudget& budget) {
    const auto start = std::chrono::steady_clock::now();
    ReductionReport report;
    const GadgetInstance gadget = build_hampath_gadget(g);

    report.hamiltonian_path = find_hamiltonian_path(g);
    report.hamiltonian = report.hamiltonian_path.has_value();
    if (report.hamiltonian) {
        const Path stitched = stitch_parity_path(gadget, *report.hamiltonian_path);
        ParityPathCertificate cert{stitched, parity_vector(gadget.colouring, stitched.vertices)};
        report.stitched_valid = cert.verify(gadget.host, gadget.colouring);
        report.stitched_certificate = std::move(cert);
    }

    const VerifyResult verdict = is_parity_vertex_colouring(gadget.host, gadget.colouring, budget);
    report.colouring_verdict = verdict.verdict;
    report.searched_certificate = verdict.certificate;
    report.expansions = verdict.expansions;
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (verdict.verdict == Verdict::indeterminate) {
        // A Hamiltonian path already yields a parity path constructively.
        if (report.hamiltonian && report.stitched_valid) {
            report.status = ReductionStatus::consistent;
            report.details = "Hamiltonian path found; stitched parity path verified; search budget exhausted";
        } else {
            report.status = ReductionStatus::inconclusive;
            report.details = "no Hamiltonian path; parity-path search exhausted its budget";
        }
        return report;
    }
    const bool invalid = verdict.verdict == Verdict::invalid;
    if (invalid == report.hamiltonian && (!report.hamiltonian || report.stitched_valid)) {
        report.status = ReductionStatus::consistent;
        report.details = report.hamiltonian ? "Hamiltonian path found; colouring has a parity path"
                                            : "no Hamiltonian path; colouring is a parity vertex colouring";
    } else {
        report.status = ReductionStatus::inconsistent;
        report.details = report.hamiltonian ? "Hamiltonian path found but no parity path in the gadget"
                                            : "no Hamiltonian path but the gadget has a parity path";
        if (report.hamiltonian && !report.stitched_valid) report.details += "; stitched path failed verification";
    }
    return report;
}

}  // namespace pvc

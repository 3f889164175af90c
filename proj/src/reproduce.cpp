#include "pvc/reproduce.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "pvc/constructions.hpp"
#include "pvc/enumerate.hpp"
#include "pvc/errors.hpp"
#include "pvc/extremal.hpp"
#include "pvc/graph.hpp"
#include "pvc/mso.hpp"
#include "pvc/parity.hpp"
#include "pvc/reduction.hpp"
#include "pvc/safflower.hpp"
#include "pvc/solver.hpp"

namespace pvc {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

/// Collects failures; a criterion passes when none were recorded.
struct Tally {
    std::vector<std::string> failures;
    std::size_t checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures.size() < 50) failures.push_back(what);
        if (!ok) ++failed;
    }
    std::size_t failed = 0;
};

CriterionResult finish(int id, std::string title, const Tally& tally, json details, Clock::time_point start,
                       std::string summary) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.passed = tally.failed == 0;
    r.seconds = since(start);
    details["checks"] = tally.checks;
    details["failures"] = tally.failures;
    r.details = std::move(details);
    r.summary = std::move(summary);
    if (!r.passed) r.summary += " (" + std::to_string(tally.failed) + " failed)";
    return r;
}

// ---- 1: exact values -------------------------------------------------------

CriterionResult exact_values(const ReproduceOptions&) {
    const auto start = Clock::now();
    Tally t;
    json rows = json::array();
    auto check = [&](const std::string& name, const Graph& g, std::size_t expected) {
        const ChromaticResult r = chromatic_number(g);
        const bool ok = r.status == SolveStatus::exact && r.chi == expected;
        t.expect(ok, name + ": chi " + std::to_string(r.chi) + ", expected " + std::to_string(expected));
        rows.push_back({{"graph", name}, {"chi", r.chi}, {"expected", expected}});
    };
    for (std::size_t n = 1; n <= 12; ++n) check("P" + std::to_string(n), make_path(n), floor_log2(n) + 1);
    for (std::size_t n = 3; n <= 10; ++n) check("C" + std::to_string(n), make_cycle(n), ceil_log2(n) + 1);
    check("B4", make_complete_binary_tree(4).to_graph(), 3);
    check("T33", make_t33_graph(), 4);
    const double secs = since(start);
    t.expect(secs <= 300.0, "runtime above 5 minutes");
    return finish(1, "Exact values of paths, cycles, B4 and T33", t, {{"values", rows}}, start,
                  std::to_string(rows.size()) + " exact values");
}

// ---- 2: constructions ------------------------------------------------------

/// Every simple path of C_n is an arc; scan arcs by start and length.
bool cycle_colouring_valid(const Colouring& c) {
    const std::size_t n = c.size();
    for (std::size_t s = 0; s < n; ++s) {
        ParityVector pv(c.k());
        for (std::size_t len = 1; len <= n; ++len) {
            pv.flip(c[static_cast<Vertex>((s + len - 1) % n)]);
            if (pv.is_zero()) return false;
        }
    }
    return true;
}

CriterionResult constructions(const ReproduceOptions& options) {
    const auto start = Clock::now();
    Tally t;
    for (std::size_t n = 1; n <= 256; ++n) {
        const auto c = colour_path(n);
        const std::size_t want = floor_log2(n) + 1;
        t.expect(!find_parity_path_tree(make_path(n), c.colouring) && c.colouring.used() == want &&
                     c.colouring.k() == want,
                 "path colouring n=" + std::to_string(n));
    }
    for (std::size_t n = 3; n <= 64; ++n) {
        const auto c = colour_cycle(n);
        const std::size_t want = ceil_log2(n) + 1;
        t.expect(cycle_colouring_valid(c.colouring) && c.colouring.used() == want && c.colouring.k() == want,
                 "cycle colouring n=" + std::to_string(n));
    }
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> size(1, 200);
    std::size_t max_colours = 0;
    for (int i = 0; i < 200; ++i) {
        const Graph tree = random_tree(size(rng), rng);
        const auto c = colour_tree_centroid(tree);
        max_colours = std::max(max_colours, c.colouring.k());
        t.expect(!find_parity_path_tree(tree, c.colouring) && c.colouring.k() <= floor_log2(tree.order()) + 1,
                 "centroid colouring, random tree " + std::to_string(i));
    }
    t.expect(since(start) <= 120.0, "runtime above 2 minutes");
    return finish(2, "Path, cycle and centroid constructions", t,
                  {{"paths", 256}, {"cycles", 62}, {"random_trees", 200}, {"max_centroid_colours", max_colours}},
                  start, "256 paths, 62 cycles, 200 random trees");
}

// ---- 3: minor non-monotonicity --------------------------------------------

CriterionResult minor_monotonicity(const ReproduceOptions&) {
    const auto start = Clock::now();
    Tally t;
    const Graph b4 = make_complete_binary_tree(4).to_graph();
    const Graph minor = contract_edge(b4, 0, 1);
    t.expect(trees_isomorphic(minor, make_t33_graph()), "contracting a root edge of B4 does not give T33");
    const auto chi_b4 = chromatic_number(b4);
    const auto chi_t33 = chromatic_number(minor);
    t.expect(chi_b4.status == SolveStatus::exact && chi_b4.chi == 3, "chi(B4) != 3");
    t.expect(chi_t33.status == SolveStatus::exact && chi_t33.chi == 4, "chi(T33) != 4");
    t.expect(chi_t33.chi > chi_b4.chi, "minor does not have larger chi");
    return finish(3, "Minor with a larger parity chromatic number", t,
                  {{"chi_B4", chi_b4.chi}, {"chi_T33", chi_t33.chi}}, start,
                  "chi(T33) = " + std::to_string(chi_t33.chi) + " > " + std::to_string(chi_b4.chi) + " = chi(B4)");
}

// ---- 4: safflower sweep ----------------------------------------------------

CriterionResult safflower_sweep(const ReproduceOptions& options) {
    const auto start = Clock::now();
    Tally t;
    const std::size_t seeds = options.quick ? 15 : 100;
    SafflowerAudit total;
    std::size_t instances = 0;
    std::size_t solver_witnesses = 0;
    std::mt19937_64 rng(options.seed);
    for (std::size_t d = 2; d <= 5; ++d) {
        const RootedBinaryTree base = make_complete_binary_tree(d);
        for (std::size_t s = 0; s < seeds; ++s) {
            const RootedBinaryTree tree = subdivide_random(base, options.seed * 1000003 + d * 1000 + s);
            const Graph g = tree.to_graph();
            std::vector<std::pair<std::string, Colouring>> colourings;
            colourings.emplace_back("centroid", colour_tree_centroid(g).colouring);
            colourings.emplace_back("random-elimination", colour_tree_random_elimination(g, rng).colouring);
            if (d <= 4) {
                SolverOptions so;
                so.time_budget_seconds = 5.0;
                const auto r = chromatic_number(g, so);
                if (r.status == SolveStatus::exact) {
                    colourings.emplace_back("solver", r.witness);
                    ++solver_witnesses;
                }
            }
            for (const auto& [source, colouring] : colourings) {
                const SafflowerAudit a = audit_safflower(tree, colouring);
                ++instances;
                total.table_identity += a.table_identity;
                total.verification += a.verification;
                total.last_common += a.last_common;
                total.original_vs_sub += a.original_vs_sub;
                total.stem_growth += a.stem_growth;
                total.nice_count += a.nice_count;
                total.checked_vertices += a.checked_vertices;
                t.expect(a.total() == 0, "d=" + std::to_string(d) + " seed=" + std::to_string(s) + " " + source);
            }
        }
    }
    if (!options.quick) t.expect(instances >= 1000, "fewer than 1000 instances");
    t.expect(since(start) <= 300.0, "runtime above 5 minutes");
    json details = {{"instances", instances},
                    {"solver_witnesses", solver_witnesses},
                    {"vertices_checked", total.checked_vertices},
                    {"violations",
                     {{"table_identity", total.table_identity},
                      {"verification", total.verification},
                      {"last_common_vertex", total.last_common},
                      {"original_vs_sub", total.original_vs_sub},
                      {"stem_growth", total.stem_growth},
                      {"nice_count_inequality", total.nice_count}}}};
    return finish(4, "Safflower properties on subdivided complete binary trees", t, details, start,
                  std::to_string(instances) + " coloured subdivisions, " + std::to_string(total.total()) +
                      " violations");
}

// ---- 5: partition inequality ----------------------------------------------

void partitions(std::size_t n, std::size_t max_parts, std::size_t max_part, std::vector<std::size_t>& cur,
                const std::function<void(const std::vector<std::size_t>&)>& emit) {
    if (n == 0) {
        emit(cur);
        return;
    }
    if (max_parts == 0) return;
    for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, max_parts - 1, p, cur, emit);
        cur.pop_back();
    }
}

CriterionResult partition_inequality(const ReproduceOptions&) {
    const auto start = Clock::now();
    Tally t;
    std::size_t premise = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
        for (std::size_t k = 1; k <= 12; ++k) {
            std::vector<std::size_t> cur;
            partitions(n, k, n, cur, [&](const std::vector<std::size_t>& a) {
                std::size_t lhs = 0;
                for (std::size_t x : a) lhs += (std::size_t{1} << x) - 1;
                if (lhs <= (std::size_t{1} << k) - 1) ++premise;
                std::string name = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                t.expect(colour_count_inequality_holds(n, k, a), name);
            });
        }
    }
    return finish(5, "Colour-count inequality over all partitions", t, {{"premise_holds", premise}}, start,
                  std::to_string(t.checks) + " (n, k, partition) triples");
}

// ---- 6: extremal counts ----------------------------------------------------

CriterionResult extremal_suite(const ReproduceOptions& options) {
    const auto start = Clock::now();
    Tally t;
    const ExtremalTable table(20);
    t.expect(table.consistent(), "table recursion disagrees with closed form");
    for (std::size_t l = 1; l <= 20; ++l) {
        for (std::size_t d = 0; d < l; ++d) {
            t.expect(extremal_count(l, d) == extremal_count_closed(l, d),
                     "closed form l=" + std::to_string(l) + " d=" + std::to_string(d));
        }
        for (std::size_t d = 0; d <= l; ++d) {
            BigInt bound = 1;
            for (std::size_t i = 0; i < d; ++i) bound *= l;
            t.expect(extremal_count(l, d) <= bound, "A(l,d) > l^d at l=" + std::to_string(l));
        }
    }
    json brute = json::array();
    auto compare = [&](std::size_t l, std::size_t d) {
        const std::size_t b = brute_force_extremal(l, d);
        t.expect(BigInt(b) == extremal_count(l, d), "brute force l=" + std::to_string(l) + " d=" + std::to_string(d));
        brute.push_back({{"l", l}, {"d", d}, {"value", b}});
    };
    for (std::size_t l = 0; l <= 4; ++l)
        for (std::size_t d = 0; d <= l; ++d) compare(l, d);
    const auto l5_start = Clock::now();
    if (!options.quick) {
        compare(5, 1);
        compare(5, 2);
    }
    const double l5_seconds = since(l5_start);
    t.expect(l5_seconds <= 600.0, "brute force at l = 5 above 10 minutes");
    const std::size_t tree_lmax = options.quick ? 10 : 16;
    for (std::size_t l = 0; l <= tree_lmax; ++l) {
        for (std::size_t d = 0; d <= l + 1; ++d) {
            const auto tree = extremal_tree(l, d);
            const std::size_t order = tree ? tree->order() : 0;
            const std::string name = "extremal tree l=" + std::to_string(l) + " d=" + std::to_string(d);
            t.expect(BigInt(order) == extremal_count(l, d), name + " order");
            t.expect(max_complete_subdivision(tree) <= d, name + " contains B_{d+1}");
            t.expect(!tree || tree->layers() <= l, name + " too many layers");
        }
    }
    return finish(6, "Extremal counts: recursion, closed form, brute force, trees", t,
                  {{"brute_force", brute}, {"tree_lmax", tree_lmax}}, start,
                  "A(l,d) cross-validated for l <= 20, brute force up to l = " +
                      std::to_string(options.quick ? 4 : 5));
}

// ---- 7: reduction ----------------------------------------------------------

CriterionResult reduction_suite(const ReproduceOptions& options) {
    const auto start = Clock::now();
    Tally t;
    std::size_t small = 0;
    for (std::size_t n = 2; n <= 5; ++n) {
        for (const Graph& g : all_connected_graphs(n)) {
            const auto r = check_reduction_equivalence(g);
            ++small;
            t.expect(r.status == ReductionStatus::consistent,
                     "n=" + std::to_string(n) + " graph " + std::to_string(small) + ": " + r.details);
        }
    }
    std::mt19937_64 rng(options.seed);
    const std::size_t randoms = options.quick ? 5 : 25;
    std::size_t concluded = 0;
    std::size_t hamiltonian = 0;
    json random_rows = json::array();
    for (std::size_t i = 0; i < randoms; ++i) {
        const Graph g = random_connected_graph(6, 0.35, rng);
        const auto r = check_reduction_equivalence(g, SearchBudget::with_seconds(60.0));
        if (r.status != ReductionStatus::inconclusive) ++concluded;
        if (r.hamiltonian) ++hamiltonian;
        t.expect(r.status != ReductionStatus::inconsistent, "random 6-vertex graph " + std::to_string(i));
        random_rows.push_back({{"edges", g.size()}, {"hamiltonian", r.hamiltonian}, {"status", to_string(r.status)}});
    }
    t.expect(concluded * 5 >= randoms * 4, "fewer than 80% of random instances concluded");

    std::size_t structural = 0;
    auto structure = [&](const Graph& g) {
        ++structural;
        const auto issues = gadget_invariant_violations(build_hampath_gadget(g));
        t.expect(issues.empty(), "gadget invariants: " + (issues.empty() ? std::string() : issues.front()));
    };
    for (std::size_t n = 2; n <= (options.quick ? 5u : 7u); ++n)
        for (const Graph& g : all_connected_graphs(n)) structure(g);
    for (std::size_t n = 2; n <= 8; ++n) {
        for (int i = 0; i < 20; ++i) {
            std::vector<Edge> edges;
            std::bernoulli_distribution keep(0.4);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (keep(rng)) edges.emplace_back(u, v);
            structure(Graph(n, edges));
        }
    }
    return finish(7, "Hamiltonian-path gadget equivalence", t,
                  {{"small_graphs", small},
                   {"random_graphs", random_rows},
                   {"random_concluded", concluded},
                   {"random_hamiltonian", hamiltonian},
                   {"structural_instances", structural}},
                  start,
                  std::to_string(small) + " small graphs, " + std::to_string(concluded) + "/" +
                      std::to_string(randoms) + " random 6-vertex graphs concluded");
}

// ---- 8: lower bounds -------------------------------------------------------

CriterionResult lower_bounds(const ReproduceOptions& options) {
    const auto start = Clock::now();
    Tally t;
    std::size_t solved = 0;
    std::size_t unsolved = 0;
    const std::size_t seeds = options.quick ? 3 : 10;
    for (std::size_t d = 1; d <= 4; ++d) {
        const auto need = static_cast<std::size_t>(std::ceil(subdivision_lower_bound(d) - 1e-9));
        const RootedBinaryTree base = make_complete_binary_tree(d);
        for (std::size_t s = 0; s <= seeds; ++s) {
            // s = 0 is B_d itself.
            const RootedBinaryTree tree = s == 0 ? base : subdivide_random(base, options.seed * 7919 + d * 100 + s);
            SolverOptions so;
            so.time_budget_seconds = 10.0;
            const auto r = chromatic_number(tree.to_graph(), so);
            if (r.status != SolveStatus::exact) {
                ++unsolved;
                continue;
            }
            ++solved;
            t.expect(r.chi >= need, "B" + std::to_string(d) + " subdivision seed " + std::to_string(s));
        }
    }
    std::size_t binary = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const Graph& g : all_trees(n)) {
            if (g.max_degree() > 3) continue;
            ++binary;
            const auto r = chromatic_number(g);
            t.expect(r.status == SolveStatus::exact && r.chi >= binary_tree_lower_bound(n),
                     "binary tree with " + std::to_string(n) + " vertices");
        }
    }
    return finish(8, "Lower bounds for complete binary subdivisions and binary trees", t,
                  {{"subdivisions_solved", solved}, {"subdivisions_unsolved", unsolved}, {"binary_trees", binary}},
                  start,
                  std::to_string(solved) + " subdivisions and " + std::to_string(binary) + " binary trees");
}

// ---- 9: MSO ----------------------------------------------------------------

CriterionResult mso_suite(const ReproduceOptions&) {
    const auto start = Clock::now();
    Tally t;
    std::vector<std::size_t> lengths;
    json rows = json::array();
    for (std::size_t k = 1; k <= 10; ++k) {
        const auto s = mso::emit_parity_colourable(k);
        const auto report = mso::structural_check(s.ast, k);
        const std::string name = "k=" + std::to_string(k);
        t.expect(report.ok(), name + " structural check");
        t.expect(report.exclusion_clauses == k * (k - 1) / 2, name + " exclusion clauses");
        t.expect(report.oddtimes == k, name + " Oddtimes disjuncts");
        for (auto syntax : {mso::Syntax::sexpr, mso::Syntax::text}) {
            const std::string text = mso::render(s.ast, syntax);
            t.expect(mso::parse(text, syntax) == s.ast, name + " round trip");
            const auto plain = mso::strip_macros(s.ast);
            t.expect(mso::parse(mso::render(plain, syntax), syntax) == plain, name + " round trip without macros");
        }
        lengths.push_back(mso::render(mso::strip_macros(s.ast), mso::Syntax::sexpr).size());
        rows.push_back({{"k", k},
                        {"exclusion_clauses", report.exclusion_clauses},
                        {"oddtimes", report.oddtimes},
                        {"size", report.size},
                        {"sexpr_length", lengths.back()}});
    }
    for (std::size_t i = 2; i < lengths.size(); ++i) {
        const long long second = static_cast<long long>(lengths[i]) - 2 * static_cast<long long>(lengths[i - 1]) +
                                 static_cast<long long>(lengths[i - 2]);
        t.expect(second > 0, "serialized length not convex at k=" + std::to_string(i + 1));
    }
    return finish(9, "MSO sentence structure and round trips", t, {{"sentences", rows}}, start,
                  "k = 1..10 checked in both syntaxes");
}

// ---- 10: solver vs brute force ---------------------------------------------

CriterionResult oracle_equivalence(const ReproduceOptions& options) {
    const auto start = Clock::now();
    Tally t;
    std::size_t graphs = 0;
    auto compare = [&](const Graph& g, const std::string& name) {
        ++graphs;
        const auto fast = chromatic_number(g);
        const auto slow = brute_force_chromatic(g, g.order());
        t.expect(slow && fast.status == SolveStatus::exact && fast.chi == slow->chi, name);
    };
    const std::size_t tree_max = options.quick ? 8 : 10;
    for (std::size_t n = 1; n <= tree_max; ++n) {
        std::size_t i = 0;
        for (const Graph& g : all_trees(n)) compare(g, "tree n=" + std::to_string(n) + " #" + std::to_string(i++));
    }
    for (std::size_t n = 1; n <= 10; ++n) compare(make_path(n), "P" + std::to_string(n));
    for (std::size_t n = 3; n <= 10; ++n) compare(make_cycle(n), "C" + std::to_string(n));
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> size(2, 8);
    std::uniform_real_distribution<double> density(0.2, 0.8);
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = size(rng);
        compare(random_connected_graph(n, density(rng), rng), "random graph #" + std::to_string(i));
    }
    return finish(10, "Exact solver against brute force", t, {{"graphs", graphs}}, start,
                  std::to_string(graphs) + " graphs agree");
}

}  // namespace

CriterionResult run_criterion(int id, const ReproduceOptions& options) {
    switch (id) {
        case 1: return exact_values(options);
        case 2: return constructions(options);
        case 3: return minor_monotonicity(options);
        case 4: return safflower_sweep(options);
        case 5: return partition_inequality(options);
        case 6: return extremal_suite(options);
        case 7: return reduction_suite(options);
        case 8: return lower_bounds(options);
        case 9: return mso_suite(options);
        case 10: return oracle_equivalence(options);
        default: throw InvalidParameter("criterion id must be in 1..10");
    }
}

std::vector<CriterionResult> run_all_criteria(const ReproduceOptions& options) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
    return out;
}

std::string report_markdown(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    out << "| # | Criterion | Result | Summary | Seconds |\n|---|---|---|---|---|\n";
    for (const auto& r : results) {
        out << "| " << r.id << " | " << r.title << " | " << (r.passed ? "pass" : "FAIL") << " | " << r.summary << " | "
            << std::fixed;
        out.precision(2);
        out << r.seconds << " |\n";
    }
    return out.str();
}

json report_json(const std::vector<CriterionResult>& results) {
    json criteria = json::array();
    json timing = json::object();
    bool all = true;
    for (const auto& r : results) {
        criteria.push_back({{"id", r.id},
                            {"title", r.title},
                            {"passed", r.passed},
                            {"summary", r.summary},
                            {"details", r.details}});
        timing[std::to_string(r.id)] = r.seconds;
        all = all && r.passed;
    }
    return {{"passed", all}, {"criteria", criteria}, {"timing", timing}};
}

}  // namespace pvc

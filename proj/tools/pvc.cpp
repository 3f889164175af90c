// pvc: parity vertex colouring toolkit.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pvc/constructions.hpp"
#include "pvc/errors.hpp"
#include "pvc/extremal.hpp"
#include "pvc/io.hpp"
#include "pvc/mso.hpp"
#include "pvc/reduction.hpp"
#include "pvc/reproduce.hpp"
#include "pvc/safflower.hpp"
#include "pvc/solver.hpp"

using nlohmann::json;
using namespace pvc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIndeterminate = 3;
constexpr int kExitInternal = 4;

struct Globals {
    bool json = false;
    std::uint64_t seed = 0;
    std::optional<double> budget;
    std::string out;
};

/// What a command produced: human-readable text, the machine-readable result, and the exit code.
struct Outcome {
    int code = kExitOk;
    std::string text;
    json result = json::object();
    std::string status = "ok";
};

/// FNV-1a over the input files, so reports identify exactly what was read.
std::string digest(const std::vector<std::string>& paths) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& p : paths) {
        std::ifstream in(p, std::ios::binary);
        for (char c; in.get(c);) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ULL;
        }
        h ^= 0xff;
        h *= 1099511628211ULL;
    }
    std::ostringstream s;
    s << std::hex << h;
    return s.str();
}

json path_json(const std::vector<Vertex>& vs) {
    json a = json::array();
    for (Vertex v : vs) a.push_back(v + 1);
    return a;
}

SearchBudget search_budget(const Globals& g) {
    return g.budget ? SearchBudget::with_seconds(*g.budget) : SearchBudget{};
}

// ---- commands --------------------------------------------------------------

Outcome cmd_gen(const std::string& family, std::size_t size, std::size_t max_length, const Globals& g) {
    Outcome o;
    if (family == "path") {
        o.text = graph_to_string(make_path(size));
    } else if (family == "cycle") {
        o.text = graph_to_string(make_cycle(size));
    } else if (family == "star") {
        o.text = graph_to_string(make_star(size));
    } else if (family == "binary") {
        o.text = tree_to_string(make_complete_binary_tree(size));
    } else if (family == "t33") {
        o.text = tree_to_string(make_t33());
    } else if (family == "subdivide") {
        o.text = tree_to_string(subdivide_random(make_complete_binary_tree(size), g.seed, max_length));
    } else {
        throw InvalidParameter("unknown family '" + family + "'");
    }
    o.result = {{"family", family}, {"size", size}, {"graph", o.text}};
    return o;
}

Outcome cmd_solve(const std::string& path, bool oracle, const Globals& g) {
    const GraphFile file = read_graph_file(path);
    Outcome o;
    ChromaticResult r;
    if (oracle) {
        auto b = brute_force_chromatic(file.graph, file.graph.order());
        if (!b) throw InternalError("brute force found no colouring");
        r = *b;
    } else {
        SolverOptions options;
        options.time_budget_seconds = g.budget;
        r = chromatic_number(file.graph, options);
    }
    const bool exact = r.status == SolveStatus::exact;
    o.status = exact ? "exact" : "bounds";
    o.result = {{"status", o.status},
                {"chi", r.chi},
                {"lower", r.lo},
                {"upper", r.hi},
                {"witness", colouring_to_json(r.witness)},
                {"nodes", r.nodes}};
    std::ostringstream t;
    if (exact) {
        t << "chi = " << r.chi << "\n";
    } else {
        t << r.lo << " <= chi <= " << r.hi << " (budget exhausted)\n";
    }
    t << colouring_to_string(r.witness);
    o.text = t.str();
    return o;
}

Outcome cmd_verify(const std::string& graph_path, const std::string& colouring_path, const Globals& g) {
    const GraphFile file = read_graph_file(graph_path);
    const Colouring c = read_colouring_file(colouring_path);
    require_compatible(file.graph, c);
    const VerifyResult r = is_parity_vertex_colouring(file.graph, c, search_budget(g));
    Outcome o;
    switch (r.verdict) {
        case Verdict::valid:
            o.status = "valid";
            o.text = "valid parity vertex colouring\n";
            break;
        case Verdict::invalid: {
            o.status = "invalid";
            o.code = kExitFailure;
            std::ostringstream t;
            t << "invalid: parity path";
            for (Vertex v : r.certificate->path.vertices) t << ' ' << v + 1;
            t << "\n";
            o.text = t.str();
            o.result["certificate"] = certificate_to_json(*r.certificate);
            break;
        }
        case Verdict::indeterminate:
            o.status = "indeterminate";
            o.code = kExitIndeterminate;
            o.text = "indeterminate: search budget exhausted\n";
            break;
    }
    o.result["verdict"] = o.status;
    o.result["expansions"] = r.expansions;
    return o;
}

Outcome cmd_colour(const std::string& what, const std::string& arg) {
    ColouringWithBound c;
    if (what == "path" || what == "cycle") {
        const std::size_t n = std::stoul(arg);
        c = what == "path" ? colour_path(n) : colour_cycle(n);
    } else if (what == "tree") {
        c = colour_tree_centroid(read_graph_file(arg).graph);
    } else {
        throw InvalidParameter("colour: expected path, cycle or tree");
    }
    Outcome o;
    o.text = colouring_to_string(c.colouring);
    o.result = {{"colouring", colouring_to_json(c.colouring)}, {"claimed_bound", c.claimed_bound}};
    return o;
}

Outcome cmd_safflower(const std::string& tree_path, const std::string& colouring_path) {
    const GraphFile file = read_graph_file(tree_path);
    if (!file.tree) throw InvalidInput("safflower: the graph file must describe a rooted tree (r/t lines)");
    const RootedBinaryTree& tree = *file.tree;
    const Colouring c = read_colouring_file(colouring_path);
    const Safflower saff = build_main_safflower(tree, c);
    const SafflowerAudit audit = audit_safflower(tree, c);

    Outcome o;
    json trees = json::array();
    for (const auto& t : saff.trees) {
        trees.push_back({{"root", t.root + 1},
                         {"nice_colour", t.nice_colour},
                         {"vertices", path_json(t.vertices)},
                         {"nice_vertices", path_json(t.nice_vertices)}});
    }
    o.result = {{"stem", path_json(saff.stem)},
                {"trees", trees},
                {"num_nice", saff.num_nice()},
                {"violations", audit.total()}};
    std::ostringstream t;
    t << "stem:";
    for (Vertex v : saff.stem) t << ' ' << v + 1;
    t << "\nNum = " << saff.num_nice() << ", violations = " << audit.total() << "\n";
    if (tree.has_main_marks()) {
        const auto cert = nice_count_certificate(tree, c);
        o.result["certificate"] = cert.to_json();
        t << "subdivision of B_" << cert.d << ": k = " << cert.k << " >= " << cert.bound << "\n";
    }
    o.text = t.str();
    if (audit.total() != 0) {
        o.code = kExitFailure;
        o.status = "violations";
    }
    return o;
}

Outcome cmd_extremal_table(std::size_t lmax) {
    const ExtremalTable table(lmax);
    Outcome o;
    std::ostringstream t;
    t << "l";
    for (std::size_t d = 0; d <= lmax; ++d) t << "\td=" << d;
    t << "\n";
    json rows = json::array();
    for (std::size_t l = 0; l <= lmax; ++l) {
        t << l;
        json row = json::array();
        for (std::size_t d = 0; d <= lmax; ++d) {
            const std::string v = table.at(l, d).value.str();
            t << "\t" << v;
            row.push_back(v);
        }
        t << "\n";
        rows.push_back(row);
    }
    o.text = t.str();
    o.result = {{"lmax", lmax}, {"A", rows}, {"consistent", table.consistent()}};
    if (!table.consistent()) {
        o.code = kExitFailure;
        o.status = "inconsistent";
    }
    return o;
}

Outcome from_criterion(const CriterionResult& r) {
    Outcome o;
    o.text = std::string(r.passed ? "pass" : "FAIL") + ": " + r.summary + "\n";
    o.result = r.details;
    if (!r.passed) {
        o.code = kExitFailure;
        o.status = "failed";
    }
    return o;
}

Outcome cmd_gadget_build(const std::string& path, const Globals& g) {
    const GadgetInstance gadget = build_hampath_gadget(read_graph_file(path).graph);
    Outcome o;
    const std::string graph_text = graph_to_string(gadget.host);
    const std::string colouring_text = colouring_to_string(gadget.colouring);
    if (!g.out.empty()) {
        // Two files: the graph at --out and the colouring next to it.
        std::ofstream(g.out + ".col") << colouring_text;
        o.text = graph_text;
    } else {
        o.text = graph_text + colouring_text;
    }
    o.result = {{"vertices", gadget.host.order()},
                {"edges", gadget.host.size()},
                {"colouring", colouring_to_json(gadget.colouring)},
                {"invariant_violations", gadget_invariant_violations(gadget)}};
    return o;
}

Outcome cmd_gadget_verify(const std::string& path, const Globals& g) {
    const Graph source = read_graph_file(path).graph;
    const ReductionReport r = check_reduction_equivalence(source, search_budget(g));
    Outcome o;
    o.status = to_string(r.status);
    o.result = {{"status", o.status}, {"hamiltonian", r.hamiltonian}, {"details", r.details}};
    if (r.hamiltonian_path) o.result["hamiltonian_path"] = path_json(r.hamiltonian_path->vertices);
    if (r.searched_certificate) o.result["searched_certificate"] = certificate_to_json(*r.searched_certificate);
    if (r.stitched_certificate) {
        o.result["stitched_certificate"] = certificate_to_json(*r.stitched_certificate);
        o.result["stitched_valid"] = r.stitched_valid;
    }
    o.result["expansions"] = r.expansions;
    // The report is JSON either way.
    o.text = o.result.dump(2) + "\n";
    if (r.status == ReductionStatus::inconsistent) o.code = kExitFailure;
    if (r.status == ReductionStatus::inconclusive) o.code = kExitIndeterminate;
    return o;
}

mso::Syntax syntax_of(const std::string& s) {
    if (s == "sexpr") return mso::Syntax::sexpr;
    if (s == "text") return mso::Syntax::text;
    throw InvalidParameter("syntax must be sexpr or text");
}

Outcome cmd_mso_emit(std::size_t k, const std::string& syntax) {
    const auto s = mso::emit_parity_colourable(k);
    const auto report = mso::structural_check(s.ast, k);
    Outcome o;
    o.text = mso::render(s.ast, syntax_of(syntax)) + "\n";
    o.result = {{"k", k},
                {"syntax", syntax},
                {"grammar_version", mso::kGrammarVersion},
                {"sentence", mso::render(s.ast, syntax_of(syntax))},
                {"exclusion_clauses", report.exclusion_clauses},
                {"oddtimes", report.oddtimes},
                {"size", report.size}};
    return o;
}

Outcome cmd_mso_check(const std::string& path, const std::string& syntax, std::size_t k) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto f = mso::parse(buf.str(), syntax_of(syntax));
    const auto report = mso::structural_check(f, k);
    Outcome o;
    o.result = {{"ok", report.ok()},
                {"diagnostics", report.diagnostics},
                {"set_variables", report.set_variables},
                {"exclusion_clauses", report.exclusion_clauses},
                {"oddtimes", report.oddtimes},
                {"size", report.size}};
    std::ostringstream t;
    t << (report.ok() ? "ok" : "FAIL") << ": " << report.exclusion_clauses << " exclusion clauses, " << report.oddtimes
      << " Oddtimes, size " << report.size << "\n";
    for (const auto& d : report.diagnostics) t << "  " << d << "\n";
    o.text = t.str();
    if (!report.ok()) {
        o.code = kExitFailure;
        o.status = "failed";
    }
    return o;
}

Outcome cmd_reproduce(bool quick, const Globals& g) {
    ReproduceOptions options;
    options.quick = quick;
    options.seed = g.seed;
    const auto results = run_all_criteria(options);
    Outcome o;
    o.text = report_markdown(results);
    o.result = report_json(results);
    if (!o.result["passed"].get<bool>()) {
        o.code = kExitFailure;
        o.status = "failed";
    }
    return o;
}

int emit(const Outcome& o, const std::string& command, const std::vector<std::string>& inputs, const Globals& g,
         double seconds) {
    std::string body;
    if (g.json) {
        json report = {{"command", command},
                       {"seed", g.seed},
                       {"inputs_digest", digest(inputs)},
                       {"status", o.status},
                       {"result", o.result},
                       {"timing", {{"wall_seconds", seconds}}}};
        body = report.dump(2) + "\n";
    } else {
        body = o.text;
    }
    if (g.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream file(g.out);
        if (!file) throw InvalidInput("cannot write " + g.out);
        file << body;
    }
    return o.code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parity vertex colouring toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable JSON output");
    app.add_option("--seed", g.seed, "Seed for randomised commands")->capture_default_str();
    app.add_option("--budget", g.budget, "Time budget in seconds")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "Write the primary output to FILE");

    std::string command;
    std::vector<std::string> inputs;
    std::function<Outcome()> run;

    auto* gen = app.add_subcommand("gen", "Generate a graph file");
    std::string family;
    std::size_t size = 0;
    std::size_t max_length = kDefaultMaxSubdivisionLength;
    gen->add_option("family", family, "path | cycle | star | binary | t33 | subdivide")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "star", "binary", "t33", "subdivide"}));
    gen->add_option("size", size, "n for path/cycle, leaves for star, d for binary/subdivide");
    gen->add_option("--max-length", max_length, "Longest replacement path for subdivide")->capture_default_str();
    gen->callback([&] { run = [&] { return cmd_gen(family, size, max_length, g); }; });

    auto* solve = app.add_subcommand("solve", "Compute the parity chromatic number");
    std::string graph_path;
    bool oracle = false;
    solve->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
    solve->add_flag("--oracle", oracle, "Use the brute-force oracle instead of the solver");
    solve->callback([&] {
        inputs = {graph_path};
        run = [&] { return cmd_solve(graph_path, oracle, g); };
    });

    auto* verify = app.add_subcommand("verify", "Check a colouring; exit 1 with a parity path if invalid");
    std::string colouring_path;
    verify->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
    verify->add_option("colouring", colouring_path)->required()->check(CLI::ExistingFile);
    verify->callback([&] {
        inputs = {graph_path, colouring_path};
        run = [&] { return cmd_verify(graph_path, colouring_path, g); };
    });

    auto* colour = app.add_subcommand("colour", "Constructive colourings");
    std::string colour_kind;
    std::string colour_arg;
    colour->add_option("kind", colour_kind, "path | cycle | tree")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "tree"}));
    colour->add_option("arg", colour_arg, "n for path/cycle, a tree file for tree")->required();
    colour->callback([&] { run = [&] { return cmd_colour(colour_kind, colour_arg); }; });

    auto* saff = app.add_subcommand("safflower", "Extract and audit the main safflower of a coloured rooted tree");
    saff->add_option("tree", graph_path)->required()->check(CLI::ExistingFile);
    saff->add_option("colouring", colouring_path)->required()->check(CLI::ExistingFile);
    saff->callback([&] {
        inputs = {graph_path, colouring_path};
        run = [&] { return cmd_safflower(graph_path, colouring_path); };
    });

    auto* extremal = app.add_subcommand("extremal", "A(l, d) table and cross-checks");
    extremal->require_subcommand(1);
    auto* table = extremal->add_subcommand("table", "TSV of A(l, d)");
    std::size_t lmax = 10;
    table->add_option("--lmax", lmax)->capture_default_str()->check(CLI::Range(0, 200));
    table->callback([&] { run = [&] { return cmd_extremal_table(lmax); }; });
    auto* echeck = extremal->add_subcommand("check", "Run every extremal cross-validation");
    bool quick = false;
    echeck->add_flag("--quick", quick, "Skip the brute force at l = 5");
    echeck->callback([&] {
        run = [&] {
            ReproduceOptions options;
            options.quick = quick;
            options.seed = g.seed;
            return from_criterion(run_criterion(6, options));
        };
    });

    auto* gadget = app.add_subcommand("gadget", "Hamiltonian-path gadget");
    gadget->require_subcommand(1);
    auto* gbuild = gadget->add_subcommand("build", "Emit the gadget graph and colouring");
    gbuild->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
    gbuild->callback([&] {
        inputs = {graph_path};
        run = [&] { return cmd_gadget_build(graph_path, g); };
    });
    auto* gverify = gadget->add_subcommand("verify", "JSON report on the equivalence for one graph");
    gverify->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
    gverify->callback([&] {
        inputs = {graph_path};
        run = [&] { return cmd_gadget_verify(graph_path, g); };
    });

    auto* mso_cmd = app.add_subcommand("mso", "ParityColorable_k sentence");
    mso_cmd->require_subcommand(1);
    auto* memit = mso_cmd->add_subcommand("emit", "Print the sentence");
    std::size_t k = 1;
    std::string syntax = "text";
    memit->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    memit->add_option("--syntax", syntax)->capture_default_str()->check(CLI::IsMember({"sexpr", "text"}));
    memit->callback([&] { run = [&] { return cmd_mso_emit(k, syntax); }; });
    auto* mcheck = mso_cmd->add_subcommand("check", "Parse a sentence file and run the structural checks");
    std::string sentence_path;
    std::size_t expect_k = 0;
    mcheck->add_option("file", sentence_path)->required()->check(CLI::ExistingFile);
    mcheck->add_option("--syntax", syntax)->capture_default_str()->check(CLI::IsMember({"sexpr", "text"}));
    mcheck->add_option("--k", expect_k, "Also check the counts expected for this k");
    mcheck->callback([&] {
        inputs = {sentence_path};
        run = [&] { return cmd_mso_check(sentence_path, syntax, expect_k); };
    });

    auto* reproduce = app.add_subcommand("reproduce", "Run the acceptance suite; Markdown, or JSON with --json");
    reproduce->add_flag("--quick", quick, "Smaller sweeps");
    reproduce->callback([&] { run = [&] { return cmd_reproduce(quick, g); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    for (auto* sub : app.get_subcommands()) {
        command = sub->get_name();
        for (auto* inner : sub->get_subcommands()) command += " " + inner->get_name();
    }
    const auto start = std::chrono::steady_clock::now();
    try {
        const Outcome o = run();
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return emit(o, command, inputs, g, seconds);
    } catch (const pvc::ParseError& e) {
        std::cerr << "pvc: parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "pvc: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "pvc: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "pvc: internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

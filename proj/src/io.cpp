#include "pvc/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "pvc/errors.hpp"

namespace pvc {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    return in;
}

std::size_t parse_index(const std::string& tok, std::size_t line, std::size_t limit) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
    if (value < 1 || value > limit) throw ParseError(line, "index " + tok + " out of range");
    return static_cast<std::size_t>(value - 1);
}

}  // namespace

void write_graph(std::ostream& out, const Graph& g) {
    const auto es = g.edges();
    out << "p edge " << g.order() << ' ' << es.size() << '\n';
    for (const Edge& e : es) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

void write_tree(std::ostream& out, const RootedBinaryTree& tree) {
    write_graph(out, tree.to_graph());
    out << "r " << tree.root() + 1 << '\n';
    for (Vertex v = 0; v < tree.order(); ++v) {
        if (auto p = tree.parent(v)) out << "t " << v + 1 << ' ' << *p + 1 << '\n';
    }
    if (tree.has_main_marks()) {
        for (Vertex v = 0; v < tree.order(); ++v)
            if (tree.is_main(v)) out << "m " << v + 1 << '\n';
    }
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream ss;
    write_graph(ss, g);
    return ss.str();
}

std::string tree_to_string(const RootedBinaryTree& tree) {
    std::ostringstream ss;
    write_tree(ss, tree);
    return ss.str();
}

GraphFile read_graph(std::istream& in) {
    std::string raw;
    std::size_t line = 0;
    std::optional<std::size_t> n;
    std::size_t m = 0;
    std::vector<Edge> edges;
    std::optional<Vertex> root;
    std::map<Vertex, Vertex> parent_of;
    std::vector<Vertex> marks;
    while (std::getline(in, raw)) {
        ++line;
        std::istringstream ls(raw);
        std::string tag;
        if (!(ls >> tag) || tag[0] == 'c') continue;
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tag == "p") {
            if (n) throw ParseError(line, "duplicate problem line");
            if (tok.size() != 3 || tok[0] != "edge") throw ParseError(line, "expected 'p edge <n> <m>'");
            try {
                n = std::stoull(tok[1]);
                m = std::stoull(tok[2]);
            } catch (const std::exception&) {
                throw ParseError(line, "bad problem line");
            }
            continue;
        }
        if (!n) throw ParseError(line, "missing 'p edge' header");
        if (tag == "e") {
            if (tok.size() != 2) throw ParseError(line, "expected 'e <u> <v>'");
            edges.emplace_back(static_cast<Vertex>(parse_index(tok[0], line, *n)),
                               static_cast<Vertex>(parse_index(tok[1], line, *n)));
        } else if (tag == "r") {
            if (tok.size() != 1 || root) throw ParseError(line, "expected a single 'r <root>'");
            root = static_cast<Vertex>(parse_index(tok[0], line, *n));
        } else if (tag == "t") {
            if (tok.size() != 2) throw ParseError(line, "expected 't <child> <parent>'");
            const auto child = static_cast<Vertex>(parse_index(tok[0], line, *n));
            const auto par = static_cast<Vertex>(parse_index(tok[1], line, *n));
            if (!parent_of.emplace(child, par).second) throw ParseError(line, "vertex has two parents");
        } else if (tag == "m") {
            if (tok.size() != 1) throw ParseError(line, "expected 'm <v>'");
            marks.push_back(static_cast<Vertex>(parse_index(tok[0], line, *n)));
        } else {
            throw ParseError(line, "unknown line type '" + tag + "'");
        }
    }
    if (!n) throw ParseError(line, "empty graph file");
    if (edges.size() != m) throw ParseError(line, "edge count does not match header");

    GraphFile out{Graph(*n, edges), std::nullopt};
    if (root || !parent_of.empty() || !marks.empty()) {
        if (!root) throw ParseError(line, "tree lines without 'r <root>'");
        std::vector<std::vector<Vertex>> children(*n);
        for (const auto& [child, par] : parent_of) {
            if (!out.graph.adjacent(child, par)) throw InvalidInput("tree edge missing from edge list");
            children[par].push_back(child);
        }
        if (parent_of.size() + 1 != *n || out.graph.size() + 1 != *n) {
            throw InvalidInput("rooted tree needs n - 1 parent lines and n - 1 edges");
        }
        std::vector<bool> main;
        if (!marks.empty()) {
            main.assign(*n, false);
            for (Vertex v : marks) main[v] = true;
        }
        out.tree = RootedBinaryTree(*root, std::move(children), std::move(main));
    }
    return out;
}

GraphFile read_graph_file(const std::string& path) {
    auto in = open_input(path);
    return read_graph(in);
}

GraphFile parse_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

void write_colouring(std::ostream& out, const Colouring& c) {
    out << "k " << c.k() << '\n';
    for (Vertex v = 0; v < c.size(); ++v) out << "v " << v + 1 << ' ' << c[v] << '\n';
}

std::string colouring_to_string(const Colouring& c) {
    std::ostringstream ss;
    write_colouring(ss, c);
    return ss.str();
}

Colouring read_colouring(std::istream& in) {
    std::string raw;
    std::size_t line = 0;
    std::optional<std::size_t> k;
    std::map<std::size_t, Colour> assignment;
    while (std::getline(in, raw)) {
        ++line;
        std::istringstream ls(raw);
        std::string tag;
        if (!(ls >> tag) || tag[0] == 'c') continue;
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tag == "k") {
            if (k || tok.size() != 1) throw ParseError(line, "expected a single 'k <k>'");
            try {
                k = std::stoull(tok[0]);
            } catch (const std::exception&) {
                throw ParseError(line, "bad colour count");
            }
        } else if (tag == "v") {
            if (!k) throw ParseError(line, "missing 'k' header");
            if (tok.size() != 2) throw ParseError(line, "expected 'v <vertex> <colour>'");
            const std::size_t v = parse_index(tok[0], line, std::size_t{1} << 31);
            const auto colour = static_cast<Colour>(parse_index(tok[1], line, *k) + 1);
            if (!assignment.emplace(v, colour).second) throw ParseError(line, "vertex coloured twice");
        } else {
            throw ParseError(line, "unknown line type '" + tag + "'");
        }
    }
    if (!k) throw ParseError(line, "empty colouring file");
    std::vector<Colour> colours(assignment.size());
    for (const auto& [v, c] : assignment) {
        if (v >= colours.size()) throw InvalidInput("colouring is not total: vertex ids are not contiguous");
        colours[v] = c;
    }
    return Colouring(*k, std::move(colours));
}

Colouring read_colouring_file(const std::string& path) {
    auto in = open_input(path);
    return read_colouring(in);
}

Colouring parse_colouring(const std::string& text) {
    std::istringstream in(text);
    return read_colouring(in);
}

nlohmann::json certificate_to_json(const ParityPathCertificate& cert) {
    nlohmann::json vertices = nlohmann::json::array();
    for (Vertex v : cert.path.vertices) vertices.push_back(v + 1);
    return {{"type", "parity_path"}, {"vertices", vertices}};
}

nlohmann::json colouring_to_json(const Colouring& c) {
    return {{"k", c.k()}, {"colours", c.colours()}};
}

}  // namespace pvc

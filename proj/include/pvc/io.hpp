#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "pvc/graph.hpp"
#include "pvc/parity.hpp"

namespace pvc {

// Graph text format (ids 1-indexed on disk):
//
//   p edge <n> <m>
//   e <u> <v>            m lines, u < v, ascending lexicographic order
//   r <root>             rooted trees only
//   t <child> <parent>   rooted trees only, one per non-root vertex, ascending child
//   m <v>                main-vertex marks of a subdivision, ascending
//
// Lines starting with `c` are comments and are ignored on input.

struct GraphFile {
    Graph graph;
    std::optional<RootedBinaryTree> tree;
};

void write_graph(std::ostream& out, const Graph& g);
void write_tree(std::ostream& out, const RootedBinaryTree& tree);
std::string graph_to_string(const Graph& g);
std::string tree_to_string(const RootedBinaryTree& tree);

/// Throws ParseError on malformed input and InvalidInput on structural violations.
GraphFile read_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);
GraphFile parse_graph(const std::string& text);

// Colouring text format:
//
//   k <k>
//   v <vertex> <colour>  one line per vertex, 1-indexed vertex, ascending

void write_colouring(std::ostream& out, const Colouring& c);
std::string colouring_to_string(const Colouring& c);
Colouring read_colouring(std::istream& in);
Colouring read_colouring_file(const std::string& path);
Colouring parse_colouring(const std::string& text);

/// {"type":"parity_path","vertices":[1-indexed ids]}
nlohmann::json certificate_to_json(const ParityPathCertificate& cert);
/// {"k":k,"colours":[colour of vertex 1, ...]}
nlohmann::json colouring_to_json(const Colouring& c);

}  // namespace pvc

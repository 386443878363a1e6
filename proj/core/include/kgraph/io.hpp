#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "kgraph/collections.hpp"
#include "kgraph/exhaustive.hpp"
#include "kgraph/graph.hpp"

namespace kgraph {

// Graph files are JSON:
//   {"k": 2, "vertices": ["v"],
//    "edges": [{"id": "a", "color": 1, "range": "v", "source": "v"}, ...],
//    "squares": [[["a","b"],["b","a"]], ...]}
// A square [[e,f],[f2,e2]] means e·f = f2·e2 with colour(e) < colour(f).
// Colours are 1-based. Vertex sets are finite.

/// Throws ParseError (with line or field) on malformed input. Does not
/// validate the k-graph axioms.
GraphSpec parse_graph_spec(std::string_view text);
std::string graph_spec_to_json(const GraphSpec& spec);

/// load() validates and throws GraphError with the validation summary.
KGraph load_graph(const std::filesystem::path& path);
KGraph graph_from_json(std::string_view text);
void save_graph(const KGraph& g, const std::filesystem::path& path);
std::string graph_to_json(const KGraph& g);

// Collection literals. A member is one of
//   ["a1", "b2"]                              edges, vertex inferred
//   {"vertex": "v", "edges": ["a1", "b2"]}
//   {"vertex": "v", "paths": [["a1"], ["a2", "b1"]]}
// and a collection is either an array of members or
//   {"kind": "efficient", "members": [...]}.

FESet parse_fe_set(const KGraph& g, std::string_view text);
EdgeSet parse_edge_set(const KGraph& g, std::string_view text);
Collection parse_collection(const KGraph& g, std::string_view text);
/// Throws ParseError if a member contains a path that is not an edge.
EdgeCollection parse_edge_collection(const KGraph& g, std::string_view text);
Collection load_collection(const KGraph& g, const std::filesystem::path& path);

std::string fe_set_to_json(const KGraph& g, const FESet& e);
std::string edge_set_to_json(const KGraph& g, const EdgeSet& e);
std::string collection_to_json(const KGraph& g, const Collection& c);
std::string collection_to_json(const KGraph& g, const EdgeCollection& c,
                               CollectionKind kind = CollectionKind::Raw);

/// Graphviz digraph of the skeleton; edges point from source to range.
std::string to_dot(const KGraph& g);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace kgraph

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kgraph/collections.hpp"
#include "kgraph/degree.hpp"
#include "kgraph/graph.hpp"

namespace kgraph {

struct Fixture {
  std::string name;
  KGraph graph;
  std::string note;  // which example the graph realises
};

/// Ω_{k,m}: vertices n <= m named "(n1,...,nk)", one colour-i edge from
/// n+e_i to n named "(range,source)".
GraphSpec omega_spec(const Degree& m);
KGraph omega(const Degree& m);

/// One vertex "v", m edges of colour 1 and n of colour 2 with the flip
/// squares a_i b_j = b_j a_i. Single edges are named "a" / "b", otherwise
/// "a1".."am" / "b1".."bn".
GraphSpec loops_spec(std::size_t m, std::size_t n);
KGraph loops(std::size_t m, std::size_t n);

/// 1-graphs.
KGraph one_edge();                  // v <-e- w
KGraph chain(std::size_t length);   // v0 <- v1 <- ... <- v_length
KGraph fan(std::size_t width);      // v <- w1, ..., v <- w_width
KGraph rose(std::size_t petals);    // one vertex, `petals` loops
KGraph multi_edge(std::size_t count);  // count parallel edges v <- w

/// A 2-graph with vertices v, w: loops b at v and c at w of colour 2, an
/// edge e : w -> v of colour 1, and the square e·c = b·e.
KGraph two_vertex();

/// {vΛ^{e_i} : v ∈ Λ⁰} with empty members dropped. Colour is 1-based.
EdgeCollection color_collection(const KGraph& g, std::size_t color);
/// {vΛ^{e_1}, vΛ^{e_2} : v ∈ Λ⁰}.
EdgeCollection two_color_collection(const KGraph& g);
/// {vΛ^{e_1} ∪ vΛ^{e_2} : v ∈ Λ⁰}.
EdgeCollection union_color_collection(const KGraph& g);
/// {vΛ¹ : v not a source}.
EdgeCollection all_edges_collection(const KGraph& g);

/// Searches single-vertex 2-graphs with at most `max_edges` edges of each
/// colour, over every complete square set, for one on which
/// {vΛ^{e_1}, vΛ^{e_2}} fails (E3).
std::optional<KGraph> find_e3_failure(std::size_t max_edges = 2);

struct RandomOptions {
  std::size_t k = 2;
  std::size_t vertices = 4;
  double density = 0.4;
  std::uint64_t seed = 0;
  bool allow_cycles = false;
  std::size_t max_cube_attempts = 200;
  /// k = 3: once the attempts run out, use the completion that splits
  /// walks of the base matrix (relabelled at random) instead of failing.
  bool cube_fallback = true;
};

/// A random k-graph. The adjacency matrices are polynomials in one random
/// 0/1 matrix, so they commute and every complete square set exists; each
/// square bijection is then drawn uniformly, and for k = 3 redrawn until
/// the cube condition holds. Acyclic unless allow_cycles.
/// Vertices "v0", "v1", ...; edges "a0", "a1", ... of colour 1, "b0", ...
/// of colour 2 and "c0", ... of colour 3.
KGraph random_kgraph(const RandomOptions& opts);
GraphSpec random_kgraph_spec(const RandomOptions& opts);

/// Every named fixture, cyclic ones included.
std::vector<Fixture> fixture_catalog();
std::optional<Fixture> find_fixture(const std::string& name);

/// Acyclic graphs with k <= 2 and at most 6 vertices on which the full
/// enumerations are cheap.
std::vector<Fixture> acceptance_corpus();
/// Cyclic fixtures for bounded checks.
std::vector<Fixture> cyclic_corpus();

}  // namespace kgraph

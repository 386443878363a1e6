#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kgraph/graph.hpp"
#include "kgraph/path.hpp"

namespace kgraph {

/// E ⊆ vΛ¹; edges sorted and unique.
struct EdgeSet {
  VertexId vertex = 0;
  std::vector<EdgeId> edges;

  bool empty() const { return edges.empty(); }
  std::size_t size() const { return edges.size(); }
  bool contains(EdgeId e) const;
  bool subset_of(const EdgeSet& other) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;
};

/// E ⊆ vΛ∖{v}; paths sorted and unique.
struct FESet {
  VertexId vertex = 0;
  std::vector<Path> paths;

  bool empty() const { return paths.empty(); }
  std::size_t size() const { return paths.size(); }
  bool contains(const Path& p) const;
  bool subset_of(const FESet& other) const;
  bool edges_only() const;

  friend bool operator==(const FESet&, const FESet&) = default;
  friend auto operator<=>(const FESet& a, const FESet& b) {
    if (auto c = a.vertex <=> b.vertex; c != 0) return c;
    return a.paths <=> b.paths;
  }
};

/// Sorts, dedups and checks r(e) = v for every edge.
EdgeSet make_edge_set(const KGraph& g, VertexId v, std::vector<EdgeId> edges);
/// Sorts, dedups and checks r(λ) = v, d(λ) ≠ 0.
FESet make_fe_set(const KGraph& g, VertexId v, std::vector<Path> paths);

FESet to_fe_set(const KGraph& g, const EdgeSet& e);
/// nullopt if some member is not an edge.
std::optional<EdgeSet> to_edge_set(const FESet& f);

/// vΛ^{e_c} as an edge set.
EdgeSet color_edge_set(const KGraph& g, VertexId v, std::size_t color);
/// vΛ¹ as an edge set.
EdgeSet all_edges_at(const KGraph& g, VertexId v);

/// Exact on every finite graph, cyclic or not. Returns a path λ ∈ vΛ
/// with Λ^min(λ,e) = ∅ for all e ∈ E, or nullopt when E is exhaustive.
std::optional<Path> avoiding_path(const KGraph& g, const EdgeSet& e);
bool is_exhaustive_edges(const KGraph& g, const EdgeSet& e);

struct ExhaustiveVerdict {
  bool exhaustive = false;
  /// False only for a bounded search on a cyclic graph that ran out of depth.
  bool exact = true;
  std::optional<Path> witness;  // an avoiding path when !exhaustive
};

/// Brute force over vΛ. On graphs where v reaches a cycle a length bound
/// is required, and the verdict is exact only if the search was conclusive.
ExhaustiveVerdict is_exhaustive_general(const KGraph& g, const FESet& e,
                                        std::optional<std::uint32_t> length_bound = std::nullopt);

/// Ext_Λ(λ;E) = {ν : λν ∈ MCE(λ,μ) for some μ ∈ E}, straight from the
/// definition. May contain the vertex s(λ) when λ ∈ EΛ.
std::vector<Path> ext_general(const KGraph& g, const Path& lambda, const FESet& e);

/// Ext_Λ(f;E) for an edge f ∉ E, via the square table.
EdgeSet ext_edge(const KGraph& g, EdgeId f, const EdgeSet& e);
/// Ext_Λ(λ;E) for λ ∉ EΛ, by iterating ext_edge along λ.
EdgeSet ext_path(const KGraph& g, const Path& lambda, const EdgeSet& e);
/// Same value computed from MCE sets.
EdgeSet ext_path_direct(const KGraph& g, const Path& lambda, const EdgeSet& e);

/// (ef)(0,d(f)) for composable edges.
EdgeId leading_edge(const KGraph& g, EdgeId e, EdgeId f);
/// E_F = (E∖{e}) ∪ {(ef)(0,d(f)) : f ∈ F}.
EdgeSet substitute(const KGraph& g, const EdgeSet& e_set, EdgeId e, const EdgeSet& f_set);

/// All exhaustive subsets of vΛ¹, sorted. Guarded by a cap on |vΛ¹|.
std::vector<EdgeSet> enumerate_fe_edge_sets(const KGraph& g, VertexId v,
                                            std::size_t max_edges = 20);

struct FEStats {
  std::uint32_t L = 0;
  /// n_by_length[l] = N(E;l) for l = 0..L.
  std::vector<std::size_t> n_by_length;
  /// Number of distinct degrees overall.
  std::size_t n_total = 0;
};
FEStats fe_stats(const FESet& e);

namespace detail {
// Same values without the precondition checks, for inner loops whose
// inputs are known to be valid.
EdgeSet ext_edge_unchecked(const KGraph& g, EdgeId f, const EdgeSet& e);
EdgeSet substitute_unchecked(const KGraph& g, const EdgeSet& e_set, EdgeId e, const EdgeSet& f_set);
}  // namespace detail

std::string to_string(const KGraph& g, const EdgeSet& e);
std::string to_string(const KGraph& g, const FESet& e);

}  // namespace kgraph

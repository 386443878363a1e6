#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kgraph/exhaustive.hpp"
#include "kgraph/graph.hpp"
#include "kgraph/path.hpp"

namespace kgraph {

/// FE(Λ) of an acyclic graph, materialized. At each vertex v the paths of
/// vΛ∖{v} are numbered 0..n_v-1 in canonical order and a finite set of
/// them is a bitmask. Every table needed by Ext, prefixes and
/// concatenation is precomputed once.
class FESpace {
 public:
  using Mask = std::uint64_t;

  struct Limits {
    std::size_t max_local_paths = 20;   // per vertex
    std::size_t max_members = 1u << 21;  // |FE(Λ)|
  };

  /// Throws PreconditionError on cyclic graphs, ResourceLimitError past the limits.
  explicit FESpace(const KGraph& g) : FESpace(g, Limits{}) {}
  FESpace(const KGraph& g, Limits limits);

  const KGraph& graph() const { return *g_; }
  std::size_t vertex_count() const { return local_.size(); }

  /// vΛ∖{v}, sorted.
  const std::vector<Path>& local_paths(VertexId v) const { return local_[v].paths; }
  std::optional<std::size_t> local_index(const Path& p) const;

  bool is_exhaustive(VertexId v, Mask m) const;

  /// Exhaustive masks at v, sorted ascending.
  const std::vector<Mask>& members(VertexId v) const { return local_[v].members; }
  std::size_t member_count() const { return total_; }
  /// Global numbering of FE(Λ); throws PreconditionError for non-members.
  std::size_t id(VertexId v, Mask m) const;
  std::pair<VertexId, Mask> member(std::size_t id) const;

  /// Local paths at v that are edges.
  Mask edge_mask(VertexId v) const { return local_[v].edge_mask; }
  bool edges_only(VertexId v, Mask m) const { return (m & ~edge_mask(v)) == 0; }

  /// λ ∈ EΛ for local λ at v.
  bool in_e_lambda(VertexId v, std::size_t lambda, Mask e) const {
    return (local_[v].prefix_of[lambda] & e) != 0;
  }
  /// Ext_Λ(λ;E) as a mask at s(λ), for λ ∉ EΛ.
  Mask ext(VertexId v, std::size_t lambda, Mask e) const;
  /// λ(0,n) for 0 < n < d(λ), as local indices at v.
  const std::vector<std::size_t>& proper_prefixes(VertexId v, std::size_t lambda) const {
    return local_[v].prefixes[lambda];
  }
  /// λF as a mask at v, for F a mask at s(λ).
  Mask concat(VertexId v, std::size_t lambda, Mask f) const;
  VertexId source_of(VertexId v, std::size_t lambda) const {
    return local_[v].paths[lambda].source();
  }

  FESet to_fe_set(VertexId v, Mask m) const;
  FESet to_fe_set(std::size_t id) const {
    auto [v, m] = member(id);
    return to_fe_set(v, m);
  }
  /// Throws PreconditionError if some path is not local at the set's vertex.
  Mask to_mask(const FESet& e) const;
  Mask to_mask(const EdgeSet& e) const;

 private:
  struct Local {
    std::vector<Path> paths;
    std::vector<Mask> compat;       // compat[λ]: members μ with Λ^min(λ,μ) ≠ ∅
    std::vector<Mask> prefix_of;    // prefix_of[λ]: μ with λ ∈ μΛ
    std::vector<std::vector<Mask>> ext;  // ext[λ][μ] at s(λ)
    std::vector<std::vector<std::size_t>> prefixes;
    std::vector<std::vector<std::size_t>> concat;  // concat[λ][f] for f local at s(λ)
    Mask edge_mask = 0;
    std::vector<Mask> members;
    std::size_t offset = 0;
  };

  const KGraph* g_;
  std::vector<Local> local_;
  std::size_t total_ = 0;
};

}  // namespace kgraph

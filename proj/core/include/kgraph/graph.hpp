#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kgraph {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// ---------------------------------------------------------------------------
// Raw presentation, as read from a file. Colours are 1-based here.
// ---------------------------------------------------------------------------

struct EdgeSpec {
  std::string id;
  std::size_t color = 1;
  std::string range;
  std::string source;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

/// lhs[0]·lhs[1] = rhs[0]·rhs[1], with colour(lhs[0]) < colour(lhs[1]),
/// colour(rhs[0]) = colour(lhs[1]) and colour(rhs[1]) = colour(lhs[0]).
struct SquareSpec {
  std::array<std::string, 2> lhs;
  std::array<std::string, 2> rhs;

  friend bool operator==(const SquareSpec&, const SquareSpec&) = default;
};

struct GraphSpec {
  std::size_t k = 1;
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<SquareSpec> squares;

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

enum class IssueKind {
  BadRank,
  DuplicateVertex,
  DuplicateEdge,
  DanglingVertex,
  BadColor,
  UnknownEdge,
  MalformedSquare,
  DuplicateSquare,
  MissingSquare,
  CubeInconsistency,
};

std::string_view to_string(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool references_resolved = true;
  bool square_bijection_complete = true;
  bool cube_consistent = true;

  bool ok() const { return issues.empty(); }
  bool has(IssueKind kind) const;
  std::string summary() const;
};

/// Checks the k-graph axioms for a skeleton-plus-squares presentation:
/// unique ids, resolved references, colours in range, one square per
/// bi-coloured composable pair in each direction, and (k >= 3) the cube
/// condition on every composable triple of three distinct colours.
ValidationReport validate(const GraphSpec& spec);

// ---------------------------------------------------------------------------
// Validated, immutable k-graph. Colours are 0-based from here on.
// ---------------------------------------------------------------------------

struct Edge {
  std::string name;
  std::size_t color;
  VertexId range;
  VertexId source;
};

class KGraph {
 public:
  /// Throws GraphError carrying the validation summary.
  static KGraph from_spec(const GraphSpec& spec);

  std::size_t rank() const { return k_; }
  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::size_t color(EdgeId e) const { return edges_[e].color; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;
  /// Throw PreconditionError on unknown names.
  VertexId vertex_id(std::string_view name) const;
  EdgeId edge_id(std::string_view name) const;

  /// vΛ^{e_c}, sorted by id.
  std::span<const EdgeId> edges_at(VertexId v, std::size_t color) const;
  /// vΛ^1, sorted by id.
  const std::vector<EdgeId>& edges_at(VertexId v) const { return out_all_.at(v); }

  /// For composable x, y of distinct colours, the unique (y', x') with
  /// xy = y'x', colour(y') = colour(y) and colour(x') = colour(x).
  std::pair<EdgeId, EdgeId> swap(EdgeId x, EdgeId y) const;

  /// Squares as (e, f, f', e') with ef = f'e' and colour(e) < colour(f).
  const std::vector<std::array<EdgeId, 4>>& squares() const { return squares_; }

  GraphSpec to_spec() const;

 private:
  KGraph() = default;

  std::size_t k_ = 1;
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  // out_by_color_[v * k + c]
  std::vector<std::vector<EdgeId>> out_by_color_;
  std::vector<std::vector<EdgeId>> out_all_;
  std::unordered_map<std::uint64_t, std::pair<EdgeId, EdgeId>> swap_;
  std::vector<std::array<EdgeId, 4>> squares_;
};

}  // namespace kgraph

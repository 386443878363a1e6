#pragma once

#include <compare>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/graph.hpp"

namespace kgraph {

/// A morphism of Λ: range vertex plus colour-sorted edge word.
/// Only built through the functions below, so the word is always in
/// normal form and the degree always matches it.
class Path {
 public:
  VertexId range() const { return range_; }
  VertexId source() const { return source_; }
  const Degree& degree() const { return degree_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  bool is_vertex() const { return edges_.empty(); }
  std::size_t length() const { return edges_.size(); }

  /// Ordering used for canonical output: (range, degree, edge word).
  friend bool operator==(const Path& a, const Path& b) {
    return a.range_ == b.range_ && a.edges_ == b.edges_;
  }
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.range_ <=> b.range_; c != 0) return c;
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.edges_ <=> b.edges_;
  }

 private:
  friend struct PathAccess;
  Path(VertexId r, VertexId s, std::vector<EdgeId> word, Degree d)
      : range_(r), source_(s), edges_(std::move(word)), degree_(std::move(d)) {}

  VertexId range_ = 0;
  VertexId source_ = 0;
  std::vector<EdgeId> edges_;
  Degree degree_;
};

struct PathHash {
  std::size_t operator()(const Path& p) const noexcept;
};

Path vertex_path(const KGraph& g, VertexId v);
Path edge_path(const KGraph& g, EdgeId e);

/// Any composable edge word (not necessarily sorted). `range` is needed
/// only for the empty word. Throws PreconditionError if not composable.
Path path_from_word(const KGraph& g, std::span<const EdgeId> word,
                    std::optional<VertexId> range = std::nullopt);

/// Rewrites a composable word so that its colour sequence becomes `target`
/// (a permutation of the word's colours), using squares only.
std::vector<EdgeId> rewrite_to_colors(const KGraph& g, std::vector<EdgeId> word,
                                      std::span<const std::size_t> target);

/// Sorts a composable word into normal form by randomly chosen adjacent
/// swaps. Used to test that the normal form does not depend on the order.
std::vector<EdgeId> normalize_randomized(const KGraph& g, std::vector<EdgeId> word,
                                         std::mt19937_64& rng);

Path compose(const KGraph& g, const Path& a, const Path& b);

/// (λ(0,m), λ(m,d(λ))).
std::pair<Path, Path> factor(const KGraph& g, const Path& p, const Degree& m);

/// λ(m,n) for m <= n <= d(λ).
Path segment(const KGraph& g, const Path& p, const Degree& m, const Degree& n);

/// λ ∈ μΛ.
bool has_prefix(const KGraph& g, const Path& p, const Path& prefix);

/// vΛ^n, sorted.
std::vector<Path> paths_of_degree(const KGraph& g, VertexId v, const Degree& n);

/// vΛ^{≤n}: every path at v of degree at most n, sorted.
std::vector<Path> paths_below(const KGraph& g, VertexId v, const Degree& n);

/// Every path at v with |d| <= max_length, sorted.
std::vector<Path> paths_up_to_length(const KGraph& g, VertexId v, std::uint32_t max_length);

/// vΛ in full. Throws PreconditionError if a cycle is reachable from v.
std::vector<Path> all_paths_from(const KGraph& g, VertexId v);

std::vector<Path> mce(const KGraph& g, const Path& a, const Path& b);
std::vector<std::pair<Path, Path>> lambda_min(const KGraph& g, const Path& a, const Path& b);
/// Λ^min(λ,μ) ≠ ∅.
bool compatible(const KGraph& g, const Path& a, const Path& b);

struct GraphProperties {
  bool row_finite = true;
  bool has_sources = false;
  bool acyclic = true;
  bool finitely_aligned = true;
};

GraphProperties graph_properties(const KGraph& g);
bool is_acyclic(const KGraph& g);
/// Vertices v with vΛ^m = ∅ for some m.
std::vector<VertexId> source_vertices(const KGraph& g);
/// reach[v][w] iff vΛw ≠ ∅ (so reach[v][v] always holds).
std::vector<std::vector<bool>> reachability(const KGraph& g);
/// Length of the longest path in an acyclic graph.
std::uint32_t max_path_length(const KGraph& g);

/// "v" for vertex paths, "[e,f,...]" otherwise.
std::string to_string(const KGraph& g, const Path& p);

}  // namespace kgraph

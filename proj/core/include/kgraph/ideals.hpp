#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "kgraph/boundary.hpp"
#include "kgraph/collections.hpp"
#include "kgraph/graph.hpp"

namespace kgraph {

/// Sorted vertex ids.
using VertexSet = std::vector<VertexId>;

/// v ∈ H and vΛw ≠ ∅ imply w ∈ H.
bool is_hereditary(const KGraph& g, const VertexSet& h);
/// E ∈ v𝓔 with s(E) ⊆ H implies v ∈ H.
bool is_saturated(const KGraph& g, const VertexSet& h, const EdgeCollection& c);

/// Λ∖ΛH as a k-graph, with id maps in both directions.
struct Quotient {
  KGraph graph;
  VertexSet removed;
  std::vector<std::optional<VertexId>> vertex_to_quotient;
  std::vector<std::optional<EdgeId>> edge_to_quotient;
  std::vector<VertexId> vertex_from_quotient;
  std::vector<EdgeId> edge_from_quotient;

  EdgeSet to_quotient(const EdgeSet& e) const;
  EdgeSet from_quotient(const EdgeSet& e) const;
  EdgeCollection to_quotient(const EdgeCollection& c) const;
  EdgeCollection from_quotient(const EdgeCollection& c) const;
};

/// Throws PreconditionError unless H is hereditary.
Quotient quotient_graph(const KGraph& g, const VertexSet& h);

/// 𝓔_H = {E∖EH : E ∈ 𝓔, r(E) ∉ H}, in quotient ids. Members are
/// re-checked for exhaustiveness in the quotient.
EdgeCollection restrict_collection(const KGraph& g, const EdgeCollection& c, const VertexSet& h,
                                   const Quotient& q);
EdgeCollection restrict_collection(const KGraph& g, const EdgeCollection& c, const VertexSet& h);

/// (H, 𝓑) with 𝓑 stored in the ids of the ambient graph.
struct IdealLabel {
  VertexSet h;
  EdgeCollection b;

  friend bool operator==(const IdealLabel&, const IdealLabel&) = default;
  friend auto operator<=>(const IdealLabel&, const IdealLabel&) = default;
};

/// Every hereditary 𝓔-saturated H.
std::vector<VertexSet> hereditary_saturated_sets(const KGraph& g, const EdgeCollection& c,
                                                 std::size_t max_vertices = 20);

/// All (H, 𝓑): 𝓑 efficient on Λ∖ΛH with 𝓔_H ⊆ 𝓑̂. Sorted.
std::vector<IdealLabel> enumerate_ideal_labels(const KGraph& g, const EdgeCollection& c,
                                               EnumerationLimits limits = {});
/// Same labels read off satiated 𝓕 ⊇ 𝓔_H on each quotient through
/// 𝓕 ↦ min(𝓕 ∩ FE(Γ¹)). Acyclic graphs only.
std::vector<IdealLabel> enumerate_ideal_labels_satiated(const KGraph& g, const EdgeCollection& c,
                                                        EnumerationLimits limits = {});

/// T_λ = S^𝓑_λ on ∂(Λ∖ΛH; 𝓑) when s(λ) ∉ H, and 0 otherwise.
class QuotientFamily : public Family {
 public:
  QuotientFamily(const KGraph& g, const IdealLabel& label);
  std::size_t dimension() const override { return rep_->dimension(); }
  SparseMatrix operator()(const Path& lambda) const override;
  const Quotient& quotient() const { return *q_; }

 private:
  const KGraph* g_;
  std::unique_ptr<Quotient> q_;  // rep_ refers into q_->graph, so both live on the heap
  std::unique_ptr<Representation> rep_;
};

struct RoundTrip {
  RelationReport relations;  // TCK1-3 on Λ and CK for 𝓔
  VertexSet h;               // {v : T_v = 0}
  EdgeCollection b;          // min{E ∈ FE(Γ¹) : gap product vanishes}
  bool matches = false;
};

/// Builds the family of a label, checks it is a (Λ;𝓔)-family and reads
/// the label back from it. Acyclic graphs only.
RoundTrip ideal_round_trip(const KGraph& g, const EdgeCollection& c, const IdealLabel& label);

struct ToeplitzLabel {
  std::vector<std::size_t> colors;  // 1-based, sorted
  EdgeCollection collection;        // 𝓔_K
  bool efficient = false;
};

/// 𝓔_K = {∪_{i∈K} vΛ^{e_i} : v ∈ Λ⁰}. Needs a graph without sources and a
/// nonempty K ⊆ {1..k}.
ToeplitzLabel toeplitz_label(const KGraph& g, std::vector<std::size_t> colors);
/// The label of the intersection: colour set K ∪ L.
ToeplitzLabel intersect_toeplitz_labels(const KGraph& g, const std::vector<std::size_t>& k,
                                        const std::vector<std::size_t>& l);

}  // namespace kgraph

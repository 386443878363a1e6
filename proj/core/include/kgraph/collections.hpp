#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgraph/exhaustive.hpp"
#include "kgraph/graph.hpp"
#include "kgraph/universe.hpp"

namespace kgraph {

/// Canonical (sorted, duplicate-free) collections.
using EdgeCollection = std::vector<EdgeSet>;
using PathCollection = std::vector<FESet>;

enum class CollectionKind { Raw, Efficient, Satiated, EdgeSatiation };
std::string_view to_string(CollectionKind kind);
std::optional<CollectionKind> parse_collection_kind(std::string_view s);

/// A tagged collection as exchanged with files and the CLI.
struct Collection {
  CollectionKind kind = CollectionKind::Raw;
  PathCollection members;
};

EdgeCollection canonical(EdgeCollection c);
PathCollection canonical(PathCollection c);
PathCollection to_path_collection(const KGraph& g, const EdgeCollection& c);
/// nullopt if some member has a non-edge path.
std::optional<EdgeCollection> to_edge_collection(const PathCollection& c);

/// All of FE(Λ¹), sorted by vertex then edges.
std::vector<EdgeSet> fe_edge_sets(const KGraph& g, std::size_t max_edges_per_vertex = 20);

// ---------------------------------------------------------------------------
// Efficient collections
// ---------------------------------------------------------------------------

enum class EfficiencyCondition { E1, E2, E3 };
std::string_view to_string(EfficiencyCondition c);

struct EfficiencyViolation {
  EfficiencyCondition condition;
  EdgeSet e;                   // the member E
  std::optional<EdgeId> edge;  // f for (E2), e for (E3)
  std::optional<EdgeSet> f;    // the larger member for (E1), F for (E3)
  std::optional<EdgeSet> required;  // Ext(f;E) or E_F, which contains no member
};

struct EfficiencyReport {
  bool efficient = true;
  std::vector<EfficiencyViolation> violations;
  /// Verdict of the (E1), (E2'), (E3') formulation through Ê.
  bool hat_formulation = true;
  bool formulations_agree() const { return efficient == hat_formulation; }
};

/// Members must be exhaustive edge sets (PreconditionError otherwise).
EfficiencyReport check_efficient(const KGraph& g, const EdgeCollection& c);
bool is_efficient(const KGraph& g, const EdgeCollection& c);

/// Ê: every exhaustive edge set containing a member.
EdgeCollection edge_satiation(const KGraph& g, const EdgeCollection& c);
EdgeCollection min_collection(const EdgeCollection& c);
PathCollection min_collection(const PathCollection& c);

struct EnumerationLimits {
  std::size_t max_fe_edge_sets = 4096;  // |FE(Λ¹)|
  std::size_t max_candidates = 1u << 22;  // brute-force antichain products
  std::size_t max_results = 1u << 20;
};

/// All efficient collections, by walking the lattice of edge-closed
/// up-sets of FE(Λ¹). Sorted.
std::vector<EdgeCollection> enumerate_efficient(const KGraph& g, EnumerationLimits limits = {});
/// Same set, by testing every antichain of FE(Λ¹) against (E1)-(E3).
std::vector<EdgeCollection> enumerate_efficient_brute_force(const KGraph& g,
                                                            EnumerationLimits limits = {});

// ---------------------------------------------------------------------------
// Satiated collections (acyclic graphs)
// ---------------------------------------------------------------------------

enum class SatiationCondition { NotExhaustive, S1, S2, S3, S4 };
std::string_view to_string(SatiationCondition c);

struct SatiationViolation {
  SatiationCondition condition;
  FESet e;                       // the member the operation was applied to
  std::string parameters;        // readable description of λ, n_λ, E', E'_λ
  std::optional<FESet> missing;  // the resulting set that is not in 𝓕
};

struct SatiationReport {
  bool satiated = true;
  std::vector<SatiationViolation> violations;  // a few per failing condition
};

struct SatiationLimits {
  std::size_t max_instances = 1u << 22;  // S3/S4 parameter combinations
  std::size_t violations_per_condition = 16;
};

/// Quantifies (S1)-(S4) over all legal parameters.
SatiationReport check_satiated(const FESpace& space, const PathCollection& c,
                               SatiationLimits limits = {});
bool is_satiated(const FESpace& space, const PathCollection& c);

/// Least satiated superset.
PathCollection satiate(const FESpace& space, const PathCollection& c);
PathCollection satiate(const FESpace& space, const EdgeCollection& c);

/// 𝓔 ↦ 𝓔̄ after checking efficiency; 𝓕 ↦ min(𝓕 ∩ FE(Λ¹)) after checking
/// satiation. Both throw PreconditionError on a failed tag check.
PathCollection to_satiated(const FESpace& space, const EdgeCollection& c);
EdgeCollection to_efficient(const FESpace& space, const PathCollection& c);
/// θ without the satiation check.
EdgeCollection edge_part_min(const PathCollection& c);

/// Every satiated subset of FE(Λ), sorted.
std::vector<PathCollection> enumerate_satiated(const FESpace& space, EnumerationLimits limits = {});

/// Membership in a canonical collection.
bool contains(const EdgeCollection& c, const EdgeSet& e);
bool contains(const PathCollection& c, const FESet& e);
/// ∃ member F ⊆ e.
bool has_member_below(const EdgeCollection& c, const EdgeSet& e);

std::string to_string(const KGraph& g, const EdgeCollection& c);
std::string to_string(const KGraph& g, const PathCollection& c);

}  // namespace kgraph

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kgraph/collections.hpp"
#include "kgraph/graph.hpp"
#include "kgraph/matrix.hpp"
#include "kgraph/path.hpp"
#include "kgraph/universe.hpp"

namespace kgraph {

/// For every n <= d(x) and every E ∈ x(n)𝓔 some e ∈ E satisfies
/// x(n, n+d(e)) = e.
bool is_boundary_path(const KGraph& g, const Path& x, const EdgeCollection& c);

/// ∂(Λ;𝓔) for an acyclic graph, sorted by (range, degree, edges).
/// Checks that 𝓔 is efficient unless told otherwise.
std::vector<Path> enumerate_boundary_paths(const KGraph& g, const EdgeCollection& c,
                                           bool verify_efficient = true);

/// λx and x(n, d(x)); both check that the result is again a boundary path.
Path translate(const KGraph& g, const Path& lambda, const Path& x, const EdgeCollection& c);
Path shift(const KGraph& g, const Path& x, const Degree& n, const EdgeCollection& c);

/// Anything that assigns an operator to each path of Λ.
class Family {
 public:
  virtual ~Family() = default;
  virtual std::size_t dimension() const = 0;
  virtual SparseMatrix operator()(const Path& lambda) const = 0;
};

/// The boundary-path representation: S_λ e_x = e_{λx} when s(λ) = r(x).
class Representation : public Family {
 public:
  static Representation build(const KGraph& g, const EdgeCollection& c, bool verify_efficient = true);

  const KGraph& graph() const { return *g_; }
  const EdgeCollection& collection() const { return c_; }
  const std::vector<Path>& basis() const { return basis_; }
  std::size_t dimension() const override { return basis_.size(); }
  std::optional<std::size_t> index_of(const Path& x) const;

  SparseMatrix operator()(const Path& lambda) const override;
  SparseMatrix vertex(VertexId v) const;

 private:
  Representation() = default;
  const KGraph* g_ = nullptr;
  EdgeCollection c_;
  std::vector<Path> basis_;
  std::unordered_map<Path, std::size_t, PathHash> index_;
};

/// ∏_{λ∈E} (T_{r(E)} − T_λ T_λ*).
SparseMatrix gap_product(const KGraph& g, const Family& t, const FESet& e);
bool gap_vanishes(const KGraph& g, const Family& t, const FESet& e);
bool gap_vanishes(const KGraph& g, const Family& t, const EdgeSet& e);

struct RelationCheck {
  std::string relation;  // TCK1, TCK2, TCK3, CK
  std::string instance;
  bool ok = true;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
  void append(const RelationReport& other);
};

/// (TCK1)-(TCK3) over every vertex, composable pair and pair of paths of an
/// acyclic graph.
RelationReport verify_tck(const KGraph& g, const Family& t);
/// (CK) for every member of 𝓔.
RelationReport verify_ck(const KGraph& g, const Family& t, const EdgeCollection& c);

struct HatOracleResult {
  bool vanishes = false;
  /// A basis path in v∂ outside E∂ when the product is nonzero.
  std::optional<Path> witness;
};

/// Evaluates ∏_{e∈E}(S_v − S_e S_e*) in the 𝓔-boundary representation.
HatOracleResult hat_membership_via_rep(const Representation& rep, const EdgeSet& e);

/// The members of FE(Λ) whose gap product vanishes in a family.
std::vector<bool> vanishing_set(const FESpace& space, const Family& t);

struct G2Instance {
  EdgeCollection family;  // 𝓔' whose boundary representation is used
  bool a = false;         // nonzero on FE(Λ)∖𝓔̄
  bool b = false;         // nonzero on FE(Λ¹)∖𝓔̂
};

struct G2Report {
  std::vector<G2Instance> instances;
  bool agree = true;
};

/// For each boundary representation (of 𝓔'_i, with vanishing set Z_i)
/// that is a (Λ;𝓔)-family, compares conditions (a) and (b).
G2Report check_g2(const FESpace& space, const EdgeCollection& c,
                  const std::vector<EdgeCollection>& families,
                  const std::vector<std::vector<bool>>& vanishing);

}  // namespace kgraph

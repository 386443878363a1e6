#include "kgraph/boundary.hpp"

#include <algorithm>
#include <stdexcept>

#include "kgraph/error.hpp"

namespace kgraph {

bool is_boundary_path(const KGraph& g, const Path& x, const EdgeCollection& c) {
  std::vector<std::vector<const EdgeSet*>> at(g.vertex_count());
  for (const auto& e : c) at.at(e.vertex).push_back(&e);
  for (const auto& n : degrees_below(x.degree())) {
    const Path y = factor(g, x, n).second;
    const auto& here = at[y.range()];
    if (here.empty()) continue;
    // y(0, e_i) for each colour present in y
    std::vector<std::optional<EdgeId>> lead(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i)
      if (y.degree()[i] > 0) lead[i] = factor(g, y, Degree::unit(g.rank(), i)).first.edges().front();
    for (const EdgeSet* e : here) {
      bool hit = std::any_of(e->edges.begin(), e->edges.end(), [&](EdgeId f) {
        return lead[g.color(f)] == f;
      });
      if (!hit) return false;
    }
  }
  return true;
}

namespace {

void require_acyclic(const KGraph& g) {
  if (!is_acyclic(g))
    throw PreconditionError("boundary paths are only enumerated on acyclic graphs (this graph has a cycle)");
}

void require_efficient(const KGraph& g, const EdgeCollection& c) {
  auto rep = check_efficient(g, c);
  if (!rep.efficient) throw PreconditionError("collection is not efficient");
}

}  // namespace

std::vector<Path> enumerate_boundary_paths(const KGraph& g, const EdgeCollection& c, bool verify_efficient) {
  require_acyclic(g);
  if (verify_efficient) require_efficient(g, c);
  std::vector<Path> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::size_t before = out.size();
    for (auto& x : all_paths_from(g, v))
      if (is_boundary_path(g, x, c)) out.push_back(std::move(x));
    if (verify_efficient && out.size() == before)
      throw std::logic_error("no boundary path at vertex '" + g.vertex_name(v) + "'");
  }
  std::sort(out.begin(), out.end());
  return out;
}

Path translate(const KGraph& g, const Path& lambda, const Path& x, const EdgeCollection& c) {
  if (!is_boundary_path(g, x, c)) throw PreconditionError("x is not a boundary path");
  Path y = compose(g, lambda, x);
  if (!is_boundary_path(g, y, c)) throw std::logic_error("λx left the boundary");
  return y;
}

Path shift(const KGraph& g, const Path& x, const Degree& n, const EdgeCollection& c) {
  if (!is_boundary_path(g, x, c)) throw PreconditionError("x is not a boundary path");
  Path y = factor(g, x, n).second;
  if (!is_boundary_path(g, y, c)) throw std::logic_error("x(n,d(x)) left the boundary");
  return y;
}

Representation Representation::build(const KGraph& g, const EdgeCollection& c, bool verify_efficient) {
  Representation r;
  r.g_ = &g;
  r.c_ = canonical(c);
  r.basis_ = enumerate_boundary_paths(g, r.c_, verify_efficient);
  for (std::size_t i = 0; i < r.basis_.size(); ++i) r.index_.emplace(r.basis_[i], i);
  return r;
}

std::optional<std::size_t> Representation::index_of(const Path& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseMatrix Representation::operator()(const Path& lambda) const {
  SparseMatrix m(basis_.size(), basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].range() != lambda.source()) continue;
    auto j = index_of(compose(*g_, lambda, basis_[i]));
    if (!j) throw std::logic_error("λx is missing from the boundary basis");
    m.add(*j, i, 1);
  }
  return m;
}

SparseMatrix Representation::vertex(VertexId v) const { return (*this)(vertex_path(*g_, v)); }

SparseMatrix gap_product(const KGraph& g, const Family& t, const FESet& e) {
  const SparseMatrix tv = t(vertex_path(g, e.vertex));
  SparseMatrix acc = tv;
  for (const auto& lam : e.paths) {
    const SparseMatrix s = t(lam);
    acc = acc * (tv - s * s.adjoint());
  }
  return acc;
}

bool gap_vanishes(const KGraph& g, const Family& t, const FESet& e) { return gap_product(g, t, e).is_zero(); }

bool gap_vanishes(const KGraph& g, const Family& t, const EdgeSet& e) {
  return gap_vanishes(g, t, to_fe_set(g, e));
}

void RelationReport::append(const RelationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  failures += other.failures;
}

RelationReport verify_tck(const KGraph& g, const Family& t) {
  require_acyclic(g);
  RelationReport rep;
  auto record = [&](std::string rel, std::string inst, bool ok) {
    if (!ok) ++rep.failures;
    rep.checks.push_back({std::move(rel), std::move(inst), ok});
  };

  std::vector<Path> paths;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto ps = all_paths_from(g, v);
    paths.insert(paths.end(), ps.begin(), ps.end());
  }
  std::unordered_map<Path, SparseMatrix, PathHash> cache;
  auto T = [&](const Path& p) -> const SparseMatrix& {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, t(p)).first;
    return it->second;
  };

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& tv = T(vertex_path(g, v));
    record("TCK1", "projection " + g.vertex_name(v), tv.adjoint() == tv && tv * tv == tv);
    for (VertexId w = v + 1; w < g.vertex_count(); ++w)
      record("TCK1", "orthogonal " + g.vertex_name(v) + " " + g.vertex_name(w),
             (tv * T(vertex_path(g, w))).is_zero());
  }
  for (const auto& a : paths)
    for (const auto& b : paths) {
      if (a.source() != b.range()) continue;
      record("TCK2", to_string(g, a) + " . " + to_string(g, b), T(a) * T(b) == T(compose(g, a, b)));
    }
  for (const auto& a : paths)
    for (const auto& b : paths) {
      SparseMatrix rhs = SparseMatrix::zero(t.dimension(), t.dimension());
      if (a.range() == b.range())
        for (const auto& [a1, b1] : lambda_min(g, a, b)) rhs = rhs + T(a1) * T(b1).adjoint();
      record("TCK3", to_string(g, a) + "* " + to_string(g, b), T(a).adjoint() * T(b) == rhs);
    }
  return rep;
}

RelationReport verify_ck(const KGraph& g, const Family& t, const EdgeCollection& c) {
  RelationReport rep;
  for (const auto& e : c) {
    bool ok = gap_vanishes(g, t, e);
    if (!ok) ++rep.failures;
    rep.checks.push_back({"CK", to_string(g, e), ok});
  }
  return rep;
}

HatOracleResult hat_membership_via_rep(const Representation& rep, const EdgeSet& e) {
  const KGraph& g = rep.graph();
  SparseMatrix p = gap_product(g, rep, to_fe_set(g, e));
  HatOracleResult out;
  out.vanishes = p.is_zero();
  if (!out.vanishes)
    for (std::size_t c = 0; c < p.cols(); ++c)
      if (!p.column(c).empty()) {
        out.witness = rep.basis()[c];
        break;
      }
  return out;
}

std::vector<bool> vanishing_set(const FESpace& space, const Family& t) {
  const KGraph& g = space.graph();
  std::unordered_map<Path, SparseMatrix, PathHash> gap;  // T_{r(λ)} − T_λ T_λ*
  std::vector<SparseMatrix> tv;
  for (VertexId v = 0; v < g.vertex_count(); ++v) tv.push_back(t(vertex_path(g, v)));
  std::vector<bool> out(space.member_count(), false);
  for (std::size_t id = 0; id < space.member_count(); ++id) {
    const FESet e = space.to_fe_set(id);
    SparseMatrix acc = tv[e.vertex];
    for (const auto& lam : e.paths) {
      auto it = gap.find(lam);
      if (it == gap.end()) {
        SparseMatrix s = t(lam);
        it = gap.emplace(lam, tv[lam.range()] - s * s.adjoint()).first;
      }
      acc = acc * it->second;
      if (acc.is_zero()) break;
    }
    out[id] = acc.is_zero();
  }
  return out;
}

G2Report check_g2(const FESpace& space, const EdgeCollection& c, const std::vector<EdgeCollection>& families,
                  const std::vector<std::vector<bool>>& vanishing) {
  if (families.size() != vanishing.size()) throw std::invalid_argument("family/vanishing size mismatch");
  const PathCollection bar = satiate(space, c);
  std::vector<bool> in_bar(space.member_count(), false), in_hat(space.member_count(), false),
      edge_member(space.member_count(), false), in_c(space.member_count(), false);
  for (const auto& f : bar) in_bar[space.id(f.vertex, space.to_mask(f))] = true;
  for (const auto& e : c) in_c[space.id(e.vertex, space.to_mask(e))] = true;
  for (std::size_t id = 0; id < space.member_count(); ++id) {
    auto [v, m] = space.member(id);
    if (!space.edges_only(v, m)) continue;
    edge_member[id] = true;
    auto es = to_edge_set(space.to_fe_set(v, m));
    in_hat[id] = has_member_below(c, *es);
  }

  G2Report rep;
  for (std::size_t i = 0; i < families.size(); ++i) {
    const auto& z = vanishing[i];
    bool is_family = true;
    for (std::size_t id = 0; id < z.size(); ++id)
      if (in_c[id] && !z[id]) is_family = false;
    if (!is_family) continue;
    G2Instance inst{families[i], true, true};
    for (std::size_t id = 0; id < z.size(); ++id) {
      if (z[id] && !in_bar[id]) inst.a = false;
      if (z[id] && edge_member[id] && !in_hat[id]) inst.b = false;
    }
    rep.agree = rep.agree && inst.a == inst.b;
    rep.instances.push_back(std::move(inst));
  }
  return rep;
}

}  // namespace kgraph

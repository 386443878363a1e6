#include "kgraph/collections.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kgraph/error.hpp"

namespace kgraph {

std::string_view to_string(CollectionKind kind) {
  switch (kind) {
    case CollectionKind::Raw: return "raw";
    case CollectionKind::Efficient: return "efficient";
    case CollectionKind::Satiated: return "satiated";
    case CollectionKind::EdgeSatiation: return "edge-satiation";
  }
  return "raw";
}

std::optional<CollectionKind> parse_collection_kind(std::string_view s) {
  for (auto k : {CollectionKind::Raw, CollectionKind::Efficient, CollectionKind::Satiated,
                 CollectionKind::EdgeSatiation})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

std::string_view to_string(EfficiencyCondition c) {
  switch (c) {
    case EfficiencyCondition::E1: return "E1";
    case EfficiencyCondition::E2: return "E2";
    case EfficiencyCondition::E3: return "E3";
  }
  return "?";
}

std::string_view to_string(SatiationCondition c) {
  switch (c) {
    case SatiationCondition::NotExhaustive: return "not-exhaustive";
    case SatiationCondition::S1: return "S1";
    case SatiationCondition::S2: return "S2";
    case SatiationCondition::S3: return "S3";
    case SatiationCondition::S4: return "S4";
  }
  return "?";
}

EdgeCollection canonical(EdgeCollection c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

PathCollection canonical(PathCollection c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

PathCollection to_path_collection(const KGraph& g, const EdgeCollection& c) {
  PathCollection out;
  for (const auto& e : c) out.push_back(to_fe_set(g, e));
  return canonical(std::move(out));
}

std::optional<EdgeCollection> to_edge_collection(const PathCollection& c) {
  EdgeCollection out;
  for (const auto& f : c) {
    auto e = to_edge_set(f);
    if (!e) return std::nullopt;
    out.push_back(std::move(*e));
  }
  return canonical(std::move(out));
}

bool contains(const EdgeCollection& c, const EdgeSet& e) { return std::binary_search(c.begin(), c.end(), e); }
bool contains(const PathCollection& c, const FESet& e) { return std::binary_search(c.begin(), c.end(), e); }

bool has_member_below(const EdgeCollection& c, const EdgeSet& e) {
  return std::any_of(c.begin(), c.end(), [&](const EdgeSet& f) { return f.subset_of(e); });
}

std::vector<EdgeSet> fe_edge_sets(const KGraph& g, std::size_t max_edges_per_vertex) {
  std::vector<EdgeSet> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto sets = enumerate_fe_edge_sets(g, v, max_edges_per_vertex);
    out.insert(out.end(), sets.begin(), sets.end());
  }
  return canonical(std::move(out));
}

EdgeCollection min_collection(const EdgeCollection& c) {
  EdgeCollection out;
  for (const auto& e : c) {
    bool minimal = std::none_of(c.begin(), c.end(),
                                [&](const EdgeSet& f) { return f != e && f.subset_of(e); });
    if (minimal) out.push_back(e);
  }
  return canonical(std::move(out));
}

PathCollection min_collection(const PathCollection& c) {
  PathCollection out;
  for (const auto& e : c) {
    bool minimal = std::none_of(c.begin(), c.end(),
                                [&](const FESet& f) { return f != e && f.subset_of(e); });
    if (minimal) out.push_back(e);
  }
  return canonical(std::move(out));
}

// ---------------------------------------------------------------------------
// Efficiency
// ---------------------------------------------------------------------------

namespace {

EdgeCollection edge_satiation_from(const std::vector<EdgeSet>& fe, const EdgeCollection& c) {
  EdgeCollection out;
  for (const auto& e : fe)
    if (has_member_below(c, e)) out.push_back(e);
  return out;  // fe is sorted, so out is too
}

EfficiencyReport check_efficient_impl(const KGraph& g, EdgeCollection c,
                                      const std::vector<EdgeSet>* fe_cache, bool trusted,
                                      bool stop_at_first) {
  c = canonical(std::move(c));
  if (!trusted) {
    for (const auto& e : c) {
      make_edge_set(g, e.vertex, e.edges);  // range check
      if (!is_exhaustive_edges(g, e))
        throw PreconditionError("member " + to_string(g, e) + " is not exhaustive");
    }
  }

  EfficiencyReport rep;
  auto violate = [&](EfficiencyViolation v) {
    rep.efficient = false;
    rep.violations.push_back(std::move(v));
  };

  bool e1_ok = true;
  for (const auto& e : c)
    for (const auto& f : c)
      if (e != f && e.subset_of(f)) {
        e1_ok = false;
        violate({EfficiencyCondition::E1, e, std::nullopt, f, std::nullopt});
        if (stop_at_first) return rep;
      }

  std::vector<EdgeSet> fe_local;
  if (!fe_cache) {
    std::set<VertexId> vs;
    for (const auto& e : c) vs.insert(e.vertex);
    for (VertexId v : vs) {
      auto sets = enumerate_fe_edge_sets(g, v);
      fe_local.insert(fe_local.end(), sets.begin(), sets.end());
    }
    std::sort(fe_local.begin(), fe_local.end());
    fe_cache = &fe_local;
  }
  const EdgeCollection hat = edge_satiation_from(*fe_cache, c);
  bool hat_ok = e1_ok;

  for (const auto& e : c) {
    for (EdgeId f : g.edges_at(e.vertex)) {
      if (e.contains(f)) continue;
      EdgeSet x = detail::ext_edge_unchecked(g, f, e);
      if (!has_member_below(c, x)) {
        violate({EfficiencyCondition::E2, e, f, std::nullopt, x});
        if (stop_at_first) return rep;
      }
      if (!contains(hat, x)) hat_ok = false;
    }
    for (EdgeId ed : e.edges) {
      const VertexId s = g.edge(ed).source;
      for (const auto& f : c) {
        if (f.vertex != s) continue;
        EdgeSet x = detail::substitute_unchecked(g, e, ed, f);
        if (!has_member_below(c, x)) {
          violate({EfficiencyCondition::E3, e, ed, f, x});
          if (stop_at_first) return rep;
        }
        if (!contains(hat, x)) hat_ok = false;
      }
    }
  }
  rep.hat_formulation = hat_ok;
  return rep;
}

}  // namespace

EfficiencyReport check_efficient(const KGraph& g, const EdgeCollection& c) {
  return check_efficient_impl(g, c, nullptr, false, false);
}

bool is_efficient(const KGraph& g, const EdgeCollection& c) { return check_efficient(g, c).efficient; }

EdgeCollection edge_satiation(const KGraph& g, const EdgeCollection& c) {
  std::set<VertexId> vs;
  for (const auto& e : c) vs.insert(e.vertex);
  EdgeCollection out;
  for (VertexId v : vs)
    for (auto& e : enumerate_fe_edge_sets(g, v))
      if (has_member_below(c, e)) out.push_back(std::move(e));
  return canonical(std::move(out));
}

// ---------------------------------------------------------------------------
// Efficient enumeration.
//
// 𝓔 is efficient iff U = Ê is closed under E ↦ Ext(f;E) (f ∉ E) and
// (E,F) ↦ E_F (e ∈ E, F ∈ U at s(e)); then 𝓔 = min(U). Such U are closed
// under intersection, so every one is reached from ∅ by adding a single
// set and closing again.
// ---------------------------------------------------------------------------

namespace {

class EdgeClosure {
 public:
  EdgeClosure(const KGraph& g, const EnumerationLimits& limits) : fe_(fe_edge_sets(g)) {
    if (fe_.size() > limits.max_fe_edge_sets)
      throw ResourceLimitError("|FE(Λ¹)| = " + std::to_string(fe_.size()) + " exceeds the cap of " +
                               std::to_string(limits.max_fe_edge_sets));
    std::map<EdgeSet, std::size_t> index;
    for (std::size_t i = 0; i < fe_.size(); ++i) index.emplace(fe_[i], i);
    const std::size_t n = fe_.size();
    up_.resize(n);
    ext_.resize(n);
    sub_by_e_.resize(n);
    sub_by_f_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const EdgeSet& e = fe_[i];
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && e.subset_of(fe_[j])) up_[i].push_back(j);
      for (EdgeId f : g.edges_at(e.vertex))
        if (!e.contains(f)) ext_[i].push_back(index.at(detail::ext_edge_unchecked(g, f, e)));
      for (EdgeId ed : e.edges) {
        const VertexId s = g.edge(ed).source;
        for (std::size_t j = 0; j < n; ++j) {
          if (fe_[j].vertex != s) continue;
          std::size_t r = index.at(detail::substitute_unchecked(g, e, ed, fe_[j]));
          sub_by_e_[i].emplace_back(j, r);
          sub_by_f_[j].emplace_back(i, r);
        }
      }
    }
  }

  std::size_t size() const { return fe_.size(); }

  std::vector<bool> close(std::vector<bool> in, std::size_t extra) const {
    std::vector<std::size_t> work;
    auto add = [&](std::size_t x) {
      if (!in[x]) {
        in[x] = true;
        work.push_back(x);
      }
    };
    add(extra);
    while (!work.empty()) {
      std::size_t x = work.back();
      work.pop_back();
      for (auto y : up_[x]) add(y);
      for (auto y : ext_[x]) add(y);
      for (auto [f, r] : sub_by_e_[x])
        if (in[f]) add(r);
      for (auto [e, r] : sub_by_f_[x])
        if (in[e]) add(r);
    }
    return in;
  }

  EdgeCollection minimal(const std::vector<bool>& in) const {
    EdgeCollection u;
    for (std::size_t i = 0; i < fe_.size(); ++i)
      if (in[i]) u.push_back(fe_[i]);
    return min_collection(u);
  }

 private:
  std::vector<EdgeSet> fe_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> ext_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> sub_by_e_;  // (F, E_F)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> sub_by_f_;  // (E, E_F)
};

}  // namespace

std::vector<EdgeCollection> enumerate_efficient(const KGraph& g, EnumerationLimits limits) {
  EdgeClosure cl(g, limits);
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue{std::vector<bool>(cl.size(), false)};
  seen.insert(queue.front());
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (std::size_t x = 0; x < cl.size(); ++x) {
      if (queue[qi][x]) continue;
      auto next = cl.close(queue[qi], x);
      if (seen.insert(next).second) {
        if (seen.size() > limits.max_results)
          throw ResourceLimitError("more than " + std::to_string(limits.max_results) +
                                   " efficient collections");
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<EdgeCollection> out;
  for (const auto& u : queue) out.push_back(cl.minimal(u));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeCollection> enumerate_efficient_brute_force(const KGraph& g, EnumerationLimits limits) {
  const auto fe = fe_edge_sets(g);
  if (fe.size() > limits.max_fe_edge_sets)
    throw ResourceLimitError("|FE(Λ¹)| exceeds the cap");

  // Antichains only constrain sets at one vertex.
  std::vector<std::vector<EdgeCollection>> per_vertex;
  std::size_t product = 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<EdgeSet> local;
    for (const auto& e : fe)
      if (e.vertex == v) local.push_back(e);
    if (local.size() > 24) throw ResourceLimitError("too many exhaustive edge sets at one vertex");
    std::vector<EdgeCollection> chains;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << local.size()); ++mask) {
      EdgeCollection c;
      for (std::size_t i = 0; i < local.size(); ++i)
        if (mask >> i & 1) c.push_back(local[i]);
      bool anti = true;
      for (std::size_t i = 0; i < c.size() && anti; ++i)
        for (std::size_t j = 0; j < c.size() && anti; ++j)
          if (i != j && c[i].subset_of(c[j])) anti = false;
      if (anti) chains.push_back(std::move(c));
    }
    product *= chains.size();
    if (product > limits.max_candidates)
      throw ResourceLimitError("antichain product exceeds " + std::to_string(limits.max_candidates));
    per_vertex.push_back(std::move(chains));
  }

  std::vector<EdgeCollection> out;
  std::vector<std::size_t> pick(per_vertex.size(), 0);
  for (;;) {
    EdgeCollection c;
    for (std::size_t v = 0; v < per_vertex.size(); ++v)
      c.insert(c.end(), per_vertex[v][pick[v]].begin(), per_vertex[v][pick[v]].end());
    c = canonical(std::move(c));
    if (check_efficient_impl(g, c, &fe, true, true).efficient) out.push_back(std::move(c));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < per_vertex[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Satiation.
//
// The engine keeps 𝓕 up-closed (S1) and applies S2-S4 only to the sets it
// generated itself: every other member contains one of them and its
// images contain the corresponding images. (S3) and (S4) are applied one
// path at a time; the full operations are compositions of such single
// steps followed by S1.
// ---------------------------------------------------------------------------

namespace {

using Mask = FESpace::Mask;

class SatiationEngine {
 public:
  explicit SatiationEngine(const FESpace& sp)
      : sp_(&sp), in_(sp.member_count(), false), gens_at_(sp.vertex_count()) {}

  void add(VertexId v, Mask m) {
    const std::size_t id = sp_->id(v, m);
    if (in_[id]) return;
    gens_.push_back({v, m});
    gens_at_[v].push_back(m);
    const std::size_t n = sp_->local_paths(v).size();
    const Mask top = (Mask{1} << n) - 1;
    // all supersets of m inside vΛ∖{v}
    for (Mask sup = m;; sup = (sup + 1) | m) {
      in_[sp_->id(v, sup)] = true;
      if (sup == top) break;
    }
  }

  void run() {
    for (; done_ < gens_.size(); ++done_) {
      const auto [v, e] = gens_[done_];
      const std::size_t n = sp_->local_paths(v).size();
      for (std::size_t lam = 0; lam < n; ++lam) {
        // S2
        if (!sp_->in_e_lambda(v, lam, e)) add(sp_->source_of(v, lam), sp_->ext(v, lam, e));
        if (!(e >> lam & 1)) continue;
        const Mask rest = e & ~(Mask{1} << lam);
        // S3, one path at a time
        for (std::size_t p : sp_->proper_prefixes(v, lam)) add(v, rest | Mask{1} << p);
        // S4 with E as the outer set
        const VertexId s = sp_->source_of(v, lam);
        const std::size_t count = gens_at_[s].size();
        for (std::size_t i = 0; i < count; ++i) add(v, rest | sp_->concat(v, lam, gens_at_[s][i]));
      }
      // S4 with this set as some E'_λ of an earlier set
      for (std::size_t i = 0; i < done_; ++i) {
        const auto [w, outer] = gens_[i];
        const std::size_t nw = sp_->local_paths(w).size();
        for (std::size_t lam = 0; lam < nw; ++lam) {
          if (!(outer >> lam & 1) || sp_->source_of(w, lam) != v) continue;
          add(w, (outer & ~(Mask{1} << lam)) | sp_->concat(w, lam, e));
        }
      }
    }
  }

  const std::vector<bool>& members() const { return in_; }

  PathCollection collection() const {
    PathCollection out;
    for (std::size_t id = 0; id < in_.size(); ++id)
      if (in_[id]) out.push_back(sp_->to_fe_set(id));
    return canonical(std::move(out));
  }

 private:
  const FESpace* sp_;
  std::vector<bool> in_;
  std::vector<std::pair<VertexId, Mask>> gens_;
  std::vector<std::vector<Mask>> gens_at_;
  std::size_t done_ = 0;
};

std::pair<VertexId, Mask> to_member(const FESpace& sp, const FESet& e) {
  Mask m = sp.to_mask(e);
  if (!sp.is_exhaustive(e.vertex, m))
    throw PreconditionError("member " + to_string(sp.graph(), e) + " is not in FE(Λ)");
  return {e.vertex, m};
}

}  // namespace

PathCollection satiate(const FESpace& space, const PathCollection& c) {
  SatiationEngine eng(space);
  for (const auto& e : c) {
    auto [v, m] = to_member(space, e);
    eng.add(v, m);
  }
  eng.run();
  return eng.collection();
}

PathCollection satiate(const FESpace& space, const EdgeCollection& c) {
  return satiate(space, to_path_collection(space.graph(), c));
}

SatiationReport check_satiated(const FESpace& space, const PathCollection& c_in, SatiationLimits limits) {
  const KGraph& g = space.graph();
  const PathCollection c = canonical(c_in);
  SatiationReport rep;
  std::map<SatiationCondition, std::size_t> per;
  auto violate = [&](SatiationCondition cond, const FESet& e, std::string params,
                     std::optional<FESet> missing) {
    rep.satiated = false;
    if (per[cond]++ < limits.violations_per_condition)
      rep.violations.push_back({cond, e, std::move(params), std::move(missing)});
  };

  std::vector<bool> in(space.member_count(), false);
  std::vector<std::pair<VertexId, Mask>> ms;
  std::vector<std::vector<Mask>> at(space.vertex_count());
  for (const auto& e : c) {
    Mask m = space.to_mask(e);
    if (!space.is_exhaustive(e.vertex, m)) {
      violate(SatiationCondition::NotExhaustive, e, "", std::nullopt);
      continue;
    }
    in[space.id(e.vertex, m)] = true;
    ms.emplace_back(e.vertex, m);
    at[e.vertex].push_back(m);
  }
  auto member = [&](VertexId v, Mask m) { return in[space.id(v, m)]; };
  auto path_name = [&](VertexId v, std::size_t i) { return to_string(g, space.local_paths(v)[i]); };

  std::size_t instances = 0;
  auto tick = [&] {
    if (++instances > limits.max_instances)
      throw ResourceLimitError("satiation check exceeds " + std::to_string(limits.max_instances) +
                               " parameter instances");
  };

  for (const auto& [v, e] : ms) {
    const FESet fe = space.to_fe_set(v, e);
    const std::size_t n = space.local_paths(v).size();
    const Mask top = (Mask{1} << n) - 1;

    // S1
    for (Mask sup = e;; sup = (sup + 1) | e) {
      if (!member(v, sup)) violate(SatiationCondition::S1, fe, "superset", space.to_fe_set(v, sup));
      if (sup == top) break;
    }

    // S2
    for (std::size_t lam = 0; lam < n; ++lam) {
      if (space.in_e_lambda(v, lam, e)) continue;
      const VertexId s = space.source_of(v, lam);
      const Mask x = space.ext(v, lam, e);
      if (!member(s, x)) violate(SatiationCondition::S2, fe, "λ=" + path_name(v, lam), space.to_fe_set(s, x));
    }

    std::vector<std::size_t> lams;
    for (std::size_t lam = 0; lam < n; ++lam)
      if (e >> lam & 1) lams.push_back(lam);

    // S3: every choice of 0 < n_λ <= d(λ)
    {
      std::vector<std::vector<std::size_t>> choices;
      for (auto lam : lams) {
        auto opts = space.proper_prefixes(v, lam);
        opts.push_back(lam);
        choices.push_back(std::move(opts));
      }
      std::vector<std::size_t> pick(lams.size(), 0);
      for (;;) {
        tick();
        Mask x = 0;
        std::string params;
        for (std::size_t i = 0; i < lams.size(); ++i) {
          x |= Mask{1} << choices[i][pick[i]];
          if (choices[i][pick[i]] != lams[i])
            params += path_name(v, lams[i]) + "->" + path_name(v, choices[i][pick[i]]) + " ";
        }
        if (!member(v, x)) violate(SatiationCondition::S3, fe, params, space.to_fe_set(v, x));
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
          if (++pick[i] < choices[i].size()) break;
          pick[i] = 0;
        }
        if (i == pick.size()) break;
      }
    }

    // S4: every E' ⊆ E and every choice of E'_λ ∈ s(λ)𝓕
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << lams.size()); ++sub) {
      std::vector<std::size_t> chosen;
      for (std::size_t i = 0; i < lams.size(); ++i)
        if (sub >> i & 1) chosen.push_back(lams[i]);
      bool possible = std::all_of(chosen.begin(), chosen.end(),
                                  [&](std::size_t lam) { return !at[space.source_of(v, lam)].empty(); });
      if (!possible) continue;
      Mask base = e;
      for (auto lam : chosen) base &= ~(Mask{1} << lam);
      std::vector<std::size_t> pick(chosen.size(), 0);
      for (;;) {
        tick();
        Mask x = base;
        std::string params;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
          const VertexId s = space.source_of(v, chosen[i]);
          const Mask f = at[s][pick[i]];
          x |= space.concat(v, chosen[i], f);
          params += path_name(v, chosen[i]) + "·" + to_string(g, space.to_fe_set(s, f)) + " ";
        }
        if (!member(v, x)) violate(SatiationCondition::S4, fe, params, space.to_fe_set(v, x));
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
          if (++pick[i] < at[space.source_of(v, chosen[i])].size()) break;
          pick[i] = 0;
        }
        if (i == pick.size()) break;
      }
    }
  }
  return rep;
}

bool is_satiated(const FESpace& space, const PathCollection& c) { return check_satiated(space, c).satiated; }

EdgeCollection edge_part_min(const PathCollection& c) {
  EdgeCollection edges;
  for (const auto& f : c)
    if (auto e = to_edge_set(f)) edges.push_back(std::move(*e));
  return min_collection(edges);
}

PathCollection to_satiated(const FESpace& space, const EdgeCollection& c) {
  auto rep = check_efficient(space.graph(), c);
  if (!rep.efficient) throw PreconditionError("collection is not efficient");
  return satiate(space, c);
}

EdgeCollection to_efficient(const FESpace& space, const PathCollection& c) {
  if (!is_satiated(space, c)) throw PreconditionError("collection is not satiated");
  return edge_part_min(c);
}

std::vector<PathCollection> enumerate_satiated(const FESpace& space, EnumerationLimits limits) {
  std::vector<SatiationEngine> queue{SatiationEngine(space)};
  std::set<std::vector<bool>> seen{queue.front().members()};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (std::size_t id = 0; id < space.member_count(); ++id) {
      if (queue[qi].members()[id]) continue;
      SatiationEngine next = queue[qi];
      auto [v, m] = space.member(id);
      next.add(v, m);
      next.run();
      if (seen.insert(next.members()).second) {
        if (seen.size() > limits.max_results)
          throw ResourceLimitError("more than " + std::to_string(limits.max_results) +
                                   " satiated collections");
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<PathCollection> out;
  for (const auto& eng : queue) out.push_back(eng.collection());
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const KGraph& g, const EdgeCollection& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += to_string(g, c[i]);
  }
  return s + "}";
}

std::string to_string(const KGraph& g, const PathCollection& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += to_string(g, c[i]);
  }
  return s + "}";
}

}  // namespace kgraph

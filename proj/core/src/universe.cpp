#include "kgraph/universe.hpp"

#include <algorithm>
#include <unordered_map>

#include "kgraph/error.hpp"

namespace kgraph {

FESpace::FESpace(const KGraph& g, Limits limits) : g_(&g), local_(g.vertex_count()) {
  if (!is_acyclic(g)) throw PreconditionError("FE(Λ) is only materialized for acyclic graphs");

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto all = all_paths_from(g, v);
    auto& loc = local_[v];
    for (auto& p : all)
      if (!p.is_vertex()) loc.paths.push_back(std::move(p));
    if (loc.paths.size() > limits.max_local_paths)
      throw ResourceLimitError("vertex '" + g.vertex_name(v) + "' has " +
                               std::to_string(loc.paths.size()) + " paths; FE(Λ) is capped at " +
                               std::to_string(limits.max_local_paths) + " paths per vertex");
  }

  std::vector<std::unordered_map<Path, std::size_t, PathHash>> index(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (std::size_t i = 0; i < local_[v].paths.size(); ++i) index[v].emplace(local_[v].paths[i], i);

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& loc = local_[v];
    const std::size_t n = loc.paths.size();
    loc.compat.assign(n, 0);
    loc.prefix_of.assign(n, 0);
    loc.ext.assign(n, std::vector<Mask>(n, 0));
    loc.prefixes.assign(n, {});
    loc.concat.assign(n, {});
    for (std::size_t a = 0; a < n; ++a) {
      const Path& lam = loc.paths[a];
      if (lam.length() == 1) loc.edge_mask |= Mask{1} << a;
      const VertexId s = lam.source();
      for (std::size_t b = 0; b < n; ++b) {
        const Path& mu = loc.paths[b];
        if (has_prefix(g, lam, mu)) loc.prefix_of[a] |= Mask{1} << b;
        for (const auto& [l1, m1] : lambda_min(g, lam, mu)) {
          loc.compat[a] |= Mask{1} << b;
          if (!l1.is_vertex()) loc.ext[a][b] |= Mask{1} << index[s].at(l1);
        }
      }
      for (const auto& m : degrees_below(lam.degree())) {
        if (m.is_zero() || m == lam.degree()) continue;
        loc.prefixes[a].push_back(index[v].at(factor(g, lam, m).first));
      }
      std::sort(loc.prefixes[a].begin(), loc.prefixes[a].end());
      loc.prefixes[a].erase(std::unique(loc.prefixes[a].begin(), loc.prefixes[a].end()),
                            loc.prefixes[a].end());
      for (const auto& f : local_[s].paths) loc.concat[a].push_back(index[v].at(compose(g, lam, f)));
    }
  }

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& loc = local_[v];
    loc.offset = total_;
    const Mask top = Mask{1} << loc.paths.size();
    for (Mask m = 1; m < top; ++m)
      if (is_exhaustive(v, m)) loc.members.push_back(m);
    total_ += loc.members.size();
    if (total_ > limits.max_members)
      throw ResourceLimitError("|FE(Λ)| exceeds the cap of " + std::to_string(limits.max_members));
  }
}

std::optional<std::size_t> FESpace::local_index(const Path& p) const {
  const auto& ps = local_.at(p.range()).paths;
  auto it = std::lower_bound(ps.begin(), ps.end(), p);
  if (it == ps.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - ps.begin());
}

bool FESpace::is_exhaustive(VertexId v, Mask m) const {
  if (m == 0) return false;  // the vertex path meets nothing
  for (Mask c : local_[v].compat)
    if ((c & m) == 0) return false;
  return true;
}

std::size_t FESpace::id(VertexId v, Mask m) const {
  const auto& ms = local_.at(v).members;
  auto it = std::lower_bound(ms.begin(), ms.end(), m);
  if (it == ms.end() || *it != m) throw PreconditionError("set is not a member of FE(Λ)");
  return local_[v].offset + static_cast<std::size_t>(it - ms.begin());
}

std::pair<VertexId, FESpace::Mask> FESpace::member(std::size_t id) const {
  // offsets are ascending; find the last vertex whose offset <= id
  VertexId lo = 0;
  for (VertexId v = 0; v < local_.size(); ++v)
    if (local_[v].offset <= id && !local_[v].members.empty()) lo = v;
  const auto& loc = local_[lo];
  if (id - loc.offset >= loc.members.size()) throw PreconditionError("FE(Λ) id out of range");
  return {lo, loc.members[id - loc.offset]};
}

FESpace::Mask FESpace::ext(VertexId v, std::size_t lambda, Mask e) const {
  Mask out = 0;
  const auto& row = local_[v].ext[lambda];
  for (std::size_t b = 0; e >> b; ++b)
    if (e >> b & 1) out |= row[b];
  return out;
}

FESpace::Mask FESpace::concat(VertexId v, std::size_t lambda, Mask f) const {
  Mask out = 0;
  const auto& row = local_[v].concat[lambda];
  for (std::size_t b = 0; f >> b; ++b)
    if (f >> b & 1) out |= Mask{1} << row[b];
  return out;
}

FESet FESpace::to_fe_set(VertexId v, Mask m) const {
  FESet out{v, {}};
  const auto& ps = local_[v].paths;
  for (std::size_t b = 0; b < ps.size(); ++b)
    if (m >> b & 1) out.paths.push_back(ps[b]);
  return out;
}

FESpace::Mask FESpace::to_mask(const FESet& e) const {
  Mask m = 0;
  for (const auto& p : e.paths) {
    if (p.range() != e.vertex) throw PreconditionError("FE set has mixed ranges");
    auto i = local_index(p);
    if (!i) throw PreconditionError("path is not in vΛ∖{v}");
    m |= Mask{1} << *i;
  }
  return m;
}

FESpace::Mask FESpace::to_mask(const EdgeSet& e) const { return to_mask(kgraph::to_fe_set(*g_, e)); }

}  // namespace kgraph

#include "kgraph/exhaustive.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "kgraph/error.hpp"

namespace kgraph {

bool EdgeSet::contains(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }

bool EdgeSet::subset_of(const EdgeSet& other) const {
  return vertex == other.vertex &&
         std::includes(other.edges.begin(), other.edges.end(), edges.begin(), edges.end());
}

bool FESet::contains(const Path& p) const { return std::binary_search(paths.begin(), paths.end(), p); }

bool FESet::subset_of(const FESet& other) const {
  return vertex == other.vertex &&
         std::includes(other.paths.begin(), other.paths.end(), paths.begin(), paths.end());
}

bool FESet::edges_only() const {
  return std::all_of(paths.begin(), paths.end(), [](const Path& p) { return p.length() == 1; });
}

EdgeSet make_edge_set(const KGraph& g, VertexId v, std::vector<EdgeId> edges) {
  if (v >= g.vertex_count()) throw PreconditionError("vertex index out of range");
  for (EdgeId e : edges) {
    if (e >= g.edge_count()) throw PreconditionError("edge index out of range");
    if (g.edge(e).range != v)
      throw PreconditionError("edge '" + g.edge(e).name + "' does not have range '" +
                              g.vertex_name(v) + "' (mixed ranges)");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return EdgeSet{v, std::move(edges)};
}

FESet make_fe_set(const KGraph& g, VertexId v, std::vector<Path> paths) {
  if (v >= g.vertex_count()) throw PreconditionError("vertex index out of range");
  for (const auto& p : paths) {
    if (p.range() != v)
      throw PreconditionError("path " + to_string(g, p) + " does not have range '" +
                              g.vertex_name(v) + "' (mixed ranges)");
    if (p.is_vertex()) throw PreconditionError("an FE set may not contain a vertex path");
  }
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  return FESet{v, std::move(paths)};
}

FESet to_fe_set(const KGraph& g, const EdgeSet& e) {
  FESet out{e.vertex, {}};
  for (EdgeId x : e.edges) out.paths.push_back(edge_path(g, x));
  std::sort(out.paths.begin(), out.paths.end());
  return out;
}

std::optional<EdgeSet> to_edge_set(const FESet& f) {
  EdgeSet out{f.vertex, {}};
  for (const auto& p : f.paths) {
    if (p.length() != 1) return std::nullopt;
    out.edges.push_back(p.edges().front());
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

EdgeSet color_edge_set(const KGraph& g, VertexId v, std::size_t color) {
  auto es = g.edges_at(v, color);
  return EdgeSet{v, std::vector<EdgeId>(es.begin(), es.end())};
}

EdgeSet all_edges_at(const KGraph& g, VertexId v) { return EdgeSet{v, g.edges_at(v)}; }

// ---------------------------------------------------------------------------
// Avoidance automaton.
//
// After reading a path λ at v, the state keeps, for each colour i, the set
// W_i of colour-i edges g at s(λ) with (λg)(0,e_i) ∈ E. Once λ contains a
// colour-i edge, W_i is empty: (λ)(0,e_i) is fixed and was not in E (else
// we would have stopped). λ is compatible with some member iff some W_i is
// nonempty or λ already passed through a member; the all-empty state is
// therefore a certificate of non-exhaustiveness.
// ---------------------------------------------------------------------------

std::optional<Path> avoiding_path(const KGraph& g, const EdgeSet& e) {
  const std::size_t k = g.rank();
  for (EdgeId x : e.edges)
    if (g.edge(x).range != e.vertex) throw PreconditionError("edge set has mixed ranges");

  using State = std::vector<std::uint32_t>;  // vertex, then per colour: size, ids...
  auto encode = [&](VertexId w, const std::vector<std::vector<EdgeId>>& ws) {
    State s{w};
    for (const auto& wi : ws) {
      s.push_back(static_cast<std::uint32_t>(wi.size()));
      s.insert(s.end(), wi.begin(), wi.end());
    }
    return s;
  };
  auto decode = [&](const State& s) {
    std::vector<std::vector<EdgeId>> ws(k);
    std::size_t pos = 1;
    for (std::size_t i = 0; i < k; ++i) {
      std::uint32_t n = s[pos++];
      ws[i].assign(s.begin() + static_cast<std::ptrdiff_t>(pos),
                   s.begin() + static_cast<std::ptrdiff_t>(pos + n));
      pos += n;
    }
    return ws;
  };

  std::vector<std::vector<EdgeId>> init(k);
  for (EdgeId x : e.edges) init[g.color(x)].push_back(x);

  std::map<State, std::size_t> index;
  std::vector<State> states;
  std::vector<std::pair<std::size_t, EdgeId>> parent;  // (state, edge read)
  std::deque<std::size_t> queue;

  auto visit = [&](State s, std::size_t from, EdgeId via) -> std::optional<std::size_t> {
    auto [it, fresh] = index.emplace(std::move(s), states.size());
    if (!fresh) return std::nullopt;
    states.push_back(it->first);
    parent.emplace_back(from, via);
    queue.push_back(it->second);
    return it->second;
  };
  auto is_dead = [&](const State& s) {
    std::size_t pos = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (s[pos] != 0) return false;
      pos += 1 + s[pos];
    }
    return true;
  };
  auto witness = [&](std::size_t id) {
    std::vector<EdgeId> word;
    while (id != 0) {
      word.push_back(parent[id].second);
      id = parent[id].first;
    }
    std::reverse(word.begin(), word.end());
    return path_from_word(g, word, e.vertex);
  };

  visit(encode(e.vertex, init), 0, 0);
  while (!queue.empty()) {
    std::size_t id = queue.front();
    queue.pop_front();
    if (is_dead(states[id])) return witness(id);
    VertexId w = states[id][0];
    auto ws = decode(states[id]);
    for (EdgeId h : g.edges_at(w)) {
      const std::size_t c = g.color(h);
      if (std::binary_search(ws[c].begin(), ws[c].end(), h)) continue;  // λh ∈ EΛ
      const VertexId s = g.edge(h).source;
      std::vector<std::vector<EdgeId>> next(k);
      for (std::size_t i = 0; i < k; ++i) {
        if (i == c || ws[i].empty()) continue;
        for (EdgeId x : g.edges_at(s, i))
          if (std::binary_search(ws[i].begin(), ws[i].end(), g.swap(h, x).first))
            next[i].push_back(x);
      }
      visit(encode(s, next), id, h);
    }
  }
  return std::nullopt;
}

bool is_exhaustive_edges(const KGraph& g, const EdgeSet& e) { return !avoiding_path(g, e).has_value(); }

ExhaustiveVerdict is_exhaustive_general(const KGraph& g, const FESet& e,
                                        std::optional<std::uint32_t> length_bound) {
  for (const auto& p : e.paths)
    if (p.range() != e.vertex) throw PreconditionError("FE set has mixed ranges");

  auto compatible_with_some = [&](const Path& lambda) {
    return std::any_of(e.paths.begin(), e.paths.end(),
                       [&](const Path& mu) { return compatible(g, lambda, mu); });
  };

  std::vector<Path> candidates;
  bool complete = true;
  std::uint32_t bound = 0;
  try {
    candidates = all_paths_from(g, e.vertex);
  } catch (const PreconditionError&) {
    if (!length_bound)
      throw PreconditionError("vertex '" + g.vertex_name(e.vertex) +
                              "' reaches a cycle; exhaustiveness of general sets needs a length bound");
    complete = false;
    bound = *length_bound;
    candidates = paths_up_to_length(g, e.vertex, bound);
  }

  ExhaustiveVerdict verdict;
  // Sorted by degree, so shorter witnesses are found first within a range.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Path& a, const Path& b) { return a.length() < b.length(); });
  for (const auto& lambda : candidates) {
    if (!compatible_with_some(lambda)) {
      verdict.exhaustive = false;
      verdict.exact = true;
      verdict.witness = lambda;
      return verdict;
    }
  }
  verdict.exhaustive = true;
  if (complete) return verdict;

  // Conclusive if every path of length exactly `bound` already lies in EΛ:
  // all longer paths then extend a member and are compatible with it.
  bool layer_in_e = true;
  bool any_at_bound = false;
  for (const auto& lambda : candidates) {
    if (lambda.length() != bound) continue;
    any_at_bound = true;
    bool in_e = std::any_of(e.paths.begin(), e.paths.end(),
                            [&](const Path& mu) { return has_prefix(g, lambda, mu); });
    if (!in_e) {
      layer_in_e = false;
      break;
    }
  }
  verdict.exact = !any_at_bound || layer_in_e;
  return verdict;
}

std::vector<Path> ext_general(const KGraph& g, const Path& lambda, const FESet& e) {
  if (lambda.range() != e.vertex) throw PreconditionError("r(λ) differs from r(E)");
  std::vector<Path> out;
  for (const auto& mu : e.paths)
    for (auto& [l1, m1] : lambda_min(g, lambda, mu)) out.push_back(std::move(l1));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void require_exhaustive(const KGraph& g, const EdgeSet& e, const char* what) {
  if (!is_exhaustive_edges(g, e))
    throw PreconditionError(std::string(what) + " " + to_string(g, e) + " is not exhaustive");
}

}  // namespace

EdgeSet detail::ext_edge_unchecked(const KGraph& g, EdgeId f, const EdgeSet& e) {
  const VertexId s = g.edge(f).source;
  EdgeSet out{s, {}};
  for (EdgeId x : e.edges) {
    if (g.color(x) == g.color(f)) continue;  // distinct edges of one colour never meet
    for (EdgeId y : g.edges_at(s, g.color(x)))
      if (g.swap(f, y).first == x) out.edges.push_back(y);
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  return out;
}

EdgeSet detail::substitute_unchecked(const KGraph& g, const EdgeSet& e_set, EdgeId e,
                                     const EdgeSet& f_set) {
  EdgeSet out{e_set.vertex, {}};
  for (EdgeId x : e_set.edges)
    if (x != e) out.edges.push_back(x);
  for (EdgeId f : f_set.edges) out.edges.push_back(leading_edge(g, e, f));
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  return out;
}

EdgeSet ext_edge(const KGraph& g, EdgeId f, const EdgeSet& e) {
  if (g.edge(f).range != e.vertex) throw PreconditionError("r(f) differs from r(E)");
  if (e.contains(f)) throw PreconditionError("f = '" + g.edge(f).name + "' belongs to E");
  require_exhaustive(g, e, "E =");
  EdgeSet out = detail::ext_edge_unchecked(g, f, e);
  if (!is_exhaustive_edges(g, out))
    throw std::logic_error("Ext(" + g.edge(f).name + ";E) is not exhaustive");
  return out;
}

EdgeSet ext_path(const KGraph& g, const Path& lambda, const EdgeSet& e) {
  if (lambda.range() != e.vertex) throw PreconditionError("r(λ) differs from r(E)");
  require_exhaustive(g, e, "E =");
  EdgeSet cur = e;
  for (EdgeId h : lambda.edges()) {
    if (cur.contains(h))
      throw PreconditionError("λ = " + to_string(g, lambda) + " lies in EΛ; Ext is not edge-only");
    cur = detail::ext_edge_unchecked(g, h, cur);
  }
  return cur;
}

EdgeSet ext_path_direct(const KGraph& g, const Path& lambda, const EdgeSet& e) {
  FESet fe = to_fe_set(g, e);
  EdgeSet out{lambda.source(), {}};
  for (const auto& p : ext_general(g, lambda, fe)) {
    if (p.length() != 1)
      throw PreconditionError("λ = " + to_string(g, lambda) + " lies in EΛ; Ext is not edge-only");
    out.edges.push_back(p.edges().front());
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

EdgeId leading_edge(const KGraph& g, EdgeId e, EdgeId f) {
  if (g.edge(e).source != g.edge(f).range) throw PreconditionError("edges are not composable");
  if (g.color(e) == g.color(f)) return e;
  return g.swap(e, f).first;
}

EdgeSet substitute(const KGraph& g, const EdgeSet& e_set, EdgeId e, const EdgeSet& f_set) {
  if (!e_set.contains(e)) throw PreconditionError("e = '" + g.edge(e).name + "' is not in E");
  if (f_set.vertex != g.edge(e).source) throw PreconditionError("F is not anchored at s(e)");
  require_exhaustive(g, e_set, "E =");
  require_exhaustive(g, f_set, "F =");
  EdgeSet out = detail::substitute_unchecked(g, e_set, e, f_set);
  if (!is_exhaustive_edges(g, out)) throw std::logic_error("E_F is not exhaustive");
  return out;
}

std::vector<EdgeSet> enumerate_fe_edge_sets(const KGraph& g, VertexId v, std::size_t max_edges) {
  const auto& all = g.edges_at(v);
  if (all.size() > max_edges)
    throw ResourceLimitError("vertex '" + g.vertex_name(v) + "' has " + std::to_string(all.size()) +
                             " edges; FE(Λ¹) enumeration is capped at " + std::to_string(max_edges));
  std::vector<EdgeSet> out;
  const std::uint64_t n = std::uint64_t{1} << all.size();
  for (std::uint64_t mask = 1; mask < n; ++mask) {
    EdgeSet e{v, {}};
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) e.edges.push_back(all[i]);
    if (is_exhaustive_edges(g, e)) out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FEStats fe_stats(const FESet& e) {
  FEStats st;
  std::set<Degree> degrees;
  for (const auto& p : e.paths) {
    st.L = std::max(st.L, p.degree().length());
    degrees.insert(p.degree());
  }
  st.n_by_length.assign(st.L + 1, 0);
  for (const auto& d : degrees) ++st.n_by_length[d.length()];
  st.n_total = degrees.size();
  return st;
}

std::string to_string(const KGraph& g, const EdgeSet& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.edges.size(); ++i) {
    if (i) s += ",";
    s += g.edge(e.edges[i]).name;
  }
  return s + "}@" + g.vertex_name(e.vertex);
}

std::string to_string(const KGraph& g, const FESet& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.paths.size(); ++i) {
    if (i) s += ",";
    s += to_string(g, e.paths[i]);
  }
  return s + "}@" + g.vertex_name(e.vertex);
}

}  // namespace kgraph

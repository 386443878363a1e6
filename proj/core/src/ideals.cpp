#include "kgraph/ideals.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "kgraph/error.hpp"

namespace kgraph {

namespace {

std::vector<bool> membership(const KGraph& g, const VertexSet& h) {
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexId v : h) in.at(v) = true;
  return in;
}

}  // namespace

bool is_hereditary(const KGraph& g, const VertexSet& h) {
  const auto in = membership(g, h);
  const auto reach = reachability(g);
  for (VertexId v : h)
    for (VertexId w = 0; w < g.vertex_count(); ++w)
      if (reach[v][w] && !in[w]) return false;
  return true;
}

bool is_saturated(const KGraph& g, const VertexSet& h, const EdgeCollection& c) {
  const auto in = membership(g, h);
  for (const auto& e : c) {
    if (in[e.vertex]) continue;
    bool all_in = std::all_of(e.edges.begin(), e.edges.end(),
                              [&](EdgeId x) { return in[g.edge(x).source]; });
    if (all_in) return false;
  }
  return true;
}

EdgeSet Quotient::to_quotient(const EdgeSet& e) const {
  auto v = vertex_to_quotient.at(e.vertex);
  if (!v) throw PreconditionError("edge set lives at a removed vertex");
  EdgeSet out{*v, {}};
  for (EdgeId x : e.edges) {
    auto y = edge_to_quotient.at(x);
    if (!y) throw PreconditionError("edge set uses a removed edge");
    out.edges.push_back(*y);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

EdgeSet Quotient::from_quotient(const EdgeSet& e) const {
  EdgeSet out{vertex_from_quotient.at(e.vertex), {}};
  for (EdgeId x : e.edges) out.edges.push_back(edge_from_quotient.at(x));
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

EdgeCollection Quotient::to_quotient(const EdgeCollection& c) const {
  EdgeCollection out;
  for (const auto& e : c) out.push_back(to_quotient(e));
  return canonical(std::move(out));
}

EdgeCollection Quotient::from_quotient(const EdgeCollection& c) const {
  EdgeCollection out;
  for (const auto& e : c) out.push_back(from_quotient(e));
  return canonical(std::move(out));
}

Quotient quotient_graph(const KGraph& g, const VertexSet& h) {
  if (!is_hereditary(g, h)) throw PreconditionError("H is not hereditary");
  const auto in = membership(g, h);
  const GraphSpec full = g.to_spec();

  GraphSpec spec;
  spec.k = g.rank();
  std::vector<std::optional<VertexId>> vmap(g.vertex_count());
  std::vector<VertexId> vback;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in[v]) continue;
    vmap[v] = static_cast<VertexId>(vback.size());
    vback.push_back(v);
    spec.vertices.push_back(full.vertices[v]);
  }
  std::vector<std::optional<EdgeId>> emap(g.edge_count());
  std::vector<EdgeId> eback;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in[g.edge(e).source]) continue;
    emap[e] = static_cast<EdgeId>(eback.size());
    eback.push_back(e);
    spec.edges.push_back(full.edges[e]);
  }
  for (std::size_t i = 0; i < g.squares().size(); ++i) {
    const auto& sq = g.squares()[i];
    if (std::all_of(sq.begin(), sq.end(), [&](EdgeId e) { return emap[e].has_value(); }))
      spec.squares.push_back(full.squares[i]);
  }
  VertexSet removed(h.begin(), h.end());
  std::sort(removed.begin(), removed.end());
  return Quotient{KGraph::from_spec(spec), std::move(removed), std::move(vmap), std::move(emap),
                  std::move(vback), std::move(eback)};
}

EdgeCollection restrict_collection(const KGraph& g, const EdgeCollection& c, const VertexSet& h,
                                   const Quotient& q) {
  if (!is_hereditary(g, h)) throw PreconditionError("H is not hereditary");
  if (!is_saturated(g, h, c)) throw PreconditionError("H is not saturated for this collection");
  const auto in = membership(g, h);
  EdgeCollection out;
  for (const auto& e : c) {
    if (in[e.vertex]) continue;
    EdgeSet kept{e.vertex, {}};
    for (EdgeId x : e.edges)
      if (!in[g.edge(x).source]) kept.edges.push_back(x);
    EdgeSet qe = q.to_quotient(kept);
    if (!is_exhaustive_edges(q.graph, qe))
      throw std::logic_error("E∖EH is not exhaustive in the quotient");
    out.push_back(std::move(qe));
  }
  return canonical(std::move(out));
}

EdgeCollection restrict_collection(const KGraph& g, const EdgeCollection& c, const VertexSet& h) {
  return restrict_collection(g, c, h, quotient_graph(g, h));
}

std::vector<VertexSet> hereditary_saturated_sets(const KGraph& g, const EdgeCollection& c,
                                                 std::size_t max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw ResourceLimitError("vertex subsets of a graph with " + std::to_string(g.vertex_count()) +
                             " vertices exceed the cap");
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.vertex_count()); ++mask) {
    VertexSet h;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (mask >> v & 1) h.push_back(v);
    if (is_hereditary(g, h) && is_saturated(g, h, c)) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IdealLabel> enumerate_ideal_labels(const KGraph& g, const EdgeCollection& c,
                                               EnumerationLimits limits) {
  if (!is_efficient(g, c)) throw PreconditionError("collection is not efficient");
  std::vector<IdealLabel> out;
  for (const auto& h : hereditary_saturated_sets(g, c)) {
    Quotient q = quotient_graph(g, h);
    const EdgeCollection eh = restrict_collection(g, c, h, q);
    for (const auto& b : enumerate_efficient(q.graph, limits)) {
      bool ok = std::all_of(eh.begin(), eh.end(), [&](const EdgeSet& e) { return has_member_below(b, e); });
      if (ok) out.push_back({h, q.from_quotient(b)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IdealLabel> enumerate_ideal_labels_satiated(const KGraph& g, const EdgeCollection& c,
                                                        EnumerationLimits limits) {
  if (!is_acyclic(g)) throw PreconditionError("satiated label enumeration needs an acyclic graph");
  if (!is_efficient(g, c)) throw PreconditionError("collection is not efficient");
  std::vector<IdealLabel> out;
  for (const auto& h : hereditary_saturated_sets(g, c)) {
    Quotient q = quotient_graph(g, h);
    const PathCollection eh = to_path_collection(q.graph, restrict_collection(g, c, h, q));
    FESpace space(q.graph);
    for (const auto& f : enumerate_satiated(space, limits)) {
      bool ok = std::all_of(eh.begin(), eh.end(), [&](const FESet& e) { return contains(f, e); });
      if (ok) out.push_back({h, q.from_quotient(edge_part_min(f))});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuotientFamily::QuotientFamily(const KGraph& g, const IdealLabel& label)
    : g_(&g), q_(std::make_unique<Quotient>(quotient_graph(g, label.h))) {
  rep_ = std::make_unique<Representation>(Representation::build(q_->graph, q_->to_quotient(label.b)));
}

SparseMatrix QuotientFamily::operator()(const Path& lambda) const {
  const std::size_t n = rep_->dimension();
  if (!q_->vertex_to_quotient[lambda.source()]) return SparseMatrix::zero(n, n);
  std::vector<EdgeId> word;
  for (EdgeId e : lambda.edges()) word.push_back(*q_->edge_to_quotient[e]);
  const VertexId r = *q_->vertex_to_quotient[lambda.range()];
  return (*rep_)(path_from_word(q_->graph, word, r));
}

RoundTrip ideal_round_trip(const KGraph& g, const EdgeCollection& c, const IdealLabel& label) {
  if (!is_acyclic(g)) throw PreconditionError("the label round trip needs an acyclic graph");
  QuotientFamily t(g, label);
  RoundTrip rt;
  rt.relations = verify_tck(g, t);
  rt.relations.append(verify_ck(g, t, c));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (t(vertex_path(g, v)).is_zero()) rt.h.push_back(v);
  EdgeCollection vanishing;
  for (const auto& e : fe_edge_sets(t.quotient().graph)) {
    EdgeSet orig = t.quotient().from_quotient(e);
    if (gap_vanishes(g, t, orig)) vanishing.push_back(std::move(orig));
  }
  rt.b = min_collection(canonical(std::move(vanishing)));
  rt.matches = rt.h == label.h && rt.b == label.b;
  return rt;
}

ToeplitzLabel toeplitz_label(const KGraph& g, std::vector<std::size_t> colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  if (colors.empty()) throw PreconditionError("the colour set K must be nonempty");
  for (auto c : colors)
    if (c < 1 || c > g.rank())
      throw PreconditionError("colour " + std::to_string(c) + " outside 1.." + std::to_string(g.rank()));
  if (graph_properties(g).has_sources) throw PreconditionError("graph has a source");

  ToeplitzLabel out;
  out.colors = colors;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    EdgeSet e{v, {}};
    for (auto c : colors) {
      auto es = g.edges_at(v, c - 1);
      e.edges.insert(e.edges.end(), es.begin(), es.end());
    }
    std::sort(e.edges.begin(), e.edges.end());
    out.collection.push_back(std::move(e));
  }
  out.collection = canonical(std::move(out.collection));
  out.efficient = is_efficient(g, out.collection);
  return out;
}

ToeplitzLabel intersect_toeplitz_labels(const KGraph& g, const std::vector<std::size_t>& k,
                                        const std::vector<std::size_t>& l) {
  if (k.empty() || l.empty()) throw PreconditionError("the colour sets K and L must be nonempty");
  std::vector<std::size_t> both(k);
  both.insert(both.end(), l.begin(), l.end());
  return toeplitz_label(g, both);
}

}  // namespace kgraph

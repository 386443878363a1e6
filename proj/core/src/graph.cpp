#include "kgraph/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "kgraph/error.hpp"

namespace kgraph {

namespace {

std::uint64_t pair_key(EdgeId x, EdgeId y) {
  return (static_cast<std::uint64_t>(x) << 32) | y;
}

struct Resolved {
  std::unordered_map<std::string, VertexId> vertex_index;
  std::unordered_map<std::string, EdgeId> edge_index;
  std::vector<Edge> edges;  // colour 0-based; range/source valid only if edge_ok
  std::vector<bool> edge_ok;
};

Resolved resolve(const GraphSpec& spec, ValidationReport& report) {
  auto add = [&](IssueKind kind, std::string msg) {
    report.issues.push_back({kind, std::move(msg)});
  };
  Resolved r;
  for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
    const auto& name = spec.vertices[i];
    if (!r.vertex_index.emplace(name, static_cast<VertexId>(i)).second)
      add(IssueKind::DuplicateVertex, "duplicate vertex id '" + name + "'");
  }
  for (std::size_t i = 0; i < spec.edges.size(); ++i) {
    const auto& es = spec.edges[i];
    bool ok = true;
    if (!r.edge_index.emplace(es.id, static_cast<EdgeId>(i)).second) {
      add(IssueKind::DuplicateEdge, "duplicate edge id '" + es.id + "'");
      ok = false;
    }
    if (es.color < 1 || es.color > spec.k) {
      add(IssueKind::BadColor, "edge '" + es.id + "' has colour " + std::to_string(es.color) +
                                   " outside 1.." + std::to_string(spec.k));
      ok = false;
    }
    Edge e{es.id, es.color == 0 ? 0 : es.color - 1, 0, 0};
    auto rit = r.vertex_index.find(es.range);
    auto sit = r.vertex_index.find(es.source);
    if (rit == r.vertex_index.end()) {
      add(IssueKind::DanglingVertex, "edge '" + es.id + "' has unknown range '" + es.range + "'");
      ok = false;
    } else {
      e.range = rit->second;
    }
    if (sit == r.vertex_index.end()) {
      add(IssueKind::DanglingVertex, "edge '" + es.id + "' has unknown source '" + es.source + "'");
      ok = false;
    } else {
      e.source = sit->second;
    }
    r.edges.push_back(std::move(e));
    r.edge_ok.push_back(ok);
  }
  if (!report.issues.empty()) report.references_resolved = false;
  return r;
}

}  // namespace

std::string_view to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::BadRank: return "bad rank";
    case IssueKind::DuplicateVertex: return "duplicate vertex";
    case IssueKind::DuplicateEdge: return "duplicate edge";
    case IssueKind::DanglingVertex: return "dangling vertex reference";
    case IssueKind::BadColor: return "bad colour";
    case IssueKind::UnknownEdge: return "unknown edge";
    case IssueKind::MalformedSquare: return "malformed square";
    case IssueKind::DuplicateSquare: return "square listed twice";
    case IssueKind::MissingSquare: return "missing square";
    case IssueKind::CubeInconsistency: return "cube inconsistency";
  }
  return "unknown";
}

bool ValidationReport::has(IssueKind kind) const {
  return std::any_of(issues.begin(), issues.end(),
                     [&](const ValidationIssue& i) { return i.kind == kind; });
}

std::string ValidationReport::summary() const {
  if (issues.empty()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) os << "; ";
    os << to_string(issues[i].kind) << ": " << issues[i].message;
  }
  return os.str();
}

ValidationReport validate(const GraphSpec& spec) {
  ValidationReport report;
  auto add = [&](IssueKind kind, std::string msg) {
    report.issues.push_back({kind, std::move(msg)});
  };
  if (spec.k < 1) {
    add(IssueKind::BadRank, "k must be at least 1");
    report.references_resolved = false;
    return report;
  }
  Resolved res = resolve(spec, report);
  const auto& edges = res.edges;

  // Square table in both directions.
  std::unordered_map<std::uint64_t, std::pair<EdgeId, EdgeId>> fwd;  // (e,f) -> (f',e')
  std::unordered_map<std::uint64_t, std::pair<EdgeId, EdgeId>> bwd;  // (f',e') -> (e,f)
  for (const auto& sq : spec.squares) {
    std::array<EdgeId, 4> ids{};
    bool known = true;
    const std::array<const std::string*, 4> names{&sq.lhs[0], &sq.lhs[1], &sq.rhs[0], &sq.rhs[1]};
    for (std::size_t i = 0; i < 4; ++i) {
      auto it = res.edge_index.find(*names[i]);
      if (it == res.edge_index.end()) {
        add(IssueKind::UnknownEdge, "square mentions unknown edge '" + *names[i] + "'");
        known = false;
      } else if (!res.edge_ok[it->second]) {
        known = false;
      } else {
        ids[i] = it->second;
      }
    }
    if (!known) {
      report.references_resolved = false;
      report.square_bijection_complete = false;
      continue;
    }
    const Edge& e = edges[ids[0]];
    const Edge& f = edges[ids[1]];
    const Edge& f2 = edges[ids[2]];
    const Edge& e2 = edges[ids[3]];
    std::string label = "[[" + e.name + "," + f.name + "],[" + f2.name + "," + e2.name + "]]";
    if (e.color >= f.color) {
      add(IssueKind::MalformedSquare, label + ": first pair must have colour(e) < colour(f)");
      continue;
    }
    if (e.source != f.range || f2.source != e2.range) {
      add(IssueKind::MalformedSquare, label + ": a side is not composable");
      continue;
    }
    if (f2.color != f.color || e2.color != e.color) {
      add(IssueKind::MalformedSquare, label + ": colours of the two sides do not match");
      continue;
    }
    if (f2.range != e.range || e2.source != f.source) {
      add(IssueKind::MalformedSquare, label + ": the two sides have different endpoints");
      continue;
    }
    if (!fwd.emplace(pair_key(ids[0], ids[1]), std::pair{ids[2], ids[3]}).second) {
      add(IssueKind::DuplicateSquare, "pair (" + e.name + "," + f.name + ") has two squares");
      report.square_bijection_complete = false;
      continue;
    }
    if (!bwd.emplace(pair_key(ids[2], ids[3]), std::pair{ids[0], ids[1]}).second) {
      add(IssueKind::DuplicateSquare,
          "pair (" + f2.name + "," + e2.name + ") is the image of two squares");
      report.square_bijection_complete = false;
    }
  }

  // Completeness: every bi-coloured composable pair in each orientation.
  std::vector<std::vector<EdgeId>> into(spec.vertices.size());  // edges by range
  for (EdgeId i = 0; i < edges.size(); ++i)
    if (res.edge_ok[i]) into[edges[i].range].push_back(i);
  for (EdgeId x = 0; x < edges.size(); ++x) {
    if (!res.edge_ok[x]) continue;
    for (EdgeId y : into[edges[x].source]) {
      const Edge& ex = edges[x];
      const Edge& ey = edges[y];
      if (ex.color == ey.color) continue;
      bool found = ex.color < ey.color ? fwd.count(pair_key(x, y)) : bwd.count(pair_key(x, y));
      if (!found) {
        add(IssueKind::MissingSquare, "no square for composable pair (" + ex.name + "," + ey.name + ")");
        report.square_bijection_complete = false;
      }
    }
  }

  if (spec.k >= 3 && report.ok()) {
    auto sw = [&](EdgeId x, EdgeId y) {
      if (edges[x].color < edges[y].color) return fwd.at(pair_key(x, y));
      auto p = bwd.at(pair_key(x, y));
      return p;
    };
    // Only the fully reversed colour pattern has two reduced rewrite orders.
    for (EdgeId x = 0; x < edges.size(); ++x) {
      for (EdgeId y : into[edges[x].source]) {
        if (edges[y].color >= edges[x].color) continue;
        for (EdgeId z : into[edges[y].source]) {
          if (edges[z].color >= edges[y].color) continue;
          auto [y1, x1] = sw(x, y);
          auto [z1, x2] = sw(x1, z);
          auto [za, ya] = sw(y1, z1);
          auto [z3, y3] = sw(y, z);
          auto [z4, x4] = sw(x, z3);
          auto [yb, xb] = sw(x4, y3);
          if (za != z4 || ya != yb || x2 != xb) {
            add(IssueKind::CubeInconsistency, "triple (" + edges[x].name + "," + edges[y].name + "," +
                                                  edges[z].name + ") rewrites to two normal forms");
            report.cube_consistent = false;
          }
        }
      }
    }
  }
  return report;
}

KGraph KGraph::from_spec(const GraphSpec& spec) {
  ValidationReport report = validate(spec);
  if (!report.ok()) throw GraphError("invalid k-graph: " + report.summary());

  KGraph g;
  g.k_ = spec.k;
  g.vertex_names_ = spec.vertices;
  for (VertexId v = 0; v < g.vertex_names_.size(); ++v) g.vertex_index_.emplace(g.vertex_names_[v], v);
  g.out_by_color_.assign(g.vertex_names_.size() * g.k_, {});
  g.out_all_.assign(g.vertex_names_.size(), {});
  for (EdgeId i = 0; i < spec.edges.size(); ++i) {
    const auto& es = spec.edges[i];
    Edge e{es.id, es.color - 1, g.vertex_index_.at(es.range), g.vertex_index_.at(es.source)};
    g.edge_index_.emplace(e.name, i);
    g.out_by_color_[e.range * g.k_ + e.color].push_back(i);
    g.out_all_[e.range].push_back(i);
    g.edges_.push_back(std::move(e));
  }
  for (const auto& sq : spec.squares) {
    EdgeId e = g.edge_index_.at(sq.lhs[0]);
    EdgeId f = g.edge_index_.at(sq.lhs[1]);
    EdgeId f2 = g.edge_index_.at(sq.rhs[0]);
    EdgeId e2 = g.edge_index_.at(sq.rhs[1]);
    g.swap_.emplace(pair_key(e, f), std::pair{f2, e2});
    g.swap_.emplace(pair_key(f2, e2), std::pair{e, f});
    g.squares_.push_back({e, f, f2, e2});
  }
  return g;
}

std::optional<VertexId> KGraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> KGraph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexId KGraph::vertex_id(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw PreconditionError("unknown vertex '" + std::string(name) + "'");
  return *v;
}

EdgeId KGraph::edge_id(std::string_view name) const {
  auto e = find_edge(name);
  if (!e) throw PreconditionError("unknown edge '" + std::string(name) + "'");
  return *e;
}

std::span<const EdgeId> KGraph::edges_at(VertexId v, std::size_t color) const {
  return out_by_color_.at(v * k_ + color);
}

std::pair<EdgeId, EdgeId> KGraph::swap(EdgeId x, EdgeId y) const {
  auto it = swap_.find(pair_key(x, y));
  if (it == swap_.end())
    throw PreconditionError("edges '" + edges_.at(x).name + "' and '" + edges_.at(y).name +
                            "' do not form a bi-coloured composable pair");
  return it->second;
}

GraphSpec KGraph::to_spec() const {
  GraphSpec spec;
  spec.k = k_;
  spec.vertices = vertex_names_;
  for (const auto& e : edges_)
    spec.edges.push_back({e.name, e.color + 1, vertex_names_[e.range], vertex_names_[e.source]});
  for (const auto& sq : squares_)
    spec.squares.push_back({{edges_[sq[0]].name, edges_[sq[1]].name},
                            {edges_[sq[2]].name, edges_[sq[3]].name}});
  return spec;
}

}  // namespace kgraph

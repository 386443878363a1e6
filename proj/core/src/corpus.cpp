#include "kgraph/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <random>

#include "kgraph/error.hpp"
#include "kgraph/path.hpp"

namespace kgraph {

namespace {

std::string edge_name(const std::string& letter, std::size_t i, std::size_t count) {
  return count == 1 ? letter : letter + std::to_string(i + 1);
}

// Bi-coloured paths of a presentation, grouped by (range, source): the
// colour-i-then-j ones (e·f) and the colour-j-then-i ones (f2·e2).
struct Spans {
  std::map<std::pair<std::string, std::string>, std::vector<std::array<std::size_t, 2>>> ij, ji;
};

Spans bicoloured(const GraphSpec& spec, std::size_t i, std::size_t j) {
  Spans s;
  for (std::size_t x = 0; x < spec.edges.size(); ++x)
    for (std::size_t y = 0; y < spec.edges.size(); ++y) {
      const auto& a = spec.edges[x];
      const auto& b = spec.edges[y];
      if (a.source != b.range) continue;
      if (a.color == i && b.color == j) s.ij[{a.range, b.source}].push_back({x, y});
      if (a.color == j && b.color == i) s.ji[{a.range, b.source}].push_back({x, y});
    }
  return s;
}

SquareSpec make_square(const GraphSpec& spec, std::array<std::size_t, 2> lhs, std::array<std::size_t, 2> rhs) {
  return {{spec.edges[lhs[0]].id, spec.edges[lhs[1]].id}, {spec.edges[rhs[0]].id, spec.edges[rhs[1]].id}};
}

void add_random_squares(GraphSpec& spec, std::mt19937_64& rng) {
  spec.squares.clear();
  for (std::size_t i = 1; i <= spec.k; ++i)
    for (std::size_t j = i + 1; j <= spec.k; ++j) {
      Spans s = bicoloured(spec, i, j);
      for (auto& [key, lhs] : s.ij) {
        auto rhs = s.ji[key];
        if (rhs.size() != lhs.size())
          throw PreconditionError("infeasible density: no square bijection between " + key.first + " and " +
                                  key.second);
        std::shuffle(rhs.begin(), rhs.end(), rng);
        for (std::size_t t = 0; t < lhs.size(); ++t) spec.squares.push_back(make_square(spec, lhs[t], rhs[t]));
      }
      for (auto& [key, rhs] : s.ji)
        if (!s.ij.count(key))
          throw PreconditionError("infeasible density: no square bijection between " + key.first + " and " +
                                  key.second);
    }
}

using IntMatrix = std::vector<std::vector<std::uint32_t>>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t x = 0; x < n; ++x)
      if (a[u][x])
        for (std::size_t w = 0; w < n; ++w) c[u][w] += a[u][x] * b[x][w];
  return c;
}

std::string vertex_label(const Degree& n) { return n.to_string(); }

}  // namespace

GraphSpec omega_spec(const Degree& m) {
  const std::size_t k = m.rank();
  if (k == 0) throw PreconditionError("Ω needs k >= 1");
  GraphSpec spec;
  spec.k = k;
  const auto verts = degrees_below(m);
  for (const auto& n : verts) spec.vertices.push_back(vertex_label(n));
  auto edge_id = [](const Degree& r, const Degree& s) { return "(" + vertex_label(r) + "," + vertex_label(s) + ")"; };
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& n : verts) {
      Degree s = n + Degree::unit(k, i);
      if (!s.leq(m)) continue;
      spec.edges.push_back({edge_id(n, s), i + 1, vertex_label(n), vertex_label(s)});
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (const auto& n : verts) {
        const Degree ei = Degree::unit(k, i), ej = Degree::unit(k, j);
        if (!(n + ei + ej).leq(m)) continue;
        spec.squares.push_back({{edge_id(n, n + ei), edge_id(n + ei, n + ei + ej)},
                                {edge_id(n, n + ej), edge_id(n + ej, n + ei + ej)}});
      }
  return spec;
}

KGraph omega(const Degree& m) { return KGraph::from_spec(omega_spec(m)); }

GraphSpec loops_spec(std::size_t m, std::size_t n) {
  GraphSpec spec;
  spec.k = 2;
  spec.vertices = {"v"};
  for (std::size_t i = 0; i < m; ++i) spec.edges.push_back({edge_name("a", i, m), 1, "v", "v"});
  for (std::size_t j = 0; j < n; ++j) spec.edges.push_back({edge_name("b", j, n), 2, "v", "v"});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      spec.squares.push_back({{edge_name("a", i, m), edge_name("b", j, n)},
                              {edge_name("b", j, n), edge_name("a", i, m)}});
  return spec;
}

KGraph loops(std::size_t m, std::size_t n) { return KGraph::from_spec(loops_spec(m, n)); }

KGraph one_edge() {
  GraphSpec spec;
  spec.vertices = {"v", "w"};
  spec.edges = {{"e", 1, "v", "w"}};
  return KGraph::from_spec(spec);
}

KGraph chain(std::size_t length) {
  GraphSpec spec;
  for (std::size_t i = 0; i <= length; ++i) spec.vertices.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < length; ++i)
    spec.edges.push_back({"e" + std::to_string(i + 1), 1, spec.vertices[i], spec.vertices[i + 1]});
  return KGraph::from_spec(spec);
}

KGraph fan(std::size_t width) {
  GraphSpec spec;
  spec.vertices = {"v"};
  for (std::size_t i = 1; i <= width; ++i) {
    spec.vertices.push_back("w" + std::to_string(i));
    spec.edges.push_back({"e" + std::to_string(i), 1, "v", spec.vertices.back()});
  }
  return KGraph::from_spec(spec);
}

KGraph rose(std::size_t petals) {
  GraphSpec spec;
  spec.vertices = {"v"};
  for (std::size_t i = 0; i < petals; ++i) spec.edges.push_back({edge_name("e", i, petals), 1, "v", "v"});
  return KGraph::from_spec(spec);
}

KGraph multi_edge(std::size_t count) {
  GraphSpec spec;
  spec.vertices = {"v", "w"};
  for (std::size_t i = 0; i < count; ++i) spec.edges.push_back({edge_name("e", i, count), 1, "v", "w"});
  return KGraph::from_spec(spec);
}

KGraph two_vertex() {
  GraphSpec spec;
  spec.k = 2;
  spec.vertices = {"v", "w"};
  spec.edges = {{"e", 1, "v", "w"}, {"b", 2, "v", "v"}, {"c", 2, "w", "w"}};
  spec.squares = {{{"e", "c"}, {"b", "e"}}};
  return KGraph::from_spec(spec);
}

EdgeCollection color_collection(const KGraph& g, std::size_t color) {
  if (color < 1 || color > g.rank()) throw PreconditionError("colour out of range");
  EdgeCollection out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    EdgeSet e = color_edge_set(g, v, color - 1);
    if (!e.empty()) out.push_back(std::move(e));
  }
  return canonical(std::move(out));
}

EdgeCollection two_color_collection(const KGraph& g) {
  EdgeCollection out = color_collection(g, 1);
  for (auto& e : color_collection(g, 2)) out.push_back(std::move(e));
  return canonical(std::move(out));
}

EdgeCollection union_color_collection(const KGraph& g) {
  EdgeCollection out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    EdgeSet e{v, {}};
    for (std::size_t c = 0; c < std::min<std::size_t>(2, g.rank()); ++c) {
      auto es = g.edges_at(v, c);
      e.edges.insert(e.edges.end(), es.begin(), es.end());
    }
    std::sort(e.edges.begin(), e.edges.end());
    if (!e.empty()) out.push_back(std::move(e));
  }
  return canonical(std::move(out));
}

EdgeCollection all_edges_collection(const KGraph& g) {
  EdgeCollection out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    EdgeSet e = all_edges_at(g, v);
    if (!e.empty()) out.push_back(std::move(e));
  }
  return canonical(std::move(out));
}

std::optional<KGraph> find_e3_failure(std::size_t max_edges) {
  for (std::size_t m = 1; m <= max_edges; ++m)
    for (std::size_t n = 1; n <= max_edges; ++n) {
      GraphSpec spec = loops_spec(m, n);
      Spans s = bicoloured(spec, 1, 2);
      auto& lhs = s.ij.begin()->second;
      auto rhs = s.ji.begin()->second;
      std::vector<std::size_t> perm(rhs.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        spec.squares.clear();
        for (std::size_t t = 0; t < lhs.size(); ++t) spec.squares.push_back(make_square(spec, lhs[t], rhs[perm[t]]));
        KGraph g = KGraph::from_spec(spec);
        const auto rep = check_efficient(g, two_color_collection(g));
        bool e3 = std::any_of(rep.violations.begin(), rep.violations.end(),
                              [](const EfficiencyViolation& v) { return v.condition == EfficiencyCondition::E3; });
        if (e3) return g;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  return std::nullopt;
}

namespace {

using Walk = std::vector<std::size_t>;

// The square set in which ef = f'e' whenever the walks of f' then e' split
// the walk of e then f. Composition is then concatenation of walks, so
// the cube condition holds. Parallel edges are relabelled by a random
// permutation per (colour, range, source) so the result is not always the
// same completion.
void add_walk_squares(GraphSpec& spec, const std::map<std::string, Walk>& walks, std::mt19937_64& rng) {
  std::map<std::pair<std::size_t, Walk>, std::string> by_walk;
  std::map<std::tuple<std::size_t, std::string, std::string>, std::vector<std::string>> groups;
  std::map<std::string, const EdgeSpec*> edges;
  for (const auto& e : spec.edges) {
    by_walk[{e.color, walks.at(e.id)}] = e.id;
    groups[{e.color, e.range, e.source}].push_back(e.id);
    edges[e.id] = &e;
  }
  std::map<std::string, std::string> relabel;
  for (auto& [key, names] : groups) {
    auto shuffled = names;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (std::size_t t = 0; t < names.size(); ++t) relabel[names[t]] = shuffled[t];
  }
  spec.squares.clear();
  for (const auto& e : spec.edges)
    for (const auto& f : spec.edges) {
      if (e.color >= f.color || e.source != f.range) continue;
      const Walk& we = walks.at(e.id);
      const Walk& wf = walks.at(f.id);
      Walk whole = we;
      whole.insert(whole.end(), wf.begin() + 1, wf.end());
      const std::size_t lf = wf.size() - 1;
      Walk head(whole.begin(), whole.begin() + lf + 1);
      Walk tail(whole.begin() + lf, whole.end());
      const std::string& f2 = by_walk.at({f.color, head});
      const std::string& e2 = by_walk.at({e.color, tail});
      spec.squares.push_back({{relabel.at(e.id), relabel.at(f.id)}, {relabel.at(f2), relabel.at(e2)}});
    }
}

}  // namespace

GraphSpec random_kgraph_spec(const RandomOptions& opts) {
  if (opts.k < 1 || opts.k > 3) throw PreconditionError("random k-graphs need k in {1,2,3}");
  if (opts.vertices == 0) throw PreconditionError("vertex count must be positive");
  if (!(opts.density > 0.0 && opts.density <= 1.0)) throw PreconditionError("edge density must lie in (0,1]");

  std::mt19937_64 rng(opts.seed);
  std::bernoulli_distribution coin(0.5), edge(opts.density);
  const std::size_t n = opts.vertices;

  IntMatrix base(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w)
      if ((opts.allow_cycles || u < w) && edge(rng)) base[u][w] = 1;
  const IntMatrix sq = multiply(base, base);

  GraphSpec spec;
  spec.k = opts.k;
  for (std::size_t v = 0; v < n; ++v) spec.vertices.push_back("v" + std::to_string(v));
  const std::string letters = "abc";
  // walks[name]: the walk in the base graph an edge stands for (a single
  // vertex for the identity term). Used by the fallback completion.
  std::map<std::string, Walk> walks;
  for (std::size_t i = 0; i < opts.k; ++i) {
    bool c0 = opts.allow_cycles && coin(rng), c1 = coin(rng), c2 = coin(rng);
    if (!c0 && !c1 && !c2) c1 = true;
    std::size_t count = 0;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t w = 0; w < n; ++w) {
        std::vector<Walk> terms;
        if (c0 && u == w) terms.push_back({u});
        if (c1 && base[u][w]) terms.push_back({u, w});
        if (c2)
          for (std::size_t x = 0; x < n; ++x)
            if (base[u][x] && base[x][w]) terms.push_back({u, x, w});
        for (auto& walk : terms) {
          std::string name = std::string(1, letters[i]) + std::to_string(count++);
          spec.edges.push_back({name, i + 1, spec.vertices[u], spec.vertices[w]});
          walks[name] = std::move(walk);
        }
      }
  }

  if (opts.k < 3) {
    add_random_squares(spec, rng);
    return spec;
  }
  for (std::size_t attempt = 0; attempt < opts.max_cube_attempts; ++attempt) {
    add_random_squares(spec, rng);
    if (validate(spec).ok()) return spec;
  }
  if (!opts.cube_fallback)
    throw ResourceLimitError("no cube-consistent square set found in " + std::to_string(opts.max_cube_attempts) +
                             " attempts");
  add_walk_squares(spec, walks, rng);
  if (!validate(spec).ok()) throw std::logic_error("walk-splitting squares failed validation");
  return spec;
}

KGraph random_kgraph(const RandomOptions& opts) { return KGraph::from_spec(random_kgraph_spec(opts)); }

std::vector<Fixture> fixture_catalog() {
  std::vector<Fixture> out;
  auto add = [&](std::string name, KGraph g, std::string note) {
    out.push_back({std::move(name), std::move(g), std::move(note)});
  };
  add("omega1", omega(Degree{1}), "Ω_{1,(1)}");
  add("omega2", omega(Degree{2}), "Ω_{1,(2)}");
  add("omega3", omega(Degree{3}), "Ω_{1,(3)}");
  add("omega11", omega(Degree{1, 1}), "Ω_{2,(1,1)}: 4 vertices, 4 edges, 1 square, 9 paths");
  add("omega21", omega(Degree{2, 1}), "Ω_{2,(2,1)}");
  add("omega12", omega(Degree{1, 2}), "Ω_{2,(1,2)}");
  add("omega22", omega(Degree{2, 2}), "Ω_{2,(2,2)}");
  add("omega111", omega(Degree{1, 1, 1}), "Ω_{3,(1,1,1)}: a single cube");
  add("loops11", loops(1, 1), "one vertex, flip squares; colour collections are efficient");
  add("loops21", loops(2, 1), "one vertex, flip squares; colour collections are efficient");
  add("loops23", loops(2, 3), "one vertex, flip squares; colour collections are efficient");
  add("loops22", loops(2, 2), "one vertex, flip squares");
  add("one-edge", one_edge(), "1-graph v <- w; {vΛ¹} is efficient");
  add("chain2", chain(2), "1-graph path of length 2");
  add("chain3", chain(3), "1-graph path of length 3");
  add("fan2", fan(2), "1-graph, two edges into v");
  add("fan3", fan(3), "1-graph, three edges into v");
  add("multi-edge2", multi_edge(2), "1-graph, two parallel edges");
  add("multi-edge3", multi_edge(3), "1-graph, three parallel edges");
  add("rose2", rose(2), "1-graph, one vertex with two loops");
  add("two-vertex", two_vertex(), "2-graph with hereditary {w}; 𝓔 = {{b},{c}}");
  if (auto g = find_e3_failure()) add("e3-failure", std::move(*g), "{vΛ^{e1}, vΛ^{e2}} violates (E3)");
  return out;
}

std::optional<Fixture> find_fixture(const std::string& name) {
  for (auto& f : fixture_catalog())
    if (f.name == name) return std::move(f);
  return std::nullopt;
}

std::vector<Fixture> acceptance_corpus() {
  std::vector<Fixture> out;
  for (auto& f : fixture_catalog()) {
    if (!is_acyclic(f.graph) || f.graph.rank() > 2 || f.graph.vertex_count() > 6) continue;
    out.push_back(std::move(f));
  }
  struct Seed {
    std::size_t k, n;
    double density;
    std::uint64_t seed;
  };
  // Chosen so that most of the 2-graphs have squares and long paths.
  const Seed seeds[] = {{1, 4, 0.5, 1}, {1, 5, 0.4, 2}, {1, 6, 0.3, 3}, {2, 4, 0.4, 1},
                        {2, 5, 0.3, 5}, {2, 5, 0.4, 1}, {2, 5, 0.5, 3}, {2, 5, 0.6, 6},
                        {2, 5, 0.6, 1}, {2, 6, 0.4, 6}, {2, 6, 0.5, 6}, {2, 5, 0.5, 1}};
  for (const auto& s : seeds) {
    RandomOptions o;
    o.k = s.k;
    o.vertices = s.n;
    o.density = s.density;
    o.seed = s.seed;
    char density[8];
    std::snprintf(density, sizeof density, "%02d", static_cast<int>(s.density * 100 + 0.5));
    out.push_back({"random-k" + std::to_string(s.k) + "-n" + std::to_string(s.n) + "-d" + density + "-s" +
                       std::to_string(s.seed),
                   random_kgraph(o), "random acyclic"});
  }
  return out;
}

std::vector<Fixture> cyclic_corpus() {
  std::vector<Fixture> out;
  for (auto& f : fixture_catalog())
    if (!is_acyclic(f.graph)) out.push_back(std::move(f));
  for (std::uint64_t seed : {11, 12}) {
    RandomOptions o;
    o.k = 2;
    o.vertices = 3;
    o.density = 0.35;
    o.seed = seed;
    o.allow_cycles = true;
    out.push_back({"random-cyclic-s" + std::to_string(seed), random_kgraph(o), "random with cycles"});
  }
  return out;
}

}  // namespace kgraph

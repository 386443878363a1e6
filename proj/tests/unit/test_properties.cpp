#include <doctest.h>

#include <set>

#include "kgraph/error.hpp"
#include "support.hpp"

using namespace kgraph;
using testing::WordOracle;

namespace {

// Hand-rolled generators. Each property draws its cases from a seeded
// stream so failures replay.

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
  bool coin() { return below(2) == 1; }

  KGraph graph(bool cyclic, std::size_t max_k = 3) {
    RandomOptions o;
    o.k = 1 + below(max_k);
    o.vertices = 2 + below(4);
    o.density = 0.2 + 0.1 * static_cast<double>(below(3));
    o.seed = rng();
    o.allow_cycles = cyclic;
    return random_kgraph(o);
  }

  /// A small acyclic 1- or 2-graph whose FE(Λ) stays materializable.
  KGraph small_acyclic() {
    RandomOptions o;
    o.k = 1 + below(2);
    o.vertices = 2 + below(3);
    o.density = 0.25 + 0.05 * static_cast<double>(below(4));
    o.seed = rng();
    return random_kgraph(o);
  }

  VertexId vertex(const KGraph& g) { return static_cast<VertexId>(below(g.vertex_count())); }

  Path path(const KGraph& g, VertexId v, std::size_t max_len) {
    auto w = testing::random_word(g, v, below(max_len + 1), rng);
    return path_from_word(g, w, v);
  }

  Degree degree_below(const Degree& d) {
    Degree m = d;
    for (std::size_t i = 0; i < d.rank(); ++i) m[i] = static_cast<std::uint32_t>(below(d[i] + 1));
    return m;
  }

  EdgeSet edge_subset(const KGraph& g, VertexId v) {
    std::vector<EdgeId> out;
    for (EdgeId e : g.edges_at(v))
      if (coin()) out.push_back(e);
    return make_edge_set(g, v, out);
  }
};

std::set<Path> as_set(const std::vector<Path>& v) { return {v.begin(), v.end()}; }

bool prefix_in_set(const KGraph& g, const Path& lambda, const EdgeSet& e) {
  for (EdgeId x : e.edges)
    if (has_prefix(g, lambda, edge_path(g, x))) return true;
  return false;
}

}  // namespace

TEST_CASE("factorization: compose(factor) is the identity and the normal form is order independent") {
  Gen gen(101);
  std::size_t cases = 0;
  while (cases < 1000) {
    KGraph g = gen.graph(gen.coin());
    VertexId v = gen.vertex(g);
    auto word = testing::random_word(g, v, 1 + gen.below(6), gen.rng);
    if (word.empty()) continue;
    ++cases;
    Path p = path_from_word(g, word);
    std::mt19937_64 r1(cases), r2(cases * 7919 + 1);
    CHECK(normalize_randomized(g, word, r1) == p.edges());
    CHECK(normalize_randomized(g, word, r2) == p.edges());

    Degree m = gen.degree_below(p.degree());
    auto [head, tail] = factor(g, p, m);
    CHECK(head.degree() == m);
    CHECK(tail.degree() == p.degree() - m);
    CHECK(compose(g, head, tail) == p);
    CHECK(has_prefix(g, p, head));
  }
}

TEST_CASE("normal form agrees with the word oracle") {
  Gen gen(202);
  for (int trial = 0; trial < 40; ++trial) {
    KGraph g = gen.graph(false, 3);
    const std::uint32_t len = max_path_length(g);
    if (len > 5) continue;
    WordOracle oracle(g.to_spec(), len);
    for (int i = 0; i < 10; ++i) {
      VertexId v = gen.vertex(g);
      auto word = testing::random_word(g, v, len, gen.rng);
      if (word.empty()) continue;
      WordOracle::Word raw;
      for (EdgeId e : word) raw.push_back(g.edge(e).name);
      Path p = path_from_word(g, word);
      CHECK(oracle.index_of(g.vertex_name(v), raw) == oracle.index_of(g.vertex_name(v), testing::names_of(g, p)));
    }
  }
}

TEST_CASE("degree is a functor") {
  Gen gen(303);
  for (int i = 0; i < 500; ++i) {
    KGraph g = gen.graph(gen.coin());
    Path a = gen.path(g, gen.vertex(g), 4);
    Path b = gen.path(g, a.source(), 4);
    Path ab = compose(g, a, b);
    CHECK(ab.degree() == a.degree() + b.degree());
    CHECK(ab.range() == a.range());
    CHECK(ab.source() == b.source());
    CHECK(compose(g, vertex_path(g, a.range()), a) == a);
  }
}

TEST_CASE("MCE is symmetric and matches Λ^min") {
  Gen gen(404);
  for (int i = 0; i < 400; ++i) {
    KGraph g = gen.graph(gen.coin());
    VertexId v = gen.vertex(g);
    Path a = gen.path(g, v, 3), b = gen.path(g, v, 3);
    auto m = mce(g, a, b);
    CHECK(as_set(m) == as_set(mce(g, b, a)));
    auto lm = lambda_min(g, a, b);
    CHECK(lm.size() == m.size());
    for (const auto& x : m) {
      CHECK(x.degree() == a.degree().join(b.degree()));
      CHECK(has_prefix(g, x, a));
      CHECK(has_prefix(g, x, b));
    }
    for (const auto& [p, q] : lm) CHECK(compose(g, a, p) == compose(g, b, q));
    CHECK(compatible(g, a, b) == !m.empty());
  }
}

TEST_CASE("MCE agrees with the word oracle on acyclic graphs") {
  Gen gen(505);
  for (int trial = 0; trial < 20; ++trial) {
    KGraph g = gen.graph(false, 2);
    const std::uint32_t len = max_path_length(g);
    if (len > 4) continue;
    WordOracle oracle(g.to_spec(), len);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto ps = all_paths_from(g, v);
      for (const auto& a : ps)
        for (const auto& b : ps) {
          auto mine = mce(g, a, b);
          auto theirs = oracle.mce(oracle.index_of(g.vertex_name(v), testing::names_of(g, a)),
                                   oracle.index_of(g.vertex_name(v), testing::names_of(g, b)));
          std::set<std::size_t> mapped;
          for (const auto& x : mine) mapped.insert(oracle.index_of(g.vertex_name(v), testing::names_of(g, x)));
          CHECK(mapped == std::set<std::size_t>(theirs.begin(), theirs.end()));
        }
    }
  }
}

TEST_CASE("Ext: composition law, edges only, colours and exhaustiveness") {
  Gen gen(606);
  std::size_t cases = 0;
  for (int i = 0; i < 3000 && cases < 600; ++i) {
    KGraph g = gen.graph(gen.coin());
    VertexId v = gen.vertex(g);
    EdgeSet e = gen.edge_subset(g, v);
    if (!is_exhaustive_edges(g, e)) continue;
    Path lambda = gen.path(g, v, 4);
    if (prefix_in_set(g, lambda, e)) continue;
    ++cases;

    EdgeSet ext = ext_path(g, lambda, e);
    CHECK(ext.vertex == lambda.source());
    CHECK(is_exhaustive_edges(g, ext));
    std::set<std::size_t> colours;
    for (EdgeId x : e.edges) colours.insert(g.color(x));
    for (EdgeId x : ext.edges) {
      CHECK(colours.count(g.color(x)) == 1);
      CHECK(lambda.degree()[g.color(x)] == 0);
    }

    auto [mu, nu] = factor(g, lambda, gen.degree_below(lambda.degree()));
    EdgeSet mid = ext_path(g, mu, e);
    CHECK_FALSE(prefix_in_set(g, nu, mid));
    CHECK(ext_path(g, nu, mid) == ext);
  }
  CHECK(cases >= 200);
}

TEST_CASE("Ext on general sets never increases the length bound") {
  Gen gen(707);
  for (int i = 0; i < 300; ++i) {
    KGraph g = gen.graph(false, 2);
    VertexId v = gen.vertex(g);
    auto all = all_paths_from(g, v);
    std::vector<Path> pick;
    for (const auto& p : all)
      if (!p.is_vertex() && gen.below(3) == 0) pick.push_back(p);
    FESet e = make_fe_set(g, v, pick);
    const auto& lam = all[gen.below(all.size())];
    auto ext = ext_general(g, lam, e);
    std::size_t l = 0;
    for (const auto& x : ext) {
      CHECK(x.range() == lam.source());
      l = std::max<std::size_t>(l, x.length());
    }
    CHECK(l <= fe_stats(e).L);
  }
}

TEST_CASE("automaton exhaustiveness equals brute force") {
  Gen gen(808);
  for (int trial = 0; trial < 60; ++trial) {
    KGraph g = gen.graph(false, 2);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      for (const auto& e : testing::all_edge_subsets(g, v)) {
        bool fast = is_exhaustive_edges(g, e);
        CHECK(fast == is_exhaustive_general(g, to_fe_set(g, e)).exhaustive);
        if (fast)
          for (EdgeId x : g.edges_at(v)) {
            auto bigger = e.edges;
            bigger.push_back(x);
            CHECK(is_exhaustive_edges(g, make_edge_set(g, v, bigger)));
          }
      }
  }
  for (int trial = 0; trial < 40; ++trial) {
    KGraph g = gen.graph(true, 2);
    VertexId v = gen.vertex(g);
    EdgeSet e = gen.edge_subset(g, v);
    auto witness = avoiding_path(g, e);
    auto bounded = is_exhaustive_general(g, to_fe_set(g, e), 4);
    if (witness) {
      CHECK_FALSE(is_exhaustive_edges(g, e));
      CHECK_FALSE(prefix_in_set(g, *witness, e));
      if (witness->length() <= 4) CHECK_FALSE(bounded.exhaustive);
    } else {
      CHECK(bounded.exhaustive);
    }
  }
}

TEST_CASE("satiation: edge part, recovery and monotonicity") {
  Gen gen(909);
  std::size_t graphs = 0;
  for (int trial = 0; trial < 60 && graphs < 25; ++trial) {
    KGraph g = gen.small_acyclic();
    std::optional<FESpace> space;
    try {
      space.emplace(g);
    } catch (const ResourceLimitError&) {
      continue;
    }
    if (space->member_count() > 40) continue;
    std::vector<EdgeCollection> effs;
    try {
      effs = enumerate_efficient(g);
    } catch (const ResourceLimitError&) {
      continue;
    }
    ++graphs;
    std::vector<PathCollection> bars;
    for (const auto& e : effs) {
      PathCollection bar = satiate(*space, e);
      EdgeCollection edge_part;
      for (const auto& f : bar)
        if (auto es = to_edge_set(f)) edge_part.push_back(*es);
      CHECK(canonical(edge_part) == edge_satiation(g, e));
      CHECK(satiate(*space, canonical(edge_part)) == bar);
      CHECK(is_satiated(*space, bar));
      bars.push_back(bar);
    }
    for (std::size_t i = 0; i < effs.size(); ++i)
      for (std::size_t j = 0; j < effs.size(); ++j) {
        auto hi = edge_satiation(g, effs[i]), hj = edge_satiation(g, effs[j]);
        bool edge_sub = std::includes(hj.begin(), hj.end(), hi.begin(), hi.end());
        bool full_sub = std::includes(bars[j].begin(), bars[j].end(), bars[i].begin(), bars[i].end());
        CHECK(edge_sub == full_sub);
      }
  }
  CHECK(graphs >= 10);
}

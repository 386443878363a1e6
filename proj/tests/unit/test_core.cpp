#include <doctest.h>

#include "kgraph/error.hpp"
#include "support.hpp"

using namespace kgraph;
using testing::P;
using testing::V;

TEST_CASE("degree order, join and meet are coordinatewise") {
  Degree a{2, 0, 1}, b{1, 3, 1};
  CHECK(a.join(b) == Degree{2, 3, 1});
  CHECK(a.meet(b) == Degree{1, 0, 1});
  CHECK_FALSE(a.leq(b));
  CHECK(a.meet(b).leq(a));
  CHECK(a.length() == 3);
  CHECK((a + b) - b == a);
  CHECK(Degree{2, 1}.sorted_colors() == std::vector<std::size_t>{0, 0, 1});
  CHECK(degrees_below(Degree{1, 1}).size() == 4);
  CHECK(Degree{1, 2}.to_string() == "(1,2)");
}

TEST_CASE("validate accepts Ω_{2,(1,1)} and 1-graphs") {
  auto r = validate(omega_spec(Degree{1, 1}));
  CHECK(r.ok());
  GraphSpec one;
  one.vertices = {"v", "w"};
  one.edges = {{"e", 1, "v", "w"}, {"f", 1, "w", "w"}};
  CHECK(validate(one).ok());
}

TEST_CASE("validate reports a missing square") {
  GraphSpec s = loops_spec(1, 1);
  s.squares.clear();
  auto r = validate(s);
  CHECK_FALSE(r.ok());
  CHECK(r.has(IssueKind::MissingSquare));
  CHECK_FALSE(r.square_bijection_complete);
  CHECK(r.summary().find("missing square") != std::string::npos);
  CHECK_THROWS_AS(KGraph::from_spec(s), GraphError);
}

TEST_CASE("validate names duplicates and dangling references") {
  GraphSpec s = loops_spec(1, 1);
  s.edges.push_back(s.edges.front());
  CHECK(validate(s).has(IssueKind::DuplicateEdge));

  s = loops_spec(1, 1);
  s.squares.push_back(s.squares.front());
  CHECK(validate(s).has(IssueKind::DuplicateSquare));

  s = loops_spec(1, 1);
  s.edges[0].source = "nowhere";
  auto r = validate(s);
  CHECK(r.has(IssueKind::DanglingVertex));
  CHECK_FALSE(r.references_resolved);

  s = loops_spec(1, 1);
  s.edges[0].color = 3;
  CHECK(validate(s).has(IssueKind::BadColor));
}

TEST_CASE("cube condition") {
  CHECK(validate(omega_spec(Degree{1, 1, 1})).ok());

  // One vertex with two loops of each of three colours. Draw random
  // square bijections until one breaks associativity.
  GraphSpec s;
  s.k = 3;
  s.vertices = {"v"};
  for (const char* n : {"a1", "a2"}) s.edges.push_back({n, 1, "v", "v"});
  for (const char* n : {"b1", "b2"}) s.edges.push_back({n, 2, "v", "v"});
  for (const char* n : {"c1", "c2"}) s.edges.push_back({n, 3, "v", "v"});
  std::mt19937_64 rng(3);
  bool consistent_seen = false, inconsistent_seen = false;
  for (int attempt = 0; attempt < 200 && !(consistent_seen && inconsistent_seen); ++attempt) {
    s.squares.clear();
    for (auto [x, y] : {std::pair{'a', 'b'}, {'a', 'c'}, {'b', 'c'}}) {
      std::vector<std::pair<std::string, std::string>> rhs;
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) rhs.push_back({y + std::to_string(j), x + std::to_string(i)});
      std::shuffle(rhs.begin(), rhs.end(), rng);
      std::size_t t = 0;
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j, ++t)
          s.squares.push_back({{x + std::to_string(i), y + std::to_string(j)}, {rhs[t].first, rhs[t].second}});
    }
    auto r = validate(s);
    if (r.ok()) {
      consistent_seen = true;
      CHECK_NOTHROW(KGraph::from_spec(s));
    } else {
      CHECK(r.has(IssueKind::CubeInconsistency));
      CHECK_FALSE(r.cube_consistent);
      CHECK(r.square_bijection_complete);
      CHECK_THROWS_AS(KGraph::from_spec(s), GraphError);
      inconsistent_seen = true;
    }
  }
  CHECK(consistent_seen);
  CHECK(inconsistent_seen);
}

TEST_CASE("compose in Ω_{2,(1,1)} and loops(1,1)") {
  KGraph om = omega(Degree{1, 1});
  Path a = P(om, {"((0,0),(1,0))"});
  Path b = P(om, {"((1,0),(1,1))"});
  Path ab = compose(om, a, b);
  CHECK(ab.range() == om.vertex_id("(0,0)"));
  CHECK(ab.source() == om.vertex_id("(1,1)"));
  CHECK(ab.degree() == Degree{1, 1});
  CHECK(ab == P(om, {"((0,0),(0,1))", "((0,1),(1,1))"}));
  CHECK(compose(om, V(om, "(0,0)"), a) == a);
  CHECK(compose(om, a, V(om, "(1,0)")) == a);
  CHECK_THROWS_AS(compose(om, b, a), PreconditionError);

  KGraph l = loops(1, 1);
  Path ba = compose(l, P(l, {"b"}), P(l, {"a"}));
  std::vector<EdgeId> expect{l.edge_id("a"), l.edge_id("b")};
  CHECK(ba.edges() == expect);
}

TEST_CASE("factor splits at a degree") {
  KGraph om = omega(Degree{1, 1});
  Path x = P(om, {"((0,0),(1,0))", "((1,0),(1,1))"});
  auto [head, tail] = factor(om, x, Degree{1, 0});
  CHECK(head == P(om, {"((0,0),(1,0))"}));
  CHECK(tail == P(om, {"((1,0),(1,1))"}));
  auto [h0, t0] = factor(om, x, Degree{0, 0});
  CHECK(h0 == V(om, "(0,0)"));
  CHECK(t0 == x);
  CHECK_THROWS_AS(factor(om, P(om, {"((0,0),(1,0))"}), Degree{0, 1}), PreconditionError);

  KGraph l = loops(1, 1);
  auto [hb, ta] = factor(l, P(l, {"a", "b"}), Degree{0, 1});
  CHECK(hb == P(l, {"b"}));
  CHECK(ta == P(l, {"a"}));
}

TEST_CASE("paths of a given degree") {
  KGraph l = loops(2, 1);
  VertexId v = l.vertex_id("v");
  CHECK(paths_of_degree(l, v, Degree{0, 0}).size() == 1);
  CHECK(paths_of_degree(l, v, Degree{1, 0}).size() == 2);
  CHECK(paths_of_degree(l, v, Degree{2, 1}).size() == 4);
  KGraph om = omega(Degree{1, 1});
  CHECK(paths_of_degree(om, om.vertex_id("(0,0)"), Degree{1, 1}).size() == 1);
  CHECK(paths_of_degree(om, om.vertex_id("(1,1)"), Degree{1, 0}).empty());
}

TEST_CASE("path counts agree with the word oracle") {
  for (const auto& f : acceptance_corpus()) {
    CAPTURE(f.name);
    testing::WordOracle oracle(f.graph.to_spec(), max_path_length(f.graph));
    std::size_t total = 0;
    for (VertexId v = 0; v < f.graph.vertex_count(); ++v) total += all_paths_from(f.graph, v).size();
    CHECK(total == oracle.morphisms().size());
  }
  KGraph om = omega(Degree{1, 1});
  std::size_t total = 0;
  for (VertexId v = 0; v < om.vertex_count(); ++v) total += all_paths_from(om, v).size();
  CHECK(total == 9);
}

TEST_CASE("mce and lambda_min") {
  KGraph l = loops(1, 1);
  Path a = P(l, {"a"}), b = P(l, {"b"});
  CHECK(mce(l, a, a) == std::vector<Path>{a});
  auto m = mce(l, a, b);
  REQUIRE(m.size() == 1);
  CHECK(m[0] == P(l, {"a", "b"}));
  auto lm = lambda_min(l, a, b);
  REQUIRE(lm.size() == 1);
  CHECK(lm[0].first == b);
  CHECK(lm[0].second == a);
  auto self = lambda_min(l, a, a);
  REQUIRE(self.size() == 1);
  CHECK(self[0].first == V(l, "v"));
  CHECK(self[0].second == V(l, "v"));

  KGraph f = fan(2);
  CHECK(mce(f, P(f, {"e1"}), P(f, {"e2"})).empty());
  CHECK(lambda_min(f, P(f, {"e1"}), P(f, {"e2"})).empty());
  CHECK_THROWS_AS(mce(f, P(f, {"e1"}), V(f, "w1")), PreconditionError);
}

TEST_CASE("graph properties") {
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 3}}) {
    auto p = graph_properties(loops(m, n));
    CHECK(p.row_finite);
    CHECK_FALSE(p.has_sources);
    CHECK_FALSE(p.acyclic);
    CHECK(p.finitely_aligned);
  }
  KGraph om = omega(Degree{1, 1});
  auto p = graph_properties(om);
  CHECK(p.acyclic);
  CHECK(p.has_sources);
  auto src = source_vertices(om);
  CHECK(std::find(src.begin(), src.end(), om.vertex_id("(1,1)")) != src.end());
  CHECK_THROWS_AS(all_paths_from(loops(1, 1), 0), PreconditionError);
  CHECK(paths_up_to_length(loops(1, 1), 0, 2).size() == 6);
}

TEST_CASE("k=1 graphs: MCE nonempty iff one path extends the other") {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomOptions o;
    o.k = 1;
    o.vertices = 5;
    o.density = 0.4;
    o.seed = seed;
    KGraph g = random_kgraph(o);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto ps = all_paths_from(g, v);
      for (const auto& a : ps)
        for (const auto& b : ps) {
          const auto& x = a.edges();
          const auto& y = b.edges();
          bool prefix = x.size() <= y.size() ? std::equal(x.begin(), x.end(), y.begin())
                                             : std::equal(y.begin(), y.end(), x.begin());
          CHECK(!mce(g, a, b).empty() == prefix);
        }
    }
  }
}

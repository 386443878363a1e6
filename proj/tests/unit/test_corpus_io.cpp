#include <doctest.h>

#include <filesystem>

#include "kgraph/error.hpp"
#include "kgraph/io.hpp"
#include "support.hpp"

using namespace kgraph;
using testing::EC;
using testing::ES;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "kgraph-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("save then load is the identity") {
  auto path = temp_file("loops23.json");
  KGraph g = loops(2, 3);
  save_graph(g, path);
  CHECK(load_graph(path).to_spec() == g.to_spec());

  for (const auto& f : fixture_catalog()) {
    CAPTURE(f.name);
    CHECK(graph_from_json(graph_to_json(f.graph)).to_spec() == f.graph.to_spec());
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomOptions o;
    o.k = 1 + seed % 3;
    o.vertices = 2 + seed % 4;
    o.density = 0.3;
    o.seed = seed;
    o.allow_cycles = seed % 2 == 1;
    KGraph r = random_kgraph(o);
    CHECK(graph_from_json(graph_to_json(r)).to_spec() == r.to_spec());
  }
}

TEST_CASE("loading a graph with a missing square fails validation") {
  GraphSpec s = loops_spec(1, 1);
  s.squares.clear();
  auto path = temp_file("missing-square.json");
  write_file(path, graph_spec_to_json(s));
  try {
    load_graph(path);
    FAIL("expected GraphError");
  } catch (const GraphError& e) {
    CHECK(std::string(e.what()).find("missing square") != std::string::npos);
  }
}

TEST_CASE("Ω_{2,(1,1)} has 4 vertices, 4 edges and 1 square") {
  KGraph om = omega(Degree{1, 1});
  CHECK(om.vertex_count() == 4);
  CHECK(om.edge_count() == 4);
  CHECK(om.squares().size() == 1);
  CHECK(omega(Degree{2, 1}).vertex_count() == 6);
  CHECK(omega(Degree{1, 1, 1}).squares().size() == 6);
}

TEST_CASE("random generation") {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      RandomOptions o;
      o.k = k;
      o.vertices = 4;
      o.density = 0.35;
      o.seed = seed;
      o.allow_cycles = seed % 3 == 0;
      GraphSpec a = random_kgraph_spec(o);
      CHECK(a == random_kgraph_spec(o));
      CHECK(validate(a).ok());
      if (k == 1) CHECK(a.squares.empty());
      if (!o.allow_cycles) CHECK(is_acyclic(KGraph::from_spec(a)));
    }
  RandomOptions a, b;
  a.seed = 1;
  b.seed = 2;
  a.density = b.density = 0.6;
  CHECK(random_kgraph_spec(a) != random_kgraph_spec(b));

  // k = 3 without the fallback: zero attempts cannot succeed
  RandomOptions strict;
  strict.k = 3;
  strict.density = 0.5;
  strict.max_cube_attempts = 0;
  strict.cube_fallback = false;
  CHECK_THROWS_AS(random_kgraph_spec(strict), ResourceLimitError);
  strict.cube_fallback = true;
  CHECK(validate(random_kgraph_spec(strict)).ok());

  RandomOptions bad;
  bad.k = 4;
  CHECK_THROWS_AS(random_kgraph_spec(bad), PreconditionError);
  bad.k = 2;
  bad.density = 1.5;
  CHECK_THROWS_AS(random_kgraph_spec(bad), PreconditionError);
}

TEST_CASE("parse errors carry a line or a field") {
  try {
    parse_graph_spec("{\n  \"k\": 1,\n  \"vertices\": [\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
  try {
    parse_graph_spec(R"({"k": 1, "vertices": ["v"], "edges": [{"id": "e", "color": "x", "range": "v", "source": "v"}]})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("edges[0].color") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_graph_spec("[]"), ParseError);
}

TEST_CASE("collection literals") {
  KGraph l = loops(1, 1);
  auto c = parse_edge_collection(l, R"({"members":[["a"],["b"]]})");
  CHECK(c == EC({ES(l, "v", {"a"}), ES(l, "v", {"b"})}));
  CHECK(parse_edge_collection(l, R"([{"vertex":"v","edges":["b","a"]}])") == EC({ES(l, "v", {"a", "b"})}));
  CHECK(parse_edge_collection(l, collection_to_json(l, c)) == c);

  auto fe = parse_fe_set(l, R"({"vertex":"v","paths":[["a","b"]]})");
  CHECK(fe.paths.size() == 1);
  CHECK(fe.paths[0].degree() == Degree{1, 1});
  CHECK(parse_fe_set(l, fe_set_to_json(l, fe)) == fe);

  CHECK_THROWS_AS(parse_edge_collection(l, R"([{"vertex":"v","paths":[["a","b"]]}])"), ParseError);
  CHECK_THROWS_AS(parse_edge_collection(l, R"([["nope"]])"), ParseError);
  CHECK_THROWS_AS(parse_edge_collection(l, R"([[]])"), ParseError);
}

TEST_CASE("DOT export") {
  std::string dot = to_dot(omega(Degree{1, 1}));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("\"(1,0)\" -> \"(0,0)\"") != std::string::npos);
  CHECK(dot.find("color=red") != std::string::npos);
  CHECK(dot.find("color=blue") != std::string::npos);
}

TEST_CASE("fixture files match the catalog") {
  for (const auto& f : fixture_catalog()) {
    CAPTURE(f.name);
    CHECK_FALSE(f.note.empty());
    CHECK(validate(f.graph.to_spec()).ok());
#ifdef KGRAPH_FIXTURE_DIR
    auto path = std::filesystem::path(KGRAPH_FIXTURE_DIR) / (f.name + ".json");
    REQUIRE(std::filesystem::exists(path));
    CHECK(load_graph(path).to_spec() == f.graph.to_spec());
#endif
  }
  CHECK_FALSE(find_fixture("no-such-graph"));
}

TEST_CASE("fixture provenance") {
  // 1-graphs: {vΛ¹ : v regular} is efficient
  for (const char* name : {"one-edge", "chain2", "chain3", "fan2", "fan3", "multi-edge2", "multi-edge3", "rose2"}) {
    KGraph g = find_fixture(name)->graph;
    CHECK(g.rank() == 1);
    CHECK(is_efficient(g, all_edges_collection(g)));
  }
  // flip-square loops: colour collections and their union are efficient
  for (const char* name : {"loops11", "loops21", "loops23", "loops22"}) {
    KGraph g = find_fixture(name)->graph;
    CHECK(is_efficient(g, two_color_collection(g)));
    CHECK(is_efficient(g, union_color_collection(g)));
  }
  // the searched graph: (E3) fails
  KGraph e3 = find_fixture("e3-failure")->graph;
  CHECK_FALSE(is_efficient(e3, two_color_collection(e3)));
  CHECK(e3.to_spec() == find_e3_failure()->to_spec());
  // Ω graphs are acyclic with the expected vertex counts
  CHECK(find_fixture("omega21")->graph.vertex_count() == 6);
  CHECK(find_fixture("omega111")->graph.vertex_count() == 8);
}

TEST_CASE("corpora") {
  auto corpus = acceptance_corpus();
  CHECK(corpus.size() >= 20);
  bool om11 = false, om21 = false;
  for (const auto& f : corpus) {
    CHECK(is_acyclic(f.graph));
    CHECK(f.graph.rank() <= 2);
    CHECK(f.graph.vertex_count() <= 6);
    om11 |= f.name == "omega11";
    om21 |= f.name == "omega21";
  }
  CHECK(om11);
  CHECK(om21);
  for (const auto& f : cyclic_corpus()) CHECK_FALSE(is_acyclic(f.graph));
}

#include <doctest.h>

#include "kgraph/error.hpp"
#include "support.hpp"

using namespace kgraph;
using testing::EC;
using testing::ES;
using testing::P;

namespace {

bool has_condition(const EfficiencyReport& r, EfficiencyCondition c) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const EfficiencyViolation& v) { return v.condition == c; });
}

PathCollection all_of_fe(const FESpace& space) {
  PathCollection out;
  for (std::size_t id = 0; id < space.member_count(); ++id) out.push_back(space.to_fe_set(id));
  return canonical(std::move(out));
}

}  // namespace

TEST_CASE("efficiency of the 1-graph collections {vΛ¹ : v ∈ V}") {
  for (const KGraph& g : {one_edge(), chain(3), fan(3), multi_edge(3), rose(2)}) {
    EdgeCollection all = all_edges_collection(g);
    CHECK(is_efficient(g, all));
    // every subset V of the regular vertices
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      EdgeCollection sub;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1) sub.push_back(all[i]);
      CHECK(is_efficient(g, sub));
    }
  }
}

TEST_CASE("colour collections on loops(m,n) are efficient") {
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 3}}) {
    KGraph g = loops(m, n);
    for (const auto& c : {color_collection(g, 1), color_collection(g, 2), union_color_collection(g)}) {
      auto r = check_efficient(g, c);
      CHECK(r.efficient);
      CHECK(r.formulations_agree());
    }
  }
}

TEST_CASE("the searched fixture breaks (E3)") {
  auto g = find_e3_failure();
  REQUIRE(g);
  auto r = check_efficient(*g, two_color_collection(*g));
  CHECK_FALSE(r.efficient);
  CHECK(has_condition(r, EfficiencyCondition::E3));
  CHECK(r.formulations_agree());
  // the same graph with flip squares is fine
  CHECK(is_efficient(loops(2, 2), two_color_collection(loops(2, 2))));
}

TEST_CASE("(E1) and (E2) violations carry witnesses") {
  CHECK(is_efficient(loops(1, 1), {}));

  KGraph l = loops(1, 1);
  auto r1 = check_efficient(l, EC({ES(l, "v", {"a"}), ES(l, "v", {"a", "b"})}));
  CHECK_FALSE(r1.efficient);
  REQUIRE(has_condition(r1, EfficiencyCondition::E1));
  CHECK(r1.formulations_agree());

  KGraph om = omega(Degree{1, 1});
  auto r2 = check_efficient(om, EC({ES(om, "(0,0)", {"((0,0),(1,0))"})}));
  CHECK_FALSE(r2.efficient);
  REQUIRE(has_condition(r2, EfficiencyCondition::E2));
  const auto& v = r2.violations.front();
  CHECK(v.edge == om.edge_id("((0,0),(0,1))"));
  REQUIRE(v.required);
  CHECK(*v.required == ES(om, "(0,1)", {"((0,1),(1,1))"}));

  KGraph f = fan(2);
  CHECK_THROWS_AS(check_efficient(f, EC({ES(f, "v", {"e1"})})), PreconditionError);
}

TEST_CASE("edge satiation and min") {
  KGraph l21 = loops(2, 1);
  CHECK(edge_satiation(l21, {}).empty());
  EdgeCollection e = color_collection(l21, 1);
  EdgeCollection hat = edge_satiation(l21, e);
  CHECK(hat == EC({ES(l21, "v", {"a1", "a2"}), ES(l21, "v", {"a1", "a2", "b"})}));
  CHECK(min_collection(hat) == e);

  KGraph f = fan(2);
  CHECK(edge_satiation(f, all_edges_collection(f)) == all_edges_collection(f));

  KGraph l = loops(1, 1);
  EdgeCollection anti = EC({ES(l, "v", {"a"}), ES(l, "v", {"b"})});
  CHECK(min_collection(anti) == anti);
  CHECK(min_collection(EC({ES(l, "v", {"a"}), ES(l, "v", {"a", "b"})})) == EC({ES(l, "v", {"a"})}));
}

TEST_CASE("satiated collections on Ω_{2,(1,1)}") {
  KGraph om = omega(Degree{1, 1});
  FESpace space(om);
  CHECK(space.member_count() == 9);
  CHECK(is_satiated(space, {}));
  CHECK(is_satiated(space, all_of_fe(space)));

  const VertexId o = om.vertex_id("(0,0)");
  FESet diag = make_fe_set(om, o, {P(om, {"((0,0),(1,0))", "((1,0),(1,1))"})});
  auto rep = check_satiated(space, {diag});
  CHECK_FALSE(rep.satiated);
  FESet want = make_fe_set(om, o, {P(om, {"((0,0),(1,0))"})});
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.condition == SatiationCondition::S3 && v.missing == want) found = true;
  CHECK(found);
}

TEST_CASE("satiation closure") {
  KGraph om = omega(Degree{1, 1});
  FESpace space(om);
  CHECK(satiate(space, PathCollection{}).empty());

  for (const auto& e : enumerate_efficient(om)) {
    const auto bar = satiate(space, e);
    CHECK(is_satiated(space, bar));
    CHECK(satiate(space, edge_satiation(om, e)) == bar);
    EdgeCollection edge_part;
    for (const auto& f : bar)
      if (auto es = to_edge_set(f)) edge_part.push_back(*es);
    CHECK(canonical(edge_part) == edge_satiation(om, e));
  }

  EdgeCollection at_origin = EC({color_edge_set(om, om.vertex_id("(0,0)"), 0)});
  const auto bar = satiate(space, at_origin);
  CHECK(is_satiated(space, bar));

  CHECK_THROWS_AS(FESpace(loops(1, 1)), PreconditionError);
}

TEST_CASE("to_satiated and to_efficient are inverse on Ω_{2,(1,1)}") {
  KGraph om = omega(Degree{1, 1});
  FESpace space(om);
  CHECK(to_satiated(space, {}).empty());
  CHECK(to_efficient(space, {}).empty());
  const auto effs = enumerate_efficient(om);
  const auto sats = enumerate_satiated(space);
  CHECK(effs.size() == sats.size());
  for (const auto& e : effs) CHECK(to_efficient(space, to_satiated(space, e)) == e);
  for (const auto& f : sats) CHECK(to_satiated(space, to_efficient(space, f)) == f);

  FESet diag = make_fe_set(om, om.vertex_id("(0,0)"), {P(om, {"((0,0),(1,0))", "((1,0),(1,1))"})});
  CHECK_THROWS_AS(to_efficient(space, {diag}), PreconditionError);
  CHECK_THROWS_AS(to_satiated(space, EC({ES(om, "(0,0)", {"((0,0),(1,0))"})})), PreconditionError);
}

TEST_CASE("enumerations on small graphs") {
  KGraph l = loops(1, 1);
  CHECK(fe_edge_sets(l).size() == 3);
  auto effs = enumerate_efficient(l);
  std::vector<EdgeCollection> expect{{},
                                     EC({ES(l, "v", {"a"})}),
                                     EC({ES(l, "v", {"b"})}),
                                     EC({ES(l, "v", {"a", "b"})}),
                                     EC({ES(l, "v", {"a"}), ES(l, "v", {"b"})})};
  std::sort(expect.begin(), expect.end());
  CHECK(effs == expect);
  CHECK(enumerate_efficient_brute_force(l) == effs);

  KGraph one = one_edge();
  auto e1 = enumerate_efficient(one);
  REQUIRE(e1.size() == 2);
  CHECK(e1[0].empty());
  CHECK(e1[1] == all_edges_collection(one));

  KGraph empty = KGraph::from_spec(GraphSpec{});
  CHECK(enumerate_efficient(empty).size() == 1);
}

TEST_CASE("lattice enumeration matches the antichain brute force") {
  for (const auto& f : acceptance_corpus()) {
    CAPTURE(f.name);
    if (fe_edge_sets(f.graph).size() > 14) continue;
    auto fast = enumerate_efficient(f.graph);
    CHECK(fast == enumerate_efficient_brute_force(f.graph));
    for (const auto& e : fast) {
      for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j)
          if (i != j) CHECK_FALSE(e[i].subset_of(e[j]));
    }
  }
}

TEST_CASE("resource guards") {
  EnumerationLimits tight;
  tight.max_fe_edge_sets = 2;
  CHECK_THROWS_AS(enumerate_efficient(loops(1, 1), tight), ResourceLimitError);
}

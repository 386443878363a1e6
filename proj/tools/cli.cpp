#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kgraph/boundary.hpp"
#include "kgraph/collections.hpp"
#include "kgraph/corpus.hpp"
#include "kgraph/error.hpp"
#include "kgraph/ideals.hpp"
#include "kgraph/io.hpp"
#include "kgraph/universe.hpp"

namespace kgraph::cli {

using nlohmann::json;

namespace {

json edge_names(const KGraph& g, const std::vector<EdgeId>& edges) {
  json out = json::array();
  for (EdgeId e : edges) out.push_back(g.edge(e).name);
  return out;
}

json set_json(const KGraph& g, const EdgeSet& e) {
  return {{"vertex", g.vertex_name(e.vertex)}, {"edges", edge_names(g, e.edges)}};
}

json fe_json(const KGraph& g, const FESet& e) { return json::parse(fe_set_to_json(g, e)); }

json path_json(const KGraph& g, const Path& p) {
  return {{"range", g.vertex_name(p.range())},
          {"source", g.vertex_name(p.source())},
          {"degree", p.degree().coords()},
          {"edges", edge_names(g, p.edges())}};
}

json collection_json(const KGraph& g, const EdgeCollection& c) {
  json out = json::array();
  for (const auto& e : c) out.push_back(set_json(g, e));
  return out;
}

json collection_json(const KGraph& g, const PathCollection& c) {
  json out = json::array();
  for (const auto& e : c) out.push_back(fe_json(g, e));
  return out;
}

std::string literal_or_file(const std::string& s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (s[first] == '{' || s[first] == '[')) return s;
  return read_file(s);
}

EdgeCollection edge_collection_arg(const KGraph& g, const std::string& s) {
  if (s.empty()) return {};
  return parse_edge_collection(g, literal_or_file(s));
}

std::vector<EdgeId> word_arg(const KGraph& g, const std::string& s) {
  json j;
  try {
    j = json::parse(s);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("--path: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("--path: expected a JSON array of edge ids");
  std::vector<EdgeId> word;
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError("--path: expected edge ids");
    auto e = g.find_edge(x.get<std::string>());
    if (!e) throw ParseError("--path: unknown edge '" + x.get<std::string>() + "'");
    word.push_back(*e);
  }
  return word;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& file, std::ostream& out) {
  const GraphSpec spec = parse_graph_spec(read_file(file));
  const ValidationReport rep = validate(spec);
  json issues = json::array();
  for (const auto& i : rep.issues) issues.push_back({{"kind", std::string(to_string(i.kind))}, {"message", i.message}});
  emit(out, {{"ok", rep.ok()},
             {"references_resolved", rep.references_resolved},
             {"square_bijection_complete", rep.square_bijection_complete},
             {"cube_consistent", rep.cube_consistent},
             {"issues", issues}});
  return rep.ok() ? kOk : kCheckFailed;
}

int cmd_props(const KGraph& g, std::ostream& out) {
  const auto p = graph_properties(g);
  json sources = json::array();
  for (VertexId v : source_vertices(g)) sources.push_back(g.vertex_name(v));
  json j = {{"k", g.rank()},
            {"vertices", g.vertex_count()},
            {"edges", g.edge_count()},
            {"squares", g.squares().size()},
            {"row_finite", p.row_finite},
            {"has_sources", p.has_sources},
            {"acyclic", p.acyclic},
            {"finitely_aligned", p.finitely_aligned},
            {"sources", sources}};
  if (p.acyclic) j["max_path_length"] = max_path_length(g);
  emit(out, j);
  return kOk;
}

int cmd_fe(const KGraph& g, const std::string& vertex, const std::string& set, std::optional<std::uint32_t> bound,
           std::ostream& out) {
  if (!set.empty()) {
    const FESet e = parse_fe_set(g, literal_or_file(set));
    ExhaustiveVerdict v;
    if (auto es = to_edge_set(e)) {
      auto w = avoiding_path(g, *es);
      v.exhaustive = !w;
      v.witness = w;
    } else {
      v = is_exhaustive_general(g, e, bound);
    }
    json j = {{"set", fe_json(g, e)}, {"exhaustive", v.exhaustive}, {"exact", v.exact}};
    if (v.witness) j["witness"] = path_json(g, *v.witness);
    emit(out, j);
    return v.exhaustive && v.exact ? kOk : kCheckFailed;
  }
  std::vector<EdgeSet> sets;
  if (vertex.empty()) {
    sets = fe_edge_sets(g);
  } else {
    auto v = g.find_vertex(vertex);
    if (!v) throw ParseError("--vertex: unknown vertex '" + vertex + "'");
    sets = enumerate_fe_edge_sets(g, *v);
  }
  json j = {{"sets", collection_json(g, sets)}, {"count", sets.size()}};
  if (vertex.empty() && is_acyclic(g)) j["fe_lambda_count"] = FESpace(g).member_count();
  emit(out, j);
  return kOk;
}

int cmd_ext(const KGraph& g, const std::string& path, const std::string& set, std::ostream& out) {
  const auto word = word_arg(g, path);
  const FESet e = parse_fe_set(g, literal_or_file(set));
  const Path lambda = path_from_word(g, word, e.vertex);
  json j = {{"path", path_json(g, lambda)}, {"set", fe_json(g, e)}};
  if (auto es = to_edge_set(e)) {
    j["ext"] = set_json(g, ext_path(g, lambda, *es));
  } else {
    json ps = json::array();
    for (const auto& p : ext_general(g, lambda, e)) ps.push_back(path_json(g, p));
    j["ext"] = ps;
  }
  emit(out, j);
  return kOk;
}

json violation_json(const KGraph& g, const EfficiencyViolation& v) {
  json j = {{"condition", std::string(to_string(v.condition))}, {"member", set_json(g, v.e)}};
  if (v.edge) j["edge"] = g.edge(*v.edge).name;
  if (v.f) j["other"] = set_json(g, *v.f);
  if (v.required) j["required"] = set_json(g, *v.required);
  return j;
}

int cmd_efficient_check(const KGraph& g, const std::string& coll, std::ostream& out) {
  const auto c = edge_collection_arg(g, coll);
  const auto rep = check_efficient(g, c);
  json vs = json::array();
  for (const auto& v : rep.violations) vs.push_back(violation_json(g, v));
  emit(out, {{"efficient", rep.efficient}, {"hat_formulation", rep.hat_formulation}, {"violations", vs}});
  return rep.efficient && rep.formulations_agree() ? kOk : kCheckFailed;
}

int cmd_hat(const KGraph& g, const std::string& coll, const std::string& set, std::ostream& out) {
  const auto c = edge_collection_arg(g, coll);
  if (!set.empty()) {
    const EdgeSet e = parse_edge_set(g, literal_or_file(set));
    emit(out, {{"set", set_json(g, e)}, {"member", is_exhaustive_edges(g, e) && has_member_below(c, e)}});
    return kOk;
  }
  const auto hat = edge_satiation(g, c);
  emit(out, {{"hat", collection_json(g, hat)}, {"count", hat.size()}});
  return kOk;
}

int cmd_min(const KGraph& g, const std::string& coll, std::ostream& out) {
  const auto c = parse_collection(g, literal_or_file(coll));
  if (auto ec = to_edge_collection(c.members)) {
    emit(out, {{"min", collection_json(g, min_collection(*ec))}});
  } else {
    emit(out, {{"min", collection_json(g, min_collection(c.members))}});
  }
  return kOk;
}

int cmd_satiate(const KGraph& g, const std::string& coll, bool check, std::ostream& out) {
  const FESpace space(g);
  const auto c = parse_collection(g, literal_or_file(coll));
  if (check) {
    const auto rep = check_satiated(space, c.members);
    json vs = json::array();
    for (const auto& v : rep.violations) {
      json j = {{"condition", std::string(to_string(v.condition))},
                {"member", fe_json(g, v.e)},
                {"parameters", v.parameters}};
      if (v.missing) j["missing"] = fe_json(g, *v.missing);
      vs.push_back(j);
    }
    emit(out, {{"satiated", rep.satiated}, {"violations", vs}});
    return rep.satiated ? kOk : kCheckFailed;
  }
  const auto bar = satiate(space, c.members);
  emit(out, {{"satiation", collection_json(g, bar)}, {"count", bar.size()}});
  return kOk;
}

int cmd_bijection_verify(const KGraph& g, std::ostream& out, std::ostream& err) {
  const FESpace space(g);
  const auto effs = enumerate_efficient(g);
  const auto sats = enumerate_satiated(space);
  json failures = json::array();
  for (const auto& e : effs) {
    const auto bar = satiate(space, e);
    if (!std::binary_search(sats.begin(), sats.end(), bar))
      failures.push_back({{"efficient", collection_json(g, e)}, {"problem", "satiation is not among the satiated sets"}});
    else if (edge_part_min(bar) != e)
      failures.push_back({{"efficient", collection_json(g, e)}, {"problem", "min(closure ∩ FE(Λ¹)) differs"}});
  }
  for (const auto& f : sats) {
    const auto e = edge_part_min(f);
    if (!std::binary_search(effs.begin(), effs.end(), e))
      failures.push_back({{"satiated", collection_json(g, f)}, {"problem", "edge part is not efficient"}});
    else if (satiate(space, e) != f)
      failures.push_back({{"satiated", collection_json(g, f)}, {"problem", "closure of the edge part differs"}});
  }
  const bool ok = failures.empty() && effs.size() == sats.size();
  std::string summary = ok ? "efficient = satiated = " + std::to_string(effs.size())
                           : "efficient = " + std::to_string(effs.size()) + ", satiated = " + std::to_string(sats.size());
  err << summary << "\n";
  emit(out, {{"efficient", effs.size()},
             {"satiated", sats.size()},
             {"bijection", ok},
             {"summary", summary},
             {"failures", failures}});
  return ok ? kOk : kCheckFailed;
}

int cmd_boundary(const KGraph& g, const std::string& coll, std::ostream& out) {
  const auto c = edge_collection_arg(g, coll);
  const auto paths = enumerate_boundary_paths(g, c);
  json ps = json::array();
  for (const auto& p : paths) ps.push_back(path_json(g, p));
  emit(out, {{"boundary", ps}, {"count", paths.size()}});
  return kOk;
}

int cmd_rep_verify(const KGraph& g, const std::string& coll, std::ostream& out) {
  const auto c = edge_collection_arg(g, coll);
  const auto rep = Representation::build(g, c);
  auto report = verify_tck(g, rep);
  report.append(verify_ck(g, rep, c));
  json checks = json::array();
  for (const auto& ch : report.checks)
    checks.push_back({{"relation", ch.relation}, {"instance", ch.instance}, {"status", ch.ok ? "pass" : "fail"}});
  emit(out, {{"dimension", rep.dimension()}, {"failures", report.failures}, {"checks", checks}});
  return report.ok() ? kOk : kCheckFailed;
}

int cmd_hat_oracle(const KGraph& g, const std::string& coll, const std::string& set, std::ostream& out) {
  const auto c = edge_collection_arg(g, coll);
  const auto rep = Representation::build(g, c);
  auto relations = verify_tck(g, rep);
  relations.append(verify_ck(g, rep, c));
  std::vector<EdgeSet> sets;
  if (set.empty()) {
    sets = fe_edge_sets(g);
  } else {
    sets.push_back(parse_edge_set(g, literal_or_file(set)));
  }
  bool agree = true;
  json rows = json::array();
  for (const auto& e : sets) {
    const auto res = hat_membership_via_rep(rep, e);
    const bool in_hat = is_exhaustive_edges(g, e) && has_member_below(c, e);
    json row = {{"set", set_json(g, e)}, {"vanishes", res.vanishes}, {"in_hat", in_hat}, {"agree", res.vanishes == in_hat}};
    if (res.witness) row["witness"] = path_json(g, *res.witness);
    agree = agree && res.vanishes == in_hat;
    rows.push_back(row);
  }
  emit(out, {{"relations_ok", relations.ok()}, {"agree", agree}, {"sets", rows}});
  return relations.ok() && agree ? kOk : kCheckFailed;
}

int cmd_ideals(const KGraph& g, const std::string& coll, bool cross_check, std::ostream& out) {
  const auto c = edge_collection_arg(g, coll);
  const auto labels = enumerate_ideal_labels(g, c);
  json ls = json::array();
  for (const auto& l : labels) {
    json h = json::array();
    for (VertexId v : l.h) h.push_back(g.vertex_name(v));
    json b = json::array();
    for (const auto& e : l.b) b.push_back(edge_names(g, e.edges));
    ls.push_back({{"H", h}, {"B", b}});
  }
  json j = {{"labels", ls}, {"count", labels.size()}};
  bool ok = true;
  if (cross_check) {
    ok = enumerate_ideal_labels_satiated(g, c) == labels;
    j["satiated_agrees"] = ok;
  }
  emit(out, j);
  return ok ? kOk : kCheckFailed;
}

int cmd_toeplitz(const KGraph& g, const std::vector<std::size_t>& k, const std::vector<std::size_t>& l,
                 std::ostream& out) {
  auto label_json = [&](const ToeplitzLabel& t) {
    return json{{"colors", t.colors}, {"collection", collection_json(g, t.collection)}, {"efficient", t.efficient}};
  };
  const auto a = toeplitz_label(g, k);
  const auto b = toeplitz_label(g, l);
  const auto both = intersect_toeplitz_labels(g, k, l);
  emit(out, {{"K", label_json(a)}, {"L", label_json(b)}, {"intersection", label_json(both)}});
  return a.efficient && b.efficient && both.efficient ? kOk : kCheckFailed;
}

int cmd_gen(const std::string& fixture, bool list, const RandomOptions& opts, const std::string& out_file,
            std::ostream& out) {
  if (list) {
    json fs = json::array();
    for (const auto& f : fixture_catalog()) fs.push_back({{"name", f.name}, {"note", f.note}});
    emit(out, fs);
    return kOk;
  }
  std::string text;
  if (!fixture.empty()) {
    auto f = find_fixture(fixture);
    if (!f) throw ParseError("--fixture: unknown fixture '" + fixture + "'");
    text = graph_to_json(f->graph);
  } else {
    text = graph_spec_to_json(random_kgraph_spec(opts));
  }
  if (out_file.empty()) {
    out << text;
  } else {
    write_file(out_file, text);
    emit(out, {{"written", out_file}});
  }
  return kOk;
}

int cmd_export_dot(const KGraph& g, const std::string& out_file, std::ostream& out) {
  if (out_file.empty()) {
    out << to_dot(g);
  } else {
    write_file(out_file, to_dot(g));
    emit(out, {{"written", out_file}});
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-graph combinatorics toolkit", "kgraph"};
  app.require_subcommand(1);

  std::string file, coll, set, path, vertex, fixture, out_file;
  std::optional<std::uint32_t> bound;
  bool check = false, list = false;
  std::vector<std::size_t> k_colors, l_colors;
  RandomOptions ropts;
  std::function<int()> action;

  auto graph_cmd = [&](const char* name, const char* desc) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("graph", file, "graph JSON file")->required();
    return sub;
  };
  auto with_graph = [&](auto fn) {
    return [&, fn] {
      action = [&, fn] {
        const KGraph g = load_graph(file);
        return fn(g);
      };
    };
  };

  graph_cmd("validate", "check the k-graph axioms")->callback([&] { action = [&] { return cmd_validate(file, out); }; });

  graph_cmd("props", "row-finiteness, sources, acyclicity")
      ->callback(with_graph([&](const KGraph& g) { return cmd_props(g, out); }));

  auto* fe = graph_cmd("fe", "list FE(Λ¹), or test one set for exhaustiveness");
  fe->add_option("--vertex", vertex, "restrict to one vertex");
  fe->add_option("--set", set, "set literal or file to test");
  fe->add_option("--bound", bound, "path length bound for cyclic graphs");
  fe->callback(with_graph([&](const KGraph& g) { return cmd_fe(g, vertex, set, bound, out); }));

  auto* ext = graph_cmd("ext", "Ext(λ;E)");
  ext->add_option("--path", path, "edge word as a JSON array")->required();
  ext->add_option("--set", set, "set literal or file")->required();
  ext->callback(with_graph([&](const KGraph& g) { return cmd_ext(g, path, set, out); }));

  auto* eff = graph_cmd("efficient-check", "check (E1)-(E3)");
  eff->add_option("--collection", coll, "collection literal or file")->required();
  eff->callback(with_graph([&](const KGraph& g) { return cmd_efficient_check(g, coll, out); }));

  auto* hat = graph_cmd("hat", "edge satiation");
  hat->add_option("--collection", coll, "collection literal or file")->required();
  hat->add_option("--set", set, "test membership of one set");
  hat->callback(with_graph([&](const KGraph& g) { return cmd_hat(g, coll, set, out); }));

  auto* mn = graph_cmd("min", "minimal members");
  mn->add_option("--collection", coll, "collection literal or file")->required();
  mn->callback(with_graph([&](const KGraph& g) { return cmd_min(g, coll, out); }));

  auto* sat = graph_cmd("satiate", "satiation, or --check a collection for (S1)-(S4)");
  sat->add_option("--collection", coll, "collection literal or file")->required();
  sat->add_flag("--check", check, "report violations instead of closing");
  sat->callback(with_graph([&](const KGraph& g) { return cmd_satiate(g, coll, check, out); }));

  graph_cmd("bijection-verify", "efficient and satiated collections correspond")
      ->callback(with_graph([&](const KGraph& g) { return cmd_bijection_verify(g, out, err); }));

  auto* bd = graph_cmd("boundary", "boundary paths of an acyclic graph");
  bd->add_option("--collection", coll, "collection literal or file (default: empty)");
  bd->callback(with_graph([&](const KGraph& g) { return cmd_boundary(g, coll, out); }));

  auto* rv = graph_cmd("rep-verify", "check the relations in the boundary-path representation");
  rv->add_option("--collection", coll, "collection literal or file (default: empty)");
  rv->callback(with_graph([&](const KGraph& g) { return cmd_rep_verify(g, coll, out); }));

  auto* ho = graph_cmd("hat-oracle", "compare the matrix test with edge satiation");
  ho->add_option("--collection", coll, "collection literal or file (default: empty)");
  ho->add_option("--set", set, "one edge set (default: all of FE(Λ¹))");
  ho->callback(with_graph([&](const KGraph& g) { return cmd_hat_oracle(g, coll, set, out); }));

  auto* id = graph_cmd("ideals", "gauge-invariant ideal labels (H, B)");
  id->add_option("--collection", coll, "collection literal or file (default: empty)");
  id->add_flag("--check", check, "also enumerate through satiated collections and compare");
  id->callback(with_graph([&](const KGraph& g) { return cmd_ideals(g, coll, check, out); }));

  auto* tp = graph_cmd("toeplitz", "labels E_K, E_L and E_{K∪L}");
  tp->add_option("--K", k_colors, "colours, 1-based")->required();
  tp->add_option("--L", l_colors, "colours, 1-based")->required();
  tp->callback(with_graph([&](const KGraph& g) { return cmd_toeplitz(g, k_colors, l_colors, out); }));

  auto* gen = app.add_subcommand("gen", "emit a fixture or a random k-graph");
  gen->add_option("--fixture", fixture, "named fixture");
  gen->add_flag("--list", list, "list fixtures");
  gen->add_option("--k", ropts.k, "rank")->check(CLI::Range(1, 3));
  gen->add_option("--vertices", ropts.vertices, "vertex count");
  gen->add_option("--density", ropts.density, "edge probability of the base matrix");
  gen->add_option("--seed", ropts.seed, "random seed");
  gen->add_flag("--allow-cycles", ropts.allow_cycles, "allow cycles");
  gen->add_option("--out", out_file, "write to a file");
  gen->callback([&] { action = [&] { return cmd_gen(fixture, list, ropts, out_file, out); }; });

  auto* dot = graph_cmd("export-dot", "Graphviz export of the skeleton");
  dot->add_option("--out", out_file, "write to a file");
  dot->callback(with_graph([&](const KGraph& g) { return cmd_export_dot(g, out_file, out); }));

  std::vector<const char*> argv{"kgraph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "format error: " << e.what() << "\n";
  } catch (const GraphError& e) {
    err << "invalid graph: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "rejected: " << e.what() << "\n";
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace kgraph::cli

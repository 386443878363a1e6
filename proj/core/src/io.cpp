#include "kgraph/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kgraph/error.hpp"

namespace kgraph {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < std::min(e.byte, text.size()); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError("line " + std::to_string(line) + ": " + e.what());
  }
}

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) field_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) field_error(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

std::string as_string(const json& j, const std::string& field) {
  if (!j.is_string()) field_error(field, "expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array");
  return j;
}

EdgeId lookup_edge(const KGraph& g, const json& j, const std::string& field) {
  auto name = as_string(j, field);
  auto e = g.find_edge(name);
  if (!e) field_error(field, "unknown edge '" + name + "'");
  return *e;
}

VertexId lookup_vertex(const KGraph& g, const json& j, const std::string& field) {
  auto name = as_string(j, field);
  auto v = g.find_vertex(name);
  if (!v) field_error(field, "unknown vertex '" + name + "'");
  return *v;
}

std::vector<EdgeId> edge_list(const KGraph& g, const json& j, const std::string& field) {
  std::vector<EdgeId> out;
  const auto& arr = as_array(j, field);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(lookup_edge(g, arr[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

FESet member_from_json(const KGraph& g, const json& j, const std::string& field) {
  try {
    if (j.is_array()) {
      auto edges = edge_list(g, j, field);
      if (edges.empty()) field_error(field, "an edge list needs at least one edge to infer its vertex");
      VertexId v = g.edge(edges.front()).range;
      for (EdgeId e : edges)
        if (g.edge(e).range != v) field_error(field, "edges have different ranges");
      return to_fe_set(g, make_edge_set(g, v, std::move(edges)));
    }
    if (!j.is_object()) field_error(field, "expected an edge list or an object");
    VertexId v = lookup_vertex(g, require(j, "vertex", field), field + ".vertex");
    if (j.contains("edges")) {
      auto edges = edge_list(g, j["edges"], field + ".edges");
      for (EdgeId e : edges)
        if (g.edge(e).range != v) field_error(field + ".edges", "edge '" + g.edge(e).name + "' does not end at the vertex");
      return to_fe_set(g, make_edge_set(g, v, std::move(edges)));
    }
    const auto& paths = as_array(require(j, "paths", field), field + ".paths");
    std::vector<Path> ps;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const std::string pf = field + ".paths[" + std::to_string(i) + "]";
      auto word = edge_list(g, paths[i], pf);
      if (word.empty()) field_error(pf, "paths in an FE set must be nontrivial");
      try {
        ps.push_back(path_from_word(g, word, v));
      } catch (const PreconditionError& e) {
        field_error(pf, e.what());
      }
    }
    return make_fe_set(g, v, std::move(ps));
  } catch (const PreconditionError& e) {
    field_error(field, e.what());
  }
}

json member_json(const KGraph& g, const FESet& e) {
  json out = {{"vertex", g.vertex_name(e.vertex)}};
  if (e.edges_only()) {
    json edges = json::array();
    for (const auto& p : e.paths) edges.push_back(g.edge(p.edges().front()).name);
    out["edges"] = std::move(edges);
  } else {
    json paths = json::array();
    for (const auto& p : e.paths) {
      json word = json::array();
      for (EdgeId x : p.edges()) word.push_back(g.edge(x).name);
      paths.push_back(std::move(word));
    }
    out["paths"] = std::move(paths);
  }
  return out;
}

}  // namespace

GraphSpec parse_graph_spec(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("line 1: expected a JSON object");
  GraphSpec spec;
  const json& k = require(j, "k", "");
  if (!k.is_number_unsigned()) field_error("k", "expected a positive integer");
  spec.k = k.get<std::size_t>();

  const auto& vs = as_array(require(j, "vertices", ""), "vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) spec.vertices.push_back(as_string(vs[i], "vertices[" + std::to_string(i) + "]"));

  const auto& es = as_array(require(j, "edges", ""), "edges");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string f = "edges[" + std::to_string(i) + "]";
    EdgeSpec e;
    e.id = as_string(require(es[i], "id", f), f + ".id");
    const json& c = require(es[i], "color", f);
    if (!c.is_number_unsigned()) field_error(f + ".color", "expected a positive integer");
    e.color = c.get<std::size_t>();
    e.range = as_string(require(es[i], "range", f), f + ".range");
    e.source = as_string(require(es[i], "source", f), f + ".source");
    spec.edges.push_back(std::move(e));
  }

  if (j.contains("squares")) {
    const auto& sq = as_array(j["squares"], "squares");
    for (std::size_t i = 0; i < sq.size(); ++i) {
      const std::string f = "squares[" + std::to_string(i) + "]";
      if (!sq[i].is_array() || sq[i].size() != 2) field_error(f, "expected [[e,f],[f2,e2]]");
      SquareSpec s;
      for (std::size_t side = 0; side < 2; ++side) {
        const std::string sf = f + "[" + std::to_string(side) + "]";
        if (!sq[i][side].is_array() || sq[i][side].size() != 2) field_error(sf, "expected a pair of edge ids");
        auto& dst = side == 0 ? s.lhs : s.rhs;
        for (std::size_t t = 0; t < 2; ++t) dst[t] = as_string(sq[i][side][t], sf + "[" + std::to_string(t) + "]");
      }
      spec.squares.push_back(std::move(s));
    }
  }
  return spec;
}

std::string graph_spec_to_json(const GraphSpec& spec) {
  json edges = json::array();
  for (const auto& e : spec.edges)
    edges.push_back({{"id", e.id}, {"color", e.color}, {"range", e.range}, {"source", e.source}});
  json squares = json::array();
  for (const auto& s : spec.squares)
    squares.push_back(json::array({json::array({s.lhs[0], s.lhs[1]}), json::array({s.rhs[0], s.rhs[1]})}));
  json out = {{"k", spec.k}, {"vertices", spec.vertices}, {"edges", std::move(edges)}, {"squares", std::move(squares)}};
  return out.dump(2) + "\n";
}

KGraph graph_from_json(std::string_view text) { return KGraph::from_spec(parse_graph_spec(text)); }

KGraph load_graph(const std::filesystem::path& path) { return graph_from_json(read_file(path)); }

std::string graph_to_json(const KGraph& g) { return graph_spec_to_json(g.to_spec()); }

void save_graph(const KGraph& g, const std::filesystem::path& path) { write_file(path, graph_to_json(g)); }

FESet parse_fe_set(const KGraph& g, std::string_view text) { return member_from_json(g, parse_json(text), "set"); }

EdgeSet parse_edge_set(const KGraph& g, std::string_view text) {
  auto e = to_edge_set(parse_fe_set(g, text));
  if (!e) field_error("set", "expected edges only");
  return *e;
}

Collection parse_collection(const KGraph& g, std::string_view text) {
  const json j = parse_json(text);
  Collection out;
  const json* members = &j;
  std::string field = "members";
  if (j.is_object()) {
    members = &require(j, "members", "");
    if (j.contains("kind")) {
      auto kind = parse_collection_kind(as_string(j["kind"], "kind"));
      if (!kind) field_error("kind", "expected raw, efficient, satiated or edge-satiation");
      out.kind = *kind;
    }
  } else {
    field = "";
  }
  const auto& arr = as_array(*members, field.empty() ? "collection" : field);
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.members.push_back(member_from_json(g, arr[i], field + "[" + std::to_string(i) + "]"));
  out.members = canonical(std::move(out.members));
  return out;
}

EdgeCollection parse_edge_collection(const KGraph& g, std::string_view text) {
  auto c = to_edge_collection(parse_collection(g, text).members);
  if (!c) field_error("members", "expected edge sets only");
  return *c;
}

Collection load_collection(const KGraph& g, const std::filesystem::path& path) {
  return parse_collection(g, read_file(path));
}

std::string fe_set_to_json(const KGraph& g, const FESet& e) { return member_json(g, e).dump(); }

std::string edge_set_to_json(const KGraph& g, const EdgeSet& e) { return member_json(g, to_fe_set(g, e)).dump(); }

std::string collection_to_json(const KGraph& g, const Collection& c) {
  json members = json::array();
  for (const auto& e : c.members) members.push_back(member_json(g, e));
  json out = {{"kind", std::string(to_string(c.kind))}, {"members", std::move(members)}};
  return out.dump();
}

std::string collection_to_json(const KGraph& g, const EdgeCollection& c, CollectionKind kind) {
  return collection_to_json(g, Collection{kind, to_path_collection(g, c)});
}

std::string to_dot(const KGraph& g) {
  static const char* styles[] = {"color=red, style=dashed", "color=blue, style=solid", "color=darkgreen, style=dotted"};
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph kgraph {\n  rankdir=RL;\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) os << "  " << quote(g.vertex_name(v)) << ";\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    os << "  " << quote(g.vertex_name(ed.source)) << " -> " << quote(g.vertex_name(ed.range)) << " [label="
       << quote(ed.name) << ", " << (ed.color < 3 ? styles[ed.color] : "color=black") << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace kgraph

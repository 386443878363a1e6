#include "kgraph/path.hpp"

#include <algorithm>
#include <functional>

#include "kgraph/error.hpp"

namespace kgraph {

struct PathAccess {
  static Path make(const KGraph& g, VertexId range, std::vector<EdgeId> word) {
    Degree d(g.rank());
    for (EdgeId e : word) ++d[g.color(e)];
    VertexId src = word.empty() ? range : g.edge(word.back()).source;
    return Path(range, src, std::move(word), std::move(d));
  }
};

std::size_t PathHash::operator()(const Path& p) const noexcept {
  std::size_t h = std::hash<std::uint32_t>{}(p.range()) * 0x9e3779b97f4a7c15ULL;
  for (EdgeId e : p.edges()) h = (h ^ e) * 0x100000001b3ULL + 0x9e3779b9;
  return h;
}

namespace {

void check_composable(const KGraph& g, std::span<const EdgeId> word) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (g.edge(word[i]).source != g.edge(word[i + 1]).range)
      throw PreconditionError("edges '" + g.edge(word[i]).name + "' and '" +
                              g.edge(word[i + 1]).name + "' are not composable");
  }
}

std::vector<std::size_t> sorted_colors_of(const KGraph& g, std::span<const EdgeId> word) {
  std::vector<std::size_t> cs;
  cs.reserve(word.size());
  for (EdgeId e : word) cs.push_back(g.color(e));
  std::sort(cs.begin(), cs.end());
  return cs;
}

std::vector<EdgeId> normalize(const KGraph& g, std::vector<EdgeId> word) {
  auto target = sorted_colors_of(g, word);
  return rewrite_to_colors(g, std::move(word), target);
}

}  // namespace

Path vertex_path(const KGraph& g, VertexId v) {
  if (v >= g.vertex_count()) throw PreconditionError("vertex index out of range");
  return PathAccess::make(g, v, {});
}

Path edge_path(const KGraph& g, EdgeId e) {
  if (e >= g.edge_count()) throw PreconditionError("edge index out of range");
  return PathAccess::make(g, g.edge(e).range, {e});
}

Path path_from_word(const KGraph& g, std::span<const EdgeId> word, std::optional<VertexId> range) {
  for (EdgeId e : word)
    if (e >= g.edge_count()) throw PreconditionError("edge index out of range");
  if (word.empty()) {
    if (!range) throw PreconditionError("the empty word needs an explicit range vertex");
    return vertex_path(g, *range);
  }
  if (range && *range != g.edge(word.front()).range)
    throw PreconditionError("word does not start at vertex '" + g.vertex_name(*range) + "'");
  check_composable(g, word);
  VertexId r = g.edge(word.front()).range;
  return PathAccess::make(g, r, normalize(g, std::vector<EdgeId>(word.begin(), word.end())));
}

std::vector<EdgeId> rewrite_to_colors(const KGraph& g, std::vector<EdgeId> word,
                                      std::span<const std::size_t> target) {
  if (target.size() != word.size()) throw PreconditionError("target colour sequence has wrong length");
  for (std::size_t p = 0; p < word.size(); ++p) {
    std::size_t q = p;
    while (q < word.size() && g.color(word[q]) != target[p]) ++q;
    if (q == word.size()) throw PreconditionError("target is not a permutation of the word's colours");
    for (std::size_t j = q; j > p; --j) {
      auto [a, b] = g.swap(word[j - 1], word[j]);
      word[j - 1] = a;
      word[j] = b;
    }
  }
  return word;
}

std::vector<EdgeId> normalize_randomized(const KGraph& g, std::vector<EdgeId> word,
                                         std::mt19937_64& rng) {
  check_composable(g, word);
  std::vector<std::size_t> descents;
  for (;;) {
    descents.clear();
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
      if (g.color(word[i]) > g.color(word[i + 1])) descents.push_back(i);
    if (descents.empty()) return word;
    std::size_t i = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
    auto [a, b] = g.swap(word[i], word[i + 1]);
    word[i] = a;
    word[i + 1] = b;
  }
}

Path compose(const KGraph& g, const Path& a, const Path& b) {
  if (a.source() != b.range())
    throw PreconditionError("paths are not composable: s(λ) = '" + g.vertex_name(a.source()) +
                            "' but r(μ) = '" + g.vertex_name(b.range()) + "'");
  if (a.is_vertex()) return b;
  if (b.is_vertex()) return a;
  std::vector<EdgeId> word = a.edges();
  word.insert(word.end(), b.edges().begin(), b.edges().end());
  return PathAccess::make(g, a.range(), normalize(g, std::move(word)));
}

std::pair<Path, Path> factor(const KGraph& g, const Path& p, const Degree& m) {
  if (m.rank() != g.rank() || !m.leq(p.degree()))
    throw PreconditionError("cannot factor at " + m.to_string() + ": not below d(λ) = " +
                            p.degree().to_string());
  auto target = m.sorted_colors();
  auto rest = (p.degree() - m).sorted_colors();
  target.insert(target.end(), rest.begin(), rest.end());
  auto word = rewrite_to_colors(g, p.edges(), target);
  std::size_t cut = m.length();
  std::vector<EdgeId> head(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(cut));
  std::vector<EdgeId> tail(word.begin() + static_cast<std::ptrdiff_t>(cut), word.end());
  Path first = PathAccess::make(g, p.range(), std::move(head));
  VertexId mid = first.source();
  return {std::move(first), PathAccess::make(g, mid, std::move(tail))};
}

Path segment(const KGraph& g, const Path& p, const Degree& m, const Degree& n) {
  if (!m.leq(n)) throw PreconditionError("segment bounds out of order");
  return factor(g, factor(g, p, n).first, m).second;
}

bool has_prefix(const KGraph& g, const Path& p, const Path& prefix) {
  if (p.range() != prefix.range() || !prefix.degree().leq(p.degree())) return false;
  return factor(g, p, prefix.degree()).first == prefix;
}

std::vector<Path> paths_of_degree(const KGraph& g, VertexId v, const Degree& n) {
  if (n.rank() != g.rank()) throw PreconditionError("degree has the wrong rank");
  const auto colors = n.sorted_colors();
  std::vector<Path> out;
  std::vector<EdgeId> word;
  std::function<void(VertexId)> rec = [&](VertexId at) {
    if (word.size() == colors.size()) {
      out.push_back(PathAccess::make(g, v, word));
      return;
    }
    for (EdgeId e : g.edges_at(at, colors[word.size()])) {
      word.push_back(e);
      rec(g.edge(e).source);
      word.pop_back();
    }
  };
  rec(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> paths_below(const KGraph& g, VertexId v, const Degree& n) {
  std::vector<Path> out;
  for (const auto& m : degrees_below(n)) {
    auto ps = paths_of_degree(g, v, m);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> paths_up_to_length(const KGraph& g, VertexId v, std::uint32_t max_length) {
  std::vector<Path> out;
  for (std::uint32_t l = 0; l <= max_length; ++l) {
    bool any = false;
    for (const auto& m : degrees_of_length(g.rank(), l)) {
      auto ps = paths_of_degree(g, v, m);
      any = any || !ps.empty();
      out.insert(out.end(), ps.begin(), ps.end());
    }
    if (!any) break;  // no path of length l means none longer
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Longest skeleton path starting at v, or nullopt if a cycle is reachable.
std::optional<std::uint32_t> longest_from(const KGraph& g, VertexId v) {
  std::vector<int> state(g.vertex_count(), 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::uint32_t> best(g.vertex_count(), 0);
  bool cyclic = false;
  std::function<void(VertexId)> dfs = [&](VertexId w) {
    state[w] = 1;
    for (EdgeId e : g.edges_at(w)) {
      VertexId s = g.edge(e).source;
      if (state[s] == 1) {
        cyclic = true;
      } else {
        if (state[s] == 0) dfs(s);
        best[w] = std::max(best[w], best[s] + 1);
      }
      if (cyclic) break;
    }
    state[w] = 2;
  };
  dfs(v);
  if (cyclic) return std::nullopt;
  return best[v];
}

}  // namespace

std::vector<Path> all_paths_from(const KGraph& g, VertexId v) {
  auto len = longest_from(g, v);
  if (!len)
    throw PreconditionError("vertex '" + g.vertex_name(v) +
                            "' reaches a cycle; unbounded path enumeration refused");
  return paths_up_to_length(g, v, *len);
}

std::vector<Path> mce(const KGraph& g, const Path& a, const Path& b) {
  if (a.range() != b.range()) throw PreconditionError("mce needs paths with a common range");
  Degree n = a.degree().join(b.degree());
  std::vector<Path> out;
  for (const auto& nu : paths_of_degree(g, a.source(), n - a.degree())) {
    Path tau = compose(g, a, nu);
    if (factor(g, tau, b.degree()).first == b) out.push_back(std::move(tau));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Path, Path>> lambda_min(const KGraph& g, const Path& a, const Path& b) {
  std::vector<std::pair<Path, Path>> out;
  for (const auto& tau : mce(g, a, b))
    out.emplace_back(factor(g, tau, a.degree()).second, factor(g, tau, b.degree()).second);
  return out;
}

bool compatible(const KGraph& g, const Path& a, const Path& b) {
  if (a.range() != b.range()) return false;
  return !mce(g, a, b).empty();
}

bool is_acyclic(const KGraph& g) {
  std::vector<std::size_t> indeg(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) ++indeg[g.edge(e).source];
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (indeg[v] == 0) stack.push_back(v);
  std::size_t seen = 0;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    ++seen;
    for (EdgeId e : g.edges_at(v))
      if (--indeg[g.edge(e).source] == 0) stack.push_back(g.edge(e).source);
  }
  return seen == g.vertex_count();
}

std::vector<VertexId> source_vertices(const KGraph& g) {
  // Greatest X such that every w in X has, for each colour, an edge into X.
  // v lies outside X exactly when vΛ^m = ∅ for some m.
  std::vector<bool> in(g.vertex_count(), true);
  for (bool changed = true; changed;) {
    changed = false;
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
      if (!in[w]) continue;
      for (std::size_t c = 0; c < g.rank(); ++c) {
        auto es = g.edges_at(w, c);
        bool ok = std::any_of(es.begin(), es.end(), [&](EdgeId e) { return in[g.edge(e).source]; });
        if (!ok) {
          in[w] = false;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

GraphProperties graph_properties(const KGraph& g) {
  GraphProperties p;
  p.row_finite = true;
  p.has_sources = !source_vertices(g).empty();
  p.acyclic = is_acyclic(g);
  p.finitely_aligned = true;
  return p;
}

std::vector<std::vector<bool>> reachability(const KGraph& g) {
  std::vector<std::vector<bool>> reach(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<VertexId> stack{v};
    reach[v][v] = true;
    while (!stack.empty()) {
      VertexId w = stack.back();
      stack.pop_back();
      for (EdgeId e : g.edges_at(w)) {
        VertexId s = g.edge(e).source;
        if (!reach[v][s]) {
          reach[v][s] = true;
          stack.push_back(s);
        }
      }
    }
  }
  return reach;
}

std::uint32_t max_path_length(const KGraph& g) {
  std::uint32_t best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto len = longest_from(g, v);
    if (!len) throw PreconditionError("graph has a directed cycle");
    best = std::max(best, *len);
  }
  return best;
}

std::string to_string(const KGraph& g, const Path& p) {
  if (p.is_vertex()) return g.vertex_name(p.range());
  std::string s = "[";
  for (std::size_t i = 0; i < p.edges().size(); ++i) {
    if (i) s += ",";
    s += g.edge(p.edges()[i]).name;
  }
  return s + "]";
}

}  // namespace kgraph

#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kgraph/collections.hpp"
#include "kgraph/corpus.hpp"
#include "kgraph/exhaustive.hpp"
#include "kgraph/graph.hpp"
#include "kgraph/path.hpp"

namespace testing {

using namespace kgraph;

inline Path P(const KGraph& g, std::initializer_list<const char*> names) {
  std::vector<EdgeId> word;
  for (const char* n : names) word.push_back(g.edge_id(n));
  return path_from_word(g, word);
}

inline Path V(const KGraph& g, const char* v) { return vertex_path(g, g.vertex_id(v)); }

inline EdgeSet ES(const KGraph& g, const char* v, std::initializer_list<const char*> names) {
  std::vector<EdgeId> edges;
  for (const char* n : names) edges.push_back(g.edge_id(n));
  return make_edge_set(g, g.vertex_id(v), edges);
}

inline EdgeCollection EC(std::vector<EdgeSet> sets) { return canonical(std::move(sets)); }

/// Words over edge names, grouped into morphisms by closing under the
/// square relations of the raw presentation. Nothing here uses the
/// library's normal form, so it can be compared against it.
class WordOracle {
 public:
  using Word = std::vector<std::string>;

  struct Morphism {
    std::string range, source;
    std::vector<int> degree;
    std::set<Word> words;
  };

  WordOracle(const GraphSpec& spec, std::size_t max_length) : spec_(spec) {
    for (const auto& e : spec.edges) edges_[e.id] = e;
    for (const auto& s : spec.squares) {
      swaps_[{s.lhs[0], s.lhs[1]}] = {s.rhs[0], s.rhs[1]};
      swaps_[{s.rhs[0], s.rhs[1]}] = {s.lhs[0], s.lhs[1]};
    }
    std::vector<Word> frontier{Word{}};
    std::set<Word> seen;
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::vector<Word> next;
      for (const auto& w : frontier)
        for (const auto& e : spec.edges) {
          if (!w.empty() && edges_[w.back()].source != e.range) continue;
          Word x = w;
          x.push_back(e.id);
          next.push_back(x);
        }
      for (const auto& w : next) {
        if (seen.count(w)) continue;
        Morphism m = close(w);
        for (const auto& x : m.words) seen.insert(x);
        morphisms_.push_back(std::move(m));
      }
      frontier = std::move(next);
    }
    for (const auto& v : spec.vertices) {
      Morphism m{v, v, std::vector<int>(spec.k, 0), {Word{}}};
      morphisms_.push_back(m);
      vertex_index_[v] = morphisms_.size() - 1;
    }
    for (std::size_t i = 0; i < morphisms_.size(); ++i)
      for (const auto& w : morphisms_[i].words) index_[{morphisms_[i].range, w}] = i;
  }

  const std::vector<Morphism>& morphisms() const { return morphisms_; }

  std::size_t index_of(const std::string& range, const Word& w) const {
    if (w.empty()) return vertex_index_.at(range);
    return index_.at({range, w});
  }

  /// τ(0, d(λ)) = λ: some word of τ starts with a word of λ.
  bool has_prefix(std::size_t tau, std::size_t lambda) const {
    const auto& t = morphisms_[tau];
    const auto& l = morphisms_[lambda];
    if (t.range != l.range) return false;
    const std::size_t n = l.words.begin()->size();
    for (const auto& w : t.words) {
      if (w.size() < n) return false;
      if (l.words.count(Word(w.begin(), w.begin() + n))) return true;
    }
    return false;
  }

  std::vector<std::size_t> mce(std::size_t a, std::size_t b) const {
    std::vector<int> join(spec_.k);
    for (std::size_t i = 0; i < spec_.k; ++i) join[i] = std::max(morphisms_[a].degree[i], morphisms_[b].degree[i]);
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < morphisms_.size(); ++t)
      if (morphisms_[t].range == morphisms_[a].range && morphisms_[t].degree == join && has_prefix(t, a) &&
          has_prefix(t, b))
        out.push_back(t);
    return out;
  }

  std::vector<std::size_t> from(const std::string& v) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < morphisms_.size(); ++i)
      if (morphisms_[i].range == v) out.push_back(i);
    return out;
  }

  /// Brute-force exhaustiveness of a set of morphisms at v, over all
  /// morphisms from v known to the oracle.
  bool exhaustive(const std::string& v, const std::vector<std::size_t>& set) const {
    for (std::size_t l : from(v)) {
      bool hit = false;
      for (std::size_t m : set)
        if (!mce(l, m).empty()) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
    return true;
  }

 private:
  Morphism close(const Word& w) const {
    Morphism m;
    m.range = edges_.at(w.front()).range;
    m.source = edges_.at(w.back()).source;
    m.degree.assign(spec_.k, 0);
    for (const auto& e : w) ++m.degree[edges_.at(e).color - 1];
    std::deque<Word> queue{w};
    m.words.insert(w);
    while (!queue.empty()) {
      Word x = queue.front();
      queue.pop_front();
      for (std::size_t p = 0; p + 1 < x.size(); ++p) {
        auto it = swaps_.find({x[p], x[p + 1]});
        if (it == swaps_.end()) continue;
        Word y = x;
        y[p] = it->second.first;
        y[p + 1] = it->second.second;
        if (m.words.insert(y).second) queue.push_back(y);
      }
    }
    return m;
  }

  GraphSpec spec_;
  std::map<std::string, EdgeSpec> edges_;
  std::map<std::pair<std::string, std::string>, std::pair<std::string, std::string>> swaps_;
  std::vector<Morphism> morphisms_;
  std::map<std::pair<std::string, Word>, std::size_t> index_;
  std::map<std::string, std::size_t> vertex_index_;
};

inline WordOracle::Word names_of(const KGraph& g, const Path& p) {
  WordOracle::Word w;
  for (EdgeId e : p.edges()) w.push_back(g.edge(e).name);
  return w;
}

/// A random composable word of the given length starting at v, or shorter
/// if a source is hit.
inline std::vector<EdgeId> random_word(const KGraph& g, VertexId v, std::size_t length, std::mt19937_64& rng) {
  std::vector<EdgeId> word;
  VertexId at = v;
  for (std::size_t i = 0; i < length; ++i) {
    const auto& out = g.edges_at(at);
    if (out.empty()) break;
    EdgeId e = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
    word.push_back(e);
    at = g.edge(e).source;
  }
  return word;
}

/// Every subset of vΛ¹.
inline std::vector<EdgeSet> all_edge_subsets(const KGraph& g, VertexId v) {
  const auto& out = g.edges_at(v);
  std::vector<EdgeSet> sets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << out.size()); ++mask) {
    std::vector<EdgeId> edges;
    for (std::size_t i = 0; i < out.size(); ++i)
      if (mask >> i & 1) edges.push_back(out[i]);
    sets.push_back(make_edge_set(g, v, edges));
  }
  return sets;
}

}  // namespace testing

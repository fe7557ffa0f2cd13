//
// shadowgraph - shadowing verification for edge shift spaces of
// finitely presented infinite graphs.
//
// Copyright 2026 the shadowgraph authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "shadow/enumeration.hpp"

#include <algorithm>

namespace shadow {

namespace {
constexpr Index kMaxBlock = 200000;  // feasibility guard for block counting
}

Index Enumeration::effective(Index k) const {
  if (g_.finite()) return std::min(k, g_.max_index());
  return k;
}

Enumeration::Trunc& Enumeration::trunc(Index k) {
  k = effective(k);
  auto it = truncs_.find(k);
  if (it != truncs_.end()) return it->second;
  if (k > kMaxBlock)
    throw Error("enumeration block " + std::to_string(k) +
                " exceeds the feasibility guard");
  Trunc t;
  FiniteGraph fg = g_.truncate(std::max<Index>(k, 1));
  t.vertices = fg.vertices;
  for (std::size_t i = 0; i < t.vertices.size(); ++i) t.vid[t.vertices[i]] = i;
  t.adj.resize(t.vertices.size());
  std::set<Vertex> sources;
  for (const auto& e : fg.edges) {
    t.adj[t.vid[e.source]].push_back({e.index, t.vid[e.range]});
    sources.insert(e.source);
  }
  for (auto& a : t.adj) std::sort(a.begin(), a.end());
  t.sources = static_cast<Index>(sources.size());
  t.walks.push_back(std::vector<Nat>(t.vertices.size(), Nat(1)));
  return truncs_.emplace(k, std::move(t)).first->second;
}

const Nat& Enumeration::walks(Trunc& t, std::size_t v, Index len) {
  while (static_cast<Index>(t.walks.size()) <= len) {
    const auto& prev = t.walks.back();
    std::vector<Nat> next(t.vertices.size(), Nat(0));
    for (std::size_t u = 0; u < t.vertices.size(); ++u)
      for (const auto& [idx, w] : t.adj[u]) next[u] += prev[w];
    t.walks.push_back(std::move(next));
  }
  return t.walks[static_cast<std::size_t>(len)][v];
}

Nat Enumeration::sum_walks(Trunc& t, Index len) {
  Nat total = 0;
  for (std::size_t v = 0; v < t.vertices.size(); ++v) total += walks(t, v, len);
  return total;
}

Nat Enumeration::count_paths(Index k, Index len) {
  std::scoped_lock lock(mu_);
  if (k < 1) throw Error("count_paths requires k >= 1");
  if (len < 0) throw Error("count_paths requires len >= 0");
  Trunc& t = trunc(k);
  if (len == 0) return Nat(t.sources);
  return sum_walks(t, len);
}

bool Enumeration::vertex_new_in_block(Index k) {
  if (g_.finite() && k > g_.max_index()) return false;
  Vertex v = g_.resolve(k).source;
  auto m = g_.min_out_index(v);
  return m && *m == k;
}

Nat Enumeration::new_in_block(Index k, Index len) {
  if (len < 1 || len > k) return 0;
  if (len == k) return count_paths(k, k);
  if (g_.finite() && k > g_.max_index()) return 0;
  return count_paths(k, len) - count_paths(k - 1, len);
}

Nat Enumeration::cumulative(Index k) {
  std::scoped_lock lock(mu_);
  if (k <= 0) return 0;
  auto it = cumulative_.find(k);
  if (it != cumulative_.end()) return it->second;
  // Incremental from the largest memoized predecessor keeps repeated rank
  // queries near-linear.
  Nat total = count_paths(k, 0);
  for (Index l = 1; l <= k; ++l) total += count_paths(k, l);
  cumulative_[k] = total;
  return total;
}

Nat Enumeration::rank_vertex(const Vertex& v) {
  std::scoped_lock lock(mu_);
  auto j = g_.min_out_index(v);
  if (!j)
    throw Error("vertex " + v.str() +
                " is never a source (impossible in a no-sink graph)");
  return cumulative(*j - 1) + 1;
}

Nat Enumeration::lex_less(Index k, const std::vector<Index>& p) {
  Trunc& t = trunc(k);
  Index alphabet = effective(k);
  Index len = static_cast<Index>(p.size());
  Nat total = 0;
  // Position 0 ranges over all edges; later positions over the adjacency of
  // the current junction vertex.
  std::optional<std::size_t> cur;  // current source vertex id, none at i = 0
  for (Index i = 0; i < len; ++i) {
    Index bound = p[static_cast<std::size_t>(i)];
    Index rem = len - i - 1;
    if (!cur) {
      for (std::size_t v = 0; v < t.vertices.size(); ++v)
        for (const auto& [idx, w] : t.adj[v]) {
          if (idx >= bound) break;
          total += walks(t, w, rem);
        }
    } else {
      for (const auto& [idx, w] : t.adj[*cur]) {
        if (idx >= bound) break;
        total += walks(t, w, rem);
      }
    }
    // Advance along p itself; if p leaves the alphabet or breaks a junction,
    // no further tuple shares this prefix.
    if (bound > alphabet || !g_.covered(bound)) break;
    Edge e = g_.resolve(bound);
    if (cur && t.vid.at(e.source) != *cur) break;
    cur = t.vid.at(e.range);
  }
  return total;
}

Nat Enumeration::rank(const FinitePath& p) {
  std::scoped_lock lock(mu_);
  if (p.is_vertex()) return rank_vertex(*p.vertex);
  if (!p.valid(g_)) throw Error("rank of an invalid path");
  Index len = static_cast<Index>(p.length());
  Index maxidx = *std::max_element(p.edges.begin(), p.edges.end());
  Index block = std::max(maxidx, len);
  Nat r = cumulative(block - 1);
  if (vertex_new_in_block(block)) r += 1;
  for (Index l = 1; l < len; ++l) r += new_in_block(block, l);
  // Lexicographic rank among the paths of this length newly listed in the
  // block: all length-`block` paths are new; shorter new paths are exactly
  // those that use e_block.
  Nat less = lex_less(block, p.edges);
  if (len < block && !(g_.finite() && block > g_.max_index()))
    less -= lex_less(block - 1, p.edges);
  return r + less + 1;
}

std::vector<Index> Enumeration::unrank_new(Index k, Index len, Nat offset) {
  // offset is 1-based among the new length-len paths of block k.
  bool need_k = len < k;  // shorter new paths must contain e_k
  Trunc& tk = trunc(k);
  Trunc* tk1 = need_k ? &trunc(k - 1) : nullptr;
  std::vector<Index> out;
  bool contains = false;
  std::optional<std::size_t> cur;
  for (Index i = 0; i < len; ++i) {
    Index rem = len - i - 1;
    bool chosen = false;
    auto try_edge = [&](Index idx, std::size_t tgt) {
      Nat cnt = walks(tk, tgt, rem);
      if (need_k && !contains && idx != k) {
        // completions must still pick up e_k somewhere
        auto it = tk1->vid.find(tk.vertices[tgt]);
        if (it != tk1->vid.end()) cnt -= walks(*tk1, it->second, rem);
      }
      if (offset > cnt) {
        offset -= cnt;
        return false;
      }
      out.push_back(idx);
      if (idx == k) contains = true;
      cur = tgt;
      return true;
    };
    if (!cur) {
      // Position 0 ranges over all edges in global index order (the
      // lexicographic order ranks against), not grouped by source vertex.
      std::vector<std::pair<Index, std::size_t>> first;
      for (std::size_t v = 0; v < tk.vertices.size(); ++v)
        first.insert(first.end(), tk.adj[v].begin(), tk.adj[v].end());
      std::sort(first.begin(), first.end());
      for (const auto& [idx, w] : first)
        if ((chosen = try_edge(idx, w))) break;
    } else {
      for (const auto& [idx, w] : tk.adj[*cur])
        if ((chosen = try_edge(idx, w))) break;
    }
    if (!chosen) throw Error("internal unranking inconsistency");
  }
  return out;
}

FinitePath Enumeration::entry_at(const Nat& i) {
  std::scoped_lock lock(mu_);
  if (i < 1) throw Error("entry index must be >= 1");
  Index k = 1;
  while (cumulative(k) < i) {
    if (g_.finite() && k > g_.max_index() && new_in_block(k + 1, k + 1) == 0)
      throw Error("entry index exceeds the finite enumeration stream");
    if (++k > kMaxBlock)
      throw Error("entry index exceeds the feasibility guard");
  }
  Nat o = i - cumulative(k - 1);
  if (vertex_new_in_block(k)) {
    if (o == 1) return FinitePath::of_vertex(g_.resolve(k).source);
    o -= 1;
  }
  for (Index l = 1; l <= k; ++l) {
    Nat nl = new_in_block(k, l);
    if (o <= nl) return FinitePath::of_edges(unrank_new(k, l, o));
    o -= nl;
  }
  throw Error("internal block accounting inconsistency");
}

Nat Enumeration::nk(Index k) {
  std::scoped_lock lock(mu_);
  if (k < 1) throw Error("nk requires k >= 1");
  if (!g_.covered(k)) throw Error("nk: fewer than k edges");
  if (count_paths(k, k) == 0)
    throw Error("nk: no path of length k over the first k edges");
  return cumulative(k);
}

Index Enumeration::fset_max(const Nat& t) {
  std::scoped_lock lock(mu_);
  Index best = 0;
  for (Index j = 1;; ++j) {
    if (!g_.covered(j)) break;  // finite graph exhausted
    if (j > 5000)
      throw Error("F_eps threshold exceeds the feasibility guard");
    if (rank(FinitePath::of_edges({j})) > t) break;
    best = j;
  }
  return best;
}

std::vector<FinitePath> Enumeration::stream_prefix(std::size_t n) {
  std::vector<FinitePath> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(entry_at(Nat(i)));
  return out;
}

}  // namespace shadow

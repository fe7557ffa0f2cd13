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

// Shared test utilities: random eventually periodic paths, random chains at
// a declared threshold, the enumeration-scan distance oracle, a direct
// bounded wandering check, and small presentation generators.

#ifndef SHADOW_TESTS_HELPERS_HPP_
#define SHADOW_TESTS_HELPERS_HPP_

#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "shadow/dynamics.hpp"
#include "shadow/metric.hpp"
#include "shadow/parse.hpp"
#include "shadow/symbolic.hpp"

namespace shadow_test {

using namespace shadow;

// Adjacency of the truncation at kmax, for random walks.
inline std::map<Vertex, std::vector<Index>> adjacency(
    const GraphPresentation& g, Index kmax) {
  std::map<Vertex, std::vector<Index>> adj;
  FiniteGraph fg = g.truncate(kmax);
  for (const auto& e : fg.edges) adj[e.source].push_back(e.index);
  return adj;
}

// Random eventually periodic path over edges <= kmax with a prefix of at
// most max_prefix edges. Walks until a vertex repeats, then closes the loop.
inline std::optional<InfinitePath> random_periodic_path(
    const GraphPresentation& g, std::mt19937& rng, Index kmax,
    std::size_t max_prefix, std::size_t max_cycle) {
  auto adj = adjacency(g, kmax);
  if (adj.empty()) return std::nullopt;
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto it = adj.begin();
    std::advance(it, rng() % adj.size());
    Vertex cur = it->first;
    std::size_t pre_target = rng() % (max_prefix + 1);
    std::vector<Index> edges;
    std::map<Vertex, std::size_t> seen;
    bool ok = false;
    for (std::size_t step = 0; step < max_prefix + max_cycle + 16; ++step) {
      if (edges.size() >= pre_target) {
        auto s = seen.find(cur);
        if (s != seen.end() && edges.size() - s->second <= max_cycle &&
            edges.size() > s->second) {
          std::vector<Index> pre(edges.begin(), edges.begin() + s->second);
          std::vector<Index> cyc(edges.begin() + s->second, edges.end());
          return InfinitePath(g, pre, cyc);
        }
        seen.emplace(cur, edges.size());
      }
      auto a = adj.find(cur);
      if (a == adj.end() || a->second.empty()) break;
      Index e = a->second[rng() % a->second.size()];
      edges.push_back(e);
      cur = g.resolve(e).range;
      (void)ok;
    }
  }
  return std::nullopt;
}

// Random valid chain x^1..x^m at delta = 2^(-N(k)): each element reroutes
// the shift of the previous one after an agreement window whose rank already
// exceeds N(k), so validity is forced by prefix-rank monotonicity, and the
// chain is first-symbol-linked by construction.
inline std::optional<Chain> random_chain(Enumeration& en, Index k,
                                         std::size_t m, std::mt19937& rng,
                                         Index kmax) {
  const GraphPresentation& g = en.graph();
  Nat t = en.nk(k);
  auto adj = adjacency(g, kmax);
  auto first = random_periodic_path(g, rng, kmax, 4, 4);
  if (!first) return std::nullopt;
  Chain c;
  c.delta_exp = t;
  c.elements.push_back(*first);
  for (std::size_t n = 2; n <= m; ++n) {
    InfinitePath s = c.elements.back().shifted(1);
    std::vector<Index> keep;
    bool found = false;
    for (std::size_t J = 1; J <= 64; ++J) {
      keep.push_back(s.at(J));
      if (en.rank(FinitePath::of_edges(keep)) > t) {
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
    // Random continuation closed into a cycle.
    bool built = false;
    for (int attempt = 0; attempt < 64 && !built; ++attempt) {
      std::vector<Index> edges = keep;
      Vertex cur = g.resolve(edges.back()).range;
      std::map<Vertex, std::size_t> seen;
      for (std::size_t step = 0; step < 48; ++step) {
        auto it = seen.find(cur);
        if (it != seen.end() && edges.size() > it->second) {
          std::vector<Index> pre(edges.begin(), edges.begin() + it->second);
          std::vector<Index> cyc(edges.begin() + it->second, edges.end());
          c.elements.push_back(InfinitePath(g, pre, cyc));
          built = true;
          break;
        }
        seen.emplace(cur, edges.size());
        auto a = adj.find(cur);
        if (a == adj.end() || a->second.empty()) break;
        Index e = a->second[rng() % a->second.size()];
        edges.push_back(e);
        cur = g.resolve(e).range;
      }
    }
    if (!built) return std::nullopt;
  }
  return c;
}

// Whether enumeration entry p is an initial segment of the given path. A
// vertex entry is an initial segment exactly when it is the source.
inline bool entry_initial(const GraphPresentation& g, const FinitePath& p,
                          const InfinitePath& x) {
  if (p.is_vertex()) return x.source(g) == *p.vertex;
  for (std::size_t i = 0; i < p.edges.size(); ++i)
    if (x.at(i + 1) != p.edges[i]) return false;
  return true;
}

inline bool entry_initial(const GraphPresentation& g, const FinitePath& p,
                          const FinitePath& x) {
  if (p.is_vertex()) return x.source(g) == *p.vertex;
  if (p.edges.size() > x.edges.size()) return false;
  for (std::size_t i = 0; i < p.edges.size(); ++i)
    if (x.edges[i] != p.edges[i]) return false;
  return true;
}

// Scan oracle: rank of the first enumeration entry that is an initial
// segment of exactly one argument, searching the first `entries.size()`
// entries only.
template <typename X, typename Y>
std::optional<std::size_t> scan_distinguishing_rank(
    const GraphPresentation& g, const std::vector<FinitePath>& entries,
    const X& x, const Y& y) {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entry_initial(g, entries[i], x) != entry_initial(g, entries[i], y))
      return i + 1;
  return std::nullopt;
}

// Direct bounded check of the wandering condition: for every eps threshold
// t_e <= t_max there must be a delta threshold t_d <= t_max such that no
// path of length <= len_max over the truncation at kmax starts outside
// F_delta and ends inside F_eps.
inline Ternary direct_wandering(Enumeration& en, const Nat& t_max,
                                std::size_t len_max, Index kmax) {
  const GraphPresentation& g = en.graph();
  auto adj = adjacency(g, kmax);
  for (Nat te = 1; te <= t_max; ++te) {
    Index fe = en.fset_max(te);
    if (fe == 0) continue;
    bool have_delta = false;
    for (Nat td = te; td <= t_max && !have_delta; ++td) {
      Index fd = en.fset_max(td);
      // Level BFS with a visited set: a violation is a path of length
      // <= len_max whose first edge is outside F_delta and whose last edge
      // lies in F_eps. Since F_eps is contained in F_delta, the start edge
      // itself never qualifies.
      bool violation = false;
      std::set<Vertex> visited;
      std::vector<Vertex> frontier;
      for (const auto& [v, outs] : adj) {
        (void)v;
        for (Index h : outs)
          if (h > fd && visited.insert(g.resolve(h).range).second)
            frontier.push_back(g.resolve(h).range);
      }
      for (std::size_t depth = 2; depth <= len_max && !violation; ++depth) {
        std::vector<Vertex> next;
        for (const Vertex& v : frontier) {
          auto a = adj.find(v);
          if (a == adj.end()) continue;
          for (Index e : a->second) {
            if (e <= fe) {
              violation = true;
              break;
            }
            Vertex r = g.resolve(e).range;
            if (visited.insert(r).second) next.push_back(r);
          }
          if (violation) break;
        }
        frontier = std::move(next);
      }
      if (!violation) have_delta = true;
    }
    if (!have_delta) return Ternary::No;
  }
  return Ternary::Yes;
}

// Pool of affine presentations inside the decidable fragment, generated
// from parameterized shapes.
inline std::vector<std::string> scheme_presentations(std::size_t count,
                                                     std::mt19937& rng) {
  std::vector<std::string> out;
  std::size_t id = 0;
  auto add = [&](const std::string& body) {
    std::ostringstream os;
    os << "graph scheme" << id++ << "\n" << body;
    try {
      parse_graph(os.str());
      out.push_back(os.str());
    } catch (const Error&) {
    }
  };
  while (out.size() < count) {
    int c = 1 + static_cast<int>(rng() % 3);
    int shape = static_cast<int>(rng() % 7);
    std::ostringstream b;
    switch (shape) {
      case 0:  // ascending line, stride c
        b << "family k >= 1: edge e[k] from u[k] to u[k+" << c << "]\n";
        break;
      case 1:  // rose
        b << "family k >= 1: edge e[k] from v1 to v1\n";
        break;
      case 2:  // follower-like funnel
        b << "edge e1 from u1 to u1\n"
          << "family k >= 2: edge e[k] from u[k] to u1\n";
        break;
      case 3:  // descending chain with a low loop
        b << "edge e1 from v1 to v1\n"
          << "family k >= 2: edge e[k] from v[k] to v[k-1]\n";
        break;
      case 4:  // renewal-like
        b << "edge e1 from u1 to u1\n"
          << "family k >= 1: edge e[2*k] from u[k+1] to u[k]\n"
          << "family k >= 1: edge e[2*k+1] from u1 to u[k+1]\n";
        break;
      case 5:  // alternating petals and an ascending line
        b << "family k >= 1: edge e[2*k-1] from v1 to v1\n"
          << "family k >= 1: edge e[2*k] from u[k] to u[k+" << c << "]\n";
        break;
      default:  // two interleaved ascending lines
        b << "family k >= 1: edge e[2*k-1] from u[k] to u[k+1]\n"
          << "family k >= 1: edge e[2*k] from v[k] to v[k+" << c << "]\n";
        break;
    }
    add(b.str());
  }
  return out;
}

// Random finite presentation without sinks, at most max_edges edges.
inline std::string random_finite_presentation(std::mt19937& rng,
                                              Index max_edges) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    Index nv = 1 + rng() % 3;
    Index ne = 2 + rng() % (max_edges - 1);
    std::ostringstream os;
    os << "graph rnd\n";
    for (Index i = 1; i <= ne; ++i)
      os << "edge e" << i << " from u" << (1 + rng() % nv) << " to u"
         << (1 + rng() % nv) << "\n";
    try {
      GraphPresentation g = parse_graph(os.str());
      if (g.validate_no_sinks().verdict == SinkVerdict::Valid)
        return os.str();
    } catch (const Error&) {
    }
  }
  throw Error("could not generate a finite no-sink presentation");
}

}  // namespace shadow_test

#endif  // SHADOW_TESTS_HELPERS_HPP_

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

#include "shadow/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace shadow {

namespace {

// lcm of all family edge coefficients, used for periodic coverage checks.
Index coefficient_lcm(const std::vector<Family>& families) {
  Index l = 1;
  for (const auto& f : families) {
    if (f.edge.a >= 1) l = std::lcm(l, f.edge.a);
    if (l > 1'000'000) break;  // coverage check bound; coefficients are tiny
  }
  return l;
}

}  // namespace

void GraphPresentation::finalize(bool allow_unknown_sinks) {
  std::sort(exceptional.begin(), exceptional.end(),
            [](const Edge& x, const Edge& y) { return x.index < y.index; });
  families_all_bounded_ = true;
  for (const auto& f : families) {
    if (f.edge.a < 1)
      throw Error("family edge-index coefficient must be >= 1");
    if (f.edge.eval(f.lo) < 1)
      throw Error("family edge-index form is not positive at n = " +
                  std::to_string(f.lo));
    if (!f.source.concrete() && f.source.idx.eval(f.lo) < 1)
      throw Error("family source subscript is not positive at n = " +
                  std::to_string(f.lo));
    if (!f.range.concrete() && f.range.idx.eval(f.lo) < 1)
      throw Error("family range subscript is not positive at n = " +
                  std::to_string(f.lo));
    if (f.hi && *f.hi < f.lo)
      throw Error("family upper bound below lower bound");
    if (!f.hi) families_all_bounded_ = false;
  }
  check_coverage();
  SinkReport sinks = validate_no_sinks();
  if (sinks.verdict == SinkVerdict::Invalid)
    throw Error("sink detected: vertex " + sinks.witness->str() +
                " is a range but never a source");
  if (sinks.verdict == SinkVerdict::Unknown && !allow_unknown_sinks)
    throw Error(
        "no-sink validation undecided for this presentation (outside the "
        "affine decision fragment); pass the override to proceed");
}

void GraphPresentation::check_coverage() const {
  // Pairwise disjointness and gap detection are checked concretely over a
  // window [1, B] that is large enough to be conclusive for affine index
  // forms, plus a periodicity argument beyond it.
  Index max_offset = 0;
  for (const auto& e : exceptional) {
    if (e.index < 1) throw Error("edge index must be >= 1");
    max_offset = std::max(max_offset, e.index);
  }
  for (const auto& f : families) {
    max_offset = std::max(max_offset, std::max<Index>(f.edge.eval(f.lo), 0));
    if (f.hi) max_offset = std::max(max_offset, f.edge.eval(*f.hi));
  }
  Index period = coefficient_lcm(families);
  Index window = max_offset + 2 * period + 2;

  std::vector<int> owners(static_cast<std::size_t>(window) + 1, 0);
  for (const auto& e : exceptional) {
    if (++owners[static_cast<std::size_t>(e.index)] > 1)
      throw Error("edge index " + std::to_string(e.index) +
                  " covered more than once");
  }
  for (const auto& f : families) {
    for (Index n = f.lo;; ++n) {
      if (f.hi && n > *f.hi) break;
      Index k = f.edge.eval(n);
      if (k > window) break;
      if (++owners[static_cast<std::size_t>(k)] > 1)
        throw Error("edge index " + std::to_string(k) +
                    " covered more than once");
    }
  }
  // Beyond the window, distinct unbounded families occupy residue classes of
  // the common period; verify disjointness on one full period past it.
  for (std::size_t i = 0; i < families.size(); ++i) {
    for (std::size_t j = i + 1; j < families.size(); ++j) {
      const Family &f = families[i], &g = families[j];
      if (f.hi || g.hi) continue;  // bounded overlap caught in the window
      Index l = std::lcm(f.edge.a, g.edge.a);
      for (Index k = window + 1; k <= window + l; ++k)
        if (f.param_for(k) && g.param_for(k))
          throw Error("families overlap at edge index " + std::to_string(k));
    }
  }
  if (finite()) {
    Index mx = max_index();
    for (Index k = 1; k <= mx; ++k)
      if (!covered(k))
        throw Error("gap in edge-index coverage: index " + std::to_string(k) +
                    " uncovered below max index " + std::to_string(mx));
  } else {
    // Cofinite coverage: indices must be covered for all k >= 1. Check a
    // window concretely; beyond it coverage is periodic in the lcm.
    for (Index k = 1; k <= window; ++k)
      if (!covered(k))
        throw Error("gap in edge-index coverage: index " + std::to_string(k) +
                    " uncovered");
    for (Index k = window + 1; k <= window + period; ++k)
      if (!covered(k))
        throw Error("gap in edge-index coverage: index " + std::to_string(k) +
                    " uncovered (periodic tail)");
  }
}

Index GraphPresentation::max_index() const {
  if (!finite()) throw Error("max_index on an infinite presentation");
  Index mx = 0;
  for (const auto& e : exceptional) mx = std::max(mx, e.index);
  for (const auto& f : families) mx = std::max(mx, f.edge.eval(*f.hi));
  return mx;
}

bool GraphPresentation::covered(Index k) const {
  if (k < 1) return false;
  for (const auto& e : exceptional)
    if (e.index == k) return true;
  for (const auto& f : families)
    if (f.param_for(k)) return true;
  return false;
}

Edge GraphPresentation::resolve(Index k) const {
  for (const auto& e : exceptional)
    if (e.index == k) return e;
  for (const auto& f : families)
    if (auto n = f.param_for(k)) return f.at(*n);
  throw Error("edge index " + std::to_string(k) + " not covered by graph '" +
              name + "'");
}

EdgeSet GraphPresentation::out_edges(const Vertex& v) const {
  EdgeSet set;
  for (const auto& e : exceptional)
    if (e.source == v) set.exceptional.push_back(e.index);
  for (std::size_t i = 0; i < families.size(); ++i) {
    const Family& f = families[i];
    const VTerm& t = f.source;
    if (t.concrete()) {
      if (t.at(0) == v) set.slices.push_back({i, f.lo, f.hi});
    } else if (t.series == v.series && v.sub > 0) {
      Index d = v.sub - t.idx.b;
      if (t.idx.a != 0 && d % t.idx.a == 0) {
        Index n = d / t.idx.a;
        if (f.admissible(n)) set.slices.push_back({i, n, n});
      }
    }
  }
  return set;
}

EdgeSet GraphPresentation::in_edges(const Vertex& v) const {
  EdgeSet set;
  for (const auto& e : exceptional)
    if (e.range == v) set.exceptional.push_back(e.index);
  for (std::size_t i = 0; i < families.size(); ++i) {
    const Family& f = families[i];
    const VTerm& t = f.range;
    if (t.concrete()) {
      if (t.at(0) == v) set.slices.push_back({i, f.lo, f.hi});
    } else if (t.series == v.series && v.sub > 0) {
      Index d = v.sub - t.idx.b;
      if (t.idx.a != 0 && d % t.idx.a == 0) {
        Index n = d / t.idx.a;
        if (f.admissible(n)) set.slices.push_back({i, n, n});
      }
    }
  }
  return set;
}

EdgeSet GraphPresentation::followers(Index k) const {
  return out_edges(resolve(k).range);
}

FiniteGraph GraphPresentation::truncate(Index k) const {
  if (k < 1) throw Error("truncate requires k >= 1");
  if (finite()) k = std::min(k, max_index());
  FiniteGraph fg;
  std::set<Vertex> verts;
  for (Index i = 1; i <= k; ++i) {
    Edge e = resolve(i);
    verts.insert(e.source);
    verts.insert(e.range);
    fg.edges.push_back(e);
  }
  fg.vertices.assign(verts.begin(), verts.end());
  return fg;
}

bool GraphPresentation::is_path(const std::vector<Index>& edges) const {
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    if (resolve(edges[i]).range != resolve(edges[i + 1]).source) return false;
  if (!edges.empty()) resolve(edges.back());  // force coverage check
  return true;
}

std::optional<Index> GraphPresentation::min_out_index(const Vertex& v) const {
  std::optional<Index> best;
  EdgeSet set = out_edges(v);
  for (Index k : set.exceptional)
    if (!best || k < *best) best = k;
  for (const auto& s : set.slices) {
    Index k = families[s.family].edge.eval(s.n_lo);
    if (!best || k < *best) best = k;
  }
  return best;
}

std::vector<Index> GraphPresentation::members_upto(const EdgeSet& set,
                                                   Index max_idx) const {
  std::vector<Index> out;
  for (Index k : set.exceptional)
    if (k <= max_idx) out.push_back(k);
  for (const auto& s : set.slices) {
    const Family& f = families[s.family];
    for (Index n = s.n_lo;; ++n) {
      if (s.n_hi && n > *s.n_hi) break;
      Index k = f.edge.eval(n);
      if (k > max_idx) break;
      out.push_back(k);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool GraphPresentation::set_has_index_above(const EdgeSet& set,
                                            Index k) const {
  for (Index e : set.exceptional)
    if (e > k) return true;
  for (const auto& s : set.slices) {
    const Family& f = families[s.family];
    if (s.infinite()) return true;  // indices unbounded along the slice
    if (f.edge.eval(*s.n_hi) > k) return true;
  }
  return false;
}

SinkReport GraphPresentation::validate_no_sinks() const {
  // Every vertex that occurs as a range must emit at least one edge. Concrete
  // ranges are checked directly; series ranges are checked on a sample window
  // plus a periodicity argument (affine forms repeat their divisibility
  // pattern with period lcm of the coefficients involved).
  auto emits = [&](const Vertex& v) { return !out_edges(v).empty(); };

  for (const auto& e : exceptional)
    if (!emits(e.range)) return {SinkVerdict::Invalid, e.range};

  for (const auto& f : families) {
    if (f.range.concrete()) {
      Vertex v = f.range.at(0);
      if (!emits(v)) return {SinkVerdict::Invalid, v};
      continue;
    }
    // Series range: subscripts form the affine progression
    // {f.range.idx.eval(n) : n admissible}. Emission of a series vertex is
    // governed by divisibility conditions that are periodic in the subscript,
    // so checking lo..lo+window with window >= one full period is conclusive.
    Index period = 1;
    for (const auto& g : families) {
      if (!g.source.concrete() && g.source.series == f.range.series &&
          g.source.idx.a != 0)
        period = std::lcm(period, g.source.idx.a);
      if (period > 100000) return {SinkVerdict::Unknown, std::nullopt};
    }
    period = std::lcm(period, f.range.idx.a == 0 ? 1 : f.range.idx.a);
    Index max_b = 0;
    for (const auto& g : families)
      if (!g.source.concrete())
        max_b = std::max({max_b, std::abs(g.source.idx.b),
                          std::abs(g.source.idx.a) * std::abs(g.lo)});
    Index span = period + max_b + 2;
    for (Index n = f.lo; n <= f.lo + span; ++n) {
      if (f.hi && n > *f.hi) break;
      Vertex v = f.range.at(n);
      if (!emits(v)) return {SinkVerdict::Invalid, v};
    }
  }
  return {SinkVerdict::Valid, std::nullopt};
}

}  // namespace shadow

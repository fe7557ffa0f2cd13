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

#include "shadow/shadowing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "shadow/metric.hpp"
#include "shadow/parse.hpp"

namespace shadow {
namespace {

using nlohmann::json;

constexpr std::size_t kNodeBudget = 200000;
constexpr std::size_t kFrontierCap = 512;
constexpr std::size_t kTransCap = 128;
constexpr Index kBoundedSliceCap = 256;
constexpr std::size_t kWalkCap = 4096;
constexpr Index kPeriodProbeSamples = 5;
constexpr Index kQ0Cap = 64;

// ---------------------------------------------------------------------------
// Candidate enumeration for unpinned slots.

struct CandSet {
  std::vector<Index> edges;
  bool uniform = true;  // omitted slice members are interchangeable
};

// Members of `set` with index > lo_excl: everything up to `cutoff`
// explicitly, plus `reps` representatives per slice extending beyond it.
// The omitted members of a slice are interchangeable with the kept ones
// exactly when the far endpoint of the slice is one fixed vertex (the near
// endpoint is the queried vertex by construction of out/in edge sets); any
// path through an omitted member has the same pinned/unpinned behaviour as
// the same path through a representative, because all indices beyond the
// cutoff exceed every referenced symbol and every F_eps bound.
CandSet slot_candidates(const GraphPresentation& g, const EdgeSet& set,
                        Index lo_excl, Index cutoff, Index reps,
                        bool forward) {
  CandSet out;
  for (Index e : g.members_upto(set, cutoff))
    if (e > lo_excl) out.edges.push_back(e);
  for (const auto& s : set.slices) {
    const Family& fam = g.families[s.family];
    Index lo = s.n_lo;
    if (fam.edge.eval(lo) <= cutoff) {
      Index d = cutoff + 1 - fam.edge.b;
      Index n = (d + fam.edge.a - 1) / fam.edge.a;
      lo = std::max(lo, n);
    }
    if (s.n_hi && lo > *s.n_hi) continue;  // slice lies fully below cutoff
    Index take = reps;
    bool truncated = true;
    if (s.n_hi) {
      Index count = *s.n_hi - lo + 1;
      if (count <= kBoundedSliceCap) {
        take = count;
        truncated = false;
      }
    }
    for (Index i = 0; i < take; ++i) {
      Index n = lo + i;
      if (s.n_hi && n > *s.n_hi) {
        truncated = false;
        break;
      }
      Index e = fam.edge.eval(n);
      if (e > lo_excl) out.edges.push_back(e);
    }
    if (truncated) {
      const VTerm& far = forward ? fam.range : fam.source;
      if (!far.concrete()) out.uniform = false;
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()),
                  out.edges.end());
  return out;
}

EdgeSet whole_graph_set(const GraphPresentation& g) {
  EdgeSet s;
  for (const auto& e : g.exceptional) s.exceptional.push_back(e.index);
  for (std::size_t i = 0; i < g.families.size(); ++i)
    s.slices.push_back(FamilySlice{i, g.families[i].lo, g.families[i].hi});
  return s;
}

// ---------------------------------------------------------------------------
// Slot problems: a finite run of slots, optionally followed by a periodic
// pattern repeated forever. Each slot is pinned to one symbol (the symbol
// lies in F_eps) or unpinned (any symbol outside F_eps).

struct Slot {
  bool pinned = false;
  Index sym = 0;
};

class SlotEngine {
 public:
  SlotEngine(Enumeration& en, std::vector<Slot> fin, std::vector<Slot> cyc,
             Index fmax, Index cutoff, const SearchBounds& b)
      : en_(en),
        g_(en.graph()),
        finite_(std::move(fin)),
        cycle_(std::move(cyc)),
        fmax_(fmax),
        cutoff_(std::max(cutoff, fmax)),
        bounds_(b) {}

  InstanceResult run() {
    if (cycle_.empty()) return run_finite();
    return run_periodic();
  }

 private:
  static bool any_pinned(const std::vector<Slot>& v) {
    return std::any_of(v.begin(), v.end(),
                       [](const Slot& s) { return s.pinned; });
  }

  // Depth-first fill of the finite region; emit() receives the end vertex of
  // every complete assignment held in x_.
  void dfs(const std::function<void(const Vertex&)>& emit) {
    std::size_t L = finite_.size();
    x_.assign(L, 0);
    std::size_t anchor = 0;  // 1-based; 0 = none
    for (std::size_t p = 1; p <= L; ++p)
      if (finite_[p - 1].pinned) {
        anchor = p;
        break;
      }

    std::function<void(std::size_t, Vertex)> fwd = [&](std::size_t p,
                                                       Vertex v) {
      if (stop_) return;
      if (budget_ == 0) {
        budget_blown_ = true;
        return;
      }
      --budget_;
      if (p > L) {
        emit(v);
        return;
      }
      const Slot& s = finite_[p - 1];
      if (s.pinned) {
        Edge e = g_.resolve(s.sym);
        if (!(e.source == v)) return;
        x_[p - 1] = s.sym;
        fwd(p + 1, e.range);
      } else {
        CandSet cs =
            slot_candidates(g_, g_.out_edges(v), fmax_, cutoff_,
                            bounds_.max_family_reps, /*forward=*/true);
        if (!cs.uniform) uniform_ = false;
        for (Index c : cs.edges) {
          if (stop_) return;
          x_[p - 1] = c;
          fwd(p + 1, g_.resolve(c).range);
        }
      }
    };

    std::function<void(std::size_t, Vertex)> back = [&](std::size_t p,
                                                        Vertex need) {
      if (stop_) return;
      if (p == 0) {
        fwd(anchor + 1, g_.resolve(x_[anchor - 1]).range);
        return;
      }
      if (budget_ == 0) {
        budget_blown_ = true;
        return;
      }
      --budget_;
      const Slot& s = finite_[p - 1];
      if (s.pinned) {
        Edge e = g_.resolve(s.sym);
        if (!(e.range == need)) return;
        x_[p - 1] = s.sym;
        back(p - 1, e.source);
      } else {
        CandSet cs =
            slot_candidates(g_, g_.in_edges(need), fmax_, cutoff_,
                            bounds_.max_family_reps, /*forward=*/false);
        if (!cs.uniform) uniform_ = false;
        for (Index c : cs.edges) {
          if (stop_) return;
          x_[p - 1] = c;
          back(p - 1, g_.resolve(c).source);
        }
      }
    };

    if (anchor != 0) {
      const Slot& s = finite_[anchor - 1];
      Edge e = g_.resolve(s.sym);
      x_[anchor - 1] = s.sym;
      if (anchor == L && L == 1) {
        emit(e.range);
      } else {
        back(anchor - 1, e.source);
      }
    } else if (g_.finite()) {
      for (Index e = 1; e <= g_.max_index(); ++e) {
        if (stop_) return;
        if (e <= fmax_ || !g_.covered(e)) continue;
        x_[0] = e;
        fwd(2, g_.resolve(e).range);
      }
    } else {
      // No anchor on an infinite graph: start from representatives only.
      uniform_ = false;
      CandSet cs = slot_candidates(g_, whole_graph_set(g_), fmax_, cutoff_,
                                   bounds_.max_family_reps, /*forward=*/true);
      for (Index e : cs.edges) {
        if (stop_) return;
        x_[0] = e;
        fwd(2, g_.resolve(e).range);
      }
    }
  }

  InstanceResult run_finite() {
    InstanceResult r;
    if (finite_.empty()) {
      r.detail = "empty slot problem";
      return r;
    }
    std::vector<Index> witness;
    dfs([&](const Vertex&) {
      witness = x_;
      stop_ = true;
    });
    if (!witness.empty()) {
      r.kind = InstanceResult::Kind::Witness;
      r.finite_witness = FinitePath::of_edges(witness);
      r.exhaustive = true;
      return r;
    }
    r.kind = InstanceResult::Kind::Failure;
    r.exhaustive = uniform_ && !budget_blown_;
    if (!r.exhaustive)
      r.detail = budget_blown_ ? "search budget exhausted"
                               : "slice representatives not interchangeable";
    return r;
  }

  InstanceResult run_periodic() {
    InstanceResult r;
    if (!any_pinned(finite_) && !any_pinned(cycle_)) {
      // Every residual infinite path prefixed by enough residual edges is a
      // witness, so the instance reduces to global residual analysis.
      ResidualReport rr = residual_infinite_paths(g_, fmax_);
      switch (rr.kind) {
        case ResidualReport::Kind::NoInfinitePath:
          r.kind = InstanceResult::Kind::Failure;
          r.exhaustive = true;
          r.detail = rr.detail;
          return r;
        case ResidualReport::Kind::HasCycle:
          r.kind = InstanceResult::Kind::Witness;
          r.infinite_witness = rr.cycle_witness;
          r.exhaustive = true;
          r.detail = rr.detail;
          return r;
        case ResidualReport::Kind::HasRay:
          r.kind = InstanceResult::Kind::Witness;
          r.exhaustive = true;
          r.detail =
              "witness exists but is not eventually periodic: " + rr.detail;
          return r;
        default:
          r.detail = rr.detail;
          return r;
      }
    }

    if (finite_.empty()) {
      // Anchor inside the pattern: unroll one period into the finite region.
      finite_ = cycle_;
    }

    // Frontier: end vertices of finite-region assignments, one witness
    // prefix kept per vertex (later slots depend only on the vertex).
    std::map<Vertex, std::vector<Index>> frontier;
    bool overflow = false;
    dfs([&](const Vertex& v) {
      if (frontier.count(v)) return;
      if (frontier.size() >= kFrontierCap) {
        overflow = true;
        stop_ = true;
        return;
      }
      frontier[v] = x_;
    });
    bool clean = uniform_ && !budget_blown_ && !overflow;

    if (frontier.empty()) {
      r.kind = InstanceResult::Kind::Failure;
      r.exhaustive = clean;
      r.detail = "no admissible finite part";
      return r;
    }

    if (!any_pinned(cycle_)) {
      bool indefinite = false;
      for (const auto& [v, x] : frontier) {
        AliveReport ar = residual_alive_from(g_, v, fmax_);
        if (!ar.definite) {
          indefinite = true;
          continue;
        }
        if (!ar.alive) continue;
        r.kind = InstanceResult::Kind::Witness;
        r.exhaustive = true;
        if (ar.witness) {
          std::vector<Index> pre = x;
          pre.insert(pre.end(), ar.witness->prefix().begin(),
                     ar.witness->prefix().end());
          r.infinite_witness = InfinitePath(g_, pre, ar.witness->cycle());
        } else {
          r.detail = "witness exists but is not eventually periodic: " +
                     ar.detail;
        }
        return r;
      }
      if (indefinite) {
        r.kind = InstanceResult::Kind::Unknown;
        r.detail = "residual liveness undecided at a frontier vertex";
        return r;
      }
      r.kind = InstanceResult::Kind::Failure;
      r.exhaustive = clean;
      r.detail = "no residual continuation from any frontier vertex";
      return r;
    }

    return lasso_search(frontier, clean);
  }

  // One period of the pattern from entry vertex v: complete assignments of
  // the cycle slots, as (edges, exit vertex) pairs.
  const std::vector<std::pair<std::vector<Index>, Vertex>>& transitions(
      const Vertex& v) {
    auto it = trans_.find(v);
    if (it != trans_.end()) return it->second;
    auto& out = trans_[v];
    std::vector<Index> cur;
    std::function<void(std::size_t, Vertex)> go = [&](std::size_t p,
                                                      Vertex w) {
      if (out.size() >= kTransCap) {
        uniform_ = false;
        return;
      }
      if (p > cycle_.size()) {
        out.emplace_back(cur, w);
        return;
      }
      const Slot& s = cycle_[p - 1];
      if (s.pinned) {
        Edge e = g_.resolve(s.sym);
        if (!(e.source == w)) return;
        cur.push_back(s.sym);
        go(p + 1, e.range);
        cur.pop_back();
      } else {
        CandSet cs =
            slot_candidates(g_, g_.out_edges(w), fmax_, cutoff_,
                            bounds_.max_family_reps, /*forward=*/true);
        if (!cs.uniform) uniform_ = false;
        for (Index c : cs.edges) {
          cur.push_back(c);
          go(p + 1, g_.resolve(c).range);
          cur.pop_back();
        }
      }
    };
    go(1, v);
    return out;
  }

  InstanceResult lasso_search(
      const std::map<Vertex, std::vector<Index>>& frontier, bool clean) {
    InstanceResult r;
    std::map<Vertex, int> color;  // 0 new, 1 on stack, 2 done
    std::vector<Vertex> stack;
    std::vector<std::vector<Index>> stack_edges;  // edges taken FROM stack[i]

    std::optional<std::pair<std::vector<Index>, std::vector<Index>>> lasso;
    std::function<void(const Vertex&)> visit = [&](const Vertex& v) {
      if (lasso) return;
      color[v] = 1;
      stack.push_back(v);
      for (const auto& [edges, u] : transitions(v)) {
        if (lasso) break;
        int cu = color.count(u) ? color[u] : 0;
        if (cu == 1) {
          // Lasso: locate u on the stack and split prefix/cycle.
          std::size_t pos = 0;
          while (!(stack[pos] == u)) ++pos;
          std::vector<Index> pre, cyc;
          for (std::size_t i = 0; i < pos; ++i)
            pre.insert(pre.end(), stack_edges[i].begin(),
                       stack_edges[i].end());
          for (std::size_t i = pos; i + 1 < stack.size(); ++i)
            cyc.insert(cyc.end(), stack_edges[i].begin(),
                       stack_edges[i].end());
          cyc.insert(cyc.end(), edges.begin(), edges.end());
          lasso = {{pre, cyc}};
          break;
        }
        if (cu == 0) {
          stack_edges.push_back(edges);
          visit(u);
          stack_edges.pop_back();
        }
      }
      stack.pop_back();
      color[v] = 2;
    };

    for (const auto& [v, x] : frontier) {
      if (color.count(v) && color[v] != 0) continue;
      stack.clear();
      stack_edges.clear();
      visit(v);
      if (lasso) {
        std::vector<Index> pre = x;
        pre.insert(pre.end(), lasso->first.begin(), lasso->first.end());
        r.kind = InstanceResult::Kind::Witness;
        r.infinite_witness = InfinitePath(g_, pre, lasso->second);
        r.exhaustive = true;
        return r;
      }
    }
    r.kind = InstanceResult::Kind::Failure;
    r.exhaustive = uniform_ && clean;
    if (!r.exhaustive) r.detail = "periodic state graph exploration capped";
    return r;
  }

  Enumeration& en_;
  const GraphPresentation& g_;
  std::vector<Slot> finite_;
  std::vector<Slot> cycle_;
  Index fmax_;
  Index cutoff_;
  SearchBounds bounds_;

  std::vector<Index> x_;
  std::size_t budget_ = kNodeBudget;
  bool budget_blown_ = false;
  bool uniform_ = true;
  bool stop_ = false;
  std::map<Vertex, std::vector<std::pair<std::vector<Index>, Vertex>>> trans_;
};

Index family_max_symbol(const PathFamily& fam) {
  Index m = 0;
  for (const auto& p : fam.paths)
    for (Index e : p.edges) m = std::max(m, e);
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Instance checkers.

InstanceResult check_fpc_instance(Enumeration& en, const PathFamily& family,
                                  const Nat& eps_exp, const Nat& delta_exp,
                                  const SearchBounds& bounds) {
  InstanceResult r;
  if (delta_exp < eps_exp) {
    r.kind = InstanceResult::Kind::InvalidFamily;
    r.detail = "delta must be at most eps (delta_exp >= eps_exp)";
    return r;
  }
  if (auto diag = check_family_fpc(en, family, delta_exp)) {
    r.kind = InstanceResult::Kind::InvalidFamily;
    r.detail = *diag;
    return r;
  }
  Index fmax = en.fset_max(eps_exp);
  Index cutoff = std::max(fmax, family_max_symbol(family));
  auto lengths = family.lengths();
  Nat total = 0;
  for (auto l : lengths) total += l;
  Nat L = total - Nat(lengths.size()) + 1;
  std::vector<Slot> slots;
  for (Nat j = 1; j <= L; ++j) {
    auto [i, n] = f_inverse(lengths, j);
    Index sym = family.paths[i - 1].edges[n - 1];
    slots.push_back(Slot{sym <= fmax, sym});
  }
  return SlotEngine(en, std::move(slots), {}, fmax, cutoff, bounds).run();
}

InstanceResult check_ipc2_instance(Enumeration& en, const PathFamily& family,
                                   const InfinitePath& gamma,
                                   const Nat& eps_exp, const Nat& delta_exp,
                                   const SearchBounds& bounds) {
  InstanceResult r;
  if (delta_exp < eps_exp) {
    r.kind = InstanceResult::Kind::InvalidFamily;
    r.detail = "delta must be at most eps (delta_exp >= eps_exp)";
    return r;
  }
  if (auto diag = check_family_ipc2(en, family, gamma, delta_exp)) {
    r.kind = InstanceResult::Kind::InvalidFamily;
    r.detail = *diag;
    return r;
  }
  Index fmax = en.fset_max(eps_exp);
  Index cutoff = std::max(fmax, family_max_symbol(family));
  for (Index e : gamma.prefix()) cutoff = std::max(cutoff, e);
  for (Index e : gamma.cycle()) cutoff = std::max(cutoff, e);

  std::vector<Slot> fin;
  for (const auto& p : family.paths)
    for (std::size_t n = 0; n + 1 < p.edges.size(); ++n)
      fin.push_back(Slot{p.edges[n] <= fmax, p.edges[n]});
  for (Index e : gamma.prefix()) fin.push_back(Slot{e <= fmax, e});
  std::vector<Slot> cyc;
  for (Index e : gamma.cycle()) cyc.push_back(Slot{e <= fmax, e});
  return SlotEngine(en, std::move(fin), std::move(cyc), fmax, cutoff, bounds)
      .run();
}

namespace {

// Structural validation of a periodic family against delta. Affine template
// symbols must be period boundaries (they leave F_delta from q = 0 on);
// interior template symbols must be constants inside F_delta. Junctions are
// checked on sampled parameters.
std::optional<std::string> validate_periodic(const GraphPresentation& g,
                                             const PeriodicFamily& pf,
                                             Index fmax_delta) {
  if (pf.period.empty()) return "periodic family needs a non-empty period";
  for (std::size_t i = 0; i < pf.prefix.size(); ++i) {
    const FinitePath& p = pf.prefix[i];
    if (p.length() < 2) return "every block must have length >= 2";
    if (!p.valid(g)) return "prefix block is not a path";
    for (std::size_t n = 0; n < p.edges.size(); ++n) {
      bool first = n == 0, last = n + 1 == p.edges.size();
      Index e = p.edges[n];
      if (first && i == 0) continue;  // lambda^1_1 is exempt
      if (first || last) {
        if (e <= fmax_delta)
          return "block boundary symbol lies inside F_delta";
      } else if (e > fmax_delta) {
        return "block interior symbol lies outside F_delta";
      }
    }
  }
  for (const auto& tpl : pf.period) {
    if (tpl.size() < 2) return "every block must have length >= 2";
    for (std::size_t n = 0; n < tpl.size(); ++n) {
      bool first = n == 0, last = n + 1 == tpl.size();
      const Affine& a = tpl[n];
      if (a.a < 0) return "template symbol with negative slope";
      if (first || last) {
        if (a.eval(0) <= fmax_delta)
          return "template boundary symbol enters F_delta";
      } else {
        if (a.a != 0) return "template interior symbol must be constant";
        if (a.b > fmax_delta)
          return "template interior symbol lies outside F_delta";
      }
    }
  }
  // Sampled well-formedness: each template instance must be a path.
  for (Index q = 0; q < kPeriodProbeSamples; ++q) {
    for (const auto& tpl : pf.period) {
      std::vector<Index> edges;
      for (const auto& a : tpl) edges.push_back(a.eval(q));
      FinitePath p = FinitePath::of_edges(edges);
      for (Index e : edges)
        if (!g.covered(e)) return "template symbol not covered by the graph";
      if (!p.valid(g)) return "template instance is not a path";
    }
  }
  return std::nullopt;
}

}  // namespace

InstanceResult check_ipc1_instance(Enumeration& en, const PeriodicFamily& pf,
                                   const Nat& eps_exp, const Nat& delta_exp,
                                   const SearchBounds& bounds) {
  InstanceResult r;
  if (delta_exp < eps_exp) {
    r.kind = InstanceResult::Kind::InvalidFamily;
    r.detail = "delta must be at most eps (delta_exp >= eps_exp)";
    return r;
  }
  const GraphPresentation& g = en.graph();
  Index fmax_delta = en.fset_max(delta_exp);
  if (auto diag = validate_periodic(g, pf, fmax_delta)) {
    r.kind = InstanceResult::Kind::InvalidFamily;
    r.detail = *diag;
    return r;
  }
  Index fmax = en.fset_max(eps_exp);

  // First parameter from which every affine template symbol leaves F_eps.
  Index q0 = 0;
  for (const auto& tpl : pf.period)
    for (const auto& a : tpl) {
      if (a.a == 0) continue;
      if (a.eval(0) > fmax) continue;
      Index q = (fmax + 1 - a.b + a.a - 1) / a.a;
      q0 = std::max(q0, q);
    }
  if (q0 > kQ0Cap) {
    r.detail = "template symbols stay inside F_eps for too long";
    return r;
  }

  Index cutoff = fmax;
  std::vector<Slot> fin;
  for (const auto& p : pf.prefix)
    for (std::size_t n = 0; n + 1 < p.edges.size(); ++n) {
      fin.push_back(Slot{p.edges[n] <= fmax, p.edges[n]});
      cutoff = std::max(cutoff, p.edges[n]);
    }
  for (Index q = 0; q < q0; ++q)
    for (const auto& tpl : pf.period)
      for (std::size_t n = 0; n + 1 < tpl.size(); ++n) {
        Index sym = tpl[n].eval(q);
        fin.push_back(Slot{sym <= fmax, sym});
        cutoff = std::max(cutoff, sym);
      }
  std::vector<Slot> cyc;
  for (const auto& tpl : pf.period)
    for (std::size_t n = 0; n + 1 < tpl.size(); ++n) {
      const Affine& a = tpl[n];
      bool pin = a.a == 0 && a.b <= fmax;
      cyc.push_back(Slot{pin, a.b});
      if (a.a == 0) cutoff = std::max(cutoff, a.b);
    }
  return SlotEngine(en, std::move(fin), std::move(cyc), fmax, cutoff, bounds)
      .run();
}

// ---------------------------------------------------------------------------
// Shadow-point search.

namespace {

std::optional<InfinitePath> greedy_close(const GraphPresentation& g,
                                         std::vector<Index> edges,
                                         Vertex cur) {
  std::map<Vertex, std::size_t> seen;
  for (std::size_t step = 0; step < kWalkCap; ++step) {
    auto it = seen.find(cur);
    if (it != seen.end()) {
      std::vector<Index> pre(edges.begin(), edges.begin() + it->second);
      std::vector<Index> cyc(edges.begin() + it->second, edges.end());
      return InfinitePath(g, std::move(pre), std::move(cyc));
    }
    seen[cur] = edges.size();
    auto mo = g.min_out_index(cur);
    if (!mo) return std::nullopt;
    edges.push_back(*mo);
    cur = g.resolve(*mo).range;
  }
  return std::nullopt;
}

}  // namespace

ShadowSearchResult search_shadow_point(Enumeration& en, const Chain& c,
                                       const Nat& eps_exp,
                                       const SearchBounds& bounds) {
  const GraphPresentation& g = en.graph();
  ShadowSearchResult res;
  if (c.elements.empty() && c.tail.empty()) {
    res.detail = "empty chain";
    return res;
  }

  if (c.infinite()) {
    // Deterministic first-symbol construction, then exact verification over
    // one full phase period of (shift offset, tail index).
    try {
      InfinitePath x = construct_shadow_infinite(en, c, 1);
      std::size_t m = c.elements.size();
      std::size_t P = std::lcm(c.tail.size(), x.cycle().size());
      std::size_t n0 = std::max(m, x.prefix().size() + 1);
      bool ok = true;
      std::size_t bad = 0;
      for (std::size_t n = 1; n <= n0 + P && ok; ++n) {
        if (!distance(en, x.shifted(n - 1), c.element(n)).below_exp(eps_exp)) {
          ok = false;
          bad = n;
        }
      }
      if (ok) {
        res.found = true;
        res.witness = x;
        res.exhaustive = true;
        return res;
      }
      std::ostringstream os;
      os << "canonical first-symbol point misses at position " << bad;
      res.detail = os.str();
    } catch (const Error& e) {
      res.detail = std::string("first-symbol construction failed: ") +
                   e.what();
    }
    return res;
  }

  // Finite chain: constraint-horizon DFS. Constraint i compares the window
  // x_i x_{i+1} ... against chain element i; once the agreed or disagreeing
  // prefix has rank beyond eps on both sides, the constraint is settled
  // whatever follows (prefix ranks only grow along extensions).
  std::size_t m = c.elements.size();
  const Nat& t = eps_exp;
  Index fmax = en.fset_max(t);
  Index cutoff = fmax;
  std::size_t depth_cap = m + static_cast<std::size_t>(bounds.max_path_len);
  for (std::size_t i = 1; i <= m; ++i) {
    const InfinitePath& y = c.elements[i - 1];
    for (Index e : y.prefix()) cutoff = std::max(cutoff, e);
    for (Index e : y.cycle()) cutoff = std::max(cutoff, e);
  }

  // Cached element prefix ranks.
  std::map<std::pair<std::size_t, std::size_t>, Nat> yrank;
  auto element_rank = [&](std::size_t i, std::size_t len) -> const Nat& {
    auto key = std::make_pair(i, len);
    auto it = yrank.find(key);
    if (it != yrank.end()) return it->second;
    std::vector<Index> e;
    for (std::size_t p = 1; p <= len; ++p)
      e.push_back(c.elements[i - 1].at(p));
    return yrank.emplace(key, en.rank(FinitePath::of_edges(e))).first->second;
  };

  enum class St { Agree, Settled };
  std::vector<Index> x;
  bool stop = false;
  std::size_t budget = kNodeBudget;
  bool exhaustive = true;

  Vertex v0 = c.elements[0].source(g);
  if (en.rank_vertex(v0) > t) exhaustive = false;  // alternative starts

  auto window_rank = [&](std::size_t i, Index last) {
    std::vector<Index> e(x.begin() + (i - 1), x.end());
    e.push_back(last);
    return en.rank(FinitePath::of_edges(e));
  };

  std::function<void(std::size_t, Vertex, std::vector<St>)> rec =
      [&](std::size_t d, Vertex v, const std::vector<St>& st) {
        if (stop) return;
        if (budget == 0) {
          exhaustive = false;
          return;
        }
        --budget;

        // Candidates: expected symbols plus everything reachable.
        std::set<Index> cands;
        for (std::size_t i = 1; i <= std::min(d, m); ++i) {
          if (i <= st.size() && st[i - 1] == St::Settled) continue;
          Index y = c.elements[i - 1].at(d - i + 1);
          if (g.resolve(y).source == v) cands.insert(y);
        }
        CandSet cs = slot_candidates(g, g.out_edges(v), 0, cutoff,
                                     bounds.max_family_reps, true);
        if (!cs.uniform) exhaustive = false;
        cands.insert(cs.edges.begin(), cs.edges.end());

        for (Index e : cands) {
          if (stop) return;
          Edge edge = g.resolve(e);
          std::vector<St> ns = st;
          ns.resize(std::min(d, m), St::Agree);
          bool dead = false;
          for (std::size_t i = 1; i <= std::min(d, m) && !dead; ++i) {
            if (ns[i - 1] == St::Settled) continue;
            std::size_t tpos = d - i + 1;
            const InfinitePath& y = c.elements[i - 1];
            if (tpos == 1) {
              Vertex ys = y.source(g);
              if (!(edge.source == ys)) {
                if (en.rank_vertex(edge.source) > t &&
                    en.rank_vertex(ys) > t) {
                  ns[i - 1] = St::Settled;
                  continue;
                }
                dead = true;
                break;
              }
            }
            Index ysym = y.at(tpos);
            if (e == ysym) {
              if (element_rank(i, tpos) > t) ns[i - 1] = St::Settled;
            } else {
              if (element_rank(i, tpos) <= t) {
                dead = true;
                break;
              }
              if (window_rank(i, e) > t)
                ns[i - 1] = St::Settled;
              else
                dead = true;
            }
          }
          if (dead) continue;
          x.push_back(e);
          bool all_settled =
              d >= m && std::all_of(ns.begin(), ns.end(), [](St s) {
                return s == St::Settled;
              });
          if (all_settled) {
            auto w = greedy_close(g, x, edge.range);
            if (w) {
              bool ok = true;
              for (std::size_t i = 1; i <= m && ok; ++i)
                ok = distance(en, w->shifted(i - 1), c.element(i))
                         .below_exp(t);
              if (ok) {
                res.found = true;
                res.witness = *w;
                stop = true;
              } else {
                exhaustive = false;
              }
            } else {
              // Settled but no eventually periodic completion reachable by
              // the canonical walk.
              exhaustive = false;
            }
          } else if (d < depth_cap) {
            rec(d + 1, edge.range, ns);
          } else {
            exhaustive = false;
          }
          x.pop_back();
        }
      };

  rec(1, v0, {});
  res.exhaustive = res.found || exhaustive;
  if (!res.found && !res.exhaustive && res.detail.empty())
    res.detail = "bounded search; no witness within limits";
  return res;
}

// ---------------------------------------------------------------------------
// Decision cascade and certificates.

std::string answer_str(Answer a) {
  switch (a) {
    case Answer::Yes:
      return "yes";
    case Answer::No:
      return "no";
    default:
      return "unknown";
  }
}

std::string rule_str(Rule r) {
  switch (r) {
    case Rule::FiniteGraph:
      return "finite-graph";
    case Rule::Wandering:
      return "wandering";
    case Rule::ECIFS:
      return "ecifs";
    case Rule::AttractorNotECIFS:
      return "attractor-not-ecifs";
    case Rule::FPCFailureInstance:
      return "fpc-failure-instance";
    case Rule::InstanceOnly:
      return "instance-only";
    default:
      return "inconclusive";
  }
}

namespace {

json bounds_json(const SearchBounds& b) {
  json j;
  j["max_path_len"] = b.max_path_len;
  j["max_family_reps"] = b.max_family_reps;
  j["max_threshold_exp"] = b.max_threshold_exp.str();
  return j;
}

std::string make_cert(const GraphPresentation& g, const char* property,
                      Answer a, Rule r, json witness, json params,
                      const SearchBounds& b,
                      std::optional<bool> exhaustive = std::nullopt) {
  json j;
  j["graph"] = g.name;
  j["property"] = property;
  j["verdict"] = answer_str(a);
  j["rule"] = rule_str(r);
  if (!witness.is_null()) j["witness"] = std::move(witness);
  if (!params.is_null()) j["parameters"] = std::move(params);
  j["bounds"] = bounds_json(b);
  if (exhaustive) j["exhaustive"] = *exhaustive;
  return j.dump();
}

std::optional<Vertex> single_concrete_vertex(const GraphPresentation& g) {
  std::optional<Vertex> v;
  auto absorb = [&](const Vertex& w) {
    if (!v) v = w;
    return *v == w;
  };
  for (const auto& e : g.exceptional)
    if (!absorb(e.source) || !absorb(e.range)) return std::nullopt;
  for (const auto& f : g.families) {
    if (!f.source.concrete() || !f.range.concrete()) return std::nullopt;
    if (!absorb(f.source.at(f.lo)) || !absorb(f.range.at(f.lo)))
      return std::nullopt;
  }
  return v;
}

std::optional<Index> least_out_above(const GraphPresentation& g,
                                     const Vertex& v, Index above) {
  EdgeSet s = g.out_edges(v);
  std::optional<Index> best;
  for (Index e : s.exceptional)
    if (e > above && (!best || e < *best)) best = e;
  for (const auto& sl : s.slices) {
    const Family& f = g.families[sl.family];
    Index lo = sl.n_lo;
    if (f.edge.eval(lo) <= above) {
      Index d = above + 1 - f.edge.b;
      lo = std::max(lo, (d + f.edge.a - 1) / f.edge.a);
    }
    if (sl.n_hi && lo > *sl.n_hi) continue;
    Index e = f.edge.eval(lo);
    if (!best || e < *best) best = e;
  }
  return best;
}

std::optional<Index> least_in_above(const GraphPresentation& g,
                                    const Vertex& v, Index above) {
  EdgeSet s = g.in_edges(v);
  std::optional<Index> best;
  for (Index e : s.exceptional)
    if (e > above && (!best || e < *best)) best = e;
  for (const auto& sl : s.slices) {
    const Family& f = g.families[sl.family];
    Index lo = sl.n_lo;
    if (f.edge.eval(lo) <= above) {
      Index d = above + 1 - f.edge.b;
      lo = std::max(lo, (d + f.edge.a - 1) / f.edge.a);
    }
    if (sl.n_hi && lo > *sl.n_hi) continue;
    Index e = f.edge.eval(lo);
    if (!best || e < *best) best = e;
  }
  return best;
}

// BFS over the band of edges with index in (lo, hi], on the concrete
// truncation at hi. Returns edge paths from `from` to every reachable
// vertex (including the empty path to `from` itself).
std::map<Vertex, std::vector<Index>> band_reach(const GraphPresentation& g,
                                                const Vertex& from, Index lo,
                                                Index hi, bool backward) {
  std::map<Vertex, std::vector<Index>> out;
  FiniteGraph fg = g.truncate(hi);
  std::vector<Vertex> queue{from};
  out[from] = {};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex v = queue[qi];
    for (const auto& e : fg.edges) {
      if (e.index <= lo) continue;
      const Vertex& near = backward ? e.range : e.source;
      const Vertex& far = backward ? e.source : e.range;
      if (!(near == v) || out.count(far)) continue;
      auto path = out[v];
      if (backward)
        path.insert(path.begin(), e.index);
      else
        path.push_back(e.index);
      out[far] = path;
      queue.push_back(far);
    }
  }
  return out;
}

struct FailData {
  Nat eps_exp;
  Nat delta_exp;
  PathFamily family;
  Index anchor_a = 0;
  Index anchor_b = 0;
};

// Searches for a family shape whose failure refutes the finite property at
// eps for EVERY delta: anchors (a, b) inside F_eps such that (1) no path of
// any length connects r(a) to s(b) outside F_eps, so no witness exists at
// any delta; (2, 3) both anchors extend into unboundedly high edges outside
// F_eps, so an admissible family of this shape exists at every delta
// (truncate a long residual path at its first edge outside F_delta). The
// returned instance is the delta = eps representative, checked exhaustively.
std::optional<FailData> search_fpc_failure(Enumeration& en,
                                           const SearchBounds& bounds) {
  const GraphPresentation& g = en.graph();
  for (Index j = 1; j <= 6; ++j) {
    if (!g.covered(j)) break;
    Nat t_eps = en.rank_edge(j);
    if (t_eps > bounds.max_threshold_exp) break;
    Index fe = en.fset_max(t_eps);
    for (Index a = 1; a <= fe; ++a) {
      for (Index b = 1; b <= fe; ++b) {
        Vertex ra = g.resolve(a).range;
        Vertex sb = g.resolve(b).source;
        if (!unreachable_avoiding(g, ra, sb, fe)) continue;
        if (!reaches_unbounded_forward(g, ra, fe)) continue;
        if (!reaches_unbounded_backward(g, sb, fe)) continue;
        // Check representative deltas, including delta = eps.
        std::vector<Nat> deltas{t_eps};
        if (g.covered(fe + 3)) deltas.push_back(en.rank_edge(fe + 3));
        if (g.covered(fe + 6)) deltas.push_back(en.rank_edge(fe + 6));
        std::optional<FailData> first;
        bool all_ok = true;
        for (const Nat& t_d : deltas) {
          Index fd = en.fset_max(t_d);
          std::optional<PathFamily> fam;
          {
            auto fwd = band_reach(g, ra, fe, fd, false);
            std::optional<std::vector<Index>> lam1;
            for (const auto& [v, path] : fwd) {
              auto exit = least_out_above(g, v, fd);
              if (!exit) continue;
              std::vector<Index> e{a};
              e.insert(e.end(), path.begin(), path.end());
              e.push_back(*exit);
              if (!lam1 || e.size() < lam1->size()) lam1 = e;
            }
            auto bwd = band_reach(g, sb, fe, fd, true);
            std::optional<std::vector<Index>> lam2;
            for (const auto& [v, path] : bwd) {
              auto entry = least_in_above(g, v, fd);
              if (!entry) continue;
              std::vector<Index> e{*entry};
              e.insert(e.end(), path.begin(), path.end());
              e.push_back(b);
              if (!lam2 || e.size() < lam2->size()) lam2 = e;
            }
            if (lam1 && lam2)
              fam = PathFamily{{FinitePath::of_edges(*lam1),
                                FinitePath::of_edges(*lam2)}};
          }
          if (!fam) {
            all_ok = false;
            break;
          }
          if (check_family_fpc(en, *fam, t_d)) {
            all_ok = false;
            break;
          }
          InstanceResult ir =
              check_fpc_instance(en, *fam, t_eps, t_d, bounds);
          if (ir.kind != InstanceResult::Kind::Failure || !ir.exhaustive) {
            all_ok = false;
            break;
          }
          if (!first) first = FailData{t_eps, t_d, *fam, a, b};
        }
        if (all_ok && first) return first;
      }
    }
  }
  return std::nullopt;
}

// Periodic two-block family over a pair of matched affine families:
// block q is (F1 member, F2 member) where F2's source progression meets
// F1's range progression. Used as the IPC failure instance behind an
// attractor verdict: with all block symbols beyond F_delta every slot is
// unpinned, so failure reduces to the attractor's residual analysis.
std::optional<PeriodicFamily> build_unbounded_pair_family(
    const GraphPresentation& g, Index fd) {
  for (const auto& f1 : g.families) {
    if (!f1.infinite() || f1.range.concrete()) continue;
    for (const auto& f2 : g.families) {
      if (!f2.infinite() || f2.source.concrete()) continue;
      if (f2.source.series != f1.range.series) continue;
      const Affine& r1 = f1.range.idx;
      const Affine& s2 = f2.source.idx;
      if (s2.a <= 0 || r1.a <= 0) continue;
      // Find n >= lo with s2.a | (r1.a * n + r1.b - s2.b) and both edge
      // indices beyond fd; then step n by dn = s2.a / gcd to stay matched.
      Index gcd = std::gcd(r1.a, s2.a);
      if ((r1.b - s2.b) % gcd != 0) continue;
      Index dn = s2.a / gcd;
      std::optional<Index> n0;
      for (Index n = f1.lo; n < f1.lo + s2.a * 4 + 64; ++n) {
        Index num = r1.a * n + r1.b - s2.b;
        if (num % s2.a != 0) continue;
        Index m = num / s2.a;
        if (m < f2.lo) continue;
        if (f1.edge.eval(n) <= fd || f2.edge.eval(m) <= fd) continue;
        n0 = n;
        break;
      }
      if (!n0) continue;
      Index m0 = (r1.a * *n0 + r1.b - s2.b) / s2.a;
      Index dm = r1.a * dn / s2.a;
      PeriodicFamily pf;
      pf.period.push_back(
          {Affine{f1.edge.a * dn, f1.edge.eval(*n0)},
           Affine{f2.edge.a * dm, f2.edge.eval(m0)}});
      return pf;
    }
  }
  return std::nullopt;
}

json family_json(const PathFamily& fam) {
  json arr = json::array();
  for (const auto& p : fam.paths) arr.push_back(print_finite_path(p));
  return arr;
}

PathFamily family_from_json(const json& arr) {
  PathFamily fam;
  for (const auto& s : arr)
    fam.paths.push_back(parse_finite_path(s.get<std::string>()));
  return fam;
}

json periodic_json(const PeriodicFamily& pf) {
  json j;
  j["prefix"] = json::array();
  for (const auto& p : pf.prefix) j["prefix"].push_back(print_finite_path(p));
  j["period"] = json::array();
  for (const auto& tpl : pf.period) {
    json t = json::array();
    for (const auto& a : tpl) t.push_back(json{{"a", a.a}, {"b", a.b}});
    j["period"].push_back(t);
  }
  return j;
}

PeriodicFamily periodic_from_json(const json& j) {
  PeriodicFamily pf;
  for (const auto& s : j.at("prefix"))
    pf.prefix.push_back(parse_finite_path(s.get<std::string>()));
  for (const auto& t : j.at("period")) {
    std::vector<Affine> tpl;
    for (const auto& a : t)
      tpl.push_back(Affine{a.at("a").get<Index>(), a.at("b").get<Index>()});
    pf.period.push_back(tpl);
  }
  return pf;
}

// Sampled positive FPC instances for a two-ended-free graph: two-block
// families assembled from high representatives, each checked for a witness.
json tew_samples(Enumeration& en, const SearchBounds& bounds) {
  const GraphPresentation& g = en.graph();
  json samples = json::array();
  if (!g.covered(1)) return samples;
  Nat t_eps = en.rank_edge(1);
  Index fe = en.fset_max(t_eps);
  if (!g.covered(fe + 4)) return samples;
  Nat t_delta = en.rank_edge(fe + 4);
  Index fd = en.fset_max(t_delta);

  std::vector<Index> high;
  for (const auto& f : g.families) {
    Index lo = f.lo;
    if (f.edge.eval(lo) <= fd) {
      Index d = fd + 1 - f.edge.b;
      lo = std::max(lo, (d + f.edge.a - 1) / f.edge.a);
    }
    if (f.hi && lo > *f.hi) continue;
    for (Index i = 0; i < 4; ++i) {
      if (f.hi && lo + i > *f.hi) break;
      high.push_back(f.edge.eval(lo + i));
    }
  }
  std::sort(high.begin(), high.end());
  high.erase(std::unique(high.begin(), high.end()), high.end());

  std::vector<FinitePath> blocks1, blocks2;
  for (Index h : high) {
    Vertex r = g.resolve(h).range;
    if (auto s = least_out_above(g, r, fd))
      blocks1.push_back(FinitePath::of_edges({h, *s}));
    if (auto s = g.min_out_index(r))
      blocks2.push_back(FinitePath::of_edges({h, *s}));
  }
  for (const auto& b1 : blocks1) {
    for (const auto& b2 : blocks2) {
      PathFamily fam{{b1, b2}};
      if (check_family_fpc(en, fam, t_delta)) continue;
      InstanceResult ir = check_fpc_instance(en, fam, t_eps, t_delta, bounds);
      if (ir.kind != InstanceResult::Kind::Witness || !ir.finite_witness)
        continue;
      json s;
      s["family"] = family_json(fam);
      s["eps_exp"] = t_eps.str();
      s["delta_exp"] = t_delta.str();
      s["witness"] = print_finite_path(*ir.finite_witness);
      samples.push_back(s);
      if (samples.size() >= 2) return samples;
    }
  }
  return samples;
}

// A witness path for a finite family instance, checked slot by slot.
std::optional<std::string> validate_fpc_witness(Enumeration& en,
                                                const PathFamily& fam,
                                                const Nat& eps_exp,
                                                const FinitePath& w) {
  const GraphPresentation& g = en.graph();
  if (!w.valid(g)) return "witness is not a path";
  auto lengths = fam.lengths();
  Nat total = 0;
  for (auto l : lengths) total += l;
  Nat L = total - Nat(lengths.size()) + 1;
  if (Nat(w.length()) != L) return "witness has the wrong length";
  Index fmax = en.fset_max(eps_exp);
  for (Nat j = 1; j <= L; ++j) {
    auto [i, n] = f_inverse(lengths, j);
    Index sym = fam.paths[i - 1].edges[n - 1];
    Index got = w.edges[static_cast<std::size_t>(j - 1)];
    if (sym <= fmax) {
      if (got != sym) return "witness misses a pinned slot";
    } else if (got <= fmax) {
      return "witness enters F_eps on an unpinned slot";
    }
  }
  return std::nullopt;
}

}  // namespace

Decision decide_shadowing(Enumeration& en, const SearchBounds& bounds) {
  const GraphPresentation& g = en.graph();
  Decision d;
  auto both = [&](Answer a, Rule r, const json& witness, const json& params,
                  std::optional<bool> ex = std::nullopt) {
    d.finite = {a, r, make_cert(g, "finite", a, r, witness, params, bounds,
                                ex)};
    d.shadowing = {a, r, make_cert(g, "shadowing", a, r, witness, params,
                                   bounds, ex)};
  };

  if (g.finite()) {
    json w;
    w["max_index"] = g.max_index();
    both(Answer::Yes, Rule::FiniteGraph, w, nullptr);
    return d;
  }

  WanderingResult wr = classify_wandering(g);
  if (wr.verdict == Ternary::Yes) {
    json w;
    w["evidence"] = wr.evidence;
    both(Answer::Yes, Rule::Wandering, w, nullptr);
    return d;
  }

  EcifsResult er = classify_ecifs(g);
  if (er.verdict == Ternary::Yes) {
    json w;
    w["k"] = er.k;
    w["evidence"] = er.evidence;
    both(Answer::Yes, Rule::ECIFS, w, nullptr);
    return d;
  }

  if (auto v = single_concrete_vertex(g)) {
    json w;
    w["reason"] = "single-vertex";
    w["vertex"] = print_vertex(*v);
    both(Answer::Yes, Rule::InstanceOnly, w, nullptr);
    return d;
  }

  // Shadowing side: an attractor on a non-ECIFS graph refutes shadowing.
  AttractorResult ar = find_attractor(en, bounds.max_threshold_exp);
  if (ar.found && er.verdict == Ternary::No) {
    json w;
    w["attractor_prefix"] = ar.prefix;
    w["attractor_evidence"] = ar.evidence;
    w["ecifs_evidence"] = er.evidence;
    json params;
    Nat t0 = en.rank_edge(ar.prefix);
    params["eps_exp"] = t0.str();
    params["delta_exp"] = t0.str();
    if (auto pf = build_unbounded_pair_family(g, ar.prefix)) {
      InstanceResult ir = check_ipc1_instance(en, *pf, t0, t0, bounds);
      if (ir.kind == InstanceResult::Kind::Failure && ir.exhaustive)
        w["ipc1"] = periodic_json(*pf);
    }
    d.shadowing = {Answer::No, Rule::AttractorNotECIFS,
                   make_cert(g, "shadowing", Answer::No,
                             Rule::AttractorNotECIFS, w, params, bounds,
                             true)};
  } else {
    d.shadowing = {Answer::Unknown, Rule::Inconclusive,
                   make_cert(g, "shadowing", Answer::Unknown,
                             Rule::Inconclusive, nullptr, nullptr, bounds)};
  }

  // Finite side.
  if (auto fail = search_fpc_failure(en, bounds)) {
    json w;
    w["anchors"] = json::array({fail->anchor_a, fail->anchor_b});
    w["family"] = family_json(fail->family);
    json params;
    params["eps_exp"] = fail->eps_exp.str();
    params["delta_exp"] = fail->delta_exp.str();
    d.finite = {Answer::No, Rule::FPCFailureInstance,
                make_cert(g, "finite", Answer::No, Rule::FPCFailureInstance,
                          w, params, bounds, true)};
    return d;
  }
  TwoEndedReport tr = two_ended_high_edge_free(g);
  if (tr.verdict == Ternary::Yes) {
    json w;
    w["reason"] = "two-ended-wandering-free";
    w["evidence"] = tr.evidence;
    w["samples"] = tew_samples(en, bounds);
    d.finite = {Answer::Yes, Rule::InstanceOnly,
                make_cert(g, "finite", Answer::Yes, Rule::InstanceOnly, w,
                          nullptr, bounds)};
    return d;
  }
  d.finite = {Answer::Unknown, Rule::Inconclusive,
              make_cert(g, "finite", Answer::Unknown, Rule::Inconclusive,
                        nullptr, nullptr, bounds)};
  return d;
}

VerifyResult verify_certificate(Enumeration& en,
                                const std::string& cert_json) {
  const GraphPresentation& g = en.graph();
  json j;
  try {
    j = json::parse(cert_json);
  } catch (const std::exception& e) {
    return {false, std::string("malformed certificate: ") + e.what()};
  }
  try {
    std::string rule = j.at("rule").get<std::string>();
    std::string verdict = j.at("verdict").get<std::string>();
    if (j.contains("graph") && j["graph"].get<std::string>() != g.name)
      return {false, "certificate names a different graph"};
    SearchBounds bounds;  // defaults are enough for replay

    if (rule == "inconclusive") {
      if (verdict != "unknown") return {false, "inconclusive must be unknown"};
      return {true, "nothing to check"};
    }
    if (rule == "finite-graph") {
      if (!g.finite()) return {false, "graph is not finite"};
      return {verdict == "yes", "finite presentations always shadow"};
    }
    if (rule == "wandering") {
      WanderingResult wr = classify_wandering(g);
      if (wr.verdict != Ternary::Yes)
        return {false, "wandering classifier does not confirm"};
      return {verdict == "yes", wr.evidence};
    }
    if (rule == "ecifs") {
      EcifsResult er = classify_ecifs(g);
      if (er.verdict != Ternary::Yes)
        return {false, "ecifs classifier does not confirm"};
      if (j.contains("witness") && j["witness"].contains("k") &&
          j["witness"]["k"].get<Index>() != er.k)
        return {false, "recorded k disagrees with the classifier"};
      return {verdict == "yes", er.evidence};
    }
    if (rule == "instance-only") {
      const json& w = j.at("witness");
      std::string reason = w.at("reason").get<std::string>();
      if (reason == "single-vertex") {
        auto v = single_concrete_vertex(g);
        if (!v) return {false, "graph is not single-vertex"};
        return {verdict == "yes", "single-vertex presentation"};
      }
      if (reason == "two-ended-wandering-free") {
        TwoEndedReport tr = two_ended_high_edge_free(g);
        if (tr.verdict != Ternary::Yes)
          return {false, "two-ended classifier does not confirm"};
        for (const auto& s : w.at("samples")) {
          PathFamily fam = family_from_json(s.at("family"));
          Nat te(s.at("eps_exp").get<std::string>());
          Nat td(s.at("delta_exp").get<std::string>());
          if (check_family_fpc(en, fam, td))
            return {false, "sampled family is not admissible"};
          FinitePath wp =
              parse_finite_path(s.at("witness").get<std::string>());
          if (auto diag = validate_fpc_witness(en, fam, te, wp))
            return {false, "sampled witness invalid: " + *diag};
        }
        return {verdict == "yes", tr.evidence};
      }
      return {false, "unknown instance-only reason"};
    }
    if (rule == "fpc-failure-instance") {
      const json& w = j.at("witness");
      const json& p = j.at("parameters");
      Nat te(p.at("eps_exp").get<std::string>());
      Nat td(p.at("delta_exp").get<std::string>());
      Index a = w.at("anchors")[0].get<Index>();
      Index b = w.at("anchors")[1].get<Index>();
      Index fe = en.fset_max(te);
      if (a > fe || b > fe) return {false, "anchors lie outside F_eps"};
      Vertex ra = g.resolve(a).range;
      Vertex sb = g.resolve(b).source;
      if (!unreachable_avoiding(g, ra, sb, fe))
        return {false, "anchors are residually connected"};
      if (!reaches_unbounded_forward(g, ra, fe) ||
          !reaches_unbounded_backward(g, sb, fe))
        return {false, "anchor extensions are bounded"};
      PathFamily fam = family_from_json(w.at("family"));
      if (check_family_fpc(en, fam, td))
        return {false, "recorded family is not admissible"};
      InstanceResult ir = check_fpc_instance(en, fam, te, td, bounds);
      if (ir.kind != InstanceResult::Kind::Failure || !ir.exhaustive)
        return {false, "instance re-check did not fail exhaustively"};
      return {verdict == "no", "failure instance confirmed"};
    }
    if (rule == "attractor-not-ecifs") {
      const json& w = j.at("witness");
      Index prefix = w.at("attractor_prefix").get<Index>();
      ResidualReport rr = residual_infinite_paths(g, prefix);
      if (rr.kind != ResidualReport::Kind::NoInfinitePath)
        return {false, "attractor residual analysis does not confirm"};
      EcifsResult er = classify_ecifs(g);
      if (er.verdict != Ternary::No)
        return {false, "ecifs refutation does not confirm"};
      if (w.contains("ipc1")) {
        PeriodicFamily pf = periodic_from_json(w.at("ipc1"));
        const json& p = j.at("parameters");
        Nat te(p.at("eps_exp").get<std::string>());
        Nat td(p.at("delta_exp").get<std::string>());
        InstanceResult ir = check_ipc1_instance(en, pf, te, td, bounds);
        if (ir.kind != InstanceResult::Kind::Failure || !ir.exhaustive)
          return {false, "embedded instance re-check did not fail"};
      }
      return {verdict == "no", "attractor without ecifs confirmed"};
    }
    return {false, "unknown rule: " + rule};
  } catch (const std::exception& e) {
    return {false, std::string("certificate replay error: ") + e.what()};
  }
}

// ---------------------------------------------------------------------------
// Builtin catalogue.

namespace {

const std::vector<std::pair<std::string, std::string>>& builtin_table() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"rose",
       "graph rose\n"
       "family k >= 1: edge e[k] from v1 to v1\n"},
      {"line",
       "graph line\n"
       "family k >= 1: edge e[k] from u[k] to u[k+1]\n"},
      {"renewal",
       "graph renewal\n"
       "edge e1 from u1 to u1\n"
       "family k >= 1: edge e[2*k] from u[k+1] to u[k]\n"
       "family k >= 1: edge e[2*k+1] from u1 to u[k+1]\n"},
      {"follower",
       "graph follower\n"
       "edge e1 from u1 to u1\n"
       "family k >= 2: edge e[k] from u[k] to u1\n"},
      {"e2",
       "graph e2\n"
       "edge e1 from u to v\n"
       "edge e2 from v to u\n"
       "family k >= 2: edge e[2*k-1] from u to u\n"
       "family k >= 2: edge e[2*k] from v to v\n"},
      {"ef",
       "graph ef\n"
       "edge e1 from v1 to v1\n"
       "family k >= 2: edge e[k] from v[k] to v[k-1]\n"},
      {"e1variant",
       "graph e1variant\n"
       "edge e1 from v1 to v2\n"
       "family k >= 1: edge e[2*k] from v[2*k] to v[2*k+2]\n"
       "family k >= 2: edge e[2*k-1] from v[2*k-1] to v[2*k-3]\n"},
  };
  return table;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [n, t] : builtin_table()) out.push_back(n);
  return out;
}

GraphPresentation builtin(const std::string& name) {
  for (const auto& [n, t] : builtin_table())
    if (n == name) return parse_graph(t);
  throw Error("unknown builtin presentation: " + name);
}

}  // namespace shadow

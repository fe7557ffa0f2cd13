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

// Symbolic reachability over affine graph presentations: vertex-set cones,
// forward/backward closures, residual infinite-path analysis, and the
// structural classifiers (wandering, eventually constrained immediate
// follower sets, attractor subgraphs, two-ended high-edge freeness).

#ifndef SHADOW_SYMBOLIC_HPP_
#define SHADOW_SYMBOLIC_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shadow/enumeration.hpp"
#include "shadow/path.hpp"

namespace shadow {

// The arithmetic cone {series[start + step*t] : t >= 0}, step >= 1.
struct Cone {
  std::string series;
  Index step = 1;
  Index start = 1;

  bool contains(const Vertex& v) const {
    return v.series == series && v.sub >= start &&
           (v.sub - start) % step == 0;
  }
};

// Finitely described vertex set: concrete vertices plus cones. `exact` is
// cleared whenever a widening step may have over-approximated.
struct VertexSet {
  std::set<Vertex> concrete;
  std::vector<Cone> cones;
  bool exact = true;

  bool contains(const Vertex& v) const {
    if (concrete.count(v)) return true;
    for (const auto& c : cones)
      if (c.contains(v)) return true;
    return false;
  }
  bool add_concrete(const Vertex& v);  // true if new
  bool add_cone(Cone c);               // true if not subsumed
};

// Closure of `seeds` under edges with index > min_index (0 = whole graph).
VertexSet forward_closure(const GraphPresentation& g, VertexSet seeds,
                          Index min_index);
VertexSet backward_closure(const GraphPresentation& g, VertexSet seeds,
                           Index min_index);

// Whether infinitely many members of some infinite family slice restricted
// to edge index > min_index have their range (forward=false: source) inside
// `set`. Used for "unboundedly many edges enter/leave this region".
bool touches_unbounded_sources(const GraphPresentation& g,
                               const VertexSet& set, Index min_index);
bool touches_unbounded_ranges(const GraphPresentation& g, const VertexSet& set,
                              Index min_index);

// Definite non-reachability of `to` from `from` using only edges with index
// > avoid_prefix (the complement of F_eps when F_eps = {e_1..e_avoid_prefix}).
// Returns false when unreachability cannot be certified.
bool unreachable_avoiding(const GraphPresentation& g, const Vertex& from,
                          const Vertex& to, Index avoid_prefix);

// Analysis of the residual graph spanned by edges with index > cutoff.
struct ResidualReport {
  enum class Kind { NoInfinitePath, HasCycle, HasRay, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<InfinitePath> cycle_witness;  // for HasCycle
  std::string detail;
};
ResidualReport residual_infinite_paths(const GraphPresentation& g,
                                       Index cutoff);

// Whether an infinite path over edges with index > cutoff starts at v.
// Definite only when the flag says so.
struct AliveReport {
  bool definite = false;
  bool alive = false;
  std::optional<InfinitePath> witness;  // eventually periodic, when cyclic
  std::string detail;
};
AliveReport residual_alive_from(const GraphPresentation& g, const Vertex& v,
                                Index cutoff);

enum class Ternary { Yes, No, Unknown };

struct WanderingResult {
  Ternary verdict = Ternary::Unknown;
  // For No: a path from an arbitrarily-high first edge to a fixed low edge
  // (one concrete sample), plus a description of the unbounded pattern.
  std::optional<FinitePath> witness;
  std::string evidence;
};
WanderingResult classify_wandering(const GraphPresentation& g);

struct EcifsResult {
  Ternary verdict = Ternary::Unknown;
  Index k = 0;           // minimal k, for Yes
  std::string evidence;  // unbounded (j, follower) generator, for No
};
EcifsResult classify_ecifs(const GraphPresentation& g);

struct AttractorResult {
  bool found = false;
  Index prefix = 0;  // E' = {e_1 .. e_prefix}
  std::string evidence;
};
// Tries E' = F_t for t = rank(e_1), rank(e_2), ... while rank(e_j) <= t_max.
AttractorResult find_attractor(Enumeration& en, const Nat& t_max);

// True when no edge has both unboundedly high predecessors (paths from
// arbitrarily high edges into its source) and unboundedly high successors
// (paths from its range to arbitrarily high edges); family edges are
// checked on sampled members. Underpins the finite-shadowing witness rule.
struct TwoEndedReport {
  Ternary verdict = Ternary::Unknown;
  std::string evidence;
};
TwoEndedReport two_ended_high_edge_free(const GraphPresentation& g);

// Forward closure of v avoiding F_eps reaches unboundedly high edges
// (ingredient of the delta-parametric family generator).
bool reaches_unbounded_forward(const GraphPresentation& g, const Vertex& v,
                               Index avoid_prefix);
bool reaches_unbounded_backward(const GraphPresentation& g, const Vertex& v,
                                Index avoid_prefix);

// Concrete vertices of interest: endpoints of exceptional edges, concrete
// family endpoints, and low members of each vertex series.
std::vector<Vertex> boundary_vertices(const GraphPresentation& g);

}  // namespace shadow

#endif  // SHADOW_SYMBOLIC_HPP_

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

// Finite symbolic presentations of countably infinite directed graphs:
// exceptional (concrete) edges plus affine-indexed edge families, with edge
// resolution, follower sets, truncation and structural validation.

#ifndef SHADOW_GRAPH_HPP_
#define SHADOW_GRAPH_HPP_

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "shadow/base.hpp"

namespace shadow {

// A vertex is either a standalone name ("u") or a member of a named series
// with a positive subscript ("u3" = series "u", subscript 3). Equality is
// syntactic on (series, subscript); subscript 0 encodes a standalone name.
struct Vertex {
  std::string series;
  Index sub = 0;

  auto operator<=>(const Vertex&) const = default;
  std::string str() const {
    return sub == 0 ? series : series + std::to_string(sub);
  }
};

// Affine form a*n + b in one family variable n.
struct Affine {
  Index a = 0;
  Index b = 0;

  Index eval(Index n) const { return a * n + b; }
  auto operator<=>(const Affine&) const = default;
};

// Vertex term of a family declaration: a concrete vertex (idx.a == 0) or an
// indexed series member series[idx.a*n + idx.b].
struct VTerm {
  std::string series;
  Affine idx;

  bool concrete() const { return idx.a == 0; }
  Vertex at(Index n) const { return Vertex{series, idx.eval(n)}; }
  auto operator<=>(const VTerm&) const = default;
};

// A fully resolved edge e_index: source -> range.
struct Edge {
  Index index = 0;
  Vertex source;
  Vertex range;

  auto operator<=>(const Edge&) const = default;
};

// Affine-indexed edge family: for every admissible n in [lo, hi] (hi absent
// means unbounded) the graph has an edge e_{edge.eval(n)} from source.at(n)
// to range.at(n).
struct Family {
  std::string var;  // loop variable name, kept for round-trip printing
  Index lo = 1;
  std::optional<Index> hi;
  Affine edge;  // edge-index form; edge.a >= 1 so the form is injective
  VTerm source;
  VTerm range;

  bool infinite() const { return !hi.has_value(); }
  bool admissible(Index n) const {
    return n >= lo && (!hi || n <= *hi);
  }
  // The family parameter n with edge.eval(n) == k, if any.
  std::optional<Index> param_for(Index k) const {
    if (edge.a <= 0) return std::nullopt;
    Index d = k - edge.b;
    if (d % edge.a != 0) return std::nullopt;
    Index n = d / edge.a;
    if (!admissible(n)) return std::nullopt;
    return n;
  }
  Edge at(Index n) const {
    return Edge{edge.eval(n), source.at(n), range.at(n)};
  }
};

// A slice of one family's admissible parameter range, used to describe
// (possibly infinite) edge sets such as follower sets finitely.
struct FamilySlice {
  std::size_t family = 0;  // index into GraphPresentation::families
  Index n_lo = 1;
  std::optional<Index> n_hi;

  bool infinite() const { return !n_hi.has_value(); }
};

// Finitely described, possibly infinite set of edges: a list of exceptional
// edge indices plus family slices.
struct EdgeSet {
  std::vector<Index> exceptional;
  std::vector<FamilySlice> slices;

  bool infinite() const {
    for (const auto& s : slices)
      if (s.infinite()) return true;
    return false;
  }
  bool empty() const { return exceptional.empty() && slices.empty(); }
};

// Concrete truncation: the subgraph spanned by edges e_1..e_k.
struct FiniteGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

enum class SinkVerdict { Valid, Invalid, Unknown };

struct SinkReport {
  SinkVerdict verdict = SinkVerdict::Valid;
  std::optional<Vertex> witness;  // a sink, when verdict == Invalid
};

// Finite symbolic description of a countable graph. Immutable after
// construction; all queries are pure and safe for concurrent use.
class GraphPresentation {
 public:
  std::string name;
  std::vector<Edge> exceptional;  // concrete edges, sorted by index
  std::vector<Family> families;

  // Structural checks performed by finalize() after parsing/building:
  // coverage (no overlap, no gap below the max covered index, cofinite
  // coverage for infinite presentations) and the no-sink requirement.
  void finalize(bool allow_unknown_sinks = false);

  bool finite() const { return families_all_bounded_; }
  // Largest covered index for finite presentations.
  Index max_index() const;

  bool covered(Index k) const;
  Edge resolve(Index k) const;  // throws Error on uncovered index

  // All edges with source v / range v, as a finite description.
  EdgeSet out_edges(const Vertex& v) const;
  EdgeSet in_edges(const Vertex& v) const;

  // F^1(e_k) = s^{-1}(r(e_k)), the immediate follower set.
  EdgeSet followers(Index k) const;

  // Subgraph over edges {e_1..e_k}; saturates at max_index() for finite
  // presentations.
  FiniteGraph truncate(Index k) const;

  bool is_path(const std::vector<Index>& edges) const;

  // Symbolic no-sink validation over the affine fragment.
  SinkReport validate_no_sinks() const;

  // Smallest edge index with source v (every vertex of a no-sink graph
  // emits); used by rank computations and greedy completions.
  std::optional<Index> min_out_index(const Vertex& v) const;

  // Enumerate concrete members of an EdgeSet with index <= max_idx.
  std::vector<Index> members_upto(const EdgeSet& set, Index max_idx) const;

  // True if the set contains an edge with index > k (for arbitrary k this
  // means "unboundedly many" when called with growing k).
  bool set_has_index_above(const EdgeSet& set, Index k) const;

 private:
  bool families_all_bounded_ = true;
  void check_coverage() const;
};

}  // namespace shadow

#endif  // SHADOW_GRAPH_HPP_

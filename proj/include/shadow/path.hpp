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

// Path types: finite paths (including length-0 vertices) and eventually
// periodic infinite paths in canonical form.

#ifndef SHADOW_PATH_HPP_
#define SHADOW_PATH_HPP_

#include <optional>
#include <vector>

#include "shadow/graph.hpp"

namespace shadow {

// A finite path: either a single vertex (length 0) or a non-empty sequence
// of edge indices with matching junctions.
struct FinitePath {
  std::optional<Vertex> vertex;  // engaged iff length 0
  std::vector<Index> edges;

  static FinitePath of_vertex(const Vertex& v) { return {v, {}}; }
  static FinitePath of_edges(std::vector<Index> e) {
    return {std::nullopt, std::move(e)};
  }

  std::size_t length() const { return edges.size(); }
  bool is_vertex() const { return vertex.has_value(); }

  Vertex source(const GraphPresentation& g) const {
    return is_vertex() ? *vertex : g.resolve(edges.front()).source;
  }
  Vertex range(const GraphPresentation& g) const {
    return is_vertex() ? *vertex : g.resolve(edges.back()).range;
  }
  bool valid(const GraphPresentation& g) const {
    return is_vertex() ? true : (!edges.empty() && g.is_path(edges));
  }

  auto operator<=>(const FinitePath&) const = default;
};

// An eventually periodic infinite path prefix . cycle^inf, held in canonical
// form: the cycle is primitive (not a proper power), the maximal common
// suffix of prefix and cycle is absorbed into the cycle, and a purely
// periodic path uses the lexicographically least cycle rotation. Canonical
// forms make structural equality coincide with sequence equality.
class InfinitePath {
 public:
  // Canonicalizes; validates junctions against g when provided.
  InfinitePath(std::vector<Index> prefix, std::vector<Index> cycle);
  InfinitePath(const GraphPresentation& g, std::vector<Index> prefix,
               std::vector<Index> cycle);

  const std::vector<Index>& prefix() const { return prefix_; }
  const std::vector<Index>& cycle() const { return cycle_; }

  // 1-based symbol access.
  Index at(std::size_t i) const {
    if (i <= prefix_.size()) return prefix_[i - 1];
    return cycle_[(i - 1 - prefix_.size()) % cycle_.size()];
  }

  Vertex source(const GraphPresentation& g) const {
    return g.resolve(at(1)).source;
  }

  bool valid(const GraphPresentation& g) const;

  // sigma^n: drop the first n symbols.
  InfinitePath shifted(std::size_t n) const;

  bool operator==(const InfinitePath& o) const {
    return prefix_ == o.prefix_ && cycle_ == o.cycle_;
  }
  bool operator<(const InfinitePath& o) const {
    return std::tie(prefix_, cycle_) < std::tie(o.prefix_, o.cycle_);
  }

 private:
  std::vector<Index> prefix_;
  std::vector<Index> cycle_;
  void canonicalize();
};

}  // namespace shadow

#endif  // SHADOW_PATH_HPP_

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

// The edge-ordered enumeration p_1, p_2, ... of all finite paths (vertices
// included), with closed-form rank/unrank via block counting, N(k), and the
// finite edge sets F_eps.
//
// Block structure: block 1 lists s(e_1), e_1; block k >= 2 lists s(e_k) if
// new, then every valid not-yet-listed path of length <= k over {e_1..e_k},
// ordered by increasing length and then lexicographically on edge-index
// tuples. A path first appears in block max(max edge index, length). For
// finite graphs with M edges, blocks k > M consist of all length-k paths.

#ifndef SHADOW_ENUMERATION_HPP_
#define SHADOW_ENUMERATION_HPP_

#include <map>
#include <mutex>
#include <vector>

#include "shadow/path.hpp"

namespace shadow {

class Enumeration {
 public:
  explicit Enumeration(const GraphPresentation& g) : g_(g) {}
  Enumeration(const Enumeration&) = delete;
  Enumeration& operator=(const Enumeration&) = delete;

  const GraphPresentation& graph() const { return g_; }

  // Number of valid paths of length len over the edge set {e_1..e_k};
  // len == 0 counts the distinct sources among e_1..e_k.
  Nat count_paths(Index k, Index len);

  // Total number of enumeration entries in blocks 1..k (vertices + paths).
  Nat cumulative(Index k);

  Nat rank(const FinitePath& p);
  Nat rank_vertex(const Vertex& v);
  Nat rank_edge(Index k) { return rank(FinitePath::of_edges({k})); }

  FinitePath entry_at(const Nat& i);

  // N(k): rank of the last length-k path over {e_1..e_k}.
  Nat nk(Index k);

  // Largest j such that rank(e_j) <= t (0 if none): F_{2^-t} = {e_1..e_j}.
  // Edge ranks are strictly increasing in the index, so F_eps is always an
  // index prefix.
  Index fset_max(const Nat& t);

  // First n enumeration entries.
  std::vector<FinitePath> stream_prefix(std::size_t n);

 private:
  struct Trunc {
    std::vector<Vertex> vertices;
    std::map<Vertex, std::size_t> vid;
    // Per vertex: outgoing (edge index, target vertex id), sorted by index.
    std::vector<std::vector<std::pair<Index, std::size_t>>> adj;
    // walks[len][v]: number of length-len paths over {e_1..e_k} from v.
    std::vector<std::vector<Nat>> walks;
    Index sources = 0;  // V_k: distinct sources among e_1..e_k
  };

  Trunc& trunc(Index k);
  const Nat& walks(Trunc& t, std::size_t v, Index len);
  Nat sum_walks(Trunc& t, Index len);
  // Number of valid length-len tuples over {e_1..e_k} lexicographically less
  // than p (p need not be over that alphabet).
  Nat lex_less(Index k, const std::vector<Index>& p);
  // Count of paths newly listed in block k with length len.
  Nat new_in_block(Index k, Index len);
  bool vertex_new_in_block(Index k);
  Index effective(Index k) const;  // min(k, max index) for finite graphs
  std::vector<Index> unrank_new(Index k, Index len, Nat offset);

  const GraphPresentation& g_;
  std::map<Index, Trunc> truncs_;
  std::map<Index, Nat> cumulative_;
  std::recursive_mutex mu_;
};

}  // namespace shadow

#endif  // SHADOW_ENUMERATION_HPP_

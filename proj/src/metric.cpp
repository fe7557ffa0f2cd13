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

#include "shadow/metric.hpp"

#include <algorithm>
#include <numeric>

namespace shadow {

std::string Distance::str() const {
  if (is_zero()) return "0";
  return "2^-" + exp->str();
}

namespace {

// rank of the length-len prefix of an infinite path.
Nat prefix_rank(Enumeration& en, const InfinitePath& x, std::size_t len) {
  std::vector<Index> e(len);
  for (std::size_t i = 1; i <= len; ++i) e[i - 1] = x.at(i);
  return en.rank(FinitePath::of_edges(std::move(e)));
}

Nat path_prefix_rank(Enumeration& en, const FinitePath& x, std::size_t len) {
  return en.rank(FinitePath::of_edges(std::vector<Index>(
      x.edges.begin(), x.edges.begin() + static_cast<std::ptrdiff_t>(len))));
}

}  // namespace

Disagreement first_disagreement(const GraphPresentation& g,
                                const InfinitePath& x, const InfinitePath& y) {
  if (x.source(g) != y.source(g)) return Disagreement::source_mismatch();
  if (x == y) return Disagreement::equal();  // canonical forms
  // Two eventually periodic sequences that agree through both prefixes plus
  // one common cycle period are equal, so a disagreement exists within that
  // bound.
  std::size_t bound = std::max(x.prefix().size(), y.prefix().size()) +
                      std::lcm(x.cycle().size(), y.cycle().size());
  for (std::size_t i = 1; i <= bound; ++i)
    if (x.at(i) != y.at(i)) return Disagreement::at(i);
  throw Error("first_disagreement: canonical forms differ but sequences agree");
}

Disagreement first_disagreement(const GraphPresentation& g,
                                const FinitePath& x, const FinitePath& y) {
  if (x.source(g) != y.source(g)) return Disagreement::source_mismatch();
  std::size_t n = std::min(x.length(), y.length());
  for (std::size_t i = 0; i < n; ++i)
    if (x.edges[i] != y.edges[i]) return Disagreement::at(i + 1);
  // One is an initial segment of the other (positionwise no edge differs).
  return Disagreement::equal();
}

std::optional<std::size_t> escape_index(const InfinitePath& x, Index k) {
  std::size_t bound = x.prefix().size() + x.cycle().size();
  for (std::size_t i = 1; i <= bound; ++i)
    if (x.at(i) > k) return i;
  return std::nullopt;
}

Distance distance(Enumeration& en, const InfinitePath& x,
                  const InfinitePath& y) {
  const GraphPresentation& g = en.graph();
  Disagreement d = first_disagreement(g, x, y);
  switch (d.kind) {
    case Disagreement::Kind::Equal:
      return Distance::zero();
    case Disagreement::Kind::SourceMismatch:
      return Distance::dyadic(std::min(en.rank_vertex(x.source(g)),
                                       en.rank_vertex(y.source(g))));
    case Disagreement::Kind::At:
      return Distance::dyadic(std::min(prefix_rank(en, x, d.position),
                                       prefix_rank(en, y, d.position)));
  }
  throw Error("unreachable");
}

Distance distance(Enumeration& en, const FinitePath& x, const FinitePath& y) {
  const GraphPresentation& g = en.graph();
  if (x == y) return Distance::zero();
  Disagreement d = first_disagreement(g, x, y);
  switch (d.kind) {
    case Disagreement::Kind::SourceMismatch:
      return Distance::dyadic(std::min(en.rank_vertex(x.source(g)),
                                       en.rank_vertex(y.source(g))));
    case Disagreement::Kind::At:
      return Distance::dyadic(std::min(path_prefix_rank(en, x, d.position),
                                       path_prefix_rank(en, y, d.position)));
    case Disagreement::Kind::Equal: {
      // Distinct paths with one a proper initial segment of the other: the
      // first distinguishing entry is the longer one's next prefix.
      const FinitePath& longer = x.length() > y.length() ? x : y;
      std::size_t cut = std::min(x.length(), y.length()) + 1;
      return Distance::dyadic(path_prefix_rank(en, longer, cut));
    }
  }
  throw Error("unreachable");
}

Distance distance(Enumeration& en, const FinitePath& x, const InfinitePath& y) {
  const GraphPresentation& g = en.graph();
  if (x.source(g) != y.source(g))
    return Distance::dyadic(std::min(en.rank_vertex(x.source(g)),
                                     en.rank_vertex(y.source(g))));
  for (std::size_t i = 1; i <= x.length(); ++i)
    if (x.edges[i - 1] != y.at(i))
      return Distance::dyadic(std::min(path_prefix_rank(en, x, i),
                                       prefix_rank(en, y, i)));
  // The finite path is a proper initial segment of the infinite one.
  return Distance::dyadic(prefix_rank(en, y, x.length() + 1));
}

Distance distance(Enumeration& en, const InfinitePath& x, const FinitePath& y) {
  return distance(en, y, x);
}

bool below_nk_threshold(const GraphPresentation& g, const InfinitePath& x,
                        const InfinitePath& y, Index k) {
  Disagreement d = first_disagreement(g, x, y);
  if (d.kind == Disagreement::Kind::Equal)
    throw Error("below_nk_threshold: paths must be distinct");
  if (d.kind == Disagreement::Kind::SourceMismatch) {
    // The source vertex counts as position 0, where an "escape" means the
    // vertex is not among the sources of e_1..e_k; the positionwise test
    // then degenerates to requiring both sources to escape.
    auto ox = g.min_out_index(x.source(g));
    auto oy = g.min_out_index(y.source(g));
    return ox && oy && *ox > k && *oy > k;
  }
  std::size_t i_xy = d.position;
  if (i_xy > static_cast<std::size_t>(k)) return true;
  auto ix = escape_index(x, k);
  auto iy = escape_index(y, k);
  return ix && iy && *ix == *iy && *ix <= i_xy;
}

}  // namespace shadow

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

#include "shadow/dynamics.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace shadow {

InfinitePath shift(const GraphPresentation&, const InfinitePath& x,
                   std::size_t n) {
  return x.shifted(n);
}

FinitePath shift(const GraphPresentation& g, const FinitePath& x,
                 std::size_t n) {
  if (n > x.length()) throw Error("shift: exponent exceeds the path length");
  if (n == 0) return x;
  if (n == x.length()) return FinitePath::of_vertex(x.range(g));
  return FinitePath::of_edges(std::vector<Index>(
      x.edges.begin() + static_cast<std::ptrdiff_t>(n), x.edges.end()));
}

ChainVerdict validate_chain(Enumeration& en, const Chain& c) {
  // One full tail period plus the wrap junction covers every consecutive
  // pair an infinite chain ever repeats.
  std::size_t last = c.infinite()
                         ? c.elements.size() + c.tail.size()
                         : (c.elements.empty() ? 0 : c.elements.size() - 1);
  for (std::size_t n = 1; n <= last; ++n) {
    Distance d = distance(en, c.element(n).shifted(1), c.element(n + 1));
    if (!d.below_exp(c.delta_exp)) return {false, n, d};
  }
  return {true, 0, Distance::zero()};
}

namespace {

// Sum of the first i lengths.
std::size_t lsum(const std::vector<std::size_t>& lengths, std::size_t i) {
  std::size_t s = 0;
  for (std::size_t j = 0; j < i; ++j) s += lengths[j];
  return s;
}

// Largest admissible n for block i (1-based): |lambda^i| - 1, except the
// final block which also admits |lambda^l|.
std::size_t block_cap(const std::vector<std::size_t>& lengths, std::size_t i) {
  if (lengths[i - 1] == 0) return 0;
  return i == lengths.size() ? lengths[i - 1] : lengths[i - 1] - 1;
}

}  // namespace

Nat f_index(const std::vector<std::size_t>& lengths, std::size_t i,
            std::size_t n) {
  std::size_t l = lengths.size();
  bool in_dom = i >= 1 && i <= l && n >= 1 &&
                (n < lengths[i - 1] || (i == l && n == lengths[i - 1]));
  if (!in_dom) throw Error("f_index: (i, n) outside Dom(f)");
  return Nat(lsum(lengths, i - 1)) + Nat(n) - Nat(i) + 1;
}

std::pair<std::size_t, std::size_t> f_inverse(
    const std::vector<std::size_t>& lengths, const Nat& j) {
  for (std::size_t i = 1; i <= lengths.size(); ++i) {
    std::size_t cap = block_cap(lengths, i);
    if (cap == 0) continue;
    Nat base = Nat(lsum(lengths, i - 1)) + 1 - Nat(i);  // f(i, n) - n
    if (j >= base + 1 && j <= base + Nat(cap))
      return {i, static_cast<std::size_t>(Nat(j - base))};
  }
  throw Error("f_inverse: index outside the image of f");
}

namespace {

std::optional<std::string> check_family_common(
    Enumeration& en, const PathFamily& family, const Nat& t_delta,
    bool lasts_include_final) {
  const GraphPresentation& g = en.graph();
  std::size_t l = family.size();
  if (l == 0) return "family is empty";
  for (std::size_t i = 0; i < l; ++i) {
    if (!family.paths[i].valid(g) || family.paths[i].is_vertex())
      return "lambda^" + std::to_string(i + 1) + " is not a valid path";
    if (family.paths[i].length() < 2)
      return "Condition 1 violated: |lambda^" + std::to_string(i + 1) +
             "| < 2";
  }
  Index jmax = en.fset_max(t_delta);  // F_delta = {e_1 .. e_jmax}
  std::set<Index> lhs;
  for (const auto& p : family.paths)
    for (Index e : p.edges)
      if (e > jmax) lhs.insert(e);
  lhs.erase(family.paths[0].edges.front());
  std::set<Index> rhs;
  for (std::size_t i = 1; i < l; ++i) {
    rhs.insert(family.paths[i].edges.front());     // lambda^{i+1}_1
    rhs.insert(family.paths[i - 1].edges.back());  // lambda^i_last, i < l
  }
  if (lasts_include_final) rhs.insert(family.paths[l - 1].edges.back());
  if (lhs != rhs) {
    std::ostringstream os;
    os << "Condition 2 violated: out-of-F_delta symbols {";
    for (Index e : lhs) os << " e" << e;
    os << " } differ from required block boundaries {";
    for (Index e : rhs) os << " e" << e;
    os << " }";
    return os.str();
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_family_fpc(Enumeration& en,
                                            const PathFamily& family,
                                            const Nat& t_delta) {
  return check_family_common(en, family, t_delta, false);
}

std::optional<std::string> check_family_ipc2(Enumeration& en,
                                             const PathFamily& family,
                                             const InfinitePath& gamma,
                                             const Nat& t_delta) {
  if (auto err = check_family_common(en, family, t_delta, true)) return err;
  if (!gamma.valid(en.graph())) return "gamma is not a valid infinite path";
  if (gamma.at(1) <= en.fset_max(t_delta))
    return "Condition 3 violated: gamma_1 lies in F_delta";
  return std::nullopt;
}

namespace {

void check_extensions(const GraphPresentation& g, const PathFamily& family,
                      const std::vector<InfinitePath>& extensions) {
  if (extensions.size() != family.size())
    throw Error("one extension per family path is required");
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!extensions[i].valid(g))
      throw Error("extension y^" + std::to_string(i + 1) + " is invalid");
    for (std::size_t k = 1; k <= family.paths[i].length(); ++k)
      if (extensions[i].at(k) != family.paths[i].edges[k - 1])
        throw Error("extension y^" + std::to_string(i + 1) +
                    " does not extend lambda^" + std::to_string(i + 1));
  }
}

}  // namespace

Chain chain_from_family(Enumeration& en, const PathFamily& family,
                        const std::vector<InfinitePath>& extensions,
                        const Nat& t_delta) {
  if (auto err = check_family_fpc(en, family, t_delta))
    throw Error("chain_from_family: " + *err);
  check_extensions(en.graph(), family, extensions);
  auto lengths = family.lengths();
  std::size_t total = lsum(lengths, lengths.size()) - lengths.size() + 1;
  Chain c{{}, {}, t_delta};
  c.elements.reserve(total);
  for (std::size_t j = 1; j <= total; ++j) {
    auto [i, n] = f_inverse(lengths, Nat(j));
    c.elements.push_back(extensions[i - 1].shifted(n - 1));
  }
  return c;
}

Chain chain_from_family_and_tail(Enumeration& en, const PathFamily& family,
                                 const InfinitePath& gamma,
                                 const std::vector<InfinitePath>& extensions,
                                 const Nat& t_delta) {
  if (auto err = check_family_ipc2(en, family, gamma, t_delta))
    throw Error("chain_from_family_and_tail: " + *err);
  check_extensions(en.graph(), family, extensions);
  auto lengths = family.lengths();
  std::size_t finite_part = lsum(lengths, lengths.size()) - lengths.size();
  Chain c{{}, {}, t_delta};
  c.elements.reserve(finite_part + gamma.prefix().size());
  for (std::size_t j = 1; j <= finite_part; ++j) {
    auto [i, n] = f_inverse(lengths, Nat(j));
    c.elements.push_back(extensions[i - 1].shifted(n - 1));
  }
  for (std::size_t s = 0; s < gamma.prefix().size(); ++s)
    c.elements.push_back(gamma.shifted(s));
  for (std::size_t r = 0; r < gamma.cycle().size(); ++r)
    c.tail.push_back(gamma.shifted(gamma.prefix().size() + r));
  return c;
}

namespace {

Index least_out_index(const GraphPresentation& g, const Vertex& v) {
  EdgeSet s = g.out_edges(v);
  std::optional<Index> best;
  for (Index e : s.exceptional)
    if (!best || e < *best) best = e;
  for (const auto& sl : s.slices) {
    // Family edge indices grow with the parameter, so the slice minimum
    // sits at n_lo.
    Index e = g.families[sl.family].edge.eval(sl.n_lo);
    if (!best || e < *best) best = e;
  }
  if (!best) throw Error("vertex " + v.str() + " has no outgoing edge");
  return *best;
}

void check_linkage(const Chain& c, std::size_t last) {
  for (std::size_t n = 1; n <= last; ++n)
    if (c.element(n).at(2) != c.element(n + 1).at(1))
      throw Error("chain is not first-symbol linked at position " +
                  std::to_string(n));
}

constexpr std::size_t kCompletionGuard = 100000;

}  // namespace

InfinitePath construct_shadow_finite(Enumeration& en, const Chain& c,
                                     Index k) {
  if (c.infinite())
    throw Error("construct_shadow_finite: chain must be finite");
  std::size_t m = c.elements.size();
  if (m == 0) throw Error("construct_shadow_finite: chain is empty");
  check_linkage(c, m - 1);
  const GraphPresentation& g = en.graph();

  std::vector<Index> word;
  for (std::size_t i = 1; i <= m; ++i) word.push_back(c.element(i).at(1));
  if (c.element(m).at(1) <= en.fset_max(en.nk(k)))
    for (Index j = 1; j <= k; ++j)
      word.push_back(c.element(m).at(static_cast<std::size_t>(j) + 1));

  // Deterministic completion: walk by least-index edges and close a cycle
  // at the first repeated vertex.
  Vertex v = g.resolve(word.back()).range;
  std::vector<Vertex> seen{v};
  std::vector<Index> walk;
  for (std::size_t step = 0; step < kCompletionGuard; ++step) {
    Index e = least_out_index(g, v);
    walk.push_back(e);
    v = g.resolve(e).range;
    auto it = std::find(seen.begin(), seen.end(), v);
    if (it != seen.end()) {
      std::size_t p = static_cast<std::size_t>(it - seen.begin());
      std::vector<Index> prefix = word;
      prefix.insert(prefix.end(), walk.begin(),
                    walk.begin() + static_cast<std::ptrdiff_t>(p));
      return InfinitePath(
          g, std::move(prefix),
          std::vector<Index>(walk.begin() + static_cast<std::ptrdiff_t>(p),
                             walk.end()));
    }
    seen.push_back(v);
  }
  throw Error(
      "construct_shadow_finite: the least-edge walk reaches no cycle (the "
      "graph has no reachable cycle from the chain end)");
}

InfinitePath construct_shadow_infinite(Enumeration& en, const Chain& c,
                                       Index) {
  if (!c.infinite())
    throw Error("construct_shadow_infinite: chain must be infinite");
  std::size_t m = c.elements.size();
  check_linkage(c, m + c.tail.size());  // covers the tail wrap
  std::vector<Index> prefix;
  for (std::size_t i = 1; i <= m; ++i) prefix.push_back(c.element(i).at(1));
  std::vector<Index> cycle;
  for (const auto& t : c.tail) cycle.push_back(t.at(1));
  return InfinitePath(en.graph(), std::move(prefix), std::move(cycle));
}

}  // namespace shadow

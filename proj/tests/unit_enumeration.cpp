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

#include <doctest.h>

#include <map>
#include <set>

#include "shadow/enumeration.hpp"
#include "shadow/parse.hpp"
#include "shadow/shadowing.hpp"

using namespace shadow;

namespace {

// Independent walk-counting oracle: dynamic programming over the adjacency
// of the truncation at k.
Nat dp_count(const GraphPresentation& g, Index k, std::size_t len) {
  FiniteGraph t = g.truncate(k);
  if (len == 0) {
    std::set<Vertex> sources;
    for (const auto& e : t.edges) sources.insert(e.source);
    return Nat(sources.size());
  }
  std::map<Vertex, Nat> ending;  // walks of current length ending at vertex
  for (const auto& e : t.edges) ending[e.range] += 1;
  for (std::size_t l = 2; l <= len; ++l) {
    std::map<Vertex, Nat> next;
    for (const auto& e : t.edges) {
      auto it = ending.find(e.source);
      if (it != ending.end()) next[e.range] += it->second;
    }
    ending = std::move(next);
  }
  Nat total = 0;
  for (const auto& [v, c] : ending) total += c;
  return total;
}

}  // namespace

TEST_CASE("count_paths matches an independent DP oracle") {
  for (const std::string& name : builtin_names()) {
    CAPTURE(name);
    GraphPresentation gp = builtin(name);
    Enumeration en(gp);
    for (Index k = 1; k <= 5; ++k)
      for (std::size_t len = 0; len <= 6; ++len) {
        CAPTURE(k);
        CAPTURE(len);
        CHECK(en.count_paths(k, len) == dp_count(en.graph(), k, len));
      }
  }
}

TEST_CASE("golden block counts and ranks on the rose") {
  GraphPresentation gp = builtin("rose");
  Enumeration en(gp);
  CHECK(en.nk(2) == 7);
  CHECK(en.nk(3) == 40);
  CHECK(en.rank_vertex(parse_vertex("v1")) == 1);
  CHECK(en.rank(parse_finite_path("e1")) == 2);
  CHECK(en.rank(parse_finite_path("e2.e2")) == 7);
  CHECK(en.rank(parse_finite_path("e1.e3")) == 9);
  CHECK(en.rank_edge(3) == 8);
  CHECK(en.entry_at(7) == parse_finite_path("e2.e2"));
  CHECK(en.entry_at(40) == parse_finite_path("e3.e3.e3"));
}

TEST_CASE("golden ranks on the two-vertex alternating graph") {
  GraphPresentation gp = builtin("e2");
  Enumeration en(gp);
  CHECK(en.rank_edge(2) == 4);
  CHECK(en.rank_edge(3) == 7);
  CHECK(en.rank_edge(4) == 19);
  CHECK(en.fset_max(19) == 4);
  CHECK(en.fset_max(18) == 3);
}

TEST_CASE("golden block count on the line") {
  GraphPresentation gp = builtin("line");
  Enumeration en(gp);
  CHECK(en.nk(2) == 5);
}

TEST_CASE("entry_at and rank are mutually inverse on the stream") {
  for (const std::string& name : builtin_names()) {
    CAPTURE(name);
    GraphPresentation gp = builtin(name);
    Enumeration en(gp);
    auto entries = en.stream_prefix(200);
    REQUIRE(entries.size() == 200);
    Nat i = 0;
    for (const auto& p : entries) {
      ++i;
      CHECK(en.rank(p) == i);
      CHECK(en.entry_at(i) == p);
      CHECK(p.valid(en.graph()));
    }
  }
}

TEST_CASE("the stream respects the normative order") {
  // Entries are grouped in blocks by max(max edge index, length); within a
  // block, increasing length, then lexicographic.
  for (const std::string& name : builtin_names()) {
    CAPTURE(name);
    GraphPresentation gp = builtin(name);
    Enumeration en(gp);
    auto entries = en.stream_prefix(150);
    auto block = [&](const FinitePath& p) -> Index {
      if (p.is_vertex()) return en.graph().min_out_index(*p.vertex).value();
      Index m = static_cast<Index>(p.length());
      for (Index e : p.edges) m = std::max(m, e);
      return m;
    };
    for (std::size_t i = 1; i < entries.size(); ++i) {
      const FinitePath &a = entries[i - 1], &b = entries[i];
      Index ba = block(a), bb = block(b);
      CAPTURE(i);
      CHECK(ba <= bb);
      if (ba == bb) {
        // Vertices precede paths; shorter paths precede longer ones; equal
        // lengths are ordered lexicographically.
        CHECK(a.length() <= b.length());
        if (a.length() == b.length() && !a.is_vertex())
          CHECK(a.edges < b.edges);
      }
    }
  }
}

TEST_CASE("cumulative counts agree with block membership in the stream") {
  GraphPresentation gp = builtin("rose");
  Enumeration en(gp);
  auto entries = en.stream_prefix(40);
  // On the rose every path over e1..ek of length <= k sits in block <= k.
  CHECK(en.cumulative(2) == 7);
  CHECK(en.cumulative(3) == 40);
  CHECK(en.entry_at(en.cumulative(3)) == entries.back());
}

TEST_CASE("fset_max is the threshold inverse of rank_edge") {
  for (const std::string& name : builtin_names()) {
    CAPTURE(name);
    GraphPresentation gp = builtin(name);
    Enumeration en(gp);
    for (Nat t = 1; t <= 60; ++t) {
      Index f = en.fset_max(t);
      CAPTURE(t.str());
      if (f > 0) CHECK(en.rank_edge(f) <= t);
      CHECK(en.rank_edge(f + 1) > t);
    }
  }
}

TEST_CASE("rank rejects invalid paths") {
  GraphPresentation gp = builtin("e2");
  Enumeration en(gp);
  CHECK_THROWS_AS((void)en.rank(parse_finite_path("e1.e3")), Error);
}

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

#include <algorithm>
#include <set>

#include "shadow/parse.hpp"
#include "shadow/shadowing.hpp"

using namespace shadow;

TEST_CASE("builtin presentations parse and print round-trip") {
  for (const std::string& name : builtin_names()) {
    CAPTURE(name);
    const GraphPresentation& g = builtin(name);
    std::string printed = print_graph(g);
    GraphPresentation again = parse_graph(printed);
    CHECK(print_graph(again) == printed);
    CHECK(again.name == g.name);
    CHECK(g.validate_no_sinks().verdict == SinkVerdict::Valid);
  }
}

TEST_CASE("resolve follows the family parameterization") {
  const GraphPresentation& g = builtin("renewal");
  // e1 is the base loop, e[2k] descends, e[2k+1] fans out from u1.
  CHECK(g.resolve(1).source == Vertex{"u", 1});
  CHECK(g.resolve(1).range == Vertex{"u", 1});
  CHECK(g.resolve(4) == Edge{4, Vertex{"u", 3}, Vertex{"u", 2}});
  CHECK(g.resolve(5) == Edge{5, Vertex{"u", 1}, Vertex{"u", 3}});
  CHECK(g.resolve(101) == Edge{101, Vertex{"u", 1}, Vertex{"u", 51}});
  CHECK_THROWS_AS((void)g.resolve(0), Error);

  const GraphPresentation& line = builtin("line");
  CHECK(line.resolve(7) == Edge{7, Vertex{"u", 7}, Vertex{"u", 8}});
}

TEST_CASE("covered reports exactly the presented indices") {
  const GraphPresentation& g = builtin("renewal");
  for (Index k = 1; k <= 12; ++k) CHECK(g.covered(k));
  CHECK_FALSE(g.covered(0));
  CHECK_FALSE(g.covered(-3));
  CHECK_FALSE(builtin("rose").finite());
}

TEST_CASE("finite graphs report a maximal index") {
  GraphPresentation g = parse_graph(
      "graph fin\n"
      "edge e1 from u1 to u2\n"
      "edge e2 from u2 to u1\n"
      "edge e3 from u1 to u1\n");
  CHECK(g.finite());
  CHECK(g.max_index() == 3);
  CHECK(g.validate_no_sinks().verdict == SinkVerdict::Valid);
}

TEST_CASE("sink presentations are rejected at parse time") {
  CHECK_THROWS_AS(parse_graph("graph s\n"
                              "edge e1 from u1 to u2\n"
                              "edge e2 from u1 to u1\n"),
                  Error);
  GraphPresentation g;
  g.name = "s";
  g.exceptional = {Edge{1, Vertex{"u", 1}, Vertex{"u", 2}},
                   Edge{2, Vertex{"u", 1}, Vertex{"u", 1}}};
  SinkReport r = g.validate_no_sinks();
  CHECK(r.verdict == SinkVerdict::Invalid);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == Vertex{"u", 2});
}

TEST_CASE("out-edge and in-edge sets enumerate correctly") {
  const GraphPresentation& g = builtin("renewal");
  auto outs = g.out_edges(Vertex{"u", 1});
  auto low = g.members_upto(outs, 9);
  std::sort(low.begin(), low.end());
  CHECK(low == std::vector<Index>{1, 3, 5, 7, 9});
  CHECK(g.set_has_index_above(outs, 1000));

  auto ins = g.in_edges(Vertex{"u", 1});
  auto low_in = g.members_upto(ins, 9);
  std::sort(low_in.begin(), low_in.end());
  CHECK(low_in == std::vector<Index>{1, 2});
  CHECK_FALSE(g.set_has_index_above(ins, 2));

  CHECK(g.min_out_index(Vertex{"u", 1}) == 1);
  CHECK(g.min_out_index(Vertex{"u", 2}) == 2);
  CHECK(g.min_out_index(Vertex{"u", 3}) == 4);
}

TEST_CASE("followers agree with the out-edges of the range") {
  const GraphPresentation& g = builtin("e2");
  auto f = g.members_upto(g.followers(1), 10);  // r(e1) = v
  std::sort(f.begin(), f.end());
  CHECK(f == std::vector<Index>{2, 4, 6, 8, 10});
}

TEST_CASE("truncation keeps exactly the low-index part") {
  FiniteGraph t = builtin("rose").truncate(3);
  CHECK(t.vertices.size() == 1);
  CHECK(t.edges.size() == 3);

  FiniteGraph r = builtin("renewal").truncate(4);
  CHECK(r.edges.size() == 4);
  std::set<Vertex> vs(r.vertices.begin(), r.vertices.end());
  CHECK(vs == std::set<Vertex>{{"u", 1}, {"u", 2}, {"u", 3}});
}

TEST_CASE("finite path validity checks junctions") {
  const GraphPresentation& g = builtin("renewal");
  CHECK(FinitePath::of_edges({5, 4}).valid(g));   // u1 -> u3 -> u2
  CHECK_FALSE(FinitePath::of_edges({5, 3}).valid(g));
  CHECK(FinitePath::of_edges({5, 4, 2, 1}).valid(g));
  FinitePath v = FinitePath::of_vertex(Vertex{"u", 3});
  CHECK(v.valid(g));
  CHECK(v.length() == 0);
  CHECK(FinitePath::of_edges({5, 4}).source(g) == Vertex{"u", 1});
  CHECK(FinitePath::of_edges({5, 4}).range(g) == Vertex{"u", 2});
}

TEST_CASE("infinite paths canonicalize") {
  // Prefix symbols that already belong to the cycle are absorbed.
  CHECK(InfinitePath({1}, {1}) == InfinitePath({}, {1}));
  // Cycle powers reduce to the primitive cycle.
  CHECK(InfinitePath({}, {1, 2, 1, 2}) == InfinitePath({}, {1, 2}));
  // Distinct rotations of a cycle are distinct points.
  CHECK(InfinitePath({}, {2, 1}).cycle() == std::vector<Index>{2, 1});
  CHECK(InfinitePath({}, {2, 1}) != InfinitePath({}, {1, 2}));
  CHECK(InfinitePath({}, {2, 1}).shifted(1) == InfinitePath({}, {1, 2}));
  // Shifting drops leading symbols and re-canonicalizes.
  InfinitePath x({3, 1}, {2});
  CHECK(x.shifted(1) == InfinitePath({1}, {2}));
  CHECK(x.shifted(5) == InfinitePath({}, {2}));
  CHECK(x.at(1) == 3);
  CHECK(x.at(2) == 1);
  CHECK(x.at(100) == 2);
}

TEST_CASE("infinite path constructor rejects junction mismatches") {
  const GraphPresentation& g = builtin("e2");
  // e1: u -> v, but e3 is a loop at u.
  CHECK_THROWS_AS(InfinitePath(g, {1}, {3}), Error);
  CHECK_NOTHROW(InfinitePath(g, {1}, {4}));
  CHECK(InfinitePath(g, {3, 1}, {4}).valid(g));
}

TEST_CASE("path literals parse and print") {
  CHECK(print_finite_path(parse_finite_path("e1.e2.e10")) == "e1.e2.e10");
  CHECK(parse_finite_path("v1").is_vertex());
  CHECK(parse_vertex("u12") == Vertex{"u", 12});
  GraphPresentation gp = builtin("rose");
  InfinitePath p = parse_infinite_path(gp, "e3:(e1.e2)");
  CHECK(p.prefix() == std::vector<Index>{3});
  CHECK(p.cycle() == std::vector<Index>{1, 2});
  CHECK(print_infinite_path(p) == "e3:(e1.e2)");
  CHECK_THROWS_AS(parse_finite_path("e1..e2"), Error);
  CHECK_THROWS_AS(parse_infinite_path(gp, "e1:()"), Error);
}

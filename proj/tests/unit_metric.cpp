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

#include "helpers.hpp"
#include "shadow/metric.hpp"
#include "shadow/parse.hpp"
#include "shadow/shadowing.hpp"

using namespace shadow;
using namespace shadow_test;

namespace {

Distance dmax(const Distance& a, const Distance& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return *a.exp <= *b.exp ? a : b;
}

bool dle(const Distance& a, const Distance& b) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  return *a.exp >= *b.exp;
}

}  // namespace

TEST_CASE("golden distances on the rose") {
  GraphPresentation gp = builtin("rose");
  Enumeration en(gp);
  InfinitePath x = parse_infinite_path(gp, ":(e1)");
  InfinitePath y = parse_infinite_path(gp, "e1:(e2)");
  Distance d = distance(en, x, y);
  REQUIRE_FALSE(d.is_zero());
  CHECK(*d.exp == 4);  // first distinguishing entry: e1.e1 at rank 4

  Distance d2 = distance(en, parse_infinite_path(gp, "e3:(e1)"),
                         parse_infinite_path(gp, "e3:(e2)"));
  REQUIRE_FALSE(d2.is_zero());
  CHECK(*d2.exp == 11);  // first distinguishing entry: e3.e1 at rank 11
}

TEST_CASE("distance is zero exactly on equal paths") {
  GraphPresentation gp = builtin("renewal");
  Enumeration en(gp);
  InfinitePath x = parse_infinite_path(gp, "e5.e4.e2:(e1)");
  CHECK(distance(en, x, x).is_zero());
  CHECK(distance(en, x, InfinitePath(parse_infinite_path(gp, "e5.e4.e2.e1:(e1.e1)")))
            .is_zero());
  CHECK_FALSE(distance(en, x, parse_infinite_path(gp, "e5.e4:(e2.e3)")).is_zero());
}

TEST_CASE("first_disagreement classifies the three cases") {
  GraphPresentation gp = builtin("e2");
  const GraphPresentation& g = gp;
  InfinitePath x = parse_infinite_path(gp, ":(e3)");
  InfinitePath y = parse_infinite_path(gp, ":(e4)");
  // Different sources: s(e3) = u, s(e4) = v.
  CHECK(first_disagreement(g, x, y).kind == Disagreement::Kind::SourceMismatch);
  auto d = first_disagreement(g, x, parse_infinite_path(gp, "e3:(e5)"));
  CHECK(d.kind == Disagreement::Kind::At);
  CHECK(d.position == 2);
  CHECK(first_disagreement(g, x, x).kind == Disagreement::Kind::Equal);
}

TEST_CASE("escape_index finds the first high edge") {
  GraphPresentation gp = builtin("rose");
  InfinitePath x = parse_infinite_path(gp, "e2.e1:(e5.e6)");
  auto i = escape_index(x, 4);
  REQUIRE(i.has_value());
  CHECK(*i == 3);
  CHECK_FALSE(escape_index(parse_infinite_path(gp, ":(e1.e2)"), 4).has_value());
  CHECK(escape_index(parse_infinite_path(gp, ":(e1.e9)"), 4) == 2);
}

TEST_CASE("distance agrees with an enumeration scan oracle") {
  for (const std::string& name : builtin_names()) {
    CAPTURE(name);
    GraphPresentation gp = builtin(name);
    Enumeration en(gp);
    const GraphPresentation& g = en.graph();
    auto entries = en.stream_prefix(4000);
    std::mt19937 rng(20260826);
    int done = 0;
    for (int it = 0; it < 400 && done < 120; ++it) {
      auto x = random_periodic_path(g, rng, 5, 4, 4);
      auto y = random_periodic_path(g, rng, 5, 4, 4);
      if (!x || !y) continue;
      ++done;
      Distance d = distance(en, *x, *y);
      auto scan = scan_distinguishing_rank(g, entries, *x, *y);
      if (scan) {
        REQUIRE_FALSE(d.is_zero());
        CHECK(*d.exp == Nat(*scan));
      } else if (*x == *y) {
        CHECK(d.is_zero());
      } else {
        REQUIRE_FALSE(d.is_zero());
        CHECK(*d.exp > entries.size());
      }
    }
    // Cycle-free presentations admit no eventually periodic points at all.
    if (name != "line" && name != "e1variant") CHECK(done > 0);
  }
}

TEST_CASE("metric axioms hold on sampled paths") {
  GraphPresentation gp = builtin("renewal");
  Enumeration en(gp);
  const GraphPresentation& g = en.graph();
  std::mt19937 rng(7);
  std::vector<InfinitePath> pts;
  while (pts.size() < 12) {
    auto p = random_periodic_path(g, rng, 6, 4, 4);
    if (p) pts.push_back(*p);
  }
  for (const auto& x : pts)
    for (const auto& y : pts) {
      Distance dxy = distance(en, x, y);
      CHECK(dxy.is_zero() == (x == y));
      Distance dyx = distance(en, y, x);
      CHECK(dxy.str() == dyx.str());
      for (const auto& z : pts) {
        // Ultrametric inequality.
        Distance dxz = distance(en, x, z);
        CHECK(dle(dxz, dmax(dxy, distance(en, y, z))));
      }
    }
}

TEST_CASE("finite path distances use initial-segment semantics") {
  GraphPresentation gp = builtin("rose");
  Enumeration en(gp);
  FinitePath f = parse_finite_path("e1");
  InfinitePath x = parse_infinite_path(gp, ":(e1)");
  // First entry that separates them: e1.e1 (rank 4) extends only x.
  Distance d = distance(en, f, x);
  REQUIRE_FALSE(d.is_zero());
  CHECK(*d.exp == 4);
  CHECK(distance(en, x, f).str() == d.str());
  CHECK(distance(en, f, f).is_zero());
  // Same scan oracle applies to finite paths.
  auto entries = en.stream_prefix(100);
  auto scan = scan_distinguishing_rank(en.graph(), entries, f, x);
  REQUIRE(scan.has_value());
  CHECK(*scan == 4);
}

TEST_CASE("below_nk_threshold matches the exact comparison") {
  for (const std::string& name : {std::string("rose"), std::string("e2"),
                                  std::string("renewal")}) {
    CAPTURE(name);
    GraphPresentation gp = builtin(name);
    Enumeration en(gp);
    const GraphPresentation& g = en.graph();
    std::mt19937 rng(99);
    for (Index k = 1; k <= 3; ++k) {
      Nat t = en.nk(k);
      int done = 0;
      for (int it = 0; it < 200 && done < 60; ++it) {
        auto x = random_periodic_path(g, rng, 5, 3, 3);
        auto y = random_periodic_path(g, rng, 5, 3, 3);
        if (!x || !y || *x == *y) continue;
        ++done;
        Distance d = distance(en, *x, *y);
        CHECK(below_nk_threshold(g, *x, *y, k) == d.below_exp(t));
      }
      CHECK(done > 0);
    }
  }
}

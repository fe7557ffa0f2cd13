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

#include <set>

#include "helpers.hpp"
#include "shadow/dynamics.hpp"
#include "shadow/parse.hpp"
#include "shadow/shadowing.hpp"

using namespace shadow;
using namespace shadow_test;

TEST_CASE("the shift map drops leading symbols") {
  GraphPresentation gp = builtin("rose");
  const GraphPresentation& g = gp;
  InfinitePath x = parse_infinite_path(gp, "e3.e1:(e2)");
  CHECK(shift(g, x, 1) == parse_infinite_path(gp, "e1:(e2)"));
  CHECK(shift(g, x, 4) == parse_infinite_path(gp, ":(e2)"));
  FinitePath f = parse_finite_path("e3.e1");
  CHECK(shift(g, f, 1) == parse_finite_path("e1"));
  CHECK(shift(g, f, 2) == FinitePath::of_vertex(Vertex{"v", 1}));
  CHECK_THROWS_AS((void)shift(g, f, 3), Error);
}

TEST_CASE("f_index golden values and bijectivity") {
  std::vector<std::size_t> lengths{2, 3, 4};
  CHECK(f_index(lengths, 1, 1) == 1);
  CHECK(f_index(lengths, 2, 1) == 2);
  CHECK(f_index(lengths, 2, 2) == 3);
  CHECK(f_index(lengths, 3, 2) == 5);
  CHECK(f_index(lengths, 3, 4) == 7);
  CHECK(f_inverse(lengths, 5) == std::pair<std::size_t, std::size_t>{3, 2});
  // Exhaustive check of bijectivity onto {1 .. sum - l + 1} for small shapes.
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t l = 1 + rng() % 3;
    std::vector<std::size_t> ls;
    std::size_t total = 0;
    for (std::size_t i = 0; i < l; ++i) {
      ls.push_back(2 + rng() % 3);
      total += ls.back();
    }
    std::set<Nat> image;
    for (std::size_t i = 1; i <= l; ++i) {
      std::size_t n_hi = (i == l) ? ls[i - 1] : ls[i - 1] - 1;
      for (std::size_t n = 1; n <= n_hi; ++n) {
        Nat j = f_index(ls, i, n);
        CHECK(f_inverse(ls, j) == std::pair{i, n});
        image.insert(j);
      }
    }
    CHECK(image.size() == total - l + 1);
    CHECK(*image.begin() == 1);
    CHECK(*image.rbegin() == Nat(total - l + 1));
  }
  CHECK_THROWS_AS((void)f_inverse(lengths, 8), Error);
  CHECK_THROWS_AS((void)f_inverse(lengths, 0), Error);
}

TEST_CASE("validate_chain accepts valid chains and locates violations") {
  GraphPresentation gp = builtin("rose");
  Enumeration en(gp);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = random_chain(en, 2, 5, rng, 5);
    REQUIRE(c.has_value());
    ChainVerdict v = validate_chain(en, *c);
    CHECK(v.valid);
  }
  // Tamper: replace the middle element with a distant path.
  auto c = random_chain(en, 3, 4, rng, 3);
  REQUIRE(c.has_value());
  c->elements[2] = parse_infinite_path(gp, ":(e6)");
  ChainVerdict v = validate_chain(en, *c);
  CHECK_FALSE(v.valid);
  CHECK(v.position >= 2);
  CHECK_FALSE(v.violation.below_exp(c->delta_exp));
}

TEST_CASE("chains built from admissible families validate") {
  GraphPresentation gp = builtin("rose");
  Enumeration en(gp);
  Nat t = en.nk(2);  // N(2) = 7, F = {e1, e2}
  PathFamily fam{{parse_finite_path("e1.e2.e3"), parse_finite_path("e3.e1.e3"),
                  parse_finite_path("e3.e2")}};
  REQUIRE_FALSE(check_family_fpc(en, fam, t).has_value());
  std::vector<InfinitePath> ext{parse_infinite_path(gp, "e1.e2.e3:(e1)"),
                                parse_infinite_path(gp, "e3.e1.e3:(e2)"),
                                parse_infinite_path(gp, "e3.e2:(e1)")};
  Chain c = chain_from_family(en, fam, ext, t);
  CHECK(c.finite_length() == 6);  // sum 8 - l 3 + 1
  CHECK_FALSE(c.infinite());
  CHECK(validate_chain(en, c).valid);
  // x^{f(i,n)} = sigma^{n-1}(y^i) with lengths (3, 3, 2).
  CHECK(c.element(1) == ext[0]);
  CHECK(c.element(2) == shift(en.graph(), ext[0], 1));
  CHECK(c.element(3) == ext[1]);
  CHECK(c.element(4) == shift(en.graph(), ext[1], 1));
  CHECK(c.element(5) == ext[2]);
  CHECK(c.element(6) == shift(en.graph(), ext[2], 1));
}

TEST_CASE("family admissibility diagnostics") {
  GraphPresentation gp = builtin("rose");
  Enumeration en(gp);
  Nat t = en.nk(2);
  // Interior symbol e4 lies outside F_delta and is never a block boundary:
  // not admissible.
  PathFamily bad{{parse_finite_path("e1.e4.e3"), parse_finite_path("e3.e1")}};
  CHECK(check_family_fpc(en, bad, t).has_value());
  // Block of length 1 is rejected.
  PathFamily short_block{{parse_finite_path("e3")}};
  CHECK(check_family_fpc(en, short_block, t).has_value());
  // Exit symbol inside F_delta is rejected.
  PathFamily low_exit{{parse_finite_path("e1.e1"), parse_finite_path("e3.e2")}};
  CHECK(check_family_fpc(en, low_exit, t).has_value());
}

TEST_CASE("chains with an infinite tail validate") {
  GraphPresentation gp = builtin("rose");
  Enumeration en(gp);
  Nat t = en.nk(2);
  PathFamily fam{{parse_finite_path("e1.e3"), parse_finite_path("e3.e3")}};
  InfinitePath gamma = parse_infinite_path(gp, "e3:(e1)");
  REQUIRE_FALSE(check_family_ipc2(en, fam, gamma, t).has_value());
  std::vector<InfinitePath> ext{parse_infinite_path(gp, "e1.e3:(e2)"),
                                parse_infinite_path(gp, "e3.e3:(e1)")};
  Chain c = chain_from_family_and_tail(en, fam, gamma, ext, t);
  CHECK(c.infinite());
  CHECK(validate_chain(en, c).valid);
  // The tail runs through all shifts of gamma; gamma itself is the last
  // finite element (its prefix is part of the finite section).
  CHECK(c.element(c.finite_length()) == gamma);
  CHECK(c.element(c.finite_length() + 1) == shift(en.graph(), gamma, 1));
}

TEST_CASE("construct_shadow_finite produces an exact shadow point") {
  GraphPresentation gp = builtin("rose");
  Enumeration en(gp);
  std::mt19937 rng(21);
  for (Index k = 1; k <= 3; ++k) {
    Nat t = en.nk(k);
    for (int trial = 0; trial < 10; ++trial) {
      auto c = random_chain(en, k, 6, rng, 4);
      REQUIRE(c.has_value());
      REQUIRE(validate_chain(en, *c).valid);
      InfinitePath x = construct_shadow_finite(en, *c, k);
      for (std::size_t n = 1; n <= c->finite_length(); ++n) {
        Distance d = distance(en, shift(en.graph(), x, n - 1), c->element(n));
        CAPTURE(n);
        CHECK(d.below_exp(Nat(k)));  // d < 2^(-k)
      }
    }
  }
}

TEST_CASE("construct_shadow_infinite shadows periodic chains") {
  GraphPresentation gp = builtin("rose");
  Enumeration en(gp);
  std::mt19937 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    Index k = 2;
    auto base = random_chain(en, k, 5, rng, 4);
    REQUIRE(base.has_value());
    // Make it eventually periodic: repeat the last element's shift orbit as
    // the tail. A purely periodic element gives a first-symbol-linked tail
    // when each successor keeps a long agreement window, so just use the
    // constant tail consisting of one periodic element whose shift returns
    // to itself after one period.
    InfinitePath last = base->elements.back();
    std::vector<InfinitePath> tail;
    InfinitePath cyc({}, last.cycle());
    // Shift `last` past its prefix in the finite part, then let the tail run
    // through one full period of exact shifts so the wrap junction is exact.
    std::size_t pl = last.prefix().size();
    Chain c;
    c.delta_exp = base->delta_exp;
    c.elements = base->elements;
    for (std::size_t s = 0; s < pl; ++s)
      c.elements.push_back(last.shifted(s + 1));
    for (std::size_t s = 1; s <= cyc.cycle().size(); ++s)
      tail.push_back(cyc.shifted(s));
    c.tail = tail;
    REQUIRE(validate_chain(en, c).valid);
    InfinitePath x = construct_shadow_infinite(en, c, k);
    for (std::size_t n = 1; n <= c.finite_length() + 2 * tail.size(); ++n) {
      Distance d = distance(en, shift(en.graph(), x, n - 1), c.element(n));
      CHECK(d.below_exp(Nat(k)));
    }
  }
}

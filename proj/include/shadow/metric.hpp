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

// The exact metric d on finite and infinite paths: distances are Zero or
// dyadic values 2^(-m) where m is the rank of the first enumeration entry
// that is an initial segment of exactly one argument. Also the disagreement
// indexes and the fast N(k)-threshold predicate.

#ifndef SHADOW_METRIC_HPP_
#define SHADOW_METRIC_HPP_

#include <optional>
#include <string>

#include "shadow/enumeration.hpp"
#include "shadow/path.hpp"

namespace shadow {

// Zero or a dyadic value 2^(-exp) with exp >= 1.
struct Distance {
  std::optional<Nat> exp;  // disengaged means Zero

  static Distance zero() { return {std::nullopt}; }
  static Distance dyadic(Nat e) { return {std::move(e)}; }

  bool is_zero() const { return !exp.has_value(); }

  // d < 2^(-t).
  bool below_exp(const Nat& t) const { return is_zero() || *exp > t; }

  bool operator==(const Distance&) const = default;
  // Value order: Zero < 2^(-b) < 2^(-a) whenever a < b.
  bool operator<(const Distance& o) const {
    if (is_zero()) return !o.is_zero();
    if (o.is_zero()) return false;
    return *exp > *o.exp;
  }
  bool operator<=(const Distance& o) const { return *this < o || *this == o; }

  std::string str() const;
};

// Outcome of positionwise comparison. A source mismatch precedes all edge
// positions; At(i) means equal sources and first differing edge at 1-based
// position i.
struct Disagreement {
  enum class Kind { Equal, SourceMismatch, At };
  Kind kind;
  std::size_t position = 0;  // engaged for Kind::At

  static Disagreement equal() { return {Kind::Equal, 0}; }
  static Disagreement source_mismatch() { return {Kind::SourceMismatch, 0}; }
  static Disagreement at(std::size_t i) { return {Kind::At, i}; }
  bool operator==(const Disagreement&) const = default;
};

Disagreement first_disagreement(const GraphPresentation& g,
                                const InfinitePath& x, const InfinitePath& y);
Disagreement first_disagreement(const GraphPresentation& g,
                                const FinitePath& x, const FinitePath& y);

// Minimal 1-based position of x whose edge index exceeds k, if any
// (decidable from the prefix and one cycle period).
std::optional<std::size_t> escape_index(const InfinitePath& x, Index k);

Distance distance(Enumeration& en, const InfinitePath& x,
                  const InfinitePath& y);
Distance distance(Enumeration& en, const FinitePath& x, const FinitePath& y);
// Mixed case: a finite path against an infinite one (X contains both).
Distance distance(Enumeration& en, const FinitePath& x, const InfinitePath& y);
Distance distance(Enumeration& en, const InfinitePath& x, const FinitePath& y);

// Exactly distance(x, y) < 2^(-N(k)), decided without computing any rank.
// Requires x != y.
bool below_nk_threshold(const GraphPresentation& g, const InfinitePath& x,
                        const InfinitePath& y, Index k);

}  // namespace shadow

#endif  // SHADOW_METRIC_HPP_

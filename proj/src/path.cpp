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

#include "shadow/path.hpp"

#include <algorithm>

namespace shadow {

namespace {

// Smallest period of w: w is (w[0..p))^{|w|/p}.
std::size_t primitive_period(const std::vector<Index>& w) {
  for (std::size_t p = 1; p <= w.size(); ++p) {
    if (w.size() % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < w.size() && ok; ++i)
      ok = (w[i] == w[i - p]);
    if (ok) return p;
  }
  return w.size();
}

// Index of the lexicographically least rotation (Booth's algorithm would be
// overkill; cycles here are short).
std::size_t least_rotation(const std::vector<Index>& w) {
  std::size_t best = 0;
  auto less_rot = [&](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < w.size(); ++t) {
      Index x = w[(i + t) % w.size()], y = w[(j + t) % w.size()];
      if (x != y) return x < y;
    }
    return false;
  };
  for (std::size_t i = 1; i < w.size(); ++i)
    if (less_rot(i, best)) best = i;
  return best;
}

}  // namespace

InfinitePath::InfinitePath(std::vector<Index> prefix, std::vector<Index> cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw Error("infinite path requires a non-empty cycle");
  canonicalize();
}

InfinitePath::InfinitePath(const GraphPresentation& g,
                           std::vector<Index> prefix, std::vector<Index> cycle)
    : InfinitePath(std::move(prefix), std::move(cycle)) {
  if (!valid(g)) throw Error("infinite path has a junction mismatch");
}

void InfinitePath::canonicalize() {
  cycle_.resize(primitive_period(cycle_));
  // Absorb the maximal common suffix of prefix and cycle: "a b (c d b)^inf"
  // is the same sequence as "a (b c d)^inf".
  while (!prefix_.empty() && prefix_.back() == cycle_.back()) {
    prefix_.pop_back();
    std::rotate(cycle_.begin(), cycle_.end() - 1, cycle_.end());
  }
  // The minimal prefix plus the primitive cycle is already a unique
  // representative of the sequence; rotating the cycle any further would
  // change which point it denotes.
}

bool InfinitePath::valid(const GraphPresentation& g) const {
  // prefix . cycle . cycle junction checks cover the whole sequence.
  std::vector<Index> probe = prefix_;
  probe.insert(probe.end(), cycle_.begin(), cycle_.end());
  probe.insert(probe.end(), cycle_.begin(), cycle_.end());
  return g.is_path(probe);
}

InfinitePath InfinitePath::shifted(std::size_t n) const {
  if (n <= prefix_.size())
    return InfinitePath(
        std::vector<Index>(prefix_.begin() + static_cast<long>(n),
                           prefix_.end()),
        cycle_);
  std::size_t r = (n - prefix_.size()) % cycle_.size();
  std::vector<Index> c = cycle_;
  std::rotate(c.begin(), c.begin() + static_cast<long>(r), c.end());
  return InfinitePath({}, c);
}

}  // namespace shadow

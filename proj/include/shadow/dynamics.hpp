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

// The shift map, delta-chains, the index bijection f(i,n), path-family
// condition checks, the chain constructors from families (with and without
// an infinite tail), and the shadow-point constructors for first-symbol
// linked chains.

#ifndef SHADOW_DYNAMICS_HPP_
#define SHADOW_DYNAMICS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shadow/metric.hpp"

namespace shadow {

// sigma^n. Finite case: shifting a length-n path n times yields its range
// vertex; n beyond the length is an error.
InfinitePath shift(const GraphPresentation& g, const InfinitePath& x,
                   std::size_t n);
FinitePath shift(const GraphPresentation& g, const FinitePath& x,
                 std::size_t n);

// A finite or eventually periodic delta-chain: elements followed by an
// optional tail block repeated cyclically. element(n) is 1-based; infinite
// chains have a non-empty tail.
struct Chain {
  std::vector<InfinitePath> elements;
  std::vector<InfinitePath> tail;
  Nat delta_exp;  // declared threshold delta = 2^(-delta_exp)

  bool infinite() const { return !tail.empty(); }
  std::size_t finite_length() const { return elements.size(); }
  const InfinitePath& element(std::size_t n) const {
    if (n == 0) throw Error("chain positions are 1-based");
    if (n <= elements.size()) return elements[n - 1];
    if (tail.empty()) throw Error("chain position beyond finite chain");
    return tail[(n - 1 - elements.size()) % tail.size()];
  }
};

struct ChainVerdict {
  bool valid = true;
  std::size_t position = 0;  // first n with d(sigma(x_n), x_{n+1}) >= delta
  Distance violation;
};

// Exact validation; periodic tails are validated over the finite part, one
// tail period, and the wrap junction.
ChainVerdict validate_chain(Enumeration& en, const Chain& c);

// The index bijection f(i, n) = sum_{j<i} |lambda^j| + n - i + 1 on
// Dom(f) = {(i,n): 1 <= i <= l, 1 <= n < |lambda^i|} + {(l, |lambda^l|)},
// with image {1 .. sum |lambda^i| - l + 1}.
Nat f_index(const std::vector<std::size_t>& lengths, std::size_t i,
            std::size_t n);
std::pair<std::size_t, std::size_t> f_inverse(
    const std::vector<std::size_t>& lengths, const Nat& j);

// A finite list lambda^1 .. lambda^l of finite paths.
struct PathFamily {
  std::vector<FinitePath> paths;

  std::size_t size() const { return paths.size(); }
  std::vector<std::size_t> lengths() const {
    std::vector<std::size_t> r;
    r.reserve(paths.size());
    for (const auto& p : paths) r.push_back(p.length());
    return r;
  }
};

// Family admissibility at delta = 2^(-t_delta): every |lambda^i| >= 2, and
// the out-of-F_delta symbols other than lambda^1_1 are exactly the block
// entry symbols lambda^{i+1}_1 plus the block exit symbols lambda^i_last
// (i < l for the finite-chain form; i <= l for the tail form, which also
// requires gamma_1 outside F_delta). Returns a diagnostic, or nothing when
// admissible.
std::optional<std::string> check_family_fpc(Enumeration& en,
                                            const PathFamily& family,
                                            const Nat& t_delta);
std::optional<std::string> check_family_ipc2(Enumeration& en,
                                             const PathFamily& family,
                                             const InfinitePath& gamma,
                                             const Nat& t_delta);

// The chain x^{f(i,n)} = sigma^{n-1}(y^i) over Dom(f), where y^i is the
// given extension of lambda^i. Guaranteed valid at t_delta.
Chain chain_from_family(Enumeration& en, const PathFamily& family,
                        const std::vector<InfinitePath>& extensions,
                        const Nat& t_delta);

// The infinite chain whose finite part runs over (i, n) with n < |lambda^i|
// and whose tail is sigma^{s-1}(gamma), s >= 1, stored with a periodic tail
// block. Guaranteed valid at t_delta.
Chain chain_from_family_and_tail(Enumeration& en, const PathFamily& family,
                                 const InfinitePath& gamma,
                                 const std::vector<InfinitePath>& extensions,
                                 const Nat& t_delta);

// Shadow point for a finite first-symbol-linked 2^(-N(k))-chain: x_i = x^i_1
// for i <= m; if x^m_1 is in F_{2^(-N(k))} additionally x_{m+j} = x^m_{j+1}
// for 0 <= j <= k; then the path is completed deterministically by the
// least-index-edge walk closed into a cycle at the first repeated vertex.
InfinitePath construct_shadow_finite(Enumeration& en, const Chain& c, Index k);

// Shadow point for an eventually periodic first-symbol-linked chain:
// x_n = x^n_1 for all n.
InfinitePath construct_shadow_infinite(Enumeration& en, const Chain& c,
                                       Index k);

}  // namespace shadow

#endif  // SHADOW_DYNAMICS_HPP_

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

// Shadowing verification: shadow-point search for chains, the finite,
// tail and infinite path-family instance checkers, the decision cascade
// producing verdicts with machine-checkable certificates, and the builtin
// presentation catalogue.

#ifndef SHADOW_SHADOWING_HPP_
#define SHADOW_SHADOWING_HPP_

#include <optional>
#include <string>
#include <vector>

#include "shadow/dynamics.hpp"
#include "shadow/symbolic.hpp"

namespace shadow {

struct SearchBounds {
  Index max_path_len = 64;    // DFS depth beyond forced positions
  Index max_family_reps = 3;  // representatives drawn per infinite slice
  Nat max_threshold_exp = 64; // largest rank exponent probed by searches
};

// Result of a bounded search: found/exhausted are independent; a search can
// fail without being exhaustive and exhaust without finding.
struct ShadowSearchResult {
  bool found = false;
  std::optional<InfinitePath> witness;
  bool exhaustive = false;
  std::string detail;
};

// Searches for x with d(sigma^{n-1}(x), x^n) < 2^(-eps_exp) for every chain
// position n. Finite chains use a constraint-horizon DFS with greedy cycle
// completion; infinite chains use the deterministic first-symbol
// construction followed by exact verification.
ShadowSearchResult search_shadow_point(Enumeration& en, const Chain& c,
                                       const Nat& eps_exp,
                                       const SearchBounds& bounds);

// Outcome of one path-family instance at (eps, delta).
struct InstanceResult {
  enum class Kind { Witness, Failure, InvalidFamily, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<FinitePath> finite_witness;
  std::optional<InfinitePath> infinite_witness;
  bool exhaustive = false;
  std::string detail;
};

// Finite form: a witness is a valid path of length sum |lambda^i| - l + 1
// matching every pinned slot (symbols inside F_eps) and avoiding F_eps on
// every other slot.
InstanceResult check_fpc_instance(Enumeration& en, const PathFamily& family,
                                  const Nat& eps_exp, const Nat& delta_exp,
                                  const SearchBounds& bounds);

// Tail form: finite slots as above followed by the gamma tail (pinned where
// gamma lies inside F_eps).
InstanceResult check_ipc2_instance(Enumeration& en, const PathFamily& family,
                                   const InfinitePath& gamma,
                                   const Nat& eps_exp, const Nat& delta_exp,
                                   const SearchBounds& bounds);

// Infinite family lambda^1, lambda^2, ...: finitely many concrete prefix
// paths followed by affine period templates; block p + q*c + j + 1 is
// period[j] evaluated at parameter q.
struct PeriodicFamily {
  std::vector<FinitePath> prefix;
  std::vector<std::vector<Affine>> period;
};

InstanceResult check_ipc1_instance(Enumeration& en, const PeriodicFamily& pf,
                                   const Nat& eps_exp, const Nat& delta_exp,
                                   const SearchBounds& bounds);

enum class Answer { Yes, No, Unknown };
enum class Rule {
  FiniteGraph,
  Wandering,
  ECIFS,
  AttractorNotECIFS,
  FPCFailureInstance,
  InstanceOnly,
  Inconclusive,
};

std::string answer_str(Answer a);
std::string rule_str(Rule r);

struct Verdict {
  Answer answer = Answer::Unknown;
  Rule rule = Rule::Inconclusive;
  std::string certificate;  // canonical JSON document
};

struct Decision {
  Verdict finite;     // finite shadowing property
  Verdict shadowing;  // full shadowing property
};

Decision decide_shadowing(Enumeration& en, const SearchBounds& bounds);

struct VerifyResult {
  bool ok = false;
  std::string detail;
};

// Re-checks a certificate against the graph without re-running the search
// that produced it.
VerifyResult verify_certificate(Enumeration& en, const std::string& cert_json);

// Builtin presentation catalogue.
std::vector<std::string> builtin_names();
GraphPresentation builtin(const std::string& name);

}  // namespace shadow

#endif  // SHADOW_SHADOWING_HPP_

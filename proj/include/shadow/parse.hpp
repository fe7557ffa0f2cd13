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

// Text formats: the graph-presentation DSL (parser + canonical printer) and
// the path / chain / distance literals used by the CLI and certificates.
//
// DSL grammar (line oriented, '#' starts a comment):
//   file        := "graph" NAME NEWLINE (edge_line | family_line)*
//   edge_line   := "edge" "e" INT "from" VREF "to" VREF
//   family_line := "family" VAR ">=" INT ("to" INT)? ":"
//                  "edge" "e[" AFF "]" "from" VTERM "to" VTERM
//   VREF  := NAME INT?
//   VTERM := VREF | NAME "[" AFF "]"
//   AFF   := INT? "*"? VAR (("+"|"-") INT)? | INT | VAR

#ifndef SHADOW_PARSE_HPP_
#define SHADOW_PARSE_HPP_

#include <string>

#include "shadow/graph.hpp"
#include "shadow/path.hpp"

namespace shadow {

GraphPresentation parse_graph(const std::string& text,
                              bool allow_unknown_sinks = false);

// Canonical printer; parse(print(g)) is structurally identical to g.
std::string print_graph(const GraphPresentation& g);

// Path literals: vertex "v1"; finite path "e3.e1.e2";
// infinite path "e1.e2:(e3.e4)" (prefix:(cycle)), ":(c)" purely periodic.
Vertex parse_vertex(const std::string& text);
FinitePath parse_finite_path(const std::string& text);
InfinitePath parse_infinite_path(const GraphPresentation& g,
                                 const std::string& text);

std::string print_vertex(const Vertex& v);
std::string print_finite_path(const FinitePath& p);
std::string print_infinite_path(const InfinitePath& p);

// Chain literal: semicolon-separated infinite-path literals, with an optional
// cyclic tail block: "x1 ; x2 | tail: t1 ; t2".
struct ChainLiteral {
  std::vector<std::string> elements;
  std::vector<std::string> tail;
};
ChainLiteral split_chain_literal(const std::string& text);

}  // namespace shadow

#endif  // SHADOW_PARSE_HPP_

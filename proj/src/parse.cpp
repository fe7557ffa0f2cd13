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

#include "shadow/parse.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

namespace shadow {

namespace {

[[noreturn]] void syntax_error(std::size_t line, const std::string& msg) {
  throw Error("syntax error at line " + std::to_string(line) + ": " + msg);
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Index to_index(const std::string& s, std::size_t line) {
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    syntax_error(line, "bad integer '" + s + "'");
  }
}

// AFF := INT? "*"? VAR (("+"|"-") INT)? | INT | VAR
Affine parse_affine(std::string s, const std::string& var, std::size_t line) {
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  static const std::regex kConst(R"(^(\d+)$)");
  static const std::regex kGeneral(
      R"(^(?:(\d+)\*?)?([A-Za-z]\w*)(?:([+-])(\d+))?$)");
  std::smatch m;
  if (std::regex_match(s, m, kConst)) return Affine{0, to_index(m[1], line)};
  if (!std::regex_match(s, m, kGeneral))
    syntax_error(line, "bad affine form '" + s + "'");
  if (m[2].str() != var)
    syntax_error(line, "unknown variable '" + m[2].str() + "' in affine form");
  Affine f;
  f.a = m[1].matched ? to_index(m[1], line) : 1;
  f.b = m[3].matched ? (m[3].str() == "-" ? -1 : 1) * to_index(m[4], line) : 0;
  return f;
}

// VREF := NAME INT?  ("v1" -> series "v", sub 1; "u" -> standalone)
Vertex parse_vref(const std::string& s, std::size_t line) {
  static const std::regex kVref(R"(^([A-Za-z]+)(\d+)?$)");
  std::smatch m;
  if (!std::regex_match(s, m, kVref))
    syntax_error(line, "bad vertex reference '" + s + "'");
  Vertex v{m[1].str(), 0};
  if (m[2].matched) {
    v.sub = to_index(m[2], line);
    if (v.sub < 1) syntax_error(line, "vertex subscript must be >= 1");
  }
  return v;
}

// VTERM := VREF | NAME "[" AFF "]"
VTerm parse_vterm(const std::string& s, const std::string& var,
                  std::size_t line) {
  static const std::regex kIndexed(R"(^([A-Za-z]+)\[([^\]]*)\]$)");
  std::smatch m;
  if (std::regex_match(s, m, kIndexed))
    return VTerm{m[1].str(), parse_affine(m[2].str(), var, line)};
  Vertex v = parse_vref(s, line);
  return VTerm{v.series, Affine{0, v.sub}};
}

std::string print_affine(const Affine& f, const std::string& var) {
  if (f.a == 0) return std::to_string(f.b);
  std::string out;
  if (f.a == 1)
    out = var;
  else
    out = std::to_string(f.a) + "*" + var;
  if (f.b > 0) out += "+" + std::to_string(f.b);
  if (f.b < 0) out += "-" + std::to_string(-f.b);
  return out;
}

std::string print_vterm(const VTerm& t, const std::string& var) {
  if (t.concrete()) return Vertex{t.series, t.idx.b}.str();
  return t.series + "[" + print_affine(t.idx, var) + "]";
}

}  // namespace

GraphPresentation parse_graph(const std::string& text,
                              bool allow_unknown_sinks) {
  static const std::regex kHeader(R"(^graph\s+([A-Za-z]\w*)$)");
  static const std::regex kEdge(R"(^edge\s+e(\d+)\s+from\s+(\S+)\s+to\s+(\S+)$)");
  static const std::regex kFamily(
      R"(^family\s+([A-Za-z]\w*)\s*>=\s*(\d+)(?:\s+to\s+(\d+))?\s*:\s*)"
      R"(edge\s+e\[([^\]]*)\]\s+from\s+(\S+)\s+to\s+(\S+)$)");

  GraphPresentation g;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = strip(raw);
    if (line.empty()) continue;
    std::smatch m;
    if (!have_header) {
      if (!std::regex_match(line, m, kHeader))
        syntax_error(lineno, "expected 'graph NAME' header");
      g.name = m[1].str();
      have_header = true;
      continue;
    }
    if (std::regex_match(line, m, kEdge)) {
      Edge e;
      e.index = to_index(m[1], lineno);
      if (e.index < 1) syntax_error(lineno, "edge index must be >= 1");
      e.source = parse_vref(m[2].str(), lineno);
      e.range = parse_vref(m[3].str(), lineno);
      g.exceptional.push_back(e);
      continue;
    }
    if (std::regex_match(line, m, kFamily)) {
      Family f;
      f.var = m[1].str();
      f.lo = to_index(m[2], lineno);
      if (m[3].matched) f.hi = to_index(m[3], lineno);
      f.edge = parse_affine(m[4].str(), f.var, lineno);
      f.source = parse_vterm(m[5].str(), f.var, lineno);
      f.range = parse_vterm(m[6].str(), f.var, lineno);
      g.families.push_back(f);
      continue;
    }
    syntax_error(lineno, "unrecognized declaration '" + line + "'");
  }
  if (!have_header) throw Error("empty input: missing 'graph NAME' header");
  g.finalize(allow_unknown_sinks);
  return g;
}

std::string print_graph(const GraphPresentation& g) {
  std::ostringstream out;
  out << "graph " << g.name << "\n";
  auto edges = g.exceptional;  // already index-sorted by finalize()
  for (const auto& e : edges)
    out << "edge e" << e.index << " from " << e.source.str() << " to "
        << e.range.str() << "\n";
  auto fams = g.families;
  std::stable_sort(fams.begin(), fams.end(),
                   [](const Family& x, const Family& y) {
                     return std::tie(x.lo, x.edge.a, x.edge.b) <
                            std::tie(y.lo, y.edge.a, y.edge.b);
                   });
  for (const auto& f : fams) {
    out << "family " << f.var << " >= " << f.lo;
    if (f.hi) out << " to " << *f.hi;
    out << ": edge e[" << print_affine(f.edge, f.var) << "] from "
        << print_vterm(f.source, f.var) << " to " << print_vterm(f.range, f.var)
        << "\n";
  }
  return out.str();
}

Vertex parse_vertex(const std::string& text) {
  return parse_vref(strip(text), 0);
}

FinitePath parse_finite_path(const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) throw Error("empty path literal");
  if (s[0] != 'e' || s.size() < 2 || !std::isdigit(static_cast<unsigned char>(s[1])))
    return FinitePath::of_vertex(parse_vertex(s));
  std::vector<Index> edges;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto dot = s.find('.', pos);
    std::string tok = strip(s.substr(pos, dot == std::string::npos
                                              ? std::string::npos
                                              : dot - pos));
    static const std::regex kEdgeTok(R"(^e(\d+)$)");
    std::smatch m;
    if (!std::regex_match(tok, m, kEdgeTok))
      throw Error("bad edge token '" + tok + "' in path literal");
    edges.push_back(to_index(m[1], 0));
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return FinitePath::of_edges(std::move(edges));
}

InfinitePath parse_infinite_path(const GraphPresentation& g,
                                 const std::string& text) {
  std::string s = strip(text);
  auto colon = s.find(":(");
  if (colon == std::string::npos || s.back() != ')')
    throw Error("infinite-path literal must end with ':(cycle)'");
  std::string pre = strip(s.substr(0, colon));
  std::string cyc = strip(s.substr(colon + 2, s.size() - colon - 3));
  std::vector<Index> prefix;
  if (!pre.empty()) {
    FinitePath p = parse_finite_path(pre);
    if (p.is_vertex()) throw Error("infinite-path prefix cannot be a vertex");
    prefix = p.edges;
  }
  FinitePath c = parse_finite_path(cyc);
  if (c.is_vertex() || c.edges.empty())
    throw Error("infinite-path cycle must be a non-empty edge sequence");
  return InfinitePath(g, std::move(prefix), c.edges);
}

std::string print_vertex(const Vertex& v) { return v.str(); }

std::string print_finite_path(const FinitePath& p) {
  if (p.is_vertex()) return p.vertex->str();
  std::string out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += ".";
    out += "e" + std::to_string(p.edges[i]);
  }
  return out;
}

std::string print_infinite_path(const InfinitePath& p) {
  std::string out;
  for (std::size_t i = 0; i < p.prefix().size(); ++i) {
    if (i) out += ".";
    out += "e" + std::to_string(p.prefix()[i]);
  }
  out += ":(";
  for (std::size_t i = 0; i < p.cycle().size(); ++i) {
    if (i) out += ".";
    out += "e" + std::to_string(p.cycle()[i]);
  }
  out += ")";
  return out;
}

ChainLiteral split_chain_literal(const std::string& text) {
  ChainLiteral lit;
  std::string body = text, tail;
  auto bar = text.find('|');
  if (bar != std::string::npos) {
    body = text.substr(0, bar);
    std::string rest = strip(text.substr(bar + 1));
    if (rest.rfind("tail:", 0) != 0)
      throw Error("chain literal: expected 'tail:' after '|'");
    tail = rest.substr(5);
  }
  auto split = [](const std::string& s, std::vector<std::string>& out) {
    std::size_t pos = 0;
    while (pos <= s.size()) {
      auto semi = s.find(';', pos);
      std::string piece = strip(
          s.substr(pos, semi == std::string::npos ? std::string::npos
                                                  : semi - pos));
      if (!piece.empty()) out.push_back(piece);
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
  };
  split(body, lit.elements);
  split(tail, lit.tail);
  return lit;
}

}  // namespace shadow

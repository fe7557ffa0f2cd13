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

#include "shadow_capi.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "shadow/metric.hpp"
#include "shadow/parse.hpp"
#include "shadow/shadowing.hpp"

using nlohmann::json;

struct shadow_graph {
  shadow::GraphPresentation g;
  shadow::Enumeration en;

  explicit shadow_graph(shadow::GraphPresentation gp)
      : g(std::move(gp)), en(g) {}
};

namespace {

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void set_out(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

int fail(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
  return SHADOW_ERR;
}

template <typename F>
int wrap(char** err, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return fail(err, e.what());
  } catch (...) {
    return fail(err, "unknown error");
  }
}

shadow::SearchBounds parse_bounds(const char* bounds_json) {
  shadow::SearchBounds b;
  if (!bounds_json || !*bounds_json) return b;
  json j = json::parse(bounds_json);
  if (j.contains("max_path_len")) b.max_path_len = j["max_path_len"];
  if (j.contains("max_family_reps")) b.max_family_reps = j["max_family_reps"];
  if (j.contains("max_threshold_exp"))
    b.max_threshold_exp =
        shadow::Nat(j["max_threshold_exp"].get<std::string>());
  return b;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(a, b - a + 1));
  }
  return out;
}

bool starts_with(const std::string& s, const std::string& p) {
  return s.rfind(p, 0) == 0;
}

// Family text: finite-path literals, one per line, optionally ending with a
// "tail: <infinite literal>" line (for the tail form) or "period: ..." lines
// (for the periodic form; handled by parse_periodic_text).
struct FamilyText {
  shadow::PathFamily family;
  std::optional<shadow::InfinitePath> tail;
};

FamilyText parse_family_text(const shadow::GraphPresentation& g,
                             const std::string& text) {
  FamilyText ft;
  for (const auto& line : split_lines(text)) {
    if (starts_with(line, "tail:")) {
      ft.tail = shadow::parse_infinite_path(g, line.substr(5));
      continue;
    }
    ft.family.paths.push_back(shadow::parse_finite_path(line));
  }
  return ft;
}

// Affine symbol "e[2*q+9]", "e[q+1]", "e[q]" or a constant "e7".
shadow::Affine parse_affine_symbol(const std::string& tok) {
  if (tok.empty() || tok[0] != 'e')
    throw shadow::Error("template symbol must start with 'e': " + tok);
  std::string body = tok.substr(1);
  if (body.empty()) throw shadow::Error("empty template symbol");
  if (body.front() != '[') {
    return shadow::Affine{0, std::stoll(body)};
  }
  if (body.back() != ']')
    throw shadow::Error("unterminated template symbol: " + tok);
  std::string expr = body.substr(1, body.size() - 2);
  // Forms: INT | [INT*]VAR[(+|-)INT]
  shadow::Index a = 0, b = 0;
  std::size_t pos = 0;
  auto read_int = [&]() {
    std::size_t start = pos;
    if (pos < expr.size() && (expr[pos] == '+' || expr[pos] == '-')) ++pos;
    while (pos < expr.size() && std::isdigit(expr[pos])) ++pos;
    if (pos == start) throw shadow::Error("bad template expression: " + expr);
    return static_cast<shadow::Index>(std::stoll(expr.substr(start, pos)));
  };
  bool leading_digit = pos < expr.size() && std::isdigit(expr[pos]);
  if (leading_digit) {
    shadow::Index v = read_int();
    if (pos == expr.size()) return shadow::Affine{0, v};
    if (expr[pos] != '*')
      throw shadow::Error("bad template expression: " + expr);
    ++pos;
    a = v;
  } else {
    a = 1;
  }
  while (pos < expr.size() && (std::isalpha(expr[pos]) || expr[pos] == '_'))
    ++pos;  // variable name
  if (pos < expr.size()) {
    if (expr[pos] != '+' && expr[pos] != '-')
      throw shadow::Error("bad template expression: " + expr);
    b = read_int();
  }
  return shadow::Affine{a, b};
}

shadow::PeriodicFamily parse_periodic_text(const shadow::GraphPresentation& g,
                                           const std::string& text) {
  shadow::PeriodicFamily pf;
  for (const auto& line : split_lines(text)) {
    if (starts_with(line, "period:")) {
      std::string body = line.substr(7);
      std::vector<shadow::Affine> tpl;
      std::size_t start = body.find_first_not_of(" \t");
      std::string cur;
      for (std::size_t i = start; i <= body.size(); ++i) {
        if (i == body.size() || body[i] == '.') {
          if (!cur.empty()) tpl.push_back(parse_affine_symbol(cur));
          cur.clear();
        } else if (!std::isspace(body[i])) {
          cur += body[i];
        }
      }
      pf.period.push_back(tpl);
      continue;
    }
    pf.prefix.push_back(shadow::parse_finite_path(line));
  }
  (void)g;
  return pf;
}

shadow::Chain parse_chain(shadow_graph* h, const char* chain,
                          const char* delta_exp) {
  shadow::ChainLiteral lit = shadow::split_chain_literal(chain);
  shadow::Chain c;
  for (const auto& e : lit.elements)
    c.elements.push_back(shadow::parse_infinite_path(h->g, e));
  for (const auto& t : lit.tail)
    c.tail.push_back(shadow::parse_infinite_path(h->g, t));
  c.delta_exp = shadow::Nat(delta_exp);
  return c;
}

std::string print_chain(const shadow::Chain& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    if (i) os << " ; ";
    os << shadow::print_infinite_path(c.elements[i]);
  }
  if (!c.tail.empty()) {
    os << " | tail: ";
    for (std::size_t i = 0; i < c.tail.size(); ++i) {
      if (i) os << " ; ";
      os << shadow::print_infinite_path(c.tail[i]);
    }
  }
  return os.str();
}

bool is_infinite_literal(const std::string& s) {
  return s.find(':') != std::string::npos;
}

int instance_status(const shadow::InstanceResult& r) {
  switch (r.kind) {
    case shadow::InstanceResult::Kind::Witness:
      return SHADOW_YES;
    case shadow::InstanceResult::Kind::Failure:
    case shadow::InstanceResult::Kind::InvalidFamily:
      return SHADOW_NO;
    default:
      return SHADOW_UNKNOWN;
  }
}

json instance_json(const shadow::InstanceResult& r) {
  json j;
  switch (r.kind) {
    case shadow::InstanceResult::Kind::Witness:
      j["kind"] = "witness";
      break;
    case shadow::InstanceResult::Kind::Failure:
      j["kind"] = "failure";
      break;
    case shadow::InstanceResult::Kind::InvalidFamily:
      j["kind"] = "invalid-family";
      break;
    default:
      j["kind"] = "unknown";
      break;
  }
  if (r.finite_witness)
    j["witness"] = shadow::print_finite_path(*r.finite_witness);
  else if (r.infinite_witness)
    j["witness"] = shadow::print_infinite_path(*r.infinite_witness);
  j["exhaustive"] = r.exhaustive;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

}  // namespace

extern "C" {

void shadow_string_free(char* s) { std::free(s); }

int shadow_graph_parse(const char* text, shadow_graph** out, char** err) {
  return wrap(err, [&]() -> int {
    if (!text || !out) return fail(err, "null argument");
    *out = new shadow_graph(shadow::parse_graph(text));
    return SHADOW_YES;
  });
}

int shadow_graph_builtin(const char* name, shadow_graph** out, char** err) {
  return wrap(err, [&]() -> int {
    if (!name || !out) return fail(err, "null argument");
    *out = new shadow_graph(shadow::builtin(name));
    return SHADOW_YES;
  });
}

void shadow_graph_free(shadow_graph* g) { delete g; }

int shadow_graph_print(shadow_graph* g, char** out, char** err) {
  return wrap(err, [&]() -> int {
    if (g == nullptr) throw shadow::Error("null graph handle");
    set_out(out, shadow::print_graph(g->g));
    return SHADOW_YES;
  });
}

int shadow_graph_validate(shadow_graph* g, char** out, char** err) {
  return wrap(err, [&]() -> int {
    if (g == nullptr) throw shadow::Error("null graph handle");
    shadow::SinkReport sr = g->g.validate_no_sinks();
    json j;
    j["graph"] = g->g.name;
    j["finite"] = g->g.finite();
    switch (sr.verdict) {
      case shadow::SinkVerdict::Valid:
        j["sinks"] = "none";
        break;
      case shadow::SinkVerdict::Invalid:
        j["sinks"] = "found";
        if (sr.witness) j["witness"] = shadow::print_vertex(*sr.witness);
        break;
      default:
        j["sinks"] = "unknown";
        break;
    }
    set_out(out, j.dump());
    if (sr.verdict == shadow::SinkVerdict::Valid) return SHADOW_YES;
    return sr.verdict == shadow::SinkVerdict::Invalid ? SHADOW_NO
                                                      : SHADOW_UNKNOWN;
  });
}

int shadow_builtin_names(char** out, char** err) {
  return wrap(err, [&]() -> int {
    std::ostringstream os;
    for (const auto& n : shadow::builtin_names()) os << n << "\n";
    set_out(out, os.str());
    return SHADOW_YES;
  });
}

int shadow_count_paths(shadow_graph* g, long long k, long long len,
                       char** out, char** err) {
  return wrap(err, [&]() -> int {
    if (g == nullptr) throw shadow::Error("null graph handle");
    set_out(out, g->en.count_paths(k, len).str());
    return SHADOW_YES;
  });
}

int shadow_rank(shadow_graph* g, const char* literal, char** out,
                char** err) {
  return wrap(err, [&]() -> int {
    if (g == nullptr) throw shadow::Error("null graph handle");
    shadow::Nat r;
    try {
      r = g->en.rank(shadow::parse_finite_path(literal));
    } catch (const shadow::Error&) {
      r = g->en.rank_vertex(shadow::parse_vertex(literal));
    }
    set_out(out, r.str());
    return SHADOW_YES;
  });
}

int shadow_entry_at(shadow_graph* g, const char* rank_dec, char** out,
                    char** err) {
  return wrap(err, [&]() -> int {
    if (g == nullptr) throw shadow::Error("null graph handle");
    shadow::FinitePath p = g->en.entry_at(shadow::Nat(rank_dec));
    set_out(out, shadow::print_finite_path(p));
    return SHADOW_YES;
  });
}

int shadow_nk(shadow_graph* g, long long k, char** out, char** err) {
  return wrap(err, [&]() -> int {
    if (g == nullptr) throw shadow::Error("null graph handle");
    set_out(out, g->en.nk(k).str());
    return SHADOW_YES;
  });
}

int shadow_fset_max(shadow_graph* g, const char* t_dec, long long* out,
                    char** err) {
  return wrap(err, [&]() -> int {
    if (g == nullptr) throw shadow::Error("null graph handle");
    if (out) *out = g->en.fset_max(shadow::Nat(t_dec));
    return SHADOW_YES;
  });
}

int shadow_distance(shadow_graph* g, const char* x, const char* y, char** out,
                    char** err) {
  return wrap(err, [&]() -> int {
    if (g == nullptr) throw shadow::Error("null graph handle");
    std::string sx = x, sy = y;
    shadow::Distance d;
    bool ix = is_infinite_literal(sx), iy = is_infinite_literal(sy);
    if (ix && iy)
      d = shadow::distance(g->en, shadow::parse_infinite_path(g->g, sx),
                           shadow::parse_infinite_path(g->g, sy));
    else if (ix)
      d = shadow::distance(g->en, shadow::parse_infinite_path(g->g, sx),
                           shadow::parse_finite_path(sy));
    else if (iy)
      d = shadow::distance(g->en, shadow::parse_finite_path(sx),
                           shadow::parse_infinite_path(g->g, sy));
    else
      d = shadow::distance(g->en, shadow::parse_finite_path(sx),
                           shadow::parse_finite_path(sy));
    json j;
    j["zero"] = d.is_zero();
    if (d.exp)
      j["exp"] = d.exp->str();
    else
      j["exp"] = nullptr;
    j["value"] = d.str();
    set_out(out, j.dump());
    return SHADOW_YES;
  });
}

int shadow_chain_validate(shadow_graph* g, const char* chain,
                          const char* delta_exp, char** out, char** err) {
  return wrap(err, [&]() -> int {
    if (g == nullptr) throw shadow::Error("null graph handle");
    shadow::Chain c = parse_chain(g, chain, delta_exp);
    shadow::ChainVerdict v = shadow::validate_chain(g->en, c);
    json j;
    j["valid"] = v.valid;
    if (!v.valid) {
      j["position"] = v.position;
      j["violation"] = v.violation.str();
    }
    set_out(out, j.dump());
    return v.valid ? SHADOW_YES : SHADOW_NO;
  });
}

int shadow_chain_build(shadow_graph* g, const char* family_text,
                       const char* extensions_text, const char* delta_exp,
                       char** out, char** err) {
  return wrap(err, [&]() -> int {
    if (g == nullptr) throw shadow::Error("null graph handle");
    FamilyText ft = parse_family_text(g->g, family_text);
    std::vector<shadow::InfinitePath> ext;
    for (const auto& line : split_lines(extensions_text))
      ext.push_back(shadow::parse_infinite_path(g->g, line));
    shadow::Nat t(delta_exp);
    shadow::Chain c =
        ft.tail ? shadow::chain_from_family_and_tail(g->en, ft.family,
                                                     *ft.tail, ext, t)
                : shadow::chain_from_family(g->en, ft.family, ext, t);
    set_out(out, print_chain(c));
    return SHADOW_YES;
  });
}

int shadow_search_point(shadow_graph* g, const char* chain,
                        const char* delta_exp, const char* eps_exp,
                        const char* bounds_json, char** out, char** err) {
  return wrap(err, [&]() -> int {
    if (g == nullptr) throw shadow::Error("null graph handle");
    shadow::Chain c = parse_chain(g, chain, delta_exp);
    shadow::SearchBounds b = parse_bounds(bounds_json);
    shadow::ShadowSearchResult r =
        shadow::search_shadow_point(g->en, c, shadow::Nat(eps_exp), b);
    json j;
    j["found"] = r.found;
    j["exhaustive"] = r.exhaustive;
    if (r.witness) j["witness"] = shadow::print_infinite_path(*r.witness);
    if (!r.detail.empty()) j["detail"] = r.detail;
    set_out(out, j.dump());
    if (r.found) return SHADOW_YES;
    return r.exhaustive ? SHADOW_NO : SHADOW_UNKNOWN;
  });
}

int shadow_check_fpc(shadow_graph* g, const char* family_text,
                     const char* eps_exp, const char* delta_exp,
                     const char* bounds_json, char** out, char** err) {
  return wrap(err, [&]() -> int {
    if (g == nullptr) throw shadow::Error("null graph handle");
    FamilyText ft = parse_family_text(g->g, family_text);
    if (ft.tail) return fail(err, "finite form takes no tail line");
    shadow::InstanceResult r =
        shadow::check_fpc_instance(g->en, ft.family, shadow::Nat(eps_exp),
                                   shadow::Nat(delta_exp),
                                   parse_bounds(bounds_json));
    set_out(out, instance_json(r).dump());
    return instance_status(r);
  });
}

int shadow_check_ipc2(shadow_graph* g, const char* family_text,
                      const char* eps_exp, const char* delta_exp,
                      const char* bounds_json, char** out, char** err) {
  return wrap(err, [&]() -> int {
    if (g == nullptr) throw shadow::Error("null graph handle");
    FamilyText ft = parse_family_text(g->g, family_text);
    if (!ft.tail) return fail(err, "tail form needs a 'tail:' line");
    shadow::InstanceResult r = shadow::check_ipc2_instance(
        g->en, ft.family, *ft.tail, shadow::Nat(eps_exp),
        shadow::Nat(delta_exp), parse_bounds(bounds_json));
    set_out(out, instance_json(r).dump());
    return instance_status(r);
  });
}

int shadow_check_ipc1(shadow_graph* g, const char* family_text,
                      const char* eps_exp, const char* delta_exp,
                      const char* bounds_json, char** out, char** err) {
  return wrap(err, [&]() -> int {
    if (g == nullptr) throw shadow::Error("null graph handle");
    shadow::PeriodicFamily pf = parse_periodic_text(g->g, family_text);
    shadow::InstanceResult r = shadow::check_ipc1_instance(
        g->en, pf, shadow::Nat(eps_exp), shadow::Nat(delta_exp),
        parse_bounds(bounds_json));
    set_out(out, instance_json(r).dump());
    return instance_status(r);
  });
}

int shadow_classify(shadow_graph* g, const char* what, char** out,
                    char** err) {
  return wrap(err, [&]() -> int {
    if (g == nullptr) throw shadow::Error("null graph handle");
    std::string w = what ? what : "";
    json j;
    auto tern = [&](shadow::Ternary t) {
      switch (t) {
        case shadow::Ternary::Yes:
          j["verdict"] = "yes";
          return SHADOW_YES;
        case shadow::Ternary::No:
          j["verdict"] = "no";
          return SHADOW_NO;
        default:
          j["verdict"] = "unknown";
          return SHADOW_UNKNOWN;
      }
    };
    int status;
    if (w == "wandering") {
      shadow::WanderingResult r = shadow::classify_wandering(g->g);
      status = tern(r.verdict);
      j["evidence"] = r.evidence;
      if (r.witness) j["witness"] = shadow::print_finite_path(*r.witness);
    } else if (w == "ecifs") {
      shadow::EcifsResult r = shadow::classify_ecifs(g->g);
      status = tern(r.verdict);
      j["evidence"] = r.evidence;
      if (r.verdict == shadow::Ternary::Yes) j["k"] = r.k;
    } else if (w == "attractor") {
      shadow::SearchBounds b;
      shadow::AttractorResult r =
          shadow::find_attractor(g->en, b.max_threshold_exp);
      j["found"] = r.found;
      j["evidence"] = r.evidence;
      if (r.found) j["prefix"] = r.prefix;
      status = r.found ? SHADOW_YES : SHADOW_NO;
    } else if (w == "two-ended") {
      shadow::TwoEndedReport r = shadow::two_ended_high_edge_free(g->g);
      status = tern(r.verdict);
      j["evidence"] = r.evidence;
    } else {
      return fail(err, "unknown classifier: " + w);
    }
    set_out(out, j.dump());
    return status;
  });
}

int shadow_decide(shadow_graph* g, const char* bounds_json, char** out,
                  char** err) {
  return wrap(err, [&]() -> int {
    if (g == nullptr) throw shadow::Error("null graph handle");
    shadow::Decision d =
        shadow::decide_shadowing(g->en, parse_bounds(bounds_json));
    json j;
    j["finite"] = json::parse(d.finite.certificate);
    j["shadowing"] = json::parse(d.shadowing.certificate);
    set_out(out, j.dump());
    return SHADOW_YES;
  });
}

int shadow_verify(shadow_graph* g, const char* cert_json, char** out,
                  char** err) {
  return wrap(err, [&]() -> int {
    if (g == nullptr) throw shadow::Error("null graph handle");
    shadow::VerifyResult r = shadow::verify_certificate(g->en, cert_json);
    json j;
    j["ok"] = r.ok;
    j["detail"] = r.detail;
    set_out(out, j.dump());
    return r.ok ? SHADOW_YES : SHADOW_NO;
  });
}

}  // extern "C"

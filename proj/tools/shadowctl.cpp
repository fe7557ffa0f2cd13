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

// shadowctl: command-line front end over the shadowgraph C API.
//
// Graph arguments are either a presentation file or "builtin:NAME".
// Exit codes: 0 yes/valid/witness/ok, 1 no/invalid/failure, 2 unknown,
// 64 usage or internal error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "shadow_capi.h"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw CLI::ValidationError("cannot read file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// literal-or-@file convention for long arguments such as chains.
std::string load_arg(const std::string& s) {
  if (!s.empty() && s[0] == '@') return read_file(s.substr(1));
  return s;
}

struct GraphHandle {
  shadow_graph* g = nullptr;
  ~GraphHandle() { shadow_graph_free(g); }
};

int load_graph(const std::string& spec, GraphHandle& h) {
  char* err = nullptr;
  int rc;
  if (spec.rfind("builtin:", 0) == 0)
    rc = shadow_graph_builtin(spec.substr(8).c_str(), &h.g, &err);
  else
    rc = shadow_graph_parse(read_file(spec).c_str(), &h.g, &err);
  if (rc != SHADOW_YES) {
    std::cerr << "error: " << (err ? err : "graph load failed") << "\n";
    shadow_string_free(err);
  }
  return rc;
}

// Prints the output (if any) and returns the API status unchanged.
// Takes the string slots by address: the API call that fills them is
// evaluated in the same full expression as this call, and function
// argument evaluation order is unspecified.
int finish(int rc, char** out, char** err) {
  if (out && *out) {
    std::cout << *out << "\n";
    shadow_string_free(*out);
  }
  if (err && *err) {
    std::cerr << "error: " << *err << "\n";
    shadow_string_free(*err);
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shadowgraph verification toolkit"};
  app.require_subcommand(1);

  std::string graph_spec, bounds_file;
  std::string arg1, arg2, family_file, ext_file;
  std::string eps_exp = "1", delta_exp = "1", t_dec = "1";
  long long k = 1, len = 1;

  auto bounds_json = [&]() -> std::string {
    return bounds_file.empty() ? std::string() : read_file(bounds_file);
  };
  auto add_graph = [&](CLI::App* c) {
    c->add_option("graph", graph_spec, "presentation file or builtin:NAME")
        ->required();
  };
  auto add_bounds = [&](CLI::App* c) {
    c->add_option("--bounds", bounds_file, "JSON search bounds file");
  };

  auto* cmd_builtins =
      app.add_subcommand("builtins", "list builtin presentations");
  auto* cmd_parse =
      app.add_subcommand("parse", "parse and reprint a presentation");
  add_graph(cmd_parse);
  auto* cmd_validate =
      app.add_subcommand("validate", "structural validation report");
  add_graph(cmd_validate);

  auto* cmd_count =
      app.add_subcommand("count", "number of length-len paths over e_1..e_k");
  add_graph(cmd_count);
  cmd_count->add_option("--k", k)->required();
  cmd_count->add_option("--len", len)->required();

  auto* cmd_rank = app.add_subcommand("rank", "rank of a vertex or path");
  add_graph(cmd_rank);
  cmd_rank->add_option("literal", arg1)->required();

  auto* cmd_entry = app.add_subcommand("entry", "enumeration entry at a rank");
  add_graph(cmd_entry);
  cmd_entry->add_option("rank", arg1)->required();

  auto* cmd_nk = app.add_subcommand("nk", "threshold exponent N(k)");
  add_graph(cmd_nk);
  cmd_nk->add_option("--k", k)->required();

  auto* cmd_fset =
      app.add_subcommand("fset", "largest j with rank(e_j) <= t");
  add_graph(cmd_fset);
  cmd_fset->add_option("--t", t_dec)->required();

  auto* cmd_dist =
      app.add_subcommand("distance", "distance between two path literals");
  add_graph(cmd_dist);
  cmd_dist->add_option("x", arg1)->required();
  cmd_dist->add_option("y", arg2)->required();

  auto* cmd_cv = app.add_subcommand("chain-validate", "validate a chain");
  add_graph(cmd_cv);
  cmd_cv->add_option("chain", arg1, "chain literal or @file")->required();
  cmd_cv->add_option("--delta-exp", delta_exp)->required();

  auto* cmd_cb = app.add_subcommand(
      "chain-build", "canonical chain of a path family with extensions");
  add_graph(cmd_cb);
  cmd_cb->add_option("--family", family_file, "family file")->required();
  cmd_cb->add_option("--extensions", ext_file, "extension literals, one/line")
      ->required();
  cmd_cb->add_option("--delta-exp", delta_exp)->required();

  auto* cmd_ss =
      app.add_subcommand("shadow-search", "search for a shadow point");
  add_graph(cmd_ss);
  cmd_ss->add_option("chain", arg1, "chain literal or @file")->required();
  cmd_ss->add_option("--delta-exp", delta_exp)->required();
  cmd_ss->add_option("--eps-exp", eps_exp)->required();
  add_bounds(cmd_ss);

  auto* cmd_fpc =
      app.add_subcommand("fpc", "finite path-family instance check");
  add_graph(cmd_fpc);
  cmd_fpc->add_option("--family", family_file)->required();
  cmd_fpc->add_option("--eps-exp", eps_exp)->required();
  cmd_fpc->add_option("--delta-exp", delta_exp)->required();
  add_bounds(cmd_fpc);

  auto* cmd_ipc2 =
      app.add_subcommand("ipc2", "tail path-family instance check");
  add_graph(cmd_ipc2);
  cmd_ipc2->add_option("--family", family_file)->required();
  cmd_ipc2->add_option("--eps-exp", eps_exp)->required();
  cmd_ipc2->add_option("--delta-exp", delta_exp)->required();
  add_bounds(cmd_ipc2);

  auto* cmd_ipc1 =
      app.add_subcommand("ipc1", "periodic path-family instance check");
  add_graph(cmd_ipc1);
  cmd_ipc1->add_option("--family", family_file)->required();
  cmd_ipc1->add_option("--eps-exp", eps_exp)->required();
  cmd_ipc1->add_option("--delta-exp", delta_exp)->required();
  add_bounds(cmd_ipc1);

  auto* cmd_cls = app.add_subcommand(
      "classify", "wandering | ecifs | attractor | two-ended");
  add_graph(cmd_cls);
  cmd_cls->add_option("what", arg1)->required();

  auto* cmd_dec =
      app.add_subcommand("decide", "decide both shadowing properties");
  add_graph(cmd_dec);
  add_bounds(cmd_dec);

  auto* cmd_ver = app.add_subcommand("verify", "re-check a certificate");
  add_graph(cmd_ver);
  cmd_ver->add_option("certificate", arg1, "certificate JSON file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_builtins->parsed()) {
      char *out = nullptr, *err = nullptr;
      return finish(shadow_builtin_names(&out, &err), &out, &err);
    }

    GraphHandle h;
    if (int rc = load_graph(graph_spec, h); rc != SHADOW_YES) return rc;
    char *out = nullptr, *err = nullptr;

    if (cmd_parse->parsed())
      return finish(shadow_graph_print(h.g, &out, &err), &out, &err);
    if (cmd_validate->parsed())
      return finish(shadow_graph_validate(h.g, &out, &err), &out, &err);
    if (cmd_count->parsed())
      return finish(shadow_count_paths(h.g, k, len, &out, &err), &out, &err);
    if (cmd_rank->parsed())
      return finish(shadow_rank(h.g, arg1.c_str(), &out, &err), &out, &err);
    if (cmd_entry->parsed())
      return finish(shadow_entry_at(h.g, arg1.c_str(), &out, &err), &out, &err);
    if (cmd_nk->parsed())
      return finish(shadow_nk(h.g, k, &out, &err), &out, &err);
    if (cmd_fset->parsed()) {
      long long j = 0;
      int rc = shadow_fset_max(h.g, t_dec.c_str(), &j, &err);
      if (rc == SHADOW_YES) std::cout << j << "\n";
      return finish(rc, nullptr, &err);
    }
    if (cmd_dist->parsed())
      return finish(
          shadow_distance(h.g, arg1.c_str(), arg2.c_str(), &out, &err), &out,
          &err);
    if (cmd_cv->parsed())
      return finish(shadow_chain_validate(h.g, load_arg(arg1).c_str(),
                                          delta_exp.c_str(), &out, &err),
                    &out, &err);
    if (cmd_cb->parsed())
      return finish(
          shadow_chain_build(h.g, read_file(family_file).c_str(),
                             read_file(ext_file).c_str(), delta_exp.c_str(),
                             &out, &err),
          &out, &err);
    if (cmd_ss->parsed())
      return finish(shadow_search_point(h.g, load_arg(arg1).c_str(),
                                        delta_exp.c_str(), eps_exp.c_str(),
                                        bounds_json().c_str(), &out, &err),
                    &out, &err);
    if (cmd_fpc->parsed())
      return finish(shadow_check_fpc(h.g, read_file(family_file).c_str(),
                                     eps_exp.c_str(), delta_exp.c_str(),
                                     bounds_json().c_str(), &out, &err),
                    &out, &err);
    if (cmd_ipc2->parsed())
      return finish(shadow_check_ipc2(h.g, read_file(family_file).c_str(),
                                      eps_exp.c_str(), delta_exp.c_str(),
                                      bounds_json().c_str(), &out, &err),
                    &out, &err);
    if (cmd_ipc1->parsed())
      return finish(shadow_check_ipc1(h.g, read_file(family_file).c_str(),
                                      eps_exp.c_str(), delta_exp.c_str(),
                                      bounds_json().c_str(), &out, &err),
                    &out, &err);
    if (cmd_cls->parsed())
      return finish(shadow_classify(h.g, arg1.c_str(), &out, &err), &out, &err);
    if (cmd_dec->parsed())
      return finish(shadow_decide(h.g, bounds_json().c_str(), &out, &err),
                    &out, &err);
    if (cmd_ver->parsed())
      return finish(
          shadow_verify(h.g, read_file(arg1).c_str(), &out, &err), &out, &err);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return SHADOW_ERR;
  }
  return SHADOW_ERR;
}

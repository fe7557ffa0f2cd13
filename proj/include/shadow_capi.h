/*
 * shadowgraph - shadowing verification for edge shift spaces of
 * finitely presented infinite graphs.
 *
 * Copyright 2026 the shadowgraph authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C binding for the shadowgraph core. All functions return a status code:
 *
 *   0  yes / valid / witness found / ok
 *   1  no / invalid / failure
 *   2  unknown or not decided within bounds
 *   64 usage or internal error (a message is placed in *err)
 *
 * Strings returned through out parameters are heap-allocated and must be
 * released with shadow_string_free. Numeric thresholds and ranks are passed
 * as decimal strings because they routinely exceed 64 bits.
 *
 * Handles are not safe for concurrent use; create one per thread.
 */

#ifndef SHADOW_CAPI_H_
#define SHADOW_CAPI_H_

#ifdef __cplusplus
extern "C" {
#endif

typedef struct shadow_graph shadow_graph;

enum {
  SHADOW_YES = 0,
  SHADOW_NO = 1,
  SHADOW_UNKNOWN = 2,
  SHADOW_ERR = 64
};

void shadow_string_free(char* s);

/* --- presentations ------------------------------------------------------ */

int shadow_graph_parse(const char* text, shadow_graph** out, char** err);
int shadow_graph_builtin(const char* name, shadow_graph** out, char** err);
void shadow_graph_free(shadow_graph* g);

/* Canonical printer; parse(print(g)) reproduces g. */
int shadow_graph_print(shadow_graph* g, char** out, char** err);
/* Structural validation report (index coverage, sink check) as JSON. */
int shadow_graph_validate(shadow_graph* g, char** out, char** err);
/* Newline-separated catalogue of builtin presentation names. */
int shadow_builtin_names(char** out, char** err);

/* --- enumeration and metric --------------------------------------------- */

/* Number of paths of the given length over edges e_1..e_k (decimal). */
int shadow_count_paths(shadow_graph* g, long long k, long long len,
                       char** out, char** err);
/* Rank of a vertex or finite-path literal in the global enumeration. */
int shadow_rank(shadow_graph* g, const char* literal, char** out, char** err);
/* Enumeration entry at a decimal rank. */
int shadow_entry_at(shadow_graph* g, const char* rank_dec, char** out,
                    char** err);
/* Threshold exponent N(k) (decimal). */
int shadow_nk(shadow_graph* g, long long k, char** out, char** err);
/* Largest j with rank(e_j) <= t, i.e. F_{2^-t} = {e_1..e_j}. */
int shadow_fset_max(shadow_graph* g, const char* t_dec, long long* out,
                    char** err);
/* Distance between two path literals (finite or infinite), as a JSON
 * object {"zero": bool, "exp": decimal or null}. */
int shadow_distance(shadow_graph* g, const char* x, const char* y, char** out,
                    char** err);

/* --- chains -------------------------------------------------------------- */

/* Chain literal: "x1 ; x2 ; ..." with an optional "| tail: t1 ; t2" block.
 * Returns 0/1 for valid/invalid; *out is a JSON report. */
int shadow_chain_validate(shadow_graph* g, const char* chain,
                          const char* delta_exp, char** out, char** err);

/* Builds the canonical chain of a path family. family_text: one finite-path
 * literal per line, optionally followed by "tail: <infinite literal>";
 * extensions_text: one infinite-path literal per line, one per family block.
 * *out is the chain literal. */
int shadow_chain_build(shadow_graph* g, const char* family_text,
                       const char* extensions_text, const char* delta_exp,
                       char** out, char** err);

/* Searches for a 2^(-eps_exp) shadow point of the chain. Returns 0 when a
 * witness is found, 1 when the search was exhaustive and empty, 2 otherwise.
 * bounds_json may be NULL or {"max_path_len":..,"max_family_reps":..,
 * "max_threshold_exp":".."}. */
int shadow_search_point(shadow_graph* g, const char* chain,
                        const char* delta_exp, const char* eps_exp,
                        const char* bounds_json, char** out, char** err);

/* --- path-family instances ----------------------------------------------- */

/* Finite form: family_text holds one finite-path literal per line.
 * Returns 0 witness / 1 failure or inadmissible family / 2 unknown. */
int shadow_check_fpc(shadow_graph* g, const char* family_text,
                     const char* eps_exp, const char* delta_exp,
                     const char* bounds_json, char** out, char** err);

/* Tail form: family_text additionally ends with "tail: <infinite literal>". */
int shadow_check_ipc2(shadow_graph* g, const char* family_text,
                      const char* eps_exp, const char* delta_exp,
                      const char* bounds_json, char** out, char** err);

/* Periodic form: family_text holds optional finite-path literals (prefix
 * blocks) followed by one or more "period: e[2*q+9].e[2*q+8]" lines giving
 * the affine block templates in the period variable q. */
int shadow_check_ipc1(shadow_graph* g, const char* family_text,
                      const char* eps_exp, const char* delta_exp,
                      const char* bounds_json, char** out, char** err);

/* --- classification and decision ----------------------------------------- */

/* what: "wandering", "ecifs", "attractor" or "two-ended".
 * Returns 0 yes/found, 1 no/not found, 2 unknown. */
int shadow_classify(shadow_graph* g, const char* what, char** out, char** err);

/* Decides the finite and full shadowing properties. *out is a JSON object
 * {"finite": {...certificate...}, "shadowing": {...certificate...}}. */
int shadow_decide(shadow_graph* g, const char* bounds_json, char** out,
                  char** err);

/* Re-checks a certificate produced by shadow_decide. 0 confirmed,
 * 1 refuted; *out carries the detail. */
int shadow_verify(shadow_graph* g, const char* cert_json, char** out,
                  char** err);

#ifdef __cplusplus
}
#endif

#endif /* SHADOW_CAPI_H_ */

/* Copyright 2026 The Infectest Authors
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

/* C interface of the infectest mutation-analysis library.
 *
 * Every function that can fail returns an ift_status. On failure a
 * description is available from ift_last_error() until the next call on the
 * same thread. Strings returned through `char**` are owned by the caller and
 * released with ift_free_string(). Handles are immutable once created and
 * may be shared between threads.
 */

#ifndef INFECTEST_INFECTEST_H_
#define INFECTEST_INFECTEST_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define IFT_API __declspec(dllexport)
#else
#define IFT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ift_status {
  IFT_OK = 0,
  IFT_INVALID_ARGUMENT = 1, /* null pointer, unknown function, bad arguments */
  IFT_IO = 2,               /* file could not be read or written */
  IFT_SYNTAX = 3,           /* source or formula does not parse */
  IFT_CHECK = 4,            /* source does not type check */
  IFT_SUITE = 5,            /* malformed test suite */
  IFT_DOMAIN = 6,           /* empty or oversized input domain */
  IFT_INVARIANT = 7,        /* an internal guarantee failed */
  IFT_INTERNAL = 8
} ift_status;

typedef enum ift_filter {
  IFT_FILTER_NONE = 0,
  IFT_FILTER_COVERAGE = 1,
  IFT_FILTER_INFECTION = 2
} ift_filter;

typedef enum ift_mode {
  IFT_MODE_LOCAL = 0,
  IFT_MODE_OUTERMOST = 1
} ift_mode;

typedef struct ift_program ift_program;
typedef struct ift_suite ift_suite;

typedef struct ift_options {
  int64_t domain_lo;     /* inclusive range of every int parameter */
  int64_t domain_hi;
  uint64_t path_bound;   /* paths per mutant before giving up */
  uint64_t budget;       /* solver assignments per formula */
  uint64_t step_budget;  /* interpreter steps per call */
  int threads;           /* worker threads; results do not depend on it */
} ift_options;

/* Defaults: domain -8..16, path bound 64, budget 10^7, step budget 10^6,
 * one thread. */
IFT_API void ift_options_init(ift_options* options);

IFT_API const char* ift_status_string(ift_status status);
IFT_API const char* ift_last_error(void);
IFT_API void ift_free_string(char* text);

/* Programs. */
IFT_API ift_status ift_program_load(const char* path, ift_program** out);
IFT_API ift_status ift_program_parse(const char* source, const char* name,
                                     ift_program** out);
IFT_API void ift_program_free(ift_program* program);
IFT_API ift_status ift_program_print(const ift_program* program, char** out);
IFT_API ift_status ift_program_mutant_count(const ift_program* program, size_t* out);
IFT_API ift_status ift_program_mutants_json(const ift_program* program, char** out);
/* Runs `function` on textual arguments ("3", "true") and renders the
 * outcome: "2", "false", or "error:div-by-zero". */
IFT_API ift_status ift_program_run(const ift_program* program, const char* function,
                                   const char* const* args, size_t arg_count,
                                   const ift_options* options, char** outcome);

/* Suites. Expected outcomes are recomputed from the program. */
IFT_API ift_status ift_suite_load(const ift_program* program, const char* path,
                                  const char* name, const ift_options* options,
                                  ift_suite** out);
IFT_API ift_status ift_suite_parse(const ift_program* program, const char* text,
                                   const char* name, const ift_options* options,
                                   ift_suite** out);
IFT_API void ift_suite_free(ift_suite* suite);
IFT_API size_t ift_suite_size(const ift_suite* suite);
IFT_API ift_status ift_suite_text(const ift_suite* suite, char** out);

/* Reports, rendered as JSON. `options` may be null for the defaults. */
IFT_API ift_status ift_preprocess(const ift_program* program, const ift_suite* suite,
                                  const ift_options* options, char** json);
IFT_API ift_status ift_analyze(const ift_program* program, const ift_suite* suite,
                               ift_filter filter, const ift_options* options,
                               char** json);
/* All three filters; IFT_INVARIANT if their killed sets differ. */
IFT_API ift_status ift_compare_filters(const ift_program* program, const ift_suite* suite,
                                       const ift_options* options, char** json);
/* Local mode classifies the covered but uninfected mutants; outermost mode
 * the covered, infected, yet live ones. With `oracle` nonzero every verdict
 * is cross-checked by exhaustive execution over the domain; a contradicted
 * equivalence returns IFT_INVARIANT with the report still stored in *json. */
IFT_API ift_status ift_equivalence(const ift_program* program, const ift_suite* suite,
                                   ift_mode mode, int oracle, const ift_options* options,
                                   char** json);
/* The suite extended with one test per new solver model. */
IFT_API ift_status ift_augment(const ift_program* program, const ift_suite* suite,
                               ift_mode mode, const char* name,
                               const ift_options* options, ift_suite** out);

/* Solves a prefix-form formula over a uniform domain. */
IFT_API ift_status ift_solve(const char* formula, const ift_options* options, char** json);

/* Whole workflow writing reports into out_dir. With `outermost` zero the
 * second pass (T3) is skipped. *summary receives summary.json, also when
 * the oracle check fails with IFT_INVARIANT. */
IFT_API ift_status ift_pipeline(const char* program_path, const char* suite_path,
                                const char* out_dir, int outermost, int oracle,
                                const ift_options* options, char** summary);

#ifdef __cplusplus
}
#endif

#endif /* INFECTEST_INFECTEST_H_ */

/*
   Copyright 2026 The g2ss Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


/* C interface to g2ss. Every call returns a status; on failure the message is
   available from g2ss_last_error() on the same thread. Strings handed out by the
   library are released with g2ss_string_free. */

#ifndef G2SS_H
#define G2SS_H

#include <stdint.h>

#if defined(G2SS_BUILDING_LIBRARY)
#define G2SS_API __attribute__((visibility("default")))
#else
#define G2SS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum g2ss_status {
    G2SS_OK = 0,
    G2SS_INVALID_ARGUMENT = 1,
    G2SS_PARSE = 2,
    G2SS_NOT_SQUAREFREE = 3,
    G2SS_NON_SEPARABLE = 4,
    G2SS_BAD_REDUCTION = 5,
    G2SS_WRONG_CHARACTERISTIC = 6,
    G2SS_UNSUPPORTED = 7,
    G2SS_IDENTITY_VIOLATION = 8,
    G2SS_BAD_EPSILON = 9,
    G2SS_DIVISION_BY_ZERO = 10,
    G2SS_EXHAUSTED_SPECIALIZATIONS = 11,
    G2SS_UNEXPECTED_ALGEBRA = 12,
    G2SS_FIXTURE_MISMATCH = 13,
    G2SS_IO = 14,
    G2SS_CHECK_FAILED = 100, /* computation ran, a consistency check did not hold */
    G2SS_INTERNAL = 101
} g2ss_status;

typedef struct g2ss_curve g2ss_curve;

/* Receives one JSON document per call; the string is only valid during the call. */
typedef void (*g2ss_line_sink)(const char* json_line, void* user);

G2SS_API const char* g2ss_version(void);
G2SS_API const char* g2ss_status_name(g2ss_status status);
G2SS_API const char* g2ss_last_error(void);
G2SS_API void g2ss_string_free(char* s);

/* text: a JSON curve object or an expression such as "x^6 + Tx + 1".
   p = 0 means Q; var is the function-field letter (NULL for "T"). */
G2SS_API g2ss_status g2ss_curve_parse(const char* text, uint64_t p, unsigned ext_degree, const char* var,
                                      int allow_singular, g2ss_curve** out);
G2SS_API void g2ss_curve_free(g2ss_curve* curve);
G2SS_API g2ss_status g2ss_curve_to_json(const g2ss_curve* curve, char** out_json);
G2SS_API g2ss_status g2ss_curve_reduce(const g2ss_curve* curve, uint64_t p, g2ss_curve** out);

/* Brumer's sextic from parameter expressions in T; p = 0 builds over Q. The curve is
   over K(T) when any parameter mentions T or function_field is nonzero. */
G2SS_API g2ss_status g2ss_brumer_gen(const char* b, const char* c, const char* d, uint64_t p, const char* var,
                                     int function_field, int allow_singular, g2ss_curve** out);
/* Curve JSON plus derived facts (char-3 identities when p = 3). */
G2SS_API g2ss_status g2ss_brumer_report(const g2ss_curve* curve, char** out_json);
/* The eps-family over F_9(T): c, b, eps are expressions in T and s (s^2 = -1). */
G2SS_API g2ss_status g2ss_brumer_f9(const char* c, const char* b, const char* eps, char** out_json);

/* Cartier-Manin report; in characteristic 3 the closed-form criterion is
   cross-checked and a disagreement yields G2SS_CHECK_FAILED. */
G2SS_API g2ss_status g2ss_classify(const g2ss_curve* curve, uint64_t p, char** out_json);

/* A5 certificate; G2SS_CHECK_FAILED unless CertifiedA5. samples <= 0 and
   threshold <= 0 select the defaults. */
G2SS_API g2ss_status g2ss_galois(const g2ss_curve* curve, int samples, uint64_t seed, double threshold,
                                 char** out_json);

/* G2SS_CHECK_FAILED on a red flag. */
G2SS_API g2ss_status g2ss_pipeline(const g2ss_curve* curve, int64_t d, char** out_json);

/* fixtures_csv NULL selects the built-in tables. One line per row goes to sink. */
G2SS_API g2ss_status g2ss_table_reproduce(int id, const char* fixtures_csv, g2ss_line_sink sink, void* user,
                                          char** out_summary);

typedef struct g2ss_scan_options {
    uint64_t p;
    const char* grid; /* "linear", "constant", "deg=K", optionally ",sample=N" */
    uint64_t seed;
    int64_t d;
    int require_separable;
    int only_supersingular;
    int certify_a5;
    unsigned threads; /* 0: all cores */
} g2ss_scan_options;

G2SS_API void g2ss_scan_options_init(g2ss_scan_options* opt);
/* G2SS_CHECK_FAILED when a red flag or a per-curve error occurred. */
G2SS_API g2ss_status g2ss_scan(const g2ss_scan_options* opt, g2ss_line_sink sink, void* user, char** out_summary);

G2SS_API g2ss_status g2ss_rep_verify(uint64_t seed, char** out_json);
G2SS_API g2ss_status g2ss_quadorder(int64_t d, int64_t c, uint64_t p, char** out_json);

#ifdef __cplusplus
}
#endif

#endif

// Copyright 2026 The binform Authors
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

#ifndef BINFORM_H
#define BINFORM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define BINFORM_API __attribute__((visibility("default")))

/* Every call returns a status. Strings handed out through `char **out`
 * are NUL-terminated JSON owned by the caller; release them with
 * binform_string_free. On any status other than OK or FALSE,
 * binform_last_error describes the failure (thread-local). */
typedef enum binform_status {
    BINFORM_OK = 0,
    BINFORM_FALSE = 1,        /* computed; the answer is "no" */
    BINFORM_ERR_PARSE = 2,    /* malformed input or unknown option */
    BINFORM_ERR_DOMAIN = 3,   /* input outside the operation's domain */
    BINFORM_ERR_UNSTABLE = 4, /* vanishing discriminant where a stable form is needed */
    BINFORM_ERR_INTERNAL = 5
} binform_status;

typedef struct binform_form binform_form;

BINFORM_API const char *binform_version(void);
BINFORM_API const char *binform_last_error(void);
BINFORM_API void binform_string_free(char *s);

/* Caps worker threads; 0 restores the default (BINFORM_THREADS or the
 * hardware concurrency). */
BINFORM_API void binform_set_threads(unsigned n);

/* Parses "a0,a1,...,an": rationals "p" or "p/q", F = sum a_i x1^(n-i) x2^i. */
BINFORM_API binform_status binform_form_parse(const char *coeffs, binform_form **out);
BINFORM_API void binform_form_free(binform_form *f);
BINFORM_API unsigned binform_form_order(const binform_form *f);

/* {"J","K","L","H","Disc"} of a nonzero quintic. */
BINFORM_API binform_status binform_invariants(const binform_form *f, char **out);

/* {"B0".."B5","route"[,"warning"]}; route is the closed forms unless
 * use_pipeline is nonzero. */
BINFORM_API binform_status binform_beauville(const binform_form *f, int use_pipeline, char **out);

/* OK when the stable quintics are GL2-equivalent, FALSE otherwise. */
BINFORM_API binform_status binform_equiv(const binform_form *f1, const binform_form *f2, char **out);

/* OK when the Beauville vectors are proportional, FALSE otherwise. */
BINFORM_API binform_status binform_jdata(const binform_form *f1, const binform_form *f2, char **out);

/* target: keyprop, relation, disc, prop48 or dims. OK on pass, FALSE on
 * fail. Wall-clock fields are included only when timing is nonzero. */
BINFORM_API binform_status binform_verify(const char *target, int timing, char **out);

/* Like binform_verify("disc", ...) with an explicit seed and sample count. */
BINFORM_API binform_status binform_verify_disc(unsigned long long seed, unsigned samples, int timing, char **out);

/* Dimension of the degree-d invariants. */
BINFORM_API binform_status binform_dimension(unsigned long d, unsigned long *out);

/* JSON array of [l,k,j] for the degree-d monomials L^l K^k J^j. */
BINFORM_API binform_status binform_basis(unsigned long d, char **out);

/* JSON array of [l,k,j] degree-48 factors of L^a1 K^a2 J^a3. */
BINFORM_API binform_status binform_decompose48(unsigned long a1, unsigned long a2, unsigned long a3, char **out);

#ifdef __cplusplus
}
#endif

#endif

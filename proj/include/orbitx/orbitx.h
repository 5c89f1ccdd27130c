/*
   Copyright 2026 The orbitx Authors

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

#ifndef ORBITX_ORBITX_H
#define ORBITX_ORBITX_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define ORBITX_API __attribute__((visibility("default")))
#else
#define ORBITX_API
#endif

/* Status codes; every nonzero value names one library error. */
typedef enum orbitx_status {
  ORBITX_OK = 0,
  ORBITX_ZERO_POLYNOMIAL,
  ORBITX_UNSUPPORTED_TOWER,
  ORBITX_NON_CONSTANT_DIVISOR,
  ORBITX_DIVISION_BY_ZERO,
  ORBITX_NON_POSITIVE_LEAD,
  ORBITX_LN_LN_OVERFLOW,
  ORBITX_NON_POSITIVE_VALUATION,
  ORBITX_UNRECOGNIZED_SHAPE,
  ORBITX_NEGATIVE_LEAD_COEFFICIENT,
  ORBITX_TRUNCATION_EXHAUSTED,
  ORBITX_NOT_SINGULAR,
  ORBITX_DIVISOR_IS_SINGULAR_LINE,
  ORBITX_DICRITICAL_DIVISOR,
  ORBITX_DEPTH_EXCEEDED,
  ORBITX_AMBIGUOUS_BRANCH,
  ORBITX_NO_CHARACTERISTIC_ORBIT,
  ORBITX_VERTICAL_FLOW,
  ORBITX_RESONANT_DIVISION_BY_ZERO,
  ORBITX_SHAPE_MISMATCH,
  ORBITX_ORBIT_IS_Y_AXIS,
  ORBITX_UNASSIGNED_CONSTANT,
  ORBITX_DOMAIN_ERROR,
  ORBITX_SECTOR_VIOLATION,
  ORBITX_STIFFNESS_FAILURE,
  ORBITX_PARSE_ERROR,
  ORBITX_USAGE,
  ORBITX_INTERNAL
} orbitx_status;

typedef enum orbitx_format { ORBITX_FORMAT_HUMAN = 0, ORBITX_FORMAT_JSON, ORBITX_FORMAT_LATEX } orbitx_format;

/* Exit-code class of a status: 0 success, 2 usage or parse, 3 mathematical
   or domain error, 4 numeric validation failure, 1 internal error. */
ORBITX_API int orbitx_status_class(orbitx_status s);
ORBITX_API const char* orbitx_status_name(orbitx_status s);

/* A session owns the coefficient field and free-constant numbering. Handles
   created through a session must not outlive it. */
typedef struct orbitx_session orbitx_session;
typedef struct orbitx_field orbitx_field;
typedef struct orbitx_result orbitx_result;

ORBITX_API orbitx_session* orbitx_session_new(void);
ORBITX_API void orbitx_session_free(orbitx_session* s);
/* Message of the last failed call on this session; empty after success. */
ORBITX_API const char* orbitx_last_error(const orbitx_session* s);

ORBITX_API orbitx_status orbitx_parse_field(orbitx_session* s, const char* text, orbitx_field** out);
ORBITX_API void orbitx_field_free(orbitx_field* f);

typedef struct orbitx_expand_options {
  const char* order;     /* exponent literal such as "5" or "7/2" */
  int side;              /* +1 for x > 0, -1 for x < 0 */
  const int* branch;     /* selector indices, or NULL for automatic choice */
  size_t branch_len;
} orbitx_expand_options;

ORBITX_API orbitx_status orbitx_expand(orbitx_session* s, const orbitx_field* f, const orbitx_expand_options* opt,
                                       orbitx_result** out);
ORBITX_API void orbitx_result_free(orbitx_result* r);
/* 1 when the exact tangency check reached the requested order. */
ORBITX_API int orbitx_result_tangency_passed(const orbitx_result* r);

typedef struct orbitx_validate_options {
  double fit_lo, fit_hi;   /* fit window in x */
  double test_lo, test_hi; /* test window in x */
  double tol;              /* local error per integration step */
  const char* test_order;  /* compare against this truncation, or NULL */
} orbitx_validate_options;

ORBITX_API void orbitx_validate_defaults(orbitx_validate_options* opt);
/* Runs the numeric oracle and attaches its report to the result. On success
   *verdict_ok is 1 for "pass" or "exact" and 0 for "fail". */
ORBITX_API orbitx_status orbitx_validate(orbitx_session* s, const orbitx_field* f, orbitx_result* r,
                                         const orbitx_validate_options* opt, int* verdict_ok);

/* Text output; release strings with orbitx_string_free. */
ORBITX_API orbitx_status orbitx_result_format(orbitx_session* s, const orbitx_result* r, orbitx_format fmt, char** out);
ORBITX_API orbitx_status orbitx_desingularize(orbitx_session* s, const orbitx_field* f, const int* branch,
                                              size_t branch_len, int max_depth, orbitx_format fmt, char** out);
ORBITX_API orbitx_status orbitx_puiseux(orbitx_session* s, const char* curve, const char* order, int side,
                                        orbitx_format fmt, char** out);
ORBITX_API orbitx_status orbitx_reformat_json(orbitx_session* s, const char* json, char** out);
ORBITX_API void orbitx_string_free(char* str);

#ifdef __cplusplus
}
#endif

#endif /* ORBITX_ORBITX_H */

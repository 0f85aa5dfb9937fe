/* Copyright (C) 2026 The twosq Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
/* twosq.h - C interface to the two-squares library.
 *
 * Every call returns a twosq_status. On failure a message is available from
 * twosq_last_error() on the calling thread until the next failing call.
 * Lists are returned as opaque handles owned by the caller.
 */
#ifndef TWOSQ_TWOSQ_H
#define TWOSQ_TWOSQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define TWOSQ_API __declspec(dllexport)
#else
#  define TWOSQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum twosq_status {
  TWOSQ_OK = 0,
  TWOSQ_NO_SOLUTION = 1,     /* no witness exists / criterion is false */
  TWOSQ_ERR_DOMAIN = 2,      /* input outside the operation's contract */
  TWOSQ_ERR_INVARIANT = 3,   /* internal consistency check failed */
  TWOSQ_ERR_NULL_ARG = 4,
  TWOSQ_ERR_INTERNAL = 5
} twosq_status;

typedef struct twosq_report {
  uint64_t n;
  int cond_no_q_squared;
  int cond_not_div_4;
  int cond_has_p1mod4;
  int cond_odd_case; /* -1 when n is even (not applicable) */
  unsigned five_adic_k;
  uint64_t cofactor_m;
  int universal_nontrivial;
  int universal_with_zero;
} twosq_report;

typedef struct twosq_pair {
  uint64_t modulus;
  uint64_t z;
  uint64_t x;
  uint64_t y;
  int nontrivial;
} twosq_pair;

typedef struct twosq_decomposition {
  uint64_t target;
  uint64_t a;
  uint64_t b;
} twosq_decomposition;

/* Opaque list of unsigned 64-bit values. */
typedef struct twosq_list twosq_list;

TWOSQ_API const char* twosq_status_name(twosq_status status);
TWOSQ_API const char* twosq_last_error(void);

TWOSQ_API size_t twosq_list_size(const twosq_list* list);
TWOSQ_API const uint64_t* twosq_list_data(const twosq_list* list);
TWOSQ_API void twosq_list_free(twosq_list* list);

/* arithmetic */
TWOSQ_API twosq_status twosq_factorize(uint64_t value, twosq_list** primes, twosq_list** exponents);
TWOSQ_API twosq_status twosq_is_prime(uint64_t value, int* out);

/* integers */
TWOSQ_API twosq_status twosq_is_sum_of_two_squares(uint64_t z, int require_nonzero, int* out);
TWOSQ_API twosq_status twosq_is_hypotenuse_criterion(uint64_t z, int* out);
/* TWOSQ_NO_SOLUTION when the criterion fails. */
TWOSQ_API twosq_status twosq_decompose(uint64_t z, int require_nonzero, twosq_decomposition* out);
TWOSQ_API twosq_status twosq_triple(uint64_t u, uint64_t v, uint64_t k, uint64_t out[3]);

/* residues mod n */
TWOSQ_API twosq_status twosq_squares_mod(uint64_t n, int include_zero, twosq_list** out);
TWOSQ_API twosq_status twosq_classify(uint64_t n, twosq_report* out);
TWOSQ_API twosq_status twosq_universal_moduli(uint64_t limit, int allow_zero, twosq_list** out);
/* The pair is re-verified before returning; TWOSQ_NO_SOLUTION when none exists. */
TWOSQ_API twosq_status twosq_solve(uint64_t z, uint64_t n, int require_nontrivial, twosq_pair* out);
TWOSQ_API twosq_status twosq_solve_five_power(uint64_t z, unsigned k, twosq_pair* out);
TWOSQ_API int twosq_pair_verify(const twosq_pair* pair);

/* brute-force oracle */
TWOSQ_API twosq_status twosq_oracle_scan(uint64_t n, twosq_list** representable,
                                         twosq_list** nontrivially_representable);
TWOSQ_API twosq_status twosq_oracle_universal(uint64_t n, int allow_zero, int* out);
TWOSQ_API twosq_status twosq_oracle_integer_decompose(uint64_t z, int require_nonzero,
                                                      twosq_decomposition* out);

#ifdef __cplusplus
}
#endif

#endif /* TWOSQ_TWOSQ_H */

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
#include "twosq/twosq.h"

#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include "twosq/arithmetic.hpp"
#include "twosq/integer_two_squares.hpp"
#include "twosq/modular_two_squares.hpp"
#include "twosq/oracle.hpp"

struct twosq_list {
  std::vector<uint64_t> values;
};

namespace {

thread_local std::string last_error;

template <typename F>
twosq_status guarded(F&& body) {
  try {
    return body();
  } catch (const twosq::DomainError& e) {
    last_error = e.what();
    return TWOSQ_ERR_DOMAIN;
  } catch (const std::logic_error& e) {
    last_error = e.what();
    return TWOSQ_ERR_INVARIANT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TWOSQ_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return TWOSQ_ERR_INTERNAL;
  }
}

twosq_status null_arg() {
  last_error = "null output argument";
  return TWOSQ_ERR_NULL_ARG;
}

twosq_list* make_list(std::vector<uint64_t> values) {
  return new twosq_list{std::move(values)};
}

twosq_pair to_c(const twosq::SquarePair& p) {
  return {p.modulus, p.z, p.x, p.y, p.nontrivial ? 1 : 0};
}

twosq_decomposition to_c(const twosq::SquareDecomposition& d) { return {d.target, d.a, d.b}; }

twosq_status emit_pair(const twosq::SquarePair& p, twosq_pair* out) {
  *out = to_c(p);
  if (!twosq_pair_verify(out)) {
    last_error = "emitted pair failed re-verification";
    return TWOSQ_ERR_INVARIANT;
  }
  return TWOSQ_OK;
}

}  // namespace

extern "C" {

const char* twosq_status_name(twosq_status status) {
  switch (status) {
    case TWOSQ_OK: return "ok";
    case TWOSQ_NO_SOLUTION: return "no-solution";
    case TWOSQ_ERR_DOMAIN: return "domain-error";
    case TWOSQ_ERR_INVARIANT: return "invariant-violation";
    case TWOSQ_ERR_NULL_ARG: return "null-argument";
    case TWOSQ_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* twosq_last_error(void) { return last_error.c_str(); }

size_t twosq_list_size(const twosq_list* list) { return list ? list->values.size() : 0; }

const uint64_t* twosq_list_data(const twosq_list* list) {
  return list && !list->values.empty() ? list->values.data() : nullptr;
}

void twosq_list_free(twosq_list* list) { delete list; }

twosq_status twosq_factorize(uint64_t value, twosq_list** primes, twosq_list** exponents) {
  if (!primes || !exponents) return null_arg();
  return guarded([&] {
    const twosq::Factorization f = twosq::factorize(value);
    std::vector<uint64_t> ps, es;
    for (const auto& pp : f.factors()) {
      ps.push_back(pp.prime);
      es.push_back(pp.exponent);
    }
    *primes = make_list(std::move(ps));
    *exponents = make_list(std::move(es));
    return TWOSQ_OK;
  });
}

twosq_status twosq_is_prime(uint64_t value, int* out) {
  if (!out) return null_arg();
  return guarded([&] {
    *out = twosq::is_prime(value) ? 1 : 0;
    return TWOSQ_OK;
  });
}

twosq_status twosq_is_sum_of_two_squares(uint64_t z, int require_nonzero, int* out) {
  if (!out) return null_arg();
  return guarded([&] {
    if (z > twosq::kMaxValue) throw twosq::DomainError("value exceeds 2^63 - 1");
    bool ok = require_nonzero ? twosq::is_sum_of_two_nonzero_squares(z) : twosq::is_sum_of_two_squares(z);
    *out = ok ? 1 : 0;
    return TWOSQ_OK;
  });
}

twosq_status twosq_is_hypotenuse_criterion(uint64_t z, int* out) {
  if (!out) return null_arg();
  return guarded([&] {
    *out = twosq::is_hypotenuse_criterion(z) ? 1 : 0;
    return TWOSQ_OK;
  });
}

twosq_status twosq_decompose(uint64_t z, int require_nonzero, twosq_decomposition* out) {
  if (!out) return null_arg();
  return guarded([&] {
    if (z > twosq::kMaxValue) throw twosq::DomainError("value exceeds 2^63 - 1");
    auto d = twosq::decompose_any(z, require_nonzero != 0);
    if (!d) return TWOSQ_NO_SOLUTION;
    *out = to_c(*d);
    return TWOSQ_OK;
  });
}

twosq_status twosq_triple(uint64_t u, uint64_t v, uint64_t k, uint64_t out[3]) {
  if (!out) return null_arg();
  return guarded([&] {
    const auto t = twosq::triple_from_params({u, v, k});
    out[0] = t.a;
    out[1] = t.b;
    out[2] = t.c;
    return TWOSQ_OK;
  });
}

twosq_status twosq_squares_mod(uint64_t n, int include_zero, twosq_list** out) {
  if (!out) return null_arg();
  return guarded([&] {
    *out = make_list(twosq::squares_mod(n, include_zero != 0).members);
    return TWOSQ_OK;
  });
}

twosq_status twosq_classify(uint64_t n, twosq_report* out) {
  if (!out) return null_arg();
  return guarded([&] {
    const twosq::ClassificationReport r = twosq::classify(n);
    *out = {r.n,
            r.cond_no_q_squared,
            r.cond_not_div_4,
            r.cond_has_p1mod4,
            r.cond_odd_case ? (*r.cond_odd_case ? 1 : 0) : -1,
            r.five_adic_k,
            r.cofactor_m,
            r.universal_nontrivial,
            r.universal_with_zero};
    return TWOSQ_OK;
  });
}

twosq_status twosq_universal_moduli(uint64_t limit, int allow_zero, twosq_list** out) {
  if (!out) return null_arg();
  return guarded([&] {
    *out = make_list(twosq::universal_moduli(limit, allow_zero != 0));
    return TWOSQ_OK;
  });
}

twosq_status twosq_solve(uint64_t z, uint64_t n, int require_nontrivial, twosq_pair* out) {
  if (!out) return null_arg();
  return guarded([&] {
    auto pair = twosq::solve(z, n, require_nontrivial != 0);
    if (!pair) return TWOSQ_NO_SOLUTION;
    return emit_pair(*pair, out);
  });
}

twosq_status twosq_solve_five_power(uint64_t z, unsigned k, twosq_pair* out) {
  if (!out) return null_arg();
  return guarded([&] { return emit_pair(twosq::solve_five_power(z, k), out); });
}

int twosq_pair_verify(const twosq_pair* pair) {
  if (!pair) return 0;
  twosq::SquarePair p{pair->modulus, pair->z, pair->x, pair->y, pair->nontrivial != 0};
  return p.verify() ? 1 : 0;
}

twosq_status twosq_oracle_scan(uint64_t n, twosq_list** representable,
                               twosq_list** nontrivially_representable) {
  if (!representable || !nontrivially_representable) return null_arg();
  return guarded([&] {
    const auto v = twosq::oracle::oracle_scan(n);
    *representable = make_list({v.representable.begin(), v.representable.end()});
    *nontrivially_representable =
        make_list({v.nontrivially_representable.begin(), v.nontrivially_representable.end()});
    return TWOSQ_OK;
  });
}

twosq_status twosq_oracle_universal(uint64_t n, int allow_zero, int* out) {
  if (!out) return null_arg();
  return guarded([&] {
    *out = twosq::oracle::oracle_universal(n, allow_zero != 0) ? 1 : 0;
    return TWOSQ_OK;
  });
}

twosq_status twosq_oracle_integer_decompose(uint64_t z, int require_nonzero, twosq_decomposition* out) {
  if (!out) return null_arg();
  return guarded([&] {
    auto d = twosq::oracle::oracle_integer_decompose(z, require_nonzero != 0);
    if (!d) return TWOSQ_NO_SOLUTION;
    *out = to_c(*d);
    return TWOSQ_OK;
  });
}

}  // extern "C"

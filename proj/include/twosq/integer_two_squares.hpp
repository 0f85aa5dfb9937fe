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
/* integer_two_squares.hpp - representability of integers (over Z) as sums of
 * two squares, with constructive decompositions and the Pythagorean-triple
 * parametrization.
 */
#pragma once

#include <optional>

#include "twosq/arithmetic.hpp"

namespace twosq {

// a^2 + b^2 = target with a <= b.
struct SquareDecomposition {
  u64 target = 0;
  u64 a = 0;
  u64 b = 0;

  // Builds a canonically ordered decomposition, validating a^2 + b^2 = target.
  static SquareDecomposition make(u64 x, u64 y);

  friend bool operator==(const SquareDecomposition&, const SquareDecomposition&) = default;
};

// u > v > 0, opposite parity, gcd(u, v) = 1; k > 0.
struct TripleParams {
  u64 u = 0;
  u64 v = 0;
  u64 k = 0;

  bool valid() const;
};

struct PythagoreanTriple {
  u64 a;
  u64 b;
  u64 c;

  friend bool operator==(const PythagoreanTriple&, const PythagoreanTriple&) = default;
};

// Every prime q = 3 (mod 4) divides z to an even power. 0 counts as 0^2 + 0^2.
bool is_sum_of_two_squares(u64 z);

// z = a^2 + b^2 with a, b >= 1: the criterion above holds, and a perfect square z
// must have a prime factor p = 1 (mod 4).
bool is_sum_of_two_nonzero_squares(u64 z);

/// Decides whether sqrt(z) = (u^2 + v^2) k for some valid TripleParams by direct
/// scan over u > v >= 1. Throws on a non-square z.
bool is_hypotenuse_criterion(u64 z);

/// Product decomposition via (ac - bd)^2 + (ad + bc)^2.
SquareDecomposition compose(const SquareDecomposition& d1, const SquareDecomposition& d2);

/// The unique c <= d with c^2 + d^2 = p, for a prime p = 1 (mod 4). Brute force
/// below 10^6, Cornacchia above.
SquareDecomposition decompose_prime(u64 p);

/// x, y >= 1 with x^2 + y^2 = p^a. Odd a composes the prime decomposition
/// repeatedly; even a uses p^((a-2)/2) * (d^2 - c^2, 2cd).
SquareDecomposition decompose_prime_power(u64 p, unsigned a);

/// Constructive decomposition of z, or nullopt exactly when the matching
/// criterion (is_sum_of_two_squares / is_sum_of_two_nonzero_squares) fails.
std::optional<SquareDecomposition> decompose_any(u64 z, bool require_nonzero);

PythagoreanTriple triple_from_params(const TripleParams& params);

}  // namespace twosq

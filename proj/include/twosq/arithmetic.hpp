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
/* arithmetic.hpp - integer and modular primitives shared by the two-square
 * solvers: factorization, primality, Legendre symbols, modular square roots,
 * Hensel lifting and CRT recombination.
 *
 * All public integers live in the unsigned 63-bit range; products are formed
 * in 128-bit arithmetic.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twosq/error.hpp"

namespace twosq {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline constexpr u64 kMaxValue = (u64{1} << 63) - 1;

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical prime-power decomposition; primes strictly increasing.
class Factorization {
 public:
  Factorization() = default;
  Factorization(u64 value, std::vector<PrimePower> factors);

  u64 value() const { return value_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

  // Exponent of `prime` in the factorization (0 when absent).
  unsigned exponent_of(u64 prime) const;

  // Recomputes the product of all prime powers.
  u64 reassemble() const;

 private:
  u64 value_ = 1;
  std::vector<PrimePower> factors_;
};

struct Congruence {
  u64 residue;
  u64 modulus;
};

// A system x = c_i (mod m_i). Residues are reduced on insertion.
class CongruenceSystem {
 public:
  CongruenceSystem() = default;
  CongruenceSystem(std::initializer_list<Congruence> entries);

  void add(u64 residue, u64 modulus);
  const std::vector<Congruence>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Congruence> entries_;
};

// ---- plain integer helpers -------------------------------------------------

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
u64 gcd(u64 a, u64 b);

// Floor of the square root.
u64 isqrt(u64 value);
bool is_perfect_square(u64 value);

// base^exponent, or nullopt when the result exceeds kMaxValue.
std::optional<u64> checked_pow(u64 base, unsigned exponent);

// Exponent of the largest power of `prime` dividing value (value > 0).
unsigned valuation(u64 value, u64 prime);

// Reduces a signed value into [0, m).
u64 reduce(i64 value, u64 m);

// Inverse of a modulo m; requires gcd(a, m) = 1.
u64 inverse_mod(u64 a, u64 m);

// ---- core operations -------------------------------------------------------

// Canonical factorization of 1 <= value <= 2^63 - 1.
Factorization factorize(u64 value);

// Exact primality for every 64-bit input.
bool is_prime(u64 value);

// Legendre symbol (a/p) for an odd prime p.
int legendre(i64 a, u64 p);

// Square root of z modulo an odd prime, the smaller of the two roots; nullopt
// when z is a non-residue.
std::optional<u64> sqrt_mod_prime(u64 z, u64 p);

// Square root of a unit z modulo p^k (p odd), the smaller of the two roots.
// p | z is out of contract and throws.
std::optional<u64> hensel_lift_sqrt(u64 z, u64 p, unsigned k);

struct CrtResult {
  u64 residue;
  u64 modulus;

  friend bool operator==(const CrtResult&, const CrtResult&) = default;
};

// Combines a system with pairwise coprime moduli into one residue mod M.
CrtResult crt_combine(const CongruenceSystem& system);

}  // namespace twosq

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
/* modular_two_squares.hpp - sums of two squares in Z_n.
 *
 * classify() decides, from the factorization of n, whether every residue is a
 * sum of two nonzero squares (universal_nontrivial) or of two squares where
 * zero is allowed (universal_with_zero). The solvers build explicit witnesses
 * x^2 + y^2 = z (mod n) prime power by prime power and glue them with the CRT.
 */
#pragma once

#include <optional>
#include <vector>

#include "twosq/arithmetic.hpp"

namespace twosq {

// S_n (include_zero = false) or S_n together with 0.
struct ResidueSet {
  u64 modulus = 0;
  bool include_zero = false;
  std::vector<u64> members;  // sorted

  bool contains(u64 r) const;
};

struct SquarePair {
  u64 modulus = 0;
  u64 z = 0;
  u64 x = 0;
  u64 y = 0;
  bool nontrivial = false;

  // Tags the pair and validates x^2 + y^2 = z (mod modulus).
  static SquarePair make(u64 modulus, u64 z, u64 x, u64 y);
  bool verify() const;

  friend bool operator==(const SquarePair&, const SquarePair&) = default;
};

struct ClassificationReport {
  u64 n = 0;
  bool cond_no_q_squared = false;    // no q = 3 (mod 4) with q^2 | n
  bool cond_not_div_4 = false;       // 4 does not divide n
  bool cond_has_p1mod4 = false;      // some p = 1 (mod 4) divides n
  std::optional<bool> cond_odd_case; // nullopt for even n
  unsigned five_adic_k = 0;          // n = 5^k m, 5 does not divide m
  u64 cofactor_m = 1;
  bool universal_nontrivial = false;
  bool universal_with_zero = false;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

// Residues of the form (z mod p^k) that are nonzero squares.
bool is_nonzero_square_mod_prime_power(u64 z, u64 p, unsigned k);

ResidueSet squares_mod(u64 n, bool include_zero);

ClassificationReport classify(u64 n);

std::vector<u64> universal_moduli(u64 limit, bool allow_zero);

/// Solves x^2 + y^2 = z modulo base^exponent along the progression-search
/// routes: prime 2 (exponent 1) gives x odd; p = 1 (mod 4) gives y^2 != 0;
/// q = 3 (mod 4) (exponent 1) gives y^2 != 0 unless z = 0, where (0, 0) is the
/// only solution.
std::optional<SquarePair> solve_prime_power(u64 z, u64 base, unsigned exponent);

/// Nontrivial solution modulo 5^k for k >= 3 and every z.
SquarePair solve_five_power(u64 z, unsigned k);

/// Quadratic residues s, t mod p with s + t = z, for a non-residue z and a
/// prime p = 3 (mod 4): s = -za, t = -z(-a-1) with a the least residue whose
/// successor is a non-residue.
std::pair<u64, u64> residue_pair_for_nonsquare(u64 z, u64 p);

/// Constructive solver, with per-component exhaustive search where no
/// construction applies. nullopt means no solution of the requested kind
/// exists.
std::optional<SquarePair> solve(u64 z, u64 n, bool require_nontrivial);

/// Reference path: scans x ascending, then y ascending, over all of Z_n.
std::optional<SquarePair> solve_exhaustive(u64 z, u64 n, bool require_nontrivial);

}  // namespace twosq

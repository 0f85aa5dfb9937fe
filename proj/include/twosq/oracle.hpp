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
/* oracle.hpp - brute-force ground truth. Nothing here calls the factorizer,
 * the Legendre symbol or any constructive solver: only loops and exact
 * integer arithmetic.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "twosq/integer_two_squares.hpp"

namespace twosq::oracle {

inline constexpr std::uint64_t kMaxScanModulus = 10'000;
inline constexpr std::uint64_t kMaxDecomposeTarget = 100'000'000;

struct OracleVerdict {
  std::uint64_t n = 0;
  std::set<std::uint64_t> representable;
  std::set<std::uint64_t> nontrivially_representable;
};

// Double loop over all (x, y) in Z_n x Z_n. 2 <= n <= 10^4.
OracleVerdict oracle_scan(std::uint64_t n);

bool oracle_universal(std::uint64_t n, bool allow_zero);

// First (a, b), a ascending, with a <= b, a^2 + b^2 = z and a >= 1 if required.
std::optional<SquareDecomposition> oracle_integer_decompose(std::uint64_t z, bool require_nonzero);

}  // namespace twosq::oracle

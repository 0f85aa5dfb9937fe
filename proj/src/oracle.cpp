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
#include "twosq/oracle.hpp"

#include <string>

#include "twosq/error.hpp"

namespace twosq::oracle {

OracleVerdict oracle_scan(std::uint64_t n) {
  if (n < 2 || n > kMaxScanModulus)
    throw DomainError("oracle_scan: modulus " + std::to_string(n) + " outside [2, 10^4]");
  OracleVerdict verdict;
  verdict.n = n;
  for (std::uint64_t x = 0; x < n; ++x) {
    const std::uint64_t sx = x * x % n;
    for (std::uint64_t y = 0; y < n; ++y) {
      const std::uint64_t sy = y * y % n;
      const std::uint64_t z = (sx + sy) % n;
      verdict.representable.insert(z);
      if (sx != 0 && sy != 0) verdict.nontrivially_representable.insert(z);
    }
  }
  return verdict;
}

bool oracle_universal(std::uint64_t n, bool allow_zero) {
  const OracleVerdict v = oracle_scan(n);
  const auto& hits = allow_zero ? v.representable : v.nontrivially_representable;
  return hits.size() == n;
}

std::optional<SquareDecomposition> oracle_integer_decompose(std::uint64_t z, bool require_nonzero) {
  if (z > kMaxDecomposeTarget)
    throw DomainError("oracle_integer_decompose: target " + std::to_string(z) + " above 10^8");
  // Two pointers: b only ever walks down as a walks up.
  std::uint64_t b = 0;
  while (b * b < z) ++b;
  for (std::uint64_t a = require_nonzero ? 1 : 0; a <= b; ++a) {
    while (b > a && a * a + b * b > z) --b;
    if (a * a + b * b == z) return SquareDecomposition{z, a, b};
  }
  return std::nullopt;
}

}  // namespace twosq::oracle

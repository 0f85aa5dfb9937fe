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
/* Naive reference routines for tests. None of them share code with the
 * library under test.
 */
#pragma once

#include <cstdint>
#include <vector>

namespace brute {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> roots(std::uint64_t z, std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < m; ++x)
    if (x * x % m == z % m) out.push_back(x);
  return out;
}

inline bool is_sum_of_two_squares(std::uint64_t z, bool nonzero) {
  for (std::uint64_t a = nonzero ? 1 : 0; 2 * a * a <= z; ++a)
    for (std::uint64_t b = a; a * a + b * b <= z; ++b)
      if (a * a + b * b == z) return true;
  return false;
}

inline std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 3; p <= limit; p += 2)
    if (is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace brute

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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "brute_force.hpp"
#include "twosq/modular_two_squares.hpp"

using namespace twosq;

namespace {

using u128 = unsigned __int128;

u64 sq(u64 v, u64 n) { return static_cast<u64>(static_cast<u128>(v) * v % n); }

void require_witness(const SquarePair& p, u64 n, u64 z, bool nontrivial) {
  REQUIRE(p.modulus == n);
  REQUIRE(p.z == z % n);
  REQUIRE(p.x < n);
  REQUIRE(p.y < n);
  REQUIRE((static_cast<u128>(sq(p.x, n)) + sq(p.y, n)) % n == z % n);
  if (nontrivial) {
    REQUIRE(p.nontrivial);
    REQUIRE(sq(p.x, n) != 0);
    REQUIRE(sq(p.y, n) != 0);
  }
  REQUIRE(p.nontrivial == (sq(p.x, n) != 0 && sq(p.y, n) != 0));
}

// z representable mod n, with both squares nonzero if requested.
bool brute_representable(u64 z, u64 n, bool nontrivial) {
  for (u64 x = 0; x < n; ++x)
    for (u64 y = 0; y < n; ++y) {
      u64 sx = x * x % n, sy = y * y % n;
      if ((sx + sy) % n != z) continue;
      if (nontrivial && (sx == 0 || sy == 0)) continue;
      return true;
    }
  return false;
}

}  // namespace

TEST_CASE("squares_mod") {
  CHECK(squares_mod(4, true).members == std::vector<u64>{0, 1});
  CHECK(squares_mod(5, false).members == std::vector<u64>{1, 4});
  CHECK(squares_mod(25, false).members == std::vector<u64>{1, 4, 6, 9, 11, 14, 16, 19, 21, 24});
  CHECK(squares_mod(2, false).members == std::vector<u64>{1});
  CHECK_THROWS_AS(squares_mod(1, true), DomainError);
  for (u64 n = 2; n <= 300; ++n) {
    std::set<u64> expect;
    for (u64 x = 0; x < n; ++x) expect.insert(x * x % n);
    const auto s0 = squares_mod(n, true);
    REQUIRE(std::vector<u64>(expect.begin(), expect.end()) == s0.members);
    expect.erase(0);
    REQUIRE(std::vector<u64>(expect.begin(), expect.end()) == squares_mod(n, false).members);
  }
}

TEST_CASE("nonzero square membership by valuation") {
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 13ULL})
    for (unsigned k = 1; k <= 4; ++k) {
      const u64 m = *checked_pow(p, k);
      if (m > 3000) continue;
      const auto s = squares_mod(m, false);
      for (u64 z = 0; z < m; ++z) REQUIRE(is_nonzero_square_mod_prime_power(z, p, k) == s.contains(z));
    }
}

TEST_CASE("classify examples") {
  const auto r10 = classify(10);
  CHECK(r10.universal_nontrivial);
  CHECK(r10.cond_odd_case == std::nullopt);
  const auto r4 = classify(4);
  CHECK_FALSE(r4.universal_nontrivial);
  CHECK_FALSE(r4.universal_with_zero);
  CHECK_FALSE(r4.cond_not_div_4);
  const auto r25 = classify(25);
  CHECK_FALSE(r25.universal_nontrivial);
  CHECK(r25.universal_with_zero);
  CHECK(r25.five_adic_k == 2);
  CHECK(r25.cofactor_m == 1);
  CHECK(r25.cond_odd_case == false);
  const auto r125 = classify(125);
  CHECK(r125.universal_nontrivial);
  CHECK(r125.five_adic_k == 3);
  CHECK(r125.cond_odd_case == true);
  const auto r63 = classify(63);
  CHECK_FALSE(r63.cond_no_q_squared);
  CHECK_THROWS_AS(classify(1), DomainError);
}

TEST_CASE("classify report invariants") {
  for (u64 n = 2; n <= 5000; ++n) {
    const auto r = classify(n);
    REQUIRE(r.n == n);
    u64 five = 1;
    for (unsigned i = 0; i < r.five_adic_k; ++i) five *= 5;
    REQUIRE(five * r.cofactor_m == n);
    REQUIRE(r.cofactor_m % 5 != 0);
    REQUIRE(r.cond_odd_case.has_value() == (n % 2 == 1));
    REQUIRE(r.universal_with_zero == (r.cond_no_q_squared && r.cond_not_div_4));
    REQUIRE(r.universal_nontrivial == (r.universal_with_zero && r.cond_has_p1mod4 &&
                                       (n % 2 == 0 || *r.cond_odd_case)));
    if (r.universal_nontrivial) REQUIRE(r.universal_with_zero);
  }
}

TEST_CASE("universal_moduli golden lists") {
  CHECK(universal_moduli(91, false) == std::vector<u64>{10, 13, 17, 26, 29, 30, 34, 37, 39, 41, 50, 51, 53,
                                                        58, 61, 65, 70, 73, 74, 78, 82, 85, 87, 89, 91});
  CHECK(universal_moduli(38, true) == std::vector<u64>{2,  3,  5,  6,  7,  10, 11, 13, 14, 15, 17, 19, 21,
                                                       22, 23, 25, 26, 29, 30, 31, 33, 34, 35, 37, 38});
  CHECK(universal_moduli(9, false).empty());
  CHECK_THROWS_AS(universal_moduli(1, false), DomainError);
}

TEST_CASE("solve_prime_power") {
  const auto a = solve_prime_power(0, 13, 1);
  REQUIRE(a);
  CHECK(a->x == 2);
  CHECK(a->y == 3);
  const auto b = solve_prime_power(1, 2, 1);
  REQUIRE(b);
  CHECK(b->x == 1);
  CHECK(b->y == 0);
  const auto c = solve_prime_power(0, 7, 1);
  REQUIRE(c);
  CHECK(c->x == 0);
  CHECK(c->y == 0);
  CHECK_FALSE(c->nontrivial);
  CHECK_THROWS_AS(solve_prime_power(0, 7, 2), DomainError);
  CHECK_THROWS_AS(solve_prime_power(0, 2, 2), DomainError);
  CHECK_THROWS_AS(solve_prime_power(0, 9, 1), DomainError);

  // y^2 != 0 for p = 1 (mod 4) and for q = 3 (mod 4) with z != 0; x odd for 2.
  for (u64 p : {5ULL, 13ULL, 17ULL, 29ULL, 101ULL}) {
    for (unsigned e = 1; e <= 3; ++e) {
      const u64 m = *checked_pow(p, e);
      if (m > 20'000) continue;
      for (u64 z = 0; z < m; ++z) {
        const auto s = solve_prime_power(z, p, e);
        REQUIRE(s);
        require_witness(*s, m, z, false);
        REQUIRE(sq(s->y, m) != 0);
      }
    }
  }
  for (u64 q : brute::odd_primes_up_to(200)) {
    if (q % 4 != 3) continue;
    for (u64 z = 1; z < q; ++z) {
      const auto s = solve_prime_power(z, q, 1);
      REQUIRE(s);
      require_witness(*s, q, z, false);
      REQUIRE(sq(s->y, q) != 0);
    }
  }
  for (u64 z = 0; z < 2; ++z) CHECK(solve_prime_power(z, 2, 1)->x == 1);
}

TEST_CASE("solve_prime_power on large moduli uses the progression search") {
  const u64 p = 1'000'000'009;  // prime, 1 mod 4
  for (u64 z : std::vector<u64>{0, 1, 2, 12345, p - 1}) {
    const auto s = solve_prime_power(z, p, 1);
    REQUIRE(s);
    require_witness(*s, p, z, false);
  }
  const u64 q = 1'000'000'007;  // prime, 3 mod 4
  for (u64 z : std::vector<u64>{1, 5, q - 1}) {
    const auto s = solve_prime_power(z, q, 1);
    REQUIRE(s);
    require_witness(*s, q, z, false);
  }
  const u64 p2 = 101ULL * 101 * 101 * 101;
  for (u64 z : {0ULL, 101ULL, 101ULL * 101 * 7, 999ULL}) {
    const auto s = solve_prime_power(z, 101, 4);
    REQUIRE(s);
    require_witness(*s, p2, z, false);
  }
}

TEST_CASE("solve_five_power examples") {
  const auto one = solve_five_power(1, 3);
  CHECK(one.x == 51);
  CHECK(one.y == 5);
  CHECK((51 * 51 + 25) % 125 == 1);
  const auto zero = solve_five_power(0, 3);
  require_witness(zero, 125, 0, true);
  const auto hundred = solve_five_power(100, 3);
  require_witness(hundred, 125, 100, true);
  CHECK_THROWS_AS(solve_five_power(1, 2), DomainError);
}

TEST_CASE("solve_five_power is nontrivial for every z mod 5^3 and 5^4") {
  for (unsigned k : {3U, 4U, 5U}) {
    const u64 m = *checked_pow(5, k);
    for (u64 z = 0; z < m; ++z) require_witness(solve_five_power(z, k), m, z, true);
  }
}

TEST_CASE("residue_pair_for_nonsquare") {
  CHECK(residue_pair_for_nonsquare(6, 7) == std::pair<u64, u64>{2, 4});
  CHECK(residue_pair_for_nonsquare(2, 3) == std::pair<u64, u64>{1, 1});
  const auto [s, t] = residue_pair_for_nonsquare(5, 7);
  CHECK((s + t) % 7 == 5);
  CHECK(legendre(static_cast<i64>(s), 7) == 1);
  CHECK(legendre(static_cast<i64>(t), 7) == 1);
  CHECK_THROWS_AS(residue_pair_for_nonsquare(2, 7), DomainError);  // 2 = 3^2
  CHECK_THROWS_AS(residue_pair_for_nonsquare(0, 7), DomainError);
  CHECK_THROWS_AS(residue_pair_for_nonsquare(2, 5), DomainError);
  for (u64 p : brute::odd_primes_up_to(100)) {
    if (p % 4 != 3) continue;
    for (u64 z = 1; z < p; ++z) {
      if (!brute::roots(z, p).empty()) continue;
      const auto [a, b] = residue_pair_for_nonsquare(z, p);
      REQUIRE((a + b) % p == z);
      REQUIRE(!brute::roots(a, p).empty());
      REQUIRE(!brute::roots(b, p).empty());
      REQUIRE(a != 0);
      REQUIRE(b != 0);
    }
  }
}

TEST_CASE("solve examples") {
  const auto a = solve(3, 10, true);
  REQUIRE(a);
  CHECK(a->x == 3);
  CHECK(a->y == 2);
  CHECK(solve(1, 5, true) == std::nullopt);
  CHECK(solve(1, 25, true) == std::nullopt);
  const auto b = solve(6, 7, false);
  REQUIRE(b);
  CHECK(b->x == 3);
  CHECK(b->y == 2);
  CHECK_THROWS_AS(solve(0, 1, true), DomainError);
}

TEST_CASE("solve completeness on universal moduli up to 200") {
  for (u64 n = 2; n <= 200; ++n) {
    if (!classify(n).universal_nontrivial) continue;
    for (u64 z = 0; z < n; ++z) {
      const auto s = solve(z, n, true);
      REQUIRE(s);
      require_witness(*s, n, z, true);
    }
  }
}

TEST_CASE("solve verdicts match brute force for every n <= 120") {
  for (u64 n = 2; n <= 120; ++n)
    for (u64 z = 0; z < n; ++z)
      for (bool nontrivial : {false, true}) {
        const auto s = solve(z, n, nontrivial);
        REQUIRE(s.has_value() == brute_representable(z, n, nontrivial));
        if (s) require_witness(*s, n, z, nontrivial);
        const auto e = solve_exhaustive(z, n, nontrivial);
        REQUIRE(e.has_value() == s.has_value());
      }
}

TEST_CASE("solve constructs witnesses for large universal moduli") {
  // 2 * 13 * 1000003 is squarefree with 13 = 1 (mod 4).
  const std::vector<u64> moduli{2ULL * 13 * 1'000'003, 125ULL * 3 * 7 * 11, 5ULL * 5 * 5 * 5 * 5 * 5 * 5 * 5,
                                1'000'000'009ULL, 17ULL * 17 * 17 * 1'000'000'007ULL,
                                u64{1'000'000'009} * 1'000'000'007ULL};
  for (u64 n : moduli) {
    REQUIRE(classify(n).universal_nontrivial);
    for (u64 z : std::vector<u64>{0, 1, 2, n / 3, n - 1, n / 2 + 7}) {
      const auto s = solve(z, n, true);
      REQUIRE(s);
      require_witness(*s, n, z, true);
    }
  }
}

TEST_CASE("solve with zero allowed on large moduli") {
  const std::vector<u64> moduli{1'000'000'007ULL, 3ULL * 7 * 11 * 19 * 23 * 1'000'003, 2ULL * 1'000'000'007ULL};
  for (u64 n : moduli) {
    REQUIRE(classify(n).universal_with_zero);
    for (u64 z : std::vector<u64>{0, 1, 3, n / 3, n - 1}) {
      const auto s = solve(z, n, false);
      REQUIRE(s);
      require_witness(*s, n, z, false);
    }
  }
}

TEST_CASE("solve near the top of the 63-bit range") {
  const u64 p = 999'999'999'999'999'989ULL;   // prime, 1 mod 4
  const u64 q = 9'223'372'036'854'775'783ULL;  // prime, 3 mod 4
  for (u64 z : std::vector<u64>{0, 1, 7, p / 2, p - 1}) {
    const auto s = solve(z, p, true);
    REQUIRE(s);
    require_witness(*s, p, z, true);
  }
  for (u64 z : std::vector<u64>{1, 5, q / 3, q - 1}) {
    const auto s = solve(z, q, true);
    REQUIRE(s);
    require_witness(*s, q, z, true);
  }
  CHECK_FALSE(solve(0, q, true));
  const auto zero = solve(0, q, false);
  REQUIRE(zero);
  require_witness(*zero, q, 0, false);
}

TEST_CASE("solve is deterministic") {
  for (u64 n : {130ULL, 1'000'000'009ULL})
    for (u64 z : {7ULL, 11ULL}) CHECK(solve(z, n, true) == solve(z, n, true));
}

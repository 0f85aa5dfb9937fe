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
#include "twosq/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace twosq {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr u64 kTrialLimit = 1'000'000;

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
  u64 x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant; c walks 1, 2, ... so results are reproducible.
u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 m = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect_large_factors(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  collect_large_factors(d, out);
  collect_large_factors(n / d, out);
}

void require_odd_prime(u64 p, const char* where) {
  if (p == 2 || !is_prime(p))
    throw DomainError(std::string(where) + ": modulus " + std::to_string(p) +
                      " is not an odd prime");
}

}  // namespace

// ---- Factorization ---------------------------------------------------------

Factorization::Factorization(u64 value, std::vector<PrimePower> factors)
    : value_(value), factors_(std::move(factors)) {}

unsigned Factorization::exponent_of(u64 prime) const {
  for (const auto& f : factors_)
    if (f.prime == prime) return f.exponent;
  return 0;
}

u64 Factorization::reassemble() const {
  u64 product = 1;
  for (const auto& f : factors_)
    for (unsigned i = 0; i < f.exponent; ++i) product *= f.prime;
  return product;
}

// ---- CongruenceSystem ------------------------------------------------------

CongruenceSystem::CongruenceSystem(std::initializer_list<Congruence> entries) {
  for (const auto& e : entries) add(e.residue, e.modulus);
}

void CongruenceSystem::add(u64 residue, u64 modulus) {
  if (modulus < 2)
    throw DomainError("congruence modulus must be at least 2, got " +
                      std::to_string(modulus));
  entries_.push_back({residue % modulus, modulus});
}

// ---- helpers ---------------------------------------------------------------

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
  }
  return result;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 isqrt(u64 value) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(value)));
  while (r > 0 && static_cast<u128>(r) * r > value) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= value) ++r;
  return r;
}

bool is_perfect_square(u64 value) {
  u64 r = isqrt(value);
  return r * r == value;
}

std::optional<u64> checked_pow(u64 base, unsigned exponent) {
  u128 result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    result *= base;
    if (result > kMaxValue) return std::nullopt;
  }
  return static_cast<u64>(result);
}

unsigned valuation(u64 value, u64 prime) {
  unsigned v = 0;
  while (value != 0 && value % prime == 0) {
    value /= prime;
    ++v;
  }
  return v;
}

u64 reduce(i64 value, u64 m) {
  i128 r = static_cast<i128>(value) % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

u64 inverse_mod(u64 a, u64 m) {
  i128 old_r = a % m, r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1)
    throw DomainError(std::to_string(a) + " is not invertible modulo " +
                      std::to_string(m));
  old_s %= static_cast<i128>(m);
  if (old_s < 0) old_s += m;
  return static_cast<u64>(old_s);
}

// ---- core operations -------------------------------------------------------

bool is_prime(u64 value) {
  if (value < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (value == p) return true;
    if (value % p == 0) return false;
  }
  u64 d = value - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // Deterministic base set for all 64-bit n.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (a % value == 0) continue;
    if (miller_rabin_witness(value, a, d, s)) return false;
  }
  return true;
}

Factorization factorize(u64 value) {
  if (value == 0 || value > kMaxValue)
    throw DomainError("factorize: value " + std::to_string(value) +
                      " outside [1, 2^63 - 1]");
  std::vector<PrimePower> factors;
  u64 rest = value;
  auto strip = [&](u64 p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (u64 p = 5; p <= kTrialLimit && p * p <= rest; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (rest > 1) {
    if (rest <= kTrialLimit * kTrialLimit || is_prime(rest)) {
      factors.push_back({rest, 1});
    } else {
      std::vector<u64> large;
      collect_large_factors(rest, large);
      std::sort(large.begin(), large.end());
      for (u64 p : large) {
        if (!factors.empty() && factors.back().prime == p)
          ++factors.back().exponent;
        else
          factors.push_back({p, 1});
      }
    }
  }
  return Factorization(value, std::move(factors));
}

int legendre(i64 a, u64 p) {
  require_odd_prime(p, "legendre");
  u64 r = reduce(a, p);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<u64> sqrt_mod_prime(u64 z, u64 p) {
  require_odd_prime(p, "sqrt_mod_prime");
  z %= p;
  if (z == 0) return 0;
  if (pow_mod(z, (p - 1) / 2, p) != 1) return std::nullopt;
  u64 x;
  if (p % 4 == 3) {
    x = pow_mod(z, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks with the smallest non-residue.
    u64 q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    u64 nonresidue = 2;
    while (pow_mod(nonresidue, (p - 1) / 2, p) != p - 1) ++nonresidue;
    u64 c = pow_mod(nonresidue, q, p);
    u64 t = pow_mod(z, q, p);
    x = pow_mod(z, (q + 1) / 2, p);
    unsigned m = s;
    while (t != 1) {
      unsigned i = 0;
      u64 t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, p);
        ++i;
      }
      u64 b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
      x = mul_mod(x, b, p);
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      m = i;
    }
  }
  return std::min(x, p - x);
}

std::optional<u64> hensel_lift_sqrt(u64 z, u64 p, unsigned k) {
  require_odd_prime(p, "hensel_lift_sqrt");
  if (k == 0) throw DomainError("hensel_lift_sqrt: exponent must be at least 1");
  auto pk = checked_pow(p, k);
  if (!pk) throw DomainError("hensel_lift_sqrt: p^k exceeds the 63-bit range");
  z %= *pk;
  if (z % p == 0)
    throw DomainError("hensel_lift_sqrt: " + std::to_string(p) + " divides " +
                      std::to_string(z));
  auto root = sqrt_mod_prime(z % p, p);
  if (!root) return std::nullopt;
  u64 x = *root;
  u64 m = p;
  for (unsigned j = 1; j < k; ++j) {
    m *= p;
    // x <- x - (x^2 - z) / (2x)  (mod p^{j+1})
    u64 fx = (mul_mod(x, x, m) + m - z % m) % m;
    u64 step = mul_mod(fx, inverse_mod(mul_mod(2, x, m), m), m);
    x = (x + m - step) % m;
  }
  return std::min(x, *pk - x);
}

CrtResult crt_combine(const CongruenceSystem& system) {
  const auto& entries = system.entries();
  if (entries.empty()) throw DomainError("crt_combine: empty congruence system");
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (gcd(entries[i].modulus, entries[j].modulus) != 1)
        throw DomainError("crt_combine: moduli " + std::to_string(entries[i].modulus) +
                          " and " + std::to_string(entries[j].modulus) +
                          " are not coprime");
  u64 residue = entries.front().residue;
  u64 modulus = entries.front().modulus;
  for (std::size_t i = 1; i < entries.size(); ++i) {
    const auto& [r2, m2] = entries[i];
    u128 combined = static_cast<u128>(modulus) * m2;
    if (combined > kMaxValue) throw DomainError("crt_combine: product of moduli overflows");
    u64 diff = (r2 + m2 - residue % m2) % m2;
    u64 t = mul_mod(diff, inverse_mod(modulus % m2, m2), m2);
    residue = static_cast<u64>(residue + static_cast<u128>(modulus) * t);
    modulus = static_cast<u64>(combined);
  }
  return {residue, modulus};
}

}  // namespace twosq

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
#include "twosq/integer_two_squares.hpp"

#include <string>
#include <utility>

namespace twosq {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr u64 kBruteForcePrimeLimit = 1'000'000;

SquareDecomposition scaled(const SquareDecomposition& d, u64 factor) {
  return SquareDecomposition::make(d.a * factor, d.b * factor);
}

// Composes and, when the identity lands on a zero coordinate, tries the
// conjugate product (c and d exchanged) instead.
SquareDecomposition compose_prefer_nonzero(const SquareDecomposition& acc,
                                           const SquareDecomposition& factor) {
  SquareDecomposition direct = compose(acc, factor);
  if (direct.a != 0) return direct;
  SquareDecomposition swapped{factor.target, factor.b, factor.a};
  SquareDecomposition conjugate = compose(acc, swapped);
  return conjugate.a != 0 ? conjugate : direct;
}

bool has_prime_1_mod_4(const Factorization& f) {
  for (const auto& pp : f.factors())
    if (pp.prime % 4 == 1) return true;
  return false;
}

}  // namespace

SquareDecomposition SquareDecomposition::make(u64 x, u64 y) {
  if (x > y) std::swap(x, y);
  u128 sum = static_cast<u128>(x) * x + static_cast<u128>(y) * y;
  if (sum > kMaxValue) throw DomainError("square decomposition exceeds the 63-bit range");
  return {static_cast<u64>(sum), x, y};
}

bool TripleParams::valid() const {
  return k > 0 && v > 0 && u > v && (u % 2) != (v % 2) && gcd(u, v) == 1;
}

bool is_sum_of_two_squares(u64 z) {
  if (z == 0) return true;
  const Factorization f = factorize(z);
  for (const auto& pp : f.factors())
    if (pp.prime % 4 == 3 && pp.exponent % 2 == 1) return false;
  return true;
}

bool is_sum_of_two_nonzero_squares(u64 z) {
  if (z == 0) return false;
  Factorization f = factorize(z);
  for (const auto& pp : f.factors())
    if (pp.prime % 4 == 3 && pp.exponent % 2 == 1) return false;
  return !is_perfect_square(z) || has_prime_1_mod_4(f);
}

bool is_hypotenuse_criterion(u64 z) {
  if (z == 0 || !is_perfect_square(z))
    throw DomainError("is_hypotenuse_criterion: " + std::to_string(z) +
                      " is not a positive perfect square");
  const u64 root = isqrt(z);
  for (u64 u = 2; u * u + 1 <= root; ++u) {
    for (u64 v = 1; v < u && u * u + v * v <= root; ++v) {
      if ((u + v) % 2 == 0 || gcd(u, v) != 1) continue;
      if (root % (u * u + v * v) == 0) return true;
    }
  }
  return false;
}

SquareDecomposition compose(const SquareDecomposition& d1, const SquareDecomposition& d2) {
  u128 product = static_cast<u128>(d1.target) * d2.target;
  if (product > kMaxValue) throw DomainError("compose: product exceeds the 63-bit range");
  i128 a = d1.a, b = d1.b, c = d2.a, d = d2.b;
  i128 first = a * c - b * d;
  if (first < 0) first = -first;
  i128 second = a * d + b * c;
  SquareDecomposition out = SquareDecomposition::make(static_cast<u64>(first), static_cast<u64>(second));
  if (out.target != static_cast<u64>(product))
    throw DomainError("compose: inputs are not valid decompositions");
  return out;
}

SquareDecomposition decompose_prime(u64 p) {
  if (p % 4 != 1 || !is_prime(p))
    throw DomainError("decompose_prime: " + std::to_string(p) +
                      " is not a prime congruent to 1 mod 4");
  if (p < kBruteForcePrimeLimit) {
    for (u64 c = 1; 2 * c * c <= p; ++c) {
      u64 rest = p - c * c;
      if (is_perfect_square(rest)) return SquareDecomposition::make(c, isqrt(rest));
    }
  } else {
    // Cornacchia: Euclid on (p, sqrt(-1) mod p) until the remainder drops
    // below sqrt(p).
    u64 a = p;
    u64 b = *sqrt_mod_prime(p - 1, p);
    while (static_cast<u128>(b) * b > p) {
      u64 t = a % b;
      a = b;
      b = t;
    }
    u64 rest = p - b * b;
    if (is_perfect_square(rest)) return SquareDecomposition::make(b, isqrt(rest));
  }
  throw DomainError("decompose_prime: no decomposition found for " + std::to_string(p));
}

SquareDecomposition decompose_prime_power(u64 p, unsigned a) {
  if (a == 0) throw DomainError("decompose_prime_power: exponent must be at least 1");
  if (!checked_pow(p, a)) throw DomainError("decompose_prime_power: p^a exceeds the 63-bit range");
  const SquareDecomposition base = decompose_prime(p);
  if (a % 2 == 1) {
    SquareDecomposition acc = base;
    for (unsigned i = 1; i < a; ++i) acc = compose_prefer_nonzero(acc, base);
    return acc;
  }
  const u64 c = base.a, d = base.b;
  const u64 scale = *checked_pow(p, (a - 2) / 2);
  return SquareDecomposition::make(scale * (d * d - c * c), scale * (2 * c * d));
}

std::optional<SquareDecomposition> decompose_any(u64 z, bool require_nonzero) {
  if (z == 0) {
    if (require_nonzero) return std::nullopt;
    return SquareDecomposition{0, 0, 0};
  }
  const Factorization f = factorize(z);
  SquareDecomposition acc{1, 0, 1};
  u64 square_scale = 1;
  for (const auto& [prime, exponent] : f.factors()) {
    if (prime % 4 == 3) {
      if (exponent % 2 == 1) return std::nullopt;
      square_scale *= *checked_pow(prime, exponent / 2);
      continue;
    }
    const SquareDecomposition unit =
        prime == 2 ? SquareDecomposition{2, 1, 1} : decompose_prime(prime);
    for (unsigned i = 0; i < exponent; ++i) acc = compose_prefer_nonzero(acc, unit);
  }
  acc = scaled(acc, square_scale);
  if (!require_nonzero || acc.a != 0) return acc;

  // Perfect square: split off p^(2e) for the smallest p = 1 (mod 4).
  for (const auto& [prime, exponent] : f.factors()) {
    if (prime % 4 != 1) continue;
    const u64 power = *checked_pow(prime, exponent);
    return scaled(decompose_prime_power(prime, exponent), isqrt(z / power));
  }
  return std::nullopt;
}

PythagoreanTriple triple_from_params(const TripleParams& params) {
  if (!params.valid())
    throw DomainError("triple_from_params: need u > v > 0 of opposite parity, gcd(u, v) = 1, k > 0");
  const u128 u = params.u, v = params.v, k = params.k;
  const u128 c = (u * u + v * v) * k;
  if (u > (u64{1} << 32) || c > kMaxValue)
    throw DomainError("triple_from_params: triple exceeds the 63-bit range");
  return {static_cast<u64>((u * u - v * v) * k), static_cast<u64>(2 * u * v * k),
          static_cast<u64>(c)};
}

}  // namespace twosq

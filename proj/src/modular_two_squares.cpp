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
#include "twosq/modular_two_squares.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "twosq/integer_two_squares.hpp"

namespace twosq {

namespace {

using i128 = __int128;

// Progression search cap for primes r = 1 (mod 4).
constexpr u64 kProgressionCandidates = 100'000;
// Largest modulus that may be searched exhaustively, per component or whole.
constexpr u64 kExhaustiveLimit = u64{1} << 20;

struct Witness {
  u64 x;
  u64 y;
};

enum Kind : std::size_t { kAny = 0, kOne = 1, kBoth = 2 };

bool square_nonzero(u64 v, u64 m) { return mul_mod(v, v, m) != 0; }

Witness swapped(Witness w) { return {w.y, w.x}; }

// Keeps y^2 != 0 when exactly one coordinate is a nonzero square.
Witness orient_y(Witness w, u64 m) {
  return square_nonzero(w.y, m) ? w : swapped(w);
}

u64 canonical(u64 x, u64 m) { return std::min(x, m - x == m ? 0 : m - x); }

u64 mod_of(i128 v, u64 m) {
  i128 r = v % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

// First prime among start, start + stride, ...; entries are all 1 (mod 4).
std::optional<u64> progression_prime(i128 start, i128 stride) {
  if (start < 2) start += ((2 - start + stride - 1) / stride) * stride;
  for (u64 i = 0; i < kProgressionCandidates; ++i) {
    i128 r = start + static_cast<i128>(i) * stride;
    if (r > static_cast<i128>(kMaxValue)) break;
    if (is_prime(static_cast<u64>(r))) return static_cast<u64>(r);
  }
  return std::nullopt;
}

// Smallest-x witness of the requested kind modulo m by direct scan.
std::optional<Witness> exhaustive_witness(u64 z, u64 m, Kind kind) {
  if (m > kExhaustiveLimit)
    throw DomainError("modulus " + std::to_string(m) + " too large for exhaustive search");
  constexpr u64 kUnset = ~u64{0};
  std::vector<u64> root(m, kUnset);
  for (u64 x = 0; x < m; ++x) {
    u64 r = mul_mod(x, x, m);
    if (root[r] == kUnset) root[r] = x;
  }
  for (u64 x = 0; x < m; ++x) {
    u64 sx = mul_mod(x, x, m);
    u64 r = (z % m + m - sx) % m;
    if (root[r] == kUnset) continue;
    if (kind == kOne && r == 0) continue;
    if (kind == kBoth && (r == 0 || sx == 0)) continue;
    return Witness{x, root[r]};
  }
  return std::nullopt;
}

// p = 1 (mod 4): find a prime r in 4p^(a-b)k + p^(a-b)(1 - z') + z' and
// decompose p^b r over Z. The result has y^2 != 0 (mod p^a).
std::optional<Witness> progression_route_p1(u64 z, u64 p, unsigned a, u64 m) {
  if (z == 0) {
    SquareDecomposition d = decompose_prime_power(p, a);
    return Witness{d.a % m, d.b % m};
  }
  const unsigned b = valuation(z, p);
  const u64 pb = *checked_pow(p, b);
  const i128 z_unit = z / pb;
  const i128 step = m / pb;
  auto r = progression_prime(step * (1 - z_unit) + z_unit, 4 * step);
  if (!r) return std::nullopt;
  const SquareDecomposition rd = decompose_prime(*r);
  const SquareDecomposition bd = b > 0 ? decompose_prime_power(p, b) : SquareDecomposition{1, 0, 1};
  const i128 e = bd.a, f = bd.b, c = rd.a, d = rd.b;
  Witness w{mod_of(e * c - f * d, m), mod_of(e * d + f * c, m)};
  w = orient_y(w, m);
  if (!square_nonzero(w.y, m)) return std::nullopt;
  return w;
}

// q = 3 (mod 4), z != 0: find a prime r in 4qk + q(3 + z) + z and reduce
// its decomposition mod q.
std::optional<Witness> progression_route_q3(u64 z, u64 q) {
  auto r = progression_prime(static_cast<i128>(q) * (3 + z) + z, static_cast<i128>(4) * q);
  if (!r) return std::nullopt;
  const SquareDecomposition rd = decompose_prime(*r);
  Witness w = orient_y({rd.a % q, rd.b % q}, q);
  if (!square_nonzero(w.y, q)) return std::nullopt;
  return w;
}

// Used when the progression leaves the 63-bit range before hitting a prime:
// smallest x with z - x^2 a unit residue, then y from Hensel lifting.
std::optional<Witness> direct_route_odd(u64 z, u64 p, unsigned e, u64 m) {
  for (u64 x = 0; x < kProgressionCandidates && x < m; ++x) {
    const u64 rest = (z + m - mul_mod(x, x, m)) % m;
    if (rest % p == 0 || legendre(static_cast<i64>(rest % p), p) != 1) continue;
    return Witness{x, *hensel_lift_sqrt(rest, p, e)};
  }
  return std::nullopt;
}

// A witness with y^2 != 0 for odd p (z != 0 when p = 3 (mod 4)).
std::optional<Witness> one_route_odd(u64 z, u64 p, unsigned e, u64 m) {
  auto w = p % 4 == 1 ? progression_route_p1(z, p, e, m) : progression_route_q3(z, p);
  if (!w) w = direct_route_odd(z, p, e, m);
  return w;
}

// s, t units with s^2 + t^2 = 1 (mod p^e), p odd; smallest s.
std::optional<Witness> unit_circle_point(u64 p, unsigned e, u64 m) {
  for (u64 s = 1; s < p; ++s) {
    u64 rest = (1 + p - mul_mod(s, s, p)) % p;
    if (rest == 0 || legendre(static_cast<i64>(rest), p) != 1) continue;
    u64 lifted = (1 + m - mul_mod(s, s, m)) % m;
    return Witness{s, *hensel_lift_sqrt(lifted, p, e)};
  }
  return std::nullopt;
}

// Both coordinates nonzero squares modulo p^e for an odd prime p (exponent 1
// when p = 3 (mod 4)).
std::optional<Witness> both_route_odd(u64 z, u64 p, unsigned e, u64 m,
                                      const std::optional<Witness>& one) {
  if (p == 5 && e >= 3) {
    SquarePair pair = solve_five_power(z, e);
    return Witness{pair.x, pair.y};
  }
  if (z == 0) {
    if (p % 4 != 1) return std::nullopt;
    SquareDecomposition d = decompose_prime_power(p, e);
    return Witness{d.a % m, d.b % m};
  }
  if (!is_nonzero_square_mod_prime_power(z, p, e)) {
    // Any witness with y^2 != 0 also has x^2 != 0, or z would be a square.
    return one;
  }
  if (z % p == 0) {
    // z - 1 = -1 (mod p) is a unit residue for p = 1 (mod 4).
    if (p % 4 != 1) return std::nullopt;
    auto x = hensel_lift_sqrt((z + m - 1) % m, p, e);
    if (!x) return std::nullopt;
    return Witness{*x, 1};
  }
  auto circle = unit_circle_point(p, e, m);
  if (!circle) return std::nullopt;
  const u64 w = *hensel_lift_sqrt(z, p, e);
  return Witness{mul_mod(circle->x, w, m), mul_mod(circle->y, w, m)};
}

// Route for q = 3 (mod 4) with zero allowed: z a unit.
std::optional<Witness> zero_allowed_route_q3(u64 z, u64 q, unsigned e, u64 m) {
  if (z == 0) return Witness{0, 0};
  if (z % q == 0) return std::nullopt;
  if (legendre(static_cast<i64>(z % q), q) == 1) return Witness{*hensel_lift_sqrt(z, q, e), 0};
  auto [s, t] = residue_pair_for_nonsquare(z % q, q);
  (void)t;
  const u64 x = *hensel_lift_sqrt(s, q, e);
  const u64 rest = (z + m - mul_mod(x, x, m)) % m;
  return Witness{x, *hensel_lift_sqrt(rest, q, e)};
}

struct Component {
  u64 prime = 0;
  unsigned exponent = 0;
  u64 modulus = 0;
  u64 z = 0;
  std::array<std::optional<Witness>, 3> witness;
  std::array<bool, 3> exact{};  // an empty slot is proven empty

  void fill_exhaustively() {
    for (std::size_t kind = 0; kind < 3; ++kind) {
      if (exact[kind] || witness[kind]) continue;
      witness[kind] = exhaustive_witness(z, modulus, static_cast<Kind>(kind));
      exact[kind] = true;
    }
  }

  // Slots calling for a witness that none of the routes supplied.
  void settle(Kind kind) {
    if (witness[kind] || exact[kind]) return;
    if (modulus > kExhaustiveLimit)
      throw DomainError("no certified construction modulo " + std::to_string(modulus));
    fill_exhaustively();
  }
};

Component build_component(u64 z, u64 p, unsigned e, u64 m, bool nontrivial) {
  Component c{p, e, m, z % m, {}, {}};
  auto mark_all_found = [&c] { c.exact = {true, true, true}; };
  if (p == 2 && e == 1) {
    if (!nontrivial) {
      c.witness[kAny] = Witness{c.z, 0};
    } else if (c.z == 1) {
      c.witness[kAny] = c.witness[kOne] = Witness{0, 1};
    } else {
      c.witness[kAny] = c.witness[kOne] = c.witness[kBoth] = Witness{1, 1};
    }
    mark_all_found();
    return c;
  }
  if (p % 4 == 1) {
    c.witness[kOne] = one_route_odd(c.z, p, e, m);
    if (nontrivial) c.witness[kBoth] = both_route_odd(c.z, p, e, m, c.witness[kOne]);
    c.witness[kAny] = c.witness[kOne];
    return c;
  }
  if (p % 4 == 3 && e == 1) {
    if (c.z == 0) {
      // -1 is a non-residue mod q, so x^2 + y^2 = 0 forces x = y = 0.
      c.witness[kAny] = Witness{0, 0};
      mark_all_found();
      return c;
    }
    if (!nontrivial) {
      c.witness[kAny] = zero_allowed_route_q3(c.z, p, e, m);
      return c;
    }
    c.witness[kOne] = one_route_odd(c.z, p, e, m);
    c.witness[kBoth] = both_route_odd(c.z, p, e, m, c.witness[kOne]);
    c.witness[kAny] = c.witness[kOne];
    return c;
  }
  if (p % 4 == 3 && !nontrivial) {
    c.witness[kAny] = zero_allowed_route_q3(c.z, p, e, m);
    if (c.witness[kAny]) return c;
  }
  // 2^e with e >= 2 and q^e with e >= 2 have no construction.
  if (m > kExhaustiveLimit)
    throw DomainError("no certified construction modulo " + std::to_string(m));
  c.fill_exhaustively();
  return c;
}

// Picks one witness per component so that the glued pair has the requested
// shape, or nullopt when the current slots do not allow it.
std::optional<std::vector<Witness>> choose(const std::vector<Component>& comps, bool nontrivial) {
  std::vector<Witness> picks;
  for (const auto& c : comps) {
    if (!c.witness[kAny]) return std::nullopt;
    picks.push_back(*c.witness[kAny]);
  }
  if (!nontrivial) return picks;

  // Mix: x^2 != 0 from the first component that can supply it, y^2 != 0
  // from another.
  std::vector<std::size_t> with_one;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (comps[i].witness[kOne]) with_one.push_back(i);
  if (with_one.size() >= 2) {
    for (std::size_t i : with_one) picks[i] = *comps[i].witness[kOne];
    picks[with_one.front()] = swapped(*comps[with_one.front()].witness[kOne]);
    return picks;
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].witness[kBoth]) {
      picks[i] = *comps[i].witness[kBoth];
      return picks;
    }
  }
  return std::nullopt;
}

SquarePair glue(u64 z, u64 n, const std::vector<Component>& comps, const std::vector<Witness>& picks) {
  u64 x = picks.front().x, y = picks.front().y;
  if (comps.size() > 1) {
    CongruenceSystem xs, ys;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      xs.add(picks[i].x, comps[i].modulus);
      ys.add(picks[i].y, comps[i].modulus);
    }
    x = crt_combine(xs).residue;
    y = crt_combine(ys).residue;
  }
  return SquarePair::make(n, z, canonical(x, n), canonical(y, n));
}

SquarePair make_component_pair(u64 m, u64 z, Witness w) {
  return SquarePair::make(m, z % m, canonical(w.x % m, m), canonical(w.y % m, m));
}

}  // namespace

bool ResidueSet::contains(u64 r) const {
  return std::binary_search(members.begin(), members.end(), r);
}

SquarePair SquarePair::make(u64 modulus, u64 z, u64 x, u64 y) {
  SquarePair pair{modulus, z % modulus, x % modulus, y % modulus, false};
  if (!pair.verify())
    throw std::logic_error("square pair (" + std::to_string(x) + ", " + std::to_string(y) +
                           ") does not solve x^2 + y^2 = " + std::to_string(z) + " mod " +
                           std::to_string(modulus));
  pair.nontrivial = square_nonzero(pair.x, modulus) && square_nonzero(pair.y, modulus);
  return pair;
}

bool SquarePair::verify() const {
  if (modulus < 2) return false;
  u64 sum = (mul_mod(x, x, modulus) + mul_mod(y, y, modulus)) % modulus;
  bool tagged = square_nonzero(x, modulus) && square_nonzero(y, modulus);
  return sum == z % modulus && (!nontrivial || tagged);
}

bool is_nonzero_square_mod_prime_power(u64 z, u64 p, unsigned k) {
  const u64 m = *checked_pow(p, k);
  z %= m;
  if (z == 0) return false;
  const unsigned v = valuation(z, p);
  if (v % 2 == 1) return false;
  const u64 unit = z / *checked_pow(p, v);
  if (p == 2) {
    const unsigned room = k - v;
    if (room >= 3) return unit % 8 == 1;
    if (room == 2) return unit % 4 == 1;
    return true;
  }
  return legendre(static_cast<i64>(unit % p), p) == 1;
}

ResidueSet squares_mod(u64 n, bool include_zero) {
  if (n < 2) throw DomainError("squares_mod: modulus must be at least 2");
  std::vector<bool> seen(n, false);
  for (u64 x = 0; x <= n / 2; ++x) seen[mul_mod(x, x, n)] = true;
  ResidueSet set{n, include_zero, {}};
  for (u64 r = include_zero ? 0 : 1; r < n; ++r)
    if (seen[r]) set.members.push_back(r);
  return set;
}

ClassificationReport classify(u64 n) {
  if (n < 2 || n > kMaxValue)
    throw DomainError("classify: modulus " + std::to_string(n) + " outside [2, 2^63 - 1]");
  const Factorization f = factorize(n);
  ClassificationReport report;
  report.n = n;
  report.cond_no_q_squared = true;
  bool has_p1mod4_besides_5 = false;
  for (const auto& [prime, exponent] : f.factors()) {
    if (prime % 4 == 3 && exponent >= 2) report.cond_no_q_squared = false;
    if (prime % 4 == 1) {
      report.cond_has_p1mod4 = true;
      if (prime != 5) has_p1mod4_besides_5 = true;
    }
  }
  report.cond_not_div_4 = f.exponent_of(2) < 2;
  report.five_adic_k = f.exponent_of(5);
  report.cofactor_m = n / *checked_pow(5, report.five_adic_k);
  const bool odd = n % 2 == 1;
  if (odd) report.cond_odd_case = report.five_adic_k >= 3 || has_p1mod4_besides_5;
  report.universal_with_zero = report.cond_no_q_squared && report.cond_not_div_4;
  report.universal_nontrivial = report.universal_with_zero && report.cond_has_p1mod4 &&
                                (!odd || *report.cond_odd_case);
  return report;
}

std::vector<u64> universal_moduli(u64 limit, bool allow_zero) {
  if (limit < 2) throw DomainError("universal_moduli: limit must be at least 2");
  std::vector<u64> out;
  for (u64 n = 2; n <= limit; ++n) {
    const ClassificationReport r = classify(n);
    if (allow_zero ? r.universal_with_zero : r.universal_nontrivial) out.push_back(n);
  }
  return out;
}

std::optional<SquarePair> solve_prime_power(u64 z, u64 base, unsigned exponent) {
  if (!is_prime(base)) throw DomainError("solve_prime_power: base " + std::to_string(base) + " is not prime");
  if (exponent == 0) throw DomainError("solve_prime_power: exponent must be at least 1");
  if (base % 4 != 1 && exponent != 1)
    throw DomainError("solve_prime_power: prime " + std::to_string(base) + " only accepts exponent 1");
  const auto m = checked_pow(base, exponent);
  if (!m) throw DomainError("solve_prime_power: base^exponent exceeds the 63-bit range");
  z %= *m;
  if (base == 2) return make_component_pair(2, z, z == 1 ? Witness{1, 0} : Witness{1, 1});
  if (base % 4 == 3) {
    if (z == 0) return make_component_pair(base, 0, {0, 0});
    auto w = one_route_odd(z, base, 1, base);
    if (!w && base <= kExhaustiveLimit) w = exhaustive_witness(z, base, kOne);
    if (!w) return std::nullopt;
    return make_component_pair(base, z, *w);
  }
  auto w = one_route_odd(z, base, exponent, *m);
  if (!w && *m <= kExhaustiveLimit) w = exhaustive_witness(z, *m, kOne);
  if (!w) return std::nullopt;
  return make_component_pair(*m, z, *w);
}

SquarePair solve_five_power(u64 z, unsigned k) {
  if (k < 3) throw DomainError("solve_five_power: exponent must be at least 3");
  const auto m = checked_pow(5, k);
  if (!m) throw DomainError("solve_five_power: 5^k exceeds the 63-bit range");
  z %= *m;
  Witness w{};
  if (z == 0) {
    SquareDecomposition d = decompose_prime_power(5, k);
    w = {d.a, d.b};
  } else if (!is_nonzero_square_mod_prime_power(z, 5, k)) {
    auto route = one_route_odd(z, 5, k, *m);
    if (!route) throw std::logic_error("solve_five_power: progression search exhausted");
    w = *route;
  } else if (z % 5 != 0) {
    // x^2 + 5^2 = 1 with x^2 = -24, scaled by a square root of z.
    const u64 x = *hensel_lift_sqrt(*m - 24 % *m, 5, k);
    const u64 root = *hensel_lift_sqrt(z, 5, k);
    w = {mul_mod(x, root, *m), mul_mod(5, root, *m)};
  } else {
    // z - 1 = 4 (mod 5).
    w = {*hensel_lift_sqrt(z - 1, 5, k), 1};
  }
  SquarePair pair = make_component_pair(*m, z, w);
  if (!pair.nontrivial) throw std::logic_error("solve_five_power: produced a trivial pair");
  return pair;
}

std::pair<u64, u64> residue_pair_for_nonsquare(u64 z, u64 p) {
  if (p % 4 != 3 || !is_prime(p))
    throw DomainError("residue_pair_for_nonsquare: " + std::to_string(p) +
                      " is not a prime congruent to 3 mod 4");
  z %= p;
  if (legendre(static_cast<i64>(z), p) != -1)
    throw DomainError("residue_pair_for_nonsquare: " + std::to_string(z) +
                      " is not a non-residue mod " + std::to_string(p));
  u64 a = 1;
  while (!(legendre(static_cast<i64>(a), p) == 1 && legendre(static_cast<i64>(a + 1), p) == -1)) ++a;
  const u64 s = (p - mul_mod(z, a, p)) % p;
  const u64 t = mul_mod(z, a + 1, p);
  return {s, t};
}

std::optional<SquarePair> solve(u64 z, u64 n, bool require_nontrivial) {
  if (n < 2 || n > kMaxValue)
    throw DomainError("solve: modulus " + std::to_string(n) + " outside [2, 2^63 - 1]");
  z %= n;
  const Factorization f = factorize(n);
  std::vector<Component> comps;
  for (const auto& [prime, exponent] : f.factors()) {
    const u64 m = *checked_pow(prime, exponent);
    comps.push_back(build_component(z, prime, exponent, m, require_nontrivial));
  }
  auto picks = choose(comps, require_nontrivial);
  if (!picks) {
    for (auto& c : comps) {
      c.settle(kAny);
      if (require_nontrivial) {
        c.settle(kOne);
        c.settle(kBoth);
      }
    }
    picks = choose(comps, require_nontrivial);
  }
  if (!picks) return std::nullopt;
  SquarePair pair = glue(z, n, comps, *picks);
  if (require_nontrivial && !pair.nontrivial)
    throw std::logic_error("solve: glued pair is not nontrivial");
  return pair;
}

std::optional<SquarePair> solve_exhaustive(u64 z, u64 n, bool require_nontrivial) {
  if (n < 2) throw DomainError("solve_exhaustive: modulus must be at least 2");
  auto w = exhaustive_witness(z % n, n, require_nontrivial ? kBoth : kAny);
  if (!w) return std::nullopt;
  return SquarePair::make(n, z, w->x, w->y);
}

}  // namespace twosq

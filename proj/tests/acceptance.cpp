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
/* Acceptance suite: one pass/fail line per criterion. Usage:
 *   acceptance <path-to-twosq-cli>
 */
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "twosq/arithmetic.hpp"
#include "twosq/integer_two_squares.hpp"
#include "twosq/modular_two_squares.hpp"
#include "twosq/oracle.hpp"

using namespace twosq;

namespace {

using u128 = unsigned __int128;
using Clock = std::chrono::steady_clock;

std::string cli_path;

struct Outcome {
  bool ok;
  std::string detail;
};

std::string run_cli(const std::string& args, int& exit_code) {
  const std::string cmd = "'" + cli_path + "' " + args;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = ::pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string join(const std::vector<u64>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

bool nontrivial_valid(const SquarePair& p, u64 n, u64 z) {
  const u64 sx = static_cast<u64>(static_cast<u128>(p.x) * p.x % n);
  const u64 sy = static_cast<u64>(static_cast<u128>(p.y) * p.y % n);
  return p.modulus == n && (sx + sy) % n == z && sx != 0 && sy != 0 && p.nontrivial;
}

Outcome golden(bool allow_zero, u64 limit, const std::vector<u64>& expected) {
  const auto lib = universal_moduli(limit, allow_zero);
  int code = 0;
  const std::string out =
      run_cli("enumerate " + std::to_string(limit) + (allow_zero ? " --allow-zero" : ""), code);
  const std::string want = join(expected) + "\n";
  const bool ok = lib == expected && out == want && code == 0;
  return {ok, "library=" + std::string(lib == expected ? "match" : "MISMATCH") + " cli=" +
                  (out == want ? "match" : "MISMATCH: " + out)};
}

Outcome oracle_equivalence() {
  int mismatches = 0;
  for (u64 n = 2; n <= 400; ++n) {
    const auto r = classify(n);
    if (oracle::oracle_universal(n, false) != r.universal_nontrivial) ++mismatches;
    if (oracle::oracle_universal(n, true) != r.universal_with_zero) ++mismatches;
  }
  return {mismatches == 0, "mismatches=" + std::to_string(mismatches)};
}

Outcome solver_completeness() {
  int failures = 0, checked = 0;
  for (u64 n = 2; n <= 200; ++n) {
    if (!classify(n).universal_nontrivial) continue;
    for (u64 z = 0; z < n; ++z) {
      ++checked;
      const auto s = solve(z, n, true);
      if (!s || !nontrivial_valid(*s, n, z)) ++failures;
    }
  }
  return {failures == 0, "checked=" + std::to_string(checked) + " failures=" + std::to_string(failures)};
}

bool exhaustive_two_squares(u64 z, bool nonzero) {
  for (u64 a = nonzero ? 1 : 0; 2 * a * a <= z; ++a)
    for (u64 b = a; a * a + b * b <= z; ++b)
      if (a * a + b * b == z) return true;
  return false;
}

Outcome integer_criteria() {
  int mismatches = 0;
  for (u64 z = 0; z <= 20'000; ++z) {
    if (is_sum_of_two_squares(z) != exhaustive_two_squares(z, false)) ++mismatches;
    if (is_sum_of_two_nonzero_squares(z) != exhaustive_two_squares(z, true)) ++mismatches;
  }
  return {mismatches == 0, "mismatches=" + std::to_string(mismatches)};
}

Outcome hypotenuse_equivalence() {
  int mismatches = 0, checked = 0;
  for (u64 r = 1; r * r <= 20'000; ++r) {
    ++checked;
    if (is_hypotenuse_criterion(r * r) != is_sum_of_two_nonzero_squares(r * r)) ++mismatches;
  }
  return {mismatches == 0, "squares=" + std::to_string(checked) + " mismatches=" + std::to_string(mismatches)};
}

Outcome five_adic() {
  int failures = 0;
  for (unsigned k : {3U, 4U}) {
    const u64 m = *checked_pow(5, k);
    for (u64 z = 0; z < m; ++z)
      if (!nontrivial_valid(solve_five_power(z, k), m, z)) ++failures;
  }
  const auto root = hensel_lift_sqrt(101, 5, 3);
  const bool root_ok = root && *root == 51 && (51 * 51 + 25) % 125 == 1;
  return {failures == 0 && root_ok,
          "failures=" + std::to_string(failures) + " hensel(101,5,3)=" + (root ? std::to_string(*root) : "none")};
}

Outcome impossibilities() {
  const bool five = !solve(1, 5, true).has_value();
  const bool twenty_five = !solve(1, 25, true).has_value();
  const bool four = oracle::oracle_scan(4).representable == std::set<std::uint64_t>{0, 1, 2};
  int code = 0;
  const std::string out = run_cli("solve 5 1", code);
  const bool cli = out == "no-solution\n" && code == 1;
  return {five && twenty_five && four && cli,
          std::string("solve(1,5)=") + (five ? "none" : "FOUND") + " solve(1,25)=" + (twenty_five ? "none" : "FOUND") +
              " scan(4)=" + (four ? "{0,1,2}" : "WRONG") + " cli=" + (cli ? "exit1" : "WRONG")};
}

Outcome property_suites() {
  std::mt19937_64 rng(20261014);
  int failures = 0;
  for (int i = 0; i < 10'000; ++i) {
    const auto d1 = SquareDecomposition::make(rng() % 40'000, rng() % 40'000);
    const auto d2 = SquareDecomposition::make(rng() % 40'000, rng() % 40'000);
    const auto c = compose(d1, d2);
    if (static_cast<u128>(c.a) * c.a + static_cast<u128>(c.b) * c.b != static_cast<u128>(d1.target) * d2.target)
      ++failures;
  }
  const std::vector<u64> pool{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 4, 8, 9, 25, 27, 49};
  for (int i = 0; i < 10'000; ++i) {
    CongruenceSystem sys;
    u64 product = 1;
    for (u64 m : pool) {
      if (rng() % 2 || gcd(product, m) != 1 || product * m > 1'000'000) continue;
      sys.add(rng() % m, m);
      product *= m;
    }
    if (sys.empty()) continue;
    const auto r = crt_combine(sys);
    if (r.modulus != product || r.residue >= product) ++failures;
    for (const auto& [c, m] : sys.entries())
      if (r.residue % m != c) ++failures;
  }
  for (u64 p = 3; p <= 50; p += 2) {
    if (!is_prime(p)) continue;
    for (unsigned k = 1; k <= 4; ++k) {
      const u64 m = *checked_pow(p, k);
      for (u64 z = 1; z < m; ++z) {
        if (z % p == 0 || legendre(static_cast<i64>(z), p) != 1) continue;
        const auto root = hensel_lift_sqrt(z, p, k);
        if (!root || mul_mod(*root, *root, m) != z) ++failures;
      }
    }
  }
  return {failures == 0, "failures=" + std::to_string(failures)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <twosq-cli>\n";
    return 2;
  }
  cli_path = argv[1];

  struct Criterion {
    int id;
    std::string name;
    double budget_seconds;  // 0 = no time bound
    std::function<Outcome()> check;
  };
  const std::vector<u64> nontrivial_list{10, 13, 17, 26, 29, 30, 34, 37, 39, 41, 50, 51, 53,
                                         58, 61, 65, 70, 73, 74, 78, 82, 85, 87, 89, 91};
  const std::vector<u64> zero_list{2,  3,  5,  6,  7,  10, 11, 13, 14, 15, 17, 19, 21,
                                   22, 23, 25, 26, 29, 30, 31, 33, 34, 35, 37, 38};
  const std::vector<Criterion> criteria{
      {1, "golden sequence, nontrivial (enumerate 91)", 1.0, [&] { return golden(false, 91, nontrivial_list); }},
      {2, "golden sequence, zero allowed (enumerate 38 --allow-zero)", 1.0,
       [&] { return golden(true, 38, zero_list); }},
      {3, "classification == oracle for n in 2..400", 30.0, oracle_equivalence},
      {4, "solver completeness on universal n <= 200", 60.0, solver_completeness},
      {5, "integer criteria vs exhaustion, z <= 20000", 30.0, integer_criteria},
      {6, "hypotenuse criterion == nonzero criterion on squares <= 20000", 0.0, hypotenuse_equivalence},
      {7, "5-adic construction, k in {3,4}; hensel(101,5,3) = 51", 5.0, five_adic},
      {8, "known impossibilities", 0.0, impossibilities},
      {9, "property suites: composition, CRT, Hensel", 0.0, property_suites},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o{false, ""};
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = c.budget_seconds == 0.0 || secs < c.budget_seconds;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("[%s] criterion %d: %s (%s; %.3fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), secs,
                c.budget_seconds > 0 ? (" / budget " + std::to_string(c.budget_seconds).substr(0, 4) + "s").c_str() : "");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

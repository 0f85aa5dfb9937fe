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
#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "twosq/twosq.h"

namespace twosq::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultMaxN = std::uint64_t{1} << 40;
constexpr std::uint64_t kMaxValue = (std::uint64_t{1} << 63) - 1;
constexpr std::uint64_t kSelftestMax = 10'000;

struct UsageError {
  std::string message;
};

struct InvariantError {
  std::string message;
};

std::uint64_t max_n_from_env() {
  const char* raw = std::getenv("TWOSQ_MAX_N");
  if (!raw || !*raw) return kDefaultMaxN;
  std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError{"TWOSQ_MAX_N must be a positive integer, got '" + text + "'"};
  std::uint64_t value = 0;
  try {
    value = std::stoull(text);
  } catch (const std::exception&) {
    throw UsageError{"TWOSQ_MAX_N out of range: '" + text + "'"};
  }
  if (value < 2 || value > kMaxValue) throw UsageError{"TWOSQ_MAX_N must lie in [2, 2^63 - 1]"};
  return value;
}

void guard_n(std::uint64_t n, const char* name) {
  const std::uint64_t limit = max_n_from_env();
  if (n < 2 || n > limit)
    throw UsageError{std::string(name) + " = " + std::to_string(n) + " outside [2, " +
                     std::to_string(limit) + "] (raise with TWOSQ_MAX_N)"};
}

void guard_value(std::uint64_t v, const char* name) {
  if (v > kMaxValue) throw UsageError{std::string(name) + " exceeds 2^63 - 1"};
}

// Domain errors from the library are usage errors at this layer.
void check(twosq_status status) {
  if (status == TWOSQ_OK || status == TWOSQ_NO_SOLUTION) return;
  if (status == TWOSQ_ERR_DOMAIN) throw UsageError{twosq_last_error()};
  throw InvariantError{std::string(twosq_status_name(status)) + ": " + twosq_last_error()};
}

struct ListHandle {
  twosq_list* ptr = nullptr;
  ~ListHandle() { twosq_list_free(ptr); }
  std::vector<std::uint64_t> values() const {
    const std::uint64_t* data = twosq_list_data(ptr);
    return data ? std::vector<std::uint64_t>(data, data + twosq_list_size(ptr)) : std::vector<std::uint64_t>{};
  }
};

struct Record {
  std::string command;
  json inputs = json::object();
  json result;
  std::string text;
  int exit_code = kExitOk;

  std::string status() const {
    return exit_code == kExitOk ? "ok" : exit_code == kExitNoSolution ? "no-solution" : "error";
  }
};

void emit(const Record& rec, bool as_json, std::ostream& out) {
  if (as_json) {
    json j{{"command", rec.command}, {"inputs", rec.inputs}, {"result", rec.result}, {"status", rec.status()}};
    out << j.dump() << '\n';
  } else {
    out << rec.text << '\n';
  }
}

std::string flag(int v) { return v ? "1" : "0"; }

Record do_classify(std::uint64_t n) {
  guard_n(n, "n");
  twosq_report r{};
  check(twosq_classify(n, &r));
  Record rec{"classify", {{"n", n}}};
  json odd = r.cond_odd_case < 0 ? json(nullptr) : json(r.cond_odd_case == 1);
  rec.result = {{"n", r.n},
                {"cond_no_q_squared", r.cond_no_q_squared == 1},
                {"cond_not_div_4", r.cond_not_div_4 == 1},
                {"cond_has_p1mod4", r.cond_has_p1mod4 == 1},
                {"cond_odd_case", odd},
                {"five_adic_k", r.five_adic_k},
                {"cofactor_m", r.cofactor_m},
                {"universal_nontrivial", r.universal_nontrivial == 1},
                {"universal_with_zero", r.universal_with_zero == 1}};
  rec.text = "n=" + std::to_string(r.n) + " no_q_squared=" + flag(r.cond_no_q_squared) +
             " not_div_4=" + flag(r.cond_not_div_4) + " has_p1mod4=" + flag(r.cond_has_p1mod4) +
             " odd_case=" + (r.cond_odd_case < 0 ? std::string("na") : flag(r.cond_odd_case)) +
             " k=" + std::to_string(r.five_adic_k) + " m=" + std::to_string(r.cofactor_m) +
             " universal_nontrivial=" + flag(r.universal_nontrivial) +
             " universal_with_zero=" + flag(r.universal_with_zero);
  return rec;
}

Record do_solve(std::uint64_t n, std::uint64_t z, bool allow_zero) {
  guard_n(n, "n");
  if (z >= n) throw UsageError{"z must be reduced modulo n"};
  twosq_pair p{};
  const twosq_status status = twosq_solve(z, n, allow_zero ? 0 : 1, &p);
  check(status);
  Record rec{"solve", {{"n", n}, {"z", z}, {"allow_zero", allow_zero}}};
  if (status == TWOSQ_NO_SOLUTION) {
    rec.result = nullptr;
    rec.text = "no-solution";
    rec.exit_code = kExitNoSolution;
    return rec;
  }
  if (!twosq_pair_verify(&p) || (!allow_zero && !p.nontrivial))
    throw InvariantError{"emitted pair does not verify"};
  rec.result = {{"modulus", p.modulus}, {"z", p.z}, {"x", p.x}, {"y", p.y}, {"nontrivial", p.nontrivial == 1}};
  rec.text = std::to_string(p.x) + " " + std::to_string(p.y) + (p.nontrivial ? " nontrivial" : " trivial");
  return rec;
}

Record do_decompose(std::uint64_t z, bool allow_zero) {
  guard_value(z, "z");
  twosq_decomposition d{};
  const twosq_status status = twosq_decompose(z, allow_zero ? 0 : 1, &d);
  check(status);
  Record rec{"decompose", {{"z", z}, {"allow_zero", allow_zero}}};
  if (status == TWOSQ_NO_SOLUTION) {
    rec.result = nullptr;
    rec.text = "no-decomposition";
    rec.exit_code = kExitNoSolution;
    return rec;
  }
  const unsigned __int128 sum = static_cast<unsigned __int128>(d.a) * d.a + static_cast<unsigned __int128>(d.b) * d.b;
  if (sum != d.target || d.target != z || (!allow_zero && d.a == 0))
    throw InvariantError{"emitted decomposition does not verify"};
  rec.result = {{"target", d.target}, {"a", d.a}, {"b", d.b}};
  rec.text = std::to_string(d.a) + " " + std::to_string(d.b);
  return rec;
}

Record do_enumerate(std::uint64_t limit, bool allow_zero) {
  guard_n(limit, "limit");
  ListHandle list;
  check(twosq_universal_moduli(limit, allow_zero ? 1 : 0, &list.ptr));
  Record rec{"enumerate", {{"limit", limit}, {"allow_zero", allow_zero}}};
  const auto values = list.values();
  rec.result = values;
  for (std::size_t i = 0; i < values.size(); ++i) rec.text += (i ? " " : "") + std::to_string(values[i]);
  return rec;
}

Record do_triple(std::uint64_t u, std::uint64_t v, std::uint64_t k) {
  std::uint64_t t[3] = {0, 0, 0};
  check(twosq_triple(u, v, k, t));
  Record rec{"triple", {{"u", u}, {"v", v}, {"k", k}}};
  rec.result = {{"a", t[0]}, {"b", t[1]}, {"c", t[2]}};
  rec.text = std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]);
  return rec;
}

int do_selftest(std::uint64_t limit, std::ostream& out) {
  if (limit < 2 || limit > kSelftestMax) throw UsageError{"selftest limit must lie in [2, 10000]"};
  std::uint64_t class_checked = 0, class_bad = 0;
  std::uint64_t solve_checked = 0, solve_bad = 0;
  std::uint64_t int_checked = 0, int_bad = 0;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    twosq_report r{};
    int nontrivial = 0, with_zero = 0;
    check(twosq_classify(n, &r));
    check(twosq_oracle_universal(n, 0, &nontrivial));
    check(twosq_oracle_universal(n, 1, &with_zero));
    ++class_checked;
    if (nontrivial != r.universal_nontrivial || with_zero != r.universal_with_zero) ++class_bad;
    if (!r.universal_nontrivial) continue;
    for (std::uint64_t z = 0; z < n; ++z) {
      twosq_pair p{};
      ++solve_checked;
      if (twosq_solve(z, n, 1, &p) != TWOSQ_OK || !p.nontrivial || !twosq_pair_verify(&p)) ++solve_bad;
    }
  }
  for (std::uint64_t z = 0; z <= limit; ++z) {
    for (int nonzero = 0; nonzero <= 1; ++nonzero) {
      int criterion = 0;
      twosq_decomposition d{};
      check(twosq_is_sum_of_two_squares(z, nonzero, &criterion));
      const twosq_status oracle = twosq_oracle_integer_decompose(z, nonzero, &d);
      check(oracle);
      ++int_checked;
      if (criterion != (oracle == TWOSQ_OK ? 1 : 0)) ++int_bad;
    }
  }
  out << "classification checked=" << class_checked << " mismatches=" << class_bad << '\n';
  out << "solver checked=" << solve_checked << " failures=" << solve_bad << '\n';
  out << "integer checked=" << int_checked << " mismatches=" << int_bad << '\n';
  const bool pass = class_bad == 0 && solve_bad == 0 && int_bad == 0;
  out << "selftest " << (pass ? "pass" : "fail") << '\n';
  return pass ? kExitOk : kExitInvariant;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sums of two squares over Z and Z_n", "twosq"};
  app.require_subcommand(1);
  bool as_json = false;
  bool allow_zero = false;
  std::uint64_t a = 0, b = 0, c = 0;
  std::function<int()> action;

  auto* classify = app.add_subcommand("classify", "Classify the modulus n");
  classify->add_option("n", a, "modulus")->required();
  classify->add_flag("--json", as_json);
  classify->callback([&] { action = [&] { emit(do_classify(a), as_json, out); return int{kExitOk}; }; });

  auto* solve = app.add_subcommand("solve", "Solve x^2 + y^2 = z (mod n)");
  solve->add_option("n", a, "modulus")->required();
  solve->add_option("z", b, "target residue")->required();
  solve->add_flag("--allow-zero", allow_zero);
  solve->add_flag("--json", as_json);
  solve->callback([&] {
    action = [&] {
      Record rec = do_solve(a, b, allow_zero);
      emit(rec, as_json, out);
      return rec.exit_code;
    };
  });

  auto* decompose = app.add_subcommand("decompose", "Write z = a^2 + b^2 over the integers");
  decompose->add_option("z", a, "target")->required();
  decompose->add_flag("--allow-zero", allow_zero);
  decompose->add_flag("--json", as_json);
  decompose->callback([&] {
    action = [&] {
      Record rec = do_decompose(a, allow_zero);
      emit(rec, as_json, out);
      return rec.exit_code;
    };
  });

  auto* enumerate = app.add_subcommand("enumerate", "List universal moduli up to limit");
  enumerate->add_option("limit", a, "largest modulus")->required();
  enumerate->add_flag("--allow-zero", allow_zero);
  enumerate->add_flag("--json", as_json);
  enumerate->callback([&] { action = [&] { emit(do_enumerate(a, allow_zero), as_json, out); return int{kExitOk}; }; });

  auto* triple = app.add_subcommand("triple", "Pythagorean triple from (u, v, k)");
  triple->add_option("u", a)->required();
  triple->add_option("v", b)->required();
  triple->add_option("k", c)->required();
  triple->add_flag("--json", as_json);
  triple->callback([&] { action = [&] { emit(do_triple(a, b, c), as_json, out); return int{kExitOk}; }; });

  auto* selftest = app.add_subcommand("selftest", "Oracle-equivalence sweeps up to limit");
  selftest->add_option("limit", a, "largest modulus / integer")->required();
  selftest->callback([&] { action = [&] { return do_selftest(a, out); }; });

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "twosq: " << e.message << '\n';
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "twosq: invariant violation: " << e.message << '\n';
    return kExitInvariant;
  }
}

}  // namespace twosq::cli

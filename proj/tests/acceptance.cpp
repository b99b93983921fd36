// Copyright 2026 The qmask Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate. One line per criterion; exit status 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "qmask/verify.hpp"

using namespace qmask;

namespace {

constexpr double kTol = 1e-9;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string summary(const VerificationReport& r) {
  std::ostringstream out;
  double worst = 0.0;
  double fid = 1.0;
  for (const auto& s : r.scenarios) {
    worst = std::max(worst, s.max_deviation);
    if (s.kind == "swap" || s.kind == "cross") fid = std::min(fid, s.min_fidelity);
  }
  out << r.passed() << "/" << r.scenarios.size() << " pass, max dev " << worst << ", min fid " << fid;
  for (const auto& s : r.scenarios) {
    if (!s.verdict) {
      out << ", first failure " << s.name << (s.note.empty() ? "" : " (" + s.note + ")");
      break;
    }
  }
  return out.str();
}

int count_kind(const VerificationReport& r, const std::string& kind) {
  int n = 0;
  for (const auto& s : r.scenarios) n += s.kind == kind ? 1 : 0;
  return n;
}

RunOptions options(bool all_rows = false) {
  RunOptions o;
  o.tolerance = kTol;
  o.workers = worker_count_from_env();
  o.all_rows = all_rows;
  return o;
}

Outcome bell_bell() {
  const auto r = run_builtin_suite("bell-bell-all", options(true));
  bool shape = r.scenarios.size() == 16;
  for (const auto& s : r.scenarios) {
    shape = shape && s.rows.size() == 4;
    for (const auto& row : s.rows) {
      shape = shape && std::abs(row.reference_probability - 0.25) <= kTol &&
              std::abs(row.predicted_probability - 0.25) <= kTol && row.fidelity >= 1.0 - kTol;
    }
  }
  return {r.verdict && shape, summary(r) + (shape ? ", 4 outcomes of 1/4 each" : ", outcome shape wrong")};
}

Outcome cat_swap() {
  const auto r = run_builtin_suite("cat-swap", options());
  std::size_t exhaustive = 0;
  for (int m1 = 2; m1 <= 4; ++m1) {
    for (int m2 = 2; m2 <= 4; ++m2) exhaustive += (std::size_t{1} << (m1 + m2)) * 4 * static_cast<std::size_t>(m1 * m2 - 1);
  }
  const bool count = r.scenarios.size() == exhaustive + 100;
  return {r.verdict && count, summary(r) + (count ? "" : ", unexpected scenario count")};
}

Outcome karimipour() {
  const auto r = run_builtin_suite("karimipour", options());
  // 3 levels x 3 sizes x 100 label sets; two forms against the oracle plus one cross check each.
  const bool count = count_kind(r, "swap") == 1800 && count_kind(r, "cross") == 900;
  return {r.verdict && count, summary(r) + (count ? "" : ", unexpected scenario count")};
}

Outcome masking() {
  const auto r = run_builtin_suite("masking-def1", options());
  return {r.verdict && count_kind(r, "masking") >= 16, summary(r)};
}

Outcome ghz_parity() {
  const auto r = run_builtin_suite("ghz-parity", options());
  const bool count = count_kind(r, "swap") == 28 && count_kind(r, "parity") == 28;
  return {r.verdict && count, summary(r)};
}

Outcome masked_swaps() {
  auto r = run_builtin_suite("masked-qudit", options());
  const auto li = run_builtin_suite("li-masked", options());
  r.scenarios.insert(r.scenarios.end(), li.scenarios.begin(), li.scenarios.end());
  const bool count = r.scenarios.size() == 200 + 60;
  bool errata = true;
  for (const auto& e : adjudicate_errata(r.scenarios)) errata = errata && e.status != "unresolved";
  return {r.failed() == 0 && count && errata, summary(r)};
}

Outcome structural() {
  const auto r = run_builtin_suite("structural", options());
  return {r.verdict, summary(r)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "Bell-Bell table", 1.0, bell_bell},
      {2, "cat swap", 30.0, cat_swap},
      {3, "cat-Bell form equivalence", 60.0, karimipour},
      {4, "masking condition", 30.0, masking},
      {5, "GHZ parity law", 10.0, ghz_parity},
      {6, "masked d-level swaps", 120.0, masked_swaps},
      {7, "structural suites", 30.0, structural},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("error: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = outcome.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("criterion %d %-26s %s  %.2fs (limit %.0fs)  %s%s\n", c.id, c.title, pass ? "PASS" : "FAIL", seconds,
                c.limit_seconds, outcome.detail.c_str(), in_time ? "" : ", over time limit");
  }
  std::printf("%s\n", failures == 0 ? "all criteria pass" : "some criteria failed");
  return failures == 0 ? 0 : 1;
}

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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>

#include "qmask/verify.hpp"

namespace qmask {

namespace {

constexpr const char* kNonCanonicalNote = "non-canonical labels";

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body) {
  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(threads, count); ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

void fill_from(ScenarioResult& result, const ComparisonReport& report, bool keep_rows) {
  result.verdict = report.verdict;
  result.max_deviation = report.max_deviation;
  result.min_fidelity = report.min_fidelity;
  result.missing = report.missing;
  result.extra = report.extra;
  if (keep_rows || !report.verdict) result.rows = report.rows;
}

void fail_with(ScenarioResult& result, const std::exception& e) {
  result.verdict = false;
  result.min_fidelity = 0.0;
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    result.note = std::string(to_string(err->kind())) + ": " + err->what();
  } else {
    result.note = e.what();
  }
}

bool has_non_canonical_tail(const SwapScenario& s) {
  for (std::size_t r = 1; r < s.inputs.size(); ++r) {
    const auto* c = std::get_if<CatLabel>(&s.inputs[r]);
    if (c && !c->bits.empty() && c->bits.front() == 1) return true;
  }
  return false;
}

ScenarioResult run_one(const ScenarioSpec& spec, const RunOptions& options) {
  ScenarioResult result;
  result.name = spec.scenario.name;
  result.kind = "swap";
  result.predictor = to_string(spec.predictor);
  result.inputs = static_cast<int>(spec.scenario.inputs.size());
  const double tol = options.tolerance.value_or(spec.tolerance.value_or(kNormTolerance));
  try {
    const OutcomeDistribution predicted = predict(spec.scenario, spec.predictor);
    const OracleResult oracle = simulate_swap(spec.scenario);
    fill_from(result, compare(predicted, oracle, tol), options.all_rows);
    if (spec.predictor == Predictor::cat_swap && has_non_canonical_tail(spec.scenario)) result.note = kNonCanonicalNote;
  } catch (const std::exception& e) {
    fail_with(result, e);
  }
  return result;
}

double tolerance_of(const RunOptions& options) { return options.tolerance.value_or(kNormTolerance); }

VerificationReport assemble(std::string suite, const RunOptions& options, std::vector<ScenarioResult> results,
                            std::chrono::steady_clock::time_point start) {
  VerificationReport report;
  report.suite = std::move(suite);
  report.seed = options.seed;
  report.tolerance = tolerance_of(options);
  report.errata = adjudicate_errata(results);
  report.scenarios = std::move(results);
  report.verdict = report.failed() == 0;
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void append(std::vector<ScenarioResult>& into, std::vector<ScenarioResult> more) {
  into.insert(into.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

// Suites ---------------------------------------------------------------------

std::vector<ScenarioResult> bell_bell_suite(const RunOptions& options) {
  return run_scenarios(enumerate_scenarios("bell-bell", Bounds{}, options.seed), options);
}

std::vector<ScenarioResult> cat_swap_suite(const RunOptions& options) {
  Bounds bounds;
  bounds.m_max = 4;
  bounds.n_max = 3;
  bounds.count = 100;
  return run_scenarios(enumerate_scenarios("cat-swap", bounds, options.seed), options);
}

std::vector<ScenarioResult> karimipour_suite(const RunOptions& options) {
  Bounds bounds;
  bounds.levels = {2, 3, 5};
  bounds.m_max = 4;
  bounds.count = 100;
  const auto specs = enumerate_scenarios("karimipour", bounds, options.seed + 1);
  auto results = run_scenarios(specs, options);

  // Specs come in (karimipour, clear) pairs over the same labels.
  const std::size_t pairs = specs.size() / 2;
  std::vector<ScenarioResult> cross(pairs);
  const double tol = tolerance_of(options);
  parallel_for(pairs, options.workers, [&](std::size_t i) {
    const SwapScenario& s = specs[2 * i].scenario;
    ScenarioResult& r = cross[i];
    r.name = s.name.substr(0, s.name.rfind('/')) + "/karimipour-vs-clear";
    r.kind = "cross";
    r.predictor = "cat_bell_karimipour";
    r.inputs = static_cast<int>(s.inputs.size());
    try {
      fill_from(r, compare(predict(s, Predictor::cat_bell_karimipour), predict(s, Predictor::cat_bell_clear), tol),
                options.all_rows);
    } catch (const std::exception& e) {
      fail_with(r, e);
    }
  });
  append(results, std::move(cross));
  return results;
}

double diagonal_deviation(const DensityMatrix& rho, const std::vector<double>& expected) {
  const int d = static_cast<int>(expected.size());
  double worst = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Complex want = i == j ? expected[static_cast<std::size_t>(i)] : 0.0;
      worst = std::max(worst, std::abs(rho(i, j) - want));
    }
  }
  return worst;
}

ScenarioResult masking_result(std::string name, std::string masker, int inputs, const MaskingReport& report,
                              double extra_deviation, double tol) {
  ScenarioResult r;
  r.name = std::move(name);
  r.kind = "masking";
  r.predictor = std::move(masker);
  r.inputs = inputs;
  r.max_deviation = std::max(report.max_deviation, extra_deviation);
  r.verdict = report.verdict && extra_deviation <= tol;
  if (report.cross_deviation) {
    std::ostringstream note;
    note << "cross " << *report.cross_deviation;
    r.note = note.str();
  }
  return r;
}

std::vector<ScenarioResult> masking_suite(const RunOptions& options) {
  const double tol = tolerance_of(options);
  std::vector<ScenarioResult> results;
  std::mt19937_64 rng(options.seed + 2);

  {
    const std::vector<PureState> family{mask_modi_qubit(0), mask_modi_qubit(1)};
    const auto subsystems = single_particle_subsystems(2);
    const auto report = verify_masking(family, subsystems, tol);
    const double dev = diagonal_deviation(report.subsystems.front().marginals.front(), {0.5, 0.5});
    results.push_back(masking_result("masking/modi_qubit", "modi_qubit", 2, report, dev, tol));
  }

  // The qudit masker hides phases: each family shares eta and varies theta.
  constexpr int kSamples = 100;
  constexpr int kFamilySize = 4;
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (int d = 2; d <= 7; ++d) {
    MaskingReport worst;
    worst.verdict = true;
    double marginal_dev = 0.0;
    const auto subsystems = single_particle_subsystems(2);
    for (int sample = 0; sample < kSamples; ++sample) {
      const PhaseAmplitudeInput base = random_phase_amplitude(rng, d);
      std::vector<PureState> family{mask_modi_qudit(base)};
      for (int f = 1; f < kFamilySize; ++f) {
        PhaseAmplitudeInput in = base;
        for (double& t : in.theta) t = angle(rng);
        family.push_back(mask_modi_qudit(in));
      }
      const auto report = verify_masking(family, subsystems, tol);
      std::vector<double> eta2;
      for (double e : base.eta) eta2.push_back(e * e);
      for (const auto& sub : report.subsystems) {
        for (const auto& rho : sub.marginals) marginal_dev = std::max(marginal_dev, diagonal_deviation(rho, eta2));
      }
      worst.verdict = worst.verdict && report.verdict;
      worst.max_deviation = std::max(worst.max_deviation, report.max_deviation);
      worst.cross_deviation = std::max(worst.cross_deviation.value_or(0.0), report.cross_deviation.value_or(0.0));
    }
    results.push_back(masking_result("masking/modi_qudit/d" + std::to_string(d), "modi_qudit", kSamples * kFamilySize,
                                     worst, marginal_dev, tol));

    PhaseAmplitudeInput uniform;
    uniform.eta.assign(static_cast<std::size_t>(d), 1.0 / std::sqrt(static_cast<double>(d)));
    std::vector<PureState> family;
    for (int f = 0; f < kFamilySize; ++f) {
      uniform.theta.clear();
      for (int l = 0; l < d; ++l) uniform.theta.push_back(angle(rng));
      family.push_back(mask_modi_qudit(uniform));
    }
    const auto report = verify_masking(family, subsystems, tol);
    double dev = 0.0;
    const std::vector<double> flat(static_cast<std::size_t>(d), 1.0 / d);
    for (const auto& sub : report.subsystems) {
      for (const auto& rho : sub.marginals) dev = std::max(dev, diagonal_deviation(rho, flat));
    }
    results.push_back(
        masking_result("masking/modi_qudit/uniform/d" + std::to_string(d), "modi_qudit", kFamilySize, report, dev, tol));
  }

  const auto li_family = [&](int d, int count, bool qubit_form) {
    std::vector<PureState> family;
    for (int i = 0; i < count; ++i) {
      const QuditAmplitudes in = random_amplitudes(rng, d);
      family.push_back(qubit_form ? mask_li_qubit(in) : mask_li_qudit(in));
    }
    const auto subsystems = single_particle_subsystems(2 * d);
    const auto report = verify_masking(family, subsystems, tol);
    const std::vector<double> flat(static_cast<std::size_t>(d), 1.0 / d);
    double dev = 0.0;
    for (const auto& rho : report.subsystems.front().marginals) dev = std::max(dev, diagonal_deviation(rho, flat));
    const std::string masker = qubit_form ? "li_qubit" : "li_qudit";
    results.push_back(masking_result("masking/" + masker + "/d" + std::to_string(d), masker, count, report, dev, tol));
  };
  li_family(2, 100, true);
  li_family(2, 100, false);
  li_family(3, 20, false);
  return results;
}

int remainder_sign(const PureState& remainder, const BasisSet& basis, double tol) {
  for (const auto& member : basis.members()) {
    if (fidelity(member.state, remainder) >= 1.0 - tol) return GhzLabel::parse(member.label).sign;
  }
  return 0;
}

std::vector<ScenarioResult> ghz_parity_suite(const RunOptions& options) {
  Bounds bounds;
  bounds.n_max = 4;
  const auto specs = enumerate_scenarios("masked-ghz", bounds, options.seed);
  auto results = run_scenarios(specs, options);

  const double tol = tolerance_of(options);
  std::vector<ScenarioResult> parity(specs.size());
  parallel_for(specs.size(), options.workers, [&](std::size_t i) {
    const SwapScenario& s = specs[i].scenario;
    ScenarioResult& r = parity[i];
    r.name = s.name + "/parity";
    r.kind = "parity";
    r.predictor = "masked_ghz";
    r.inputs = static_cast<int>(s.inputs.size());
    try {
      int total = 0;
      for (const auto& in : s.inputs) total += std::get<ModiQubitInput>(in).l;
      const BasisSet basis = ghz_basis(r.inputs);
      bool same_only = true;
      bool mixed_only = true;
      for (const auto& o : simulate_swap(s).distribution.outcomes) {
        const int measured = GhzLabel::parse(o.label).sign;
        const int remaining = remainder_sign(remainder_in_ascending_order(o), basis, tol);
        if (remaining == 0) throw Error(ErrorKind::BadScenario, "remainder of " + o.label + " is not a GHZ state");
        same_only = same_only && measured == remaining;
        mixed_only = mixed_only && measured != remaining;
      }
      for (const auto& o : predict(s, Predictor::masked_ghz).outcomes) {
        const bool same = GhzLabel::parse(o.label).sign == GhzLabel::parse(o.remainder_label).sign;
        same_only = same_only && same;
        mixed_only = mixed_only && !same;
      }
      const bool even = total % 2 == 0;
      r.verdict = even ? same_only : (mixed_only && !same_only);
      r.note = std::string(even ? "even" : "odd") + (same_only ? ", same-sign only" : "") +
               (mixed_only ? ", mixed-sign only" : "");
    } catch (const std::exception& e) {
      fail_with(r, e);
    }
  });
  append(results, std::move(parity));
  return results;
}

std::vector<ScenarioResult> masked_qudit_suite(const RunOptions& options) {
  Bounds bounds;
  bounds.levels = {2, 3, 5};
  bounds.n_max = 2;
  bounds.count = 50;
  auto specs = enumerate_scenarios("masked-qudit", bounds, options.seed + 3);
  bounds.levels = {2};
  bounds.n_max = 3;
  for (auto& spec : enumerate_scenarios("masked-qudit", bounds, options.seed + 4)) {
    if (spec.scenario.inputs.size() == 3) specs.push_back(std::move(spec));
  }
  return run_scenarios(specs, options);
}

std::vector<ScenarioResult> li_masked_suite(const RunOptions& options) {
  Bounds bounds;
  bounds.levels = {2};
  bounds.n_max = 3;
  bounds.count = 20;
  auto specs = enumerate_scenarios("li-masked", bounds, options.seed + 5);
  bounds.levels = {3};
  bounds.n_max = 2;
  for (auto& spec : enumerate_scenarios("li-masked", bounds, options.seed + 6)) specs.push_back(std::move(spec));
  return run_scenarios(specs, options);
}

ScenarioResult structural_result(std::string name, double deviation, double tol, std::string note = {}) {
  ScenarioResult r;
  r.name = std::move(name);
  r.kind = "structural";
  r.max_deviation = deviation;
  r.verdict = deviation <= tol;
  r.note = std::move(note);
  return r;
}

PureState random_state(std::mt19937_64& rng, int level, int particles) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(checked_dimension(level, particles)));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(normal(rng), normal(rng));
  return PureState(level, particles, std::move(v));
}

std::vector<ScenarioResult> structural_suite(const RunOptions& options) {
  const double tol = tolerance_of(options);
  std::vector<ScenarioResult> results;
  const auto check_basis = [&](const std::string& name, const BasisSet& basis) {
    results.push_back(structural_result("basis/" + name + "/gram", basis.gram_deviation(), tol));
    results.push_back(structural_result("basis/" + name + "/completeness", basis.completeness_deviation(), tol));
  };
  check_basis("bell", bell_basis());
  for (int n = 2; n <= 7; ++n) check_basis("ghz/n" + std::to_string(n), ghz_basis(n));
  for (int d : {2, 3, 5}) {
    for (int m = 2; m <= 4; ++m) {
      check_basis("maxent/d" + std::to_string(d) + "/m" + std::to_string(m), max_entangled_basis(d, m));
    }
  }
  for (int d : {2, 3}) check_basis("computational/d" + std::to_string(d), computational_basis(d, 2));

  // Summed over a complete basis of the measured particles, outcome
  // probabilities of a normalized state add to 1.
  std::mt19937_64 rng(options.seed + 7);
  constexpr int kProjectCalls = 1000;
  int calls = 0;
  double worst = 0.0;
  double worst_remainder = 0.0;
  std::uniform_int_distribution<int> pick_level(2, 3);
  std::uniform_int_distribution<int> pick_size(2, 4);
  while (calls < kProjectCalls) {
    const int d = pick_level(rng);
    const int n = pick_size(rng);
    const PureState state = random_state(rng, d, n);
    std::uniform_int_distribution<int> pick_k(1, n - 1);
    const int k = pick_k(rng);
    std::vector<int> positions(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) positions[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(positions.begin(), positions.end(), rng);
    const ParticleSet measured(std::vector<int>(positions.begin(), positions.begin() + k));
    const BasisSet basis = k >= 2 ? max_entangled_basis(d, k) : computational_basis(d, 1);
    double total = 0.0;
    for (const auto& member : basis.members()) {
      try {
        const auto p = project(state, measured, member.state);
        total += p.probability;
        worst_remainder = std::max(worst_remainder, std::abs(p.remainder.amplitudes().norm() - 1.0));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ZeroProbabilityOutcome) throw;
      }
      ++calls;
    }
    worst = std::max(worst, std::abs(total - 1.0));
  }
  results.push_back(structural_result("project/conservation", worst, tol, std::to_string(calls) + " calls"));
  results.push_back(structural_result("project/remainder-norm", worst_remainder, tol));

  // Maskers preserve inner products of their inputs.
  double modi = std::abs(inner_product(mask_modi_qubit(0), mask_modi_qubit(1)));
  modi = std::max(modi, std::abs(inner_product(mask_modi_qubit(1), mask_modi_qubit(1)) - 1.0));
  results.push_back(structural_result("isometry/modi_qubit", modi, tol));
  for (int d = 2; d <= 5; ++d) {
    double qudit = 0.0;
    double li = 0.0;
    for (int sample = 0; sample < 20; ++sample) {
      const auto a = random_phase_amplitude(rng, d);
      const auto b = random_phase_amplitude(rng, d);
      qudit = std::max(qudit, std::abs(inner_product(mask_modi_qudit(a), mask_modi_qudit(b)) -
                                       inner_product(a.ket(), b.ket())));
      if (d <= 3) {
        const auto x = random_amplitudes(rng, d);
        const auto y = random_amplitudes(rng, d);
        li = std::max(li, std::abs(inner_product(mask_li_qudit(x), mask_li_qudit(y)) - inner_product(x.ket(), y.ket())));
        if (d == 2) {
          li = std::max(li, std::abs(inner_product(mask_li_qubit(x), mask_li_qubit(y)) - inner_product(x.ket(), y.ket())));
        }
      }
    }
    results.push_back(structural_result("isometry/modi_qudit/d" + std::to_string(d), qudit, tol));
    if (d <= 3) results.push_back(structural_result("isometry/li/d" + std::to_string(d), li, tol));
  }
  return results;
}

using SuiteFn = std::vector<ScenarioResult> (*)(const RunOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"bell-bell-all", bell_bell_suite}, {"cat-swap", cat_swap_suite},         {"karimipour", karimipour_suite},
      {"masking-def1", masking_suite},    {"ghz-parity", ghz_parity_suite},     {"masked-qudit", masked_qudit_suite},
      {"li-masked", li_masked_suite},     {"structural", structural_suite},
  };
  return table;
}

// Errata ---------------------------------------------------------------------

struct Tally {
  int total = 0;
  int passed = 0;
};

Tally tally(const std::vector<ScenarioResult>& results, const std::function<bool(const ScenarioResult&)>& select) {
  Tally t;
  for (const auto& r : results) {
    if (!select(r)) continue;
    ++t.total;
    t.passed += r.verdict ? 1 : 0;
  }
  return t;
}

ErratumEntry entry(std::string anchor, std::string printed, std::string implemented, bool printed_kept,
                   const Tally& t, const std::string& what) {
  ErratumEntry e{std::move(anchor), std::move(printed), std::move(implemented), "", ""};
  if (t.total == 0) {
    e.status = "not-exercised";
    e.evidence = "no " + what + " in this run";
  } else if (t.passed < t.total) {
    e.status = "unresolved";
    e.evidence = std::to_string(t.total - t.passed) + " of " + std::to_string(t.total) + " " + what + " disagree";
  } else {
    e.status = printed_kept ? "confirmed" : "corrected";
    e.evidence = "oracle agrees on " + std::to_string(t.total) + " " + what;
  }
  return e;
}

bool is_swap(const ScenarioResult& r, const char* predictor) {
  return (r.kind == "swap" || r.kind == "cross") && r.predictor == predictor;
}

}  // namespace

int worker_count_from_env() {
  if (const char* env = std::getenv("QMASK_WORKERS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1 && value <= 1024) return static_cast<int>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<ScenarioResult> run_scenarios(const std::vector<ScenarioSpec>& specs, const RunOptions& options) {
  std::vector<ScenarioResult> results(specs.size());
  parallel_for(specs.size(), options.workers, [&](std::size_t i) { results[i] = run_one(specs[i], options); });
  return results;
}

VerificationReport run_suite(const std::filesystem::path& path, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto specs = load_scenarios(path);
  return assemble(path.string(), options, run_scenarios(specs, options), start);
}

std::vector<std::string> builtin_suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suites()) names.push_back(name);
  names.push_back("all");
  return names;
}

VerificationReport run_builtin_suite(const std::string& name, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<ScenarioResult> results;
  bool found = false;
  for (const auto& [suite, fn] : suites()) {
    if (name == suite || name == "all") {
      append(results, fn(options));
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::BadInput, "unknown suite '" + name + "'");
  return assemble(name, options, std::move(results), start);
}

std::vector<ErratumEntry> adjudicate_errata(const std::vector<ScenarioResult>& results) {
  const auto cat_bell = [](const ScenarioResult& r) {
    return r.kind == "swap" && (r.predictor == "cat_bell_karimipour" || r.predictor == "cat_bell_clear");
  };
  std::vector<ErratumEntry> errata;
  errata.push_back(entry("two-particle-maxent-definition", "|phi(u1,u2)> = d^-1/2 sum_l zeta^(l u1) |l, l+u1>",
                         "|phi(u1,u2)> = d^-1/2 sum_l zeta^(l u1) |l, l+u2>", false, tally(results, cat_bell),
                         "cat-bell scenarios"));
  errata.push_back(entry("cat-bell-double-sum-remainder",
                         "remainder phi(u1^1 + l2, u1^1, u2^1, ..., u2^2 + l1, ..., um^1)",
                         "remainder phi(u1^1 + l2, u2^1, ..., u2^2 + l1, ..., um^1), u2^2 + l1 in slot k",
                         false, tally(results, [](const ScenarioResult& r) {
                           return is_swap(r, "cat_bell_karimipour");
                         }),
                         "double-sum scenarios and cross checks"));
  errata.push_back(entry("cat-bell-measured-pair",
                         "phi(v1,v2) on (cat particle k, first pair particle), 1 <= k <= m",
                         "phi(v1,v2) on (first pair particle, cat particle k); the forms hold for 2 <= k <= m",
                         false, tally(results, cat_bell), "cat-bell scenarios"));
  errata.push_back(entry("cat-swap-sign-exponent",
                         "X = sum_{r>=2} (1 - a_r^1) lambda_r with labels as given",
                         "as printed; valid for labels whose first bit is 1, which only shifts a global phase",
                         true, tally(results, [](const ScenarioResult& r) {
                           return r.kind == "swap" && r.predictor == "cat_swap" && r.note == kNonCanonicalNote;
                         }),
                         "cat-swap scenarios with non-canonical labels"));
  errata.push_back(entry("masked-qudit-remainder-third-slot", "|a1, a1+v2, a1+u3, ..., a1+vn>",
                         "|a1, a1+v2, a1+v3, ..., a1+vn>", false, tally(results, [](const ScenarioResult& r) {
                           return is_swap(r, "masked_qudit") && r.inputs >= 3;
                         }),
                         "masked-qudit scenarios with n >= 3"));
  errata.push_back(entry("masked-qudit-phases", "prod_r eta^r_{a_r} e^{i sum_r theta_{a_r}}",
                         "prod_r eta^r_{a_r} e^{i sum_r theta^r_{a_r}}, a_r = a1 + v_r; P computed numerically",
                         false, tally(results, [](const ScenarioResult& r) { return is_swap(r, "masked_qudit"); }),
                         "masked-qudit scenarios"));
  errata.push_back(entry("li-masked-phase", "zeta^(sum_r omega^r k^r - a_0^1 v1), omega^r = sum_i a_i^r",
                         "as printed, with a_0^r = a_0^1 + v_r inside omega^r for r >= 2", true,
                         tally(results, [](const ScenarioResult& r) { return is_swap(r, "li_masked"); }),
                         "li-masked scenarios"));
  return errata;
}

}  // namespace qmask

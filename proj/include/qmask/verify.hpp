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

/**
 * @file verify.hpp
 * Batch verification: scenario files, scenario enumeration, predictor versus
 * oracle runs, and versioned reports.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmask/oracle.hpp"
#include "qmask/swapping.hpp"

namespace qmask {

inline constexpr const char* kScenarioFormat = "qmask-scenarios/1";
inline constexpr const char* kReportFormat = "qmask-report/1";

/// One entry of a scenario file.
struct ScenarioSpec {
  SwapScenario scenario;
  Predictor predictor = Predictor::bell_bell;
  std::optional<double> tolerance;
  friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

nlohmann::json scenario_to_json(const ScenarioSpec& spec);
/// Strict parse: unknown keys are rejected. `where` prefixes diagnostics.
ScenarioSpec scenario_from_json(const nlohmann::json& j, const std::string& where);

std::string dump_scenarios(const std::vector<ScenarioSpec>& specs);
std::vector<ScenarioSpec> parse_scenarios(const std::string& text, const std::string& source);
/// A scenario file, or every *.json file in a directory (sorted by name).
std::vector<ScenarioSpec> load_scenarios(const std::filesystem::path& path);

struct Bounds {
  /// Levels to cover; empty means 2..d_max.
  std::vector<int> levels;
  int d_max = 3;
  int n_max = 2;
  int m_max = 3;
  /// Random samples per (level, size) cell for continuous families.
  int count = 50;

  std::vector<int> effective_levels() const;
};

/**
 * Families: bell-bell, cat-swap, karimipour, masked-ghz, masked-qudit,
 * li-masked. Discrete families are enumerated exhaustively; continuous ones
 * are sampled from a generator seeded with `seed`.
 */
std::vector<ScenarioSpec> enumerate_scenarios(const std::string& family, const Bounds& bounds, std::uint64_t seed);
std::vector<std::string> scenario_families();

/// |Gaussian| amplitudes normalized to the unit sphere, phases uniform on [-pi, pi].
PhaseAmplitudeInput random_phase_amplitude(std::mt19937_64& rng, int level);
/// Complex Gaussian amplitudes normalized to the unit sphere.
QuditAmplitudes random_amplitudes(std::mt19937_64& rng, int level);

struct ScenarioResult {
  std::string name;
  std::string kind;  // swap | cross | masking | parity | structural
  std::string predictor;
  int inputs = 0;
  bool verdict = false;
  double max_deviation = 0.0;
  double min_fidelity = 1.0;
  int missing = 0;
  int extra = 0;
  std::string note;
  std::vector<OutcomeComparison> rows;

  friend bool operator==(const ScenarioResult&, const ScenarioResult&) = default;
};

/// A printed closed form next to the form that was implemented and checked.
struct ErratumEntry {
  std::string anchor;
  std::string printed_form;
  std::string implemented_form;
  std::string status;  // confirmed | corrected | unresolved | not-exercised
  std::string evidence;

  friend bool operator==(const ErratumEntry&, const ErratumEntry&) = default;
};

struct VerificationReport {
  std::string format = kReportFormat;
  std::string suite;
  std::uint64_t seed = 0;
  double tolerance = kNormTolerance;
  std::vector<ScenarioResult> scenarios;
  std::vector<ErratumEntry> errata;
  double runtime_seconds = 0.0;
  bool verdict = false;

  int passed() const;
  int failed() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

enum class ReportFormat { text, structured };

std::string emit_report(const VerificationReport& report, ReportFormat format);
VerificationReport parse_report(const std::string& text);

struct RunOptions {
  std::optional<double> tolerance;  // overrides every per-scenario tolerance
  int workers = 1;
  std::uint64_t seed = 7;
  bool all_rows = false;  // outcome rows for passing scenarios too
};

/// QMASK_WORKERS, defaulting to the hardware concurrency.
int worker_count_from_env();

/// Predictor plus oracle plus compare for each spec.
std::vector<ScenarioResult> run_scenarios(const std::vector<ScenarioSpec>& specs, const RunOptions& options);

/// Runs a scenario file or directory.
VerificationReport run_suite(const std::filesystem::path& path, const RunOptions& options);

/**
 * Built-in suites: bell-bell-all, cat-swap, karimipour, masking-def1,
 * ghz-parity, masked-qudit, li-masked, structural, all.
 */
VerificationReport run_builtin_suite(const std::string& name, const RunOptions& options);
std::vector<std::string> builtin_suite_names();

/// Erratum entries with status derived from the given results.
std::vector<ErratumEntry> adjudicate_errata(const std::vector<ScenarioResult>& results);

}  // namespace qmask

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

// qmask: run swap predictors against the projection oracle.
//
// Exit status: 0 all scenarios pass, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qmask/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& content, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw qmask::Error(qmask::ErrorKind::BadInput, "cannot write " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qmask::Error(qmask::ErrorKind::BadInput, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement swapping predictors checked against a brute-force projection oracle."};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<double> tol;
  std::string format = "text";
  std::string output;
  bool all_rows = false;
  int workers = 0;
  std::uint64_t seed = 7;
  app.add_option("--tol", tol, "Tolerance override for every scenario")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("-o,--output", output, "Write the report here instead of stdout");
  app.add_flag("--all-rows", all_rows, "Include outcome rows of passing scenarios");
  app.add_option("--workers", workers, "Worker threads (default: QMASK_WORKERS or hardware concurrency)")
      ->check(CLI::Range(1, 1024));
  app.add_option("--seed", seed, "Seed for sampled scenarios");

  std::string path;
  auto* verify = app.add_subcommand("verify", "Run a scenario file or a directory of them");
  verify->add_option("path", path, "Scenario file or directory")->required();

  std::string suite;
  bool list = false;
  auto* suite_cmd = app.add_subcommand("suite", "Run a built-in suite");
  suite_cmd->add_option("name", suite, "Suite name");
  suite_cmd->add_flag("--list", list, "List the built-in suites");

  std::string family;
  qmask::Bounds bounds;
  std::string out;
  auto* enumerate = app.add_subcommand("enumerate", "Write a scenario file for a family");
  enumerate->add_option("family", family, "Scenario family")->required()->check(CLI::IsMember(qmask::scenario_families()));
  enumerate->add_option("--d-max", bounds.d_max, "Largest level")->check(CLI::Range(2, 64));
  enumerate->add_option("--levels", bounds.levels, "Explicit levels (overrides --d-max)")->delimiter(',');
  enumerate->add_option("--n-max", bounds.n_max, "Largest number of swapped states")->check(CLI::Range(2, 64));
  enumerate->add_option("--m-max", bounds.m_max, "Largest cat size")->check(CLI::Range(2, 64));
  enumerate->add_option("--count", bounds.count, "Samples per cell for sampled families")->check(CLI::Range(1, 1000000));
  enumerate->add_option("--out", out, "Output file (default stdout)");

  std::string report_path;
  auto* report_cmd = app.add_subcommand("report", "Render a structured report file");
  report_cmd->add_option("file", report_path, "Structured report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  qmask::RunOptions options;
  options.tolerance = tol;
  options.workers = workers > 0 ? workers : qmask::worker_count_from_env();
  options.seed = seed;
  options.all_rows = all_rows;
  const auto report_format = format == "structured" ? qmask::ReportFormat::structured : qmask::ReportFormat::text;

  try {
    if (*enumerate) {
      write_output(qmask::dump_scenarios(qmask::enumerate_scenarios(family, bounds, seed)), out);
      return kExitPass;
    }
    if (*suite_cmd && list) {
      for (const auto& name : qmask::builtin_suite_names()) std::cout << name << "\n";
      return kExitPass;
    }
    qmask::VerificationReport report;
    if (*verify) {
      report = qmask::run_suite(path, options);
    } else if (*suite_cmd) {
      if (suite.empty()) throw qmask::Error(qmask::ErrorKind::BadInput, "suite needs a name (see suite --list)");
      report = qmask::run_builtin_suite(suite, options);
    } else {
      report = qmask::parse_report(read_file(report_path));
    }
    write_output(qmask::emit_report(report, report_format), output);
    return report.verdict ? kExitPass : kExitFail;
  } catch (const qmask::Error& e) {
    std::cerr << "qmask: " << qmask::to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qmask: " << e.what() << "\n";
    return kExitUsage;
  }
}

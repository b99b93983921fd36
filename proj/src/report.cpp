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
#include <iomanip>
#include <sstream>

#include "qmask/verify.hpp"

namespace qmask {

using nlohmann::json;

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(scenarios.begin(), scenarios.end(), [](const auto& s) { return s.verdict; }));
}

int VerificationReport::failed() const { return static_cast<int>(scenarios.size()) - passed(); }

namespace {

const char* verdict_string(bool verdict) { return verdict ? "pass" : "fail"; }

bool verdict_from(const json& j, const char* key) {
  const std::string v = j.at(key).get<std::string>();
  if (v != "pass" && v != "fail") throw Error(ErrorKind::Schema, std::string("report: bad verdict in '") + key + "'");
  return v == "pass";
}

json row_to_json(const OutcomeComparison& row) {
  return json{{"label", row.label},
              {"predicted_probability", row.predicted_probability},
              {"reference_probability", row.reference_probability},
              {"deviation", row.deviation},
              {"fidelity", row.fidelity},
              {"missing", row.missing},
              {"extra", row.extra}};
}

OutcomeComparison row_from_json(const json& j) {
  OutcomeComparison row;
  row.label = j.at("label").get<std::string>();
  row.predicted_probability = j.at("predicted_probability").get<double>();
  row.reference_probability = j.at("reference_probability").get<double>();
  row.deviation = j.at("deviation").get<double>();
  row.fidelity = j.at("fidelity").get<double>();
  row.missing = j.at("missing").get<bool>();
  row.extra = j.at("extra").get<bool>();
  return row;
}

json result_to_json(const ScenarioResult& r) {
  json rows = json::array();
  for (const auto& row : r.rows) rows.push_back(row_to_json(row));
  return json{{"name", r.name},
              {"kind", r.kind},
              {"predictor", r.predictor},
              {"inputs", r.inputs},
              {"verdict", verdict_string(r.verdict)},
              {"max_deviation", r.max_deviation},
              {"min_fidelity", r.min_fidelity},
              {"missing", r.missing},
              {"extra", r.extra},
              {"note", r.note},
              {"rows", rows}};
}

ScenarioResult result_from_json(const json& j) {
  ScenarioResult r;
  r.name = j.at("name").get<std::string>();
  r.kind = j.at("kind").get<std::string>();
  r.predictor = j.at("predictor").get<std::string>();
  r.inputs = j.at("inputs").get<int>();
  r.verdict = verdict_from(j, "verdict");
  r.max_deviation = j.at("max_deviation").get<double>();
  r.min_fidelity = j.at("min_fidelity").get<double>();
  r.missing = j.at("missing").get<int>();
  r.extra = j.at("extra").get<int>();
  r.note = j.at("note").get<std::string>();
  for (const auto& row : j.at("rows")) r.rows.push_back(row_from_json(row));
  return r;
}

json erratum_to_json(const ErratumEntry& e) {
  return json{{"anchor", e.anchor},
              {"printed_form", e.printed_form},
              {"implemented_form", e.implemented_form},
              {"status", e.status},
              {"evidence", e.evidence}};
}

ErratumEntry erratum_from_json(const json& j) {
  return ErratumEntry{j.at("anchor").get<std::string>(), j.at("printed_form").get<std::string>(),
                      j.at("implemented_form").get<std::string>(), j.at("status").get<std::string>(),
                      j.at("evidence").get<std::string>()};
}

std::string structured(const VerificationReport& report) {
  json scenarios = json::array();
  for (const auto& s : report.scenarios) scenarios.push_back(result_to_json(s));
  json errata = json::array();
  for (const auto& e : report.errata) errata.push_back(erratum_to_json(e));
  json j{{"format", report.format},
         {"suite", report.suite},
         {"seed", report.seed},
         {"tolerance", report.tolerance},
         {"verdict", verdict_string(report.verdict)},
         {"summary", {{"scenarios", report.scenarios.size()}, {"passed", report.passed()}, {"failed", report.failed()}}},
         {"runtime_seconds", report.runtime_seconds},
         {"scenarios", scenarios},
         {"errata", errata}};
  return j.dump(2) + "\n";
}

std::string text(const VerificationReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << "  seed " << report.seed << "  tolerance " << report.tolerance << "\n";
  for (const auto& s : report.scenarios) {
    out << (s.verdict ? "  PASS " : "  FAIL ") << s.name << "  [" << s.kind;
    if (!s.predictor.empty()) out << " " << s.predictor;
    out << "]  max_dev " << std::scientific << std::setprecision(2) << s.max_deviation << "  min_fid "
        << std::fixed << std::setprecision(12) << s.min_fidelity << std::defaultfloat;
    if (s.missing || s.extra) out << "  missing " << s.missing << " extra " << s.extra;
    if (!s.note.empty()) out << "  (" << s.note << ")";
    out << "\n";
    for (const auto& row : s.rows) {
      out << "      " << std::left << std::setw(24) << row.label << std::right << " pred " << std::setprecision(10)
          << row.predicted_probability << "  ref " << row.reference_probability << "  dev " << row.deviation
          << "  fid " << row.fidelity << (row.missing ? "  missing" : "") << (row.extra ? "  extra" : "") << "\n";
    }
  }
  if (!report.errata.empty()) {
    out << "errata\n";
    for (const auto& e : report.errata) {
      out << "  " << e.anchor << ": " << e.status << "\n"
          << "    printed:     " << e.printed_form << "\n"
          << "    implemented: " << e.implemented_form << "\n"
          << "    evidence:    " << e.evidence << "\n";
    }
  }
  out << report.passed() << " passed, " << report.failed() << " failed, " << std::fixed << std::setprecision(2)
      << report.runtime_seconds << " s\n";
  out << "verdict: " << verdict_string(report.verdict) << "\n";
  return out.str();
}

}  // namespace

std::string emit_report(const VerificationReport& report, ReportFormat format) {
  return format == ReportFormat::structured ? structured(report) : text(report);
}

VerificationReport parse_report(const std::string& content) {
  json j;
  try {
    j = json::parse(content);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Schema, std::string("report: ") + e.what());
  }
  try {
    VerificationReport report;
    report.format = j.at("format").get<std::string>();
    if (report.format != kReportFormat) {
      throw Error(ErrorKind::Schema, "report: unsupported format '" + report.format + "'");
    }
    report.suite = j.at("suite").get<std::string>();
    report.seed = j.at("seed").get<std::uint64_t>();
    report.tolerance = j.at("tolerance").get<double>();
    report.verdict = verdict_from(j, "verdict");
    report.runtime_seconds = j.at("runtime_seconds").get<double>();
    for (const auto& s : j.at("scenarios")) report.scenarios.push_back(result_from_json(s));
    for (const auto& e : j.at("errata")) report.errata.push_back(erratum_from_json(e));
    return report;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Schema, std::string("report: ") + e.what());
  }
}

}  // namespace qmask

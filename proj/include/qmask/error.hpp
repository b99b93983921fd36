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

#pragma once

#include <stdexcept>
#include <string>

namespace qmask {

enum class ErrorKind {
  LevelMismatch,
  ShapeMismatch,
  BadSubset,
  ZeroProbabilityOutcome,
  DimensionTooLarge,
  BadLabel,
  BadScenario,
  BadInput,
  Schema,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LevelMismatch: return "LevelMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::BadSubset: return "BadSubset";
    case ErrorKind::ZeroProbabilityOutcome: return "ZeroProbabilityOutcome";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::BadLabel: return "BadLabel";
    case ErrorKind::BadScenario: return "BadScenario";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::Schema: return "Schema";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the ErrorKind tags.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qmask

// Copyright 2026 The resil Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Study configuration and its key/value file format.
//
// Grammar (one entry per line):
//   line   := blank | comment | entry
//   comment:= '#' anything
//   entry  := key '=' value [ '#' anything ]
//   value  := item { ',' item }      for list keys
// Whitespace around keys, values and list items is ignored. Unknown keys and
// repeated keys are errors. See docs/config.md for the list of keys.

#ifndef RESIL_CONFIG_H_
#define RESIL_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "resil/rational.h"

namespace resil {

class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::size_t line, const std::string& what);
  explicit ConfigError(const std::string& what);
  // 1-based line in the config text, 0 when not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

enum class StudyKind { kHitting, kSweep, kKCore, kAudit };

std::string ToString(StudyKind kind);
StudyKind ParseStudyKind(std::string_view text);

struct ExperimentConfig {
  StudyKind study = StudyKind::kHitting;
  std::vector<std::size_t> n = {256};
  // Explicit edge counts, or multiples of n log n / 6 when m is empty.
  std::vector<std::uint64_t> m;
  std::vector<double> m_factor = {1.0};
  int k = 2;
  Rational epsilon{1, 10};
  double delta = 0.05;
  int L = 30;
  double c = 2.0;
  int trials = 100;
  std::uint64_t seed = 1;
  double p0_factor = 1.2;       // p0 = p0_factor * log n / (3n)
  double p_prime_factor = 0.5;  // p' = p_prime_factor * p0
  std::uint64_t subset_trials = 1000;
  std::size_t exact_limit = 16;         // exact alpha* / attacks up to this n
  std::size_t local_search_limit = 256;  // local-search upper bound up to this n
  int local_search_restarts = 32;

  // Execution settings; not part of the reproducibility echo.
  unsigned threads = 1;
  std::string format = "json";
  std::string out;  // empty: standard output
  bool timestamp = false;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Sets one key from its textual value. Throws ConfigError on unknown keys or
// malformed values.
void SetConfigValue(ExperimentConfig& cfg, std::string_view key, std::string_view value);

ExperimentConfig ParseConfig(std::string_view text);
ExperimentConfig LoadConfigFile(const std::filesystem::path& path);

// Every key in canonical order; ParseConfig(FormatConfig(c)) == c.
std::string FormatConfig(const ExperimentConfig& cfg);

// Overrides the master seed from RESILIENCE_SEED when it is set.
void ApplyEnvironment(ExperimentConfig& cfg);

// Range checks across keys. Throws ConfigError.
void ValidateConfig(const ExperimentConfig& cfg);

// Edge counts for vertex count n: explicit m values, or ceil(f n log n / 6)
// for each factor f, clamped to C(n,2). Ascending, duplicates removed.
std::vector<std::uint64_t> EdgeCountsFor(const ExperimentConfig& cfg, std::size_t n);

}  // namespace resil

#endif  // RESIL_CONFIG_H_

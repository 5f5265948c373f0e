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

// JSON and CSV encodings of audit reports, cuts and study results.
//
// Study CSV is in long form, one row per (trial, metric):
//   study,n,m,k,trial,seed,metric,kind,value
// preceded by a '#' comment row naming the schema version. kind is number,
// flag (value 0/1) or rational (value p/q). Numbers use 17 significant
// digits so parsing returns the identical double.

#ifndef RESIL_SERIALIZE_H_
#define RESIL_SERIALIZE_H_

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "resil/classify.h"
#include "resil/experiments.h"
#include "resil/process.h"
#include "resil/resilience.h"

namespace resil {

inline constexpr int kSchemaVersion = 1;

// "resil <version>".
std::string CodeVersion();

nlohmann::json ToJson(const AuditReport& report);
nlohmann::json ToJson(const Cut& cut);
// Cut fields plus "H", "max_ratio" and "satisfied".
nlohmann::json ToJson(const AttackOutcome& outcome);
nlohmann::json ToJson(const ResilienceReport& report);
// {"n", "seed", "generator"}; the permutation itself is implied.
nlohmann::json TraceDescriptor(const ProcessTrace& trace);

// Reads "S", "A" and "B" (S optional). Throws std::invalid_argument on
// malformed input or members outside 0..n-1; does not check coverage.
Cut CutFromJson(const nlohmann::json& j, std::size_t n);

// The reproducibility echo: every config key except threads, format, out and
// timestamp.
nlohmann::json ConfigEcho(const ExperimentConfig& cfg);

struct EmitOptions {
  // When set, written as the top-level "timestamp" field.
  std::optional<std::string> timestamp;
};

nlohmann::json ResultToJson(const StudyResult& result, const EmitOptions& options = {});
// Pretty-printed with a trailing newline.
std::string ResultToJsonText(const StudyResult& result, const EmitOptions& options = {});

std::vector<TrialRecord> RecordsFromJson(const nlohmann::json& j);
SummaryTable SummaryFromJson(const nlohmann::json& j);

std::string RecordsToCsv(const std::vector<TrialRecord>& records);
std::vector<TrialRecord> ParseRecordsCsv(std::string_view text);

// One row per (group, metric).
std::string SummaryToCsv(const SummaryTable& table);

class EmitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes the result as "json" or "csv" (records) to `path`, or to `out` when
// path is empty. Throws EmitError when the file cannot be written.
void Emit(const StudyResult& result, std::string_view format,
          const std::filesystem::path& path, std::ostream& out,
          const EmitOptions& options = {});

// Current UTC time as ISO 8601.
std::string UtcTimestamp();

}  // namespace resil

#endif  // RESIL_SERIALIZE_H_

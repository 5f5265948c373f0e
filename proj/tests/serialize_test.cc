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

#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "resil/serialize.h"

namespace resil {
namespace {

StudyResult SmallSweep() {
  ExperimentConfig cfg;
  cfg.study = StudyKind::kSweep;
  cfg.n = {12, 90};
  cfg.m_factor = {1.0, 2.0};
  cfg.trials = 3;
  return RunStudy(cfg);
}

TEST(Json, AttackOutcomeShape) {
  const Graph c6 = testing::Cycle(6);
  const Cut cut = *FindDisconnectingAttack(c6, FractionBudget{Rational(1, 2)});
  const nlohmann::json j = ToJson(MakeOutcome(c6, cut, true));
  EXPECT_EQ(j.dump(),
            R"({"A":[0,3,4,5],"B":[1,2],"H":[[0,1],[2,3]],"S":[],"max_ratio":"1/2","satisfied":true})");
}

TEST(Json, CutRoundTripAndValidation) {
  Cut cut = Cut::Bipartition(5, std::vector<Vertex>{1, 3});
  cut.side_a.erase(4);
  cut.separator.insert(4);
  EXPECT_EQ(CutFromJson(ToJson(cut), 5), cut);
  EXPECT_THROW(CutFromJson(nlohmann::json::parse(R"({"A":[0],"B":[9]})"), 5), std::invalid_argument);
  EXPECT_THROW(CutFromJson(nlohmann::json::parse(R"({"A":[0]})"), 5), std::invalid_argument);
  EXPECT_THROW(CutFromJson(nlohmann::json::parse(R"({"A":"0","B":[1]})"), 5), std::invalid_argument);
  EXPECT_EQ(CutFromJson(nlohmann::json::parse(R"({"A":[0,2],"B":[1]})"), 3).separator.size(), 0u);
}

TEST(Json, AuditReportFields) {
  VertexClassification cls;
  cls.tiny = VertexSet(8);
  cls.atyp = VertexSet::Full(8);
  const nlohmann::json j = ToJson(AuditAtypSize(cls));
  for (const char* key : {"property", "holds", "max_observed", "bound", "violations", "params"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["property"], "atyp_size");
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["violations"][0]["vertices"].size(), 8u);
}

TEST(Json, ThresholdReportAndTrace) {
  const nlohmann::json r = ToJson(ExactResilienceThreshold(testing::Complete(5)));
  EXPECT_EQ(r["alpha_star"], "3/4");
  EXPECT_EQ(r["method"], "exact");
  const nlohmann::json t = TraceDescriptor(SampleProcess(10, 42));
  EXPECT_EQ(t["n"], 10);
  EXPECT_EQ(t["seed"], 42u);
  EXPECT_EQ(t["generator"], std::string(kTraceGenerator));
}

TEST(Json, ResultRoundTrip) {
  const StudyResult r = SmallSweep();
  const nlohmann::json j = ResultToJson(r);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["code_version"], CodeVersion());
  EXPECT_FALSE(j.contains("timestamp"));
  EXPECT_EQ(RecordsFromJson(j), r.records);
  EXPECT_EQ(SummaryFromJson(j), r.summary);
  const nlohmann::json reparsed = nlohmann::json::parse(ResultToJsonText(r));
  EXPECT_EQ(RecordsFromJson(reparsed), r.records);

  EmitOptions stamp;
  stamp.timestamp = "2026-01-01T00:00:00Z";
  EXPECT_EQ(ResultToJson(r, stamp)["timestamp"], "2026-01-01T00:00:00Z");
}

TEST(Json, ConfigEchoExcludesExecutionSettings) {
  ExperimentConfig cfg;
  cfg.threads = 7;
  cfg.format = "csv";
  cfg.out = "x.csv";
  cfg.timestamp = true;
  const nlohmann::json echo = ConfigEcho(cfg);
  for (const char* key : {"threads", "format", "out", "timestamp"}) EXPECT_FALSE(echo.contains(key));
  for (const char* key : {"study", "n", "seed", "trials", "epsilon"}) EXPECT_TRUE(echo.contains(key));
  ExperimentConfig other = cfg;
  other.threads = 1;
  other.format = "json";
  other.out.clear();
  other.timestamp = false;
  EXPECT_EQ(ConfigEcho(other), echo);
}

TEST(Csv, RecordsRoundTripExactly) {
  const StudyResult r = SmallSweep();
  const std::string csv = RecordsToCsv(r.records);
  EXPECT_EQ(csv.substr(0, 1), "#");
  EXPECT_NE(csv.find("study,n,m,k,trial,seed,metric,kind,value\n"), std::string::npos);
  EXPECT_EQ(ParseRecordsCsv(csv), r.records);
}

TEST(Csv, RejectsMalformedRows) {
  EXPECT_THROW(ParseRecordsCsv("study,n,m,k,trial,seed,metric,kind,value\nsweep,1,2\n"),
               std::invalid_argument);
  EXPECT_THROW(ParseRecordsCsv("study,n,m,k,trial,seed,metric,kind,value\n"
                               "sweep,10,5,1,0,3,x,weird,1\n"),
               std::invalid_argument);
}

TEST(Csv, SummaryHasOneRowPerMetric) {
  const StudyResult r = SmallSweep();
  const std::string csv = SummaryToCsv(r.summary);
  std::size_t metrics = 0;
  for (const auto& row : r.summary.rows) metrics += row.metrics.size();
  std::size_t lines = 0;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') ++lines;
  }
  EXPECT_EQ(lines, metrics + 1);  // plus the column header
}

TEST(Emit, FormatsAndErrors) {
  const StudyResult r = SmallSweep();
  std::ostringstream json;
  Emit(r, "json", "", json);
  EXPECT_EQ(json.str(), ResultToJsonText(r));
  std::ostringstream csv;
  Emit(r, "csv", "", csv);
  EXPECT_EQ(csv.str(), RecordsToCsv(r.records));
  std::ostringstream sink;
  EXPECT_THROW(Emit(r, "json", "/nonexistent-dir/out.json", sink), EmitError);
}

}  // namespace
}  // namespace resil

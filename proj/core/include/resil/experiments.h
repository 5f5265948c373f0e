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

// Monte Carlo studies over the random graph process.
//
// Trial t of group (n, m) in study s draws everything from the seed
//   DeriveSeed(DeriveSeed(DeriveSeed(master, s), GroupKey(n, m)), t)
// so results do not depend on the number of worker threads or on which
// other groups are in the config.

#ifndef RESIL_EXPERIMENTS_H_
#define RESIL_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "resil/config.h"
#include "resil/rational.h"

namespace resil {

// One measured quantity of a trial.
struct Cell {
  enum class Kind { kNumber, kFlag, kRational };
  Kind kind = Kind::kNumber;
  double number = 0;  // the value for kNumber, 0/1 for kFlag, p/q as a double for kRational
  Rational exact;     // kRational only

  static Cell Number(double x) { return {Kind::kNumber, x, {}}; }
  static Cell Flag(bool b) { return {Kind::kFlag, b ? 1.0 : 0.0, {}}; }
  static Cell Exact(const Rational& r) { return {Kind::kRational, r.ToDouble(), r}; }

  friend bool operator==(const Cell&, const Cell&) = default;
};

std::string ToString(Cell::Kind kind);
Cell::Kind ParseCellKind(std::string_view text);

struct TrialRecord {
  StudyKind study = StudyKind::kHitting;
  std::size_t n = 0;
  std::uint64_t m = 0;  // 0 for studies not indexed by edge count
  int k = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::map<std::string, Cell> values;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

// Aggregate of one metric within a group.
struct MetricSummary {
  Cell::Kind kind = Cell::Kind::kNumber;
  std::size_t count = 0;
  double mean = 0;
  double min = 0;
  double max = 0;
  double q25 = 0;
  double median = 0;
  double q75 = 0;
  // Flags only: number of true values and the 95% Wilson interval.
  std::size_t successes = 0;
  double wilson_low = 0;
  double wilson_high = 0;

  friend bool operator==(const MetricSummary&, const MetricSummary&) = default;
};

struct SummaryRow {
  StudyKind study = StudyKind::kHitting;
  std::size_t n = 0;
  std::uint64_t m = 0;
  int k = 0;
  std::size_t trials = 0;
  std::map<std::string, MetricSummary> metrics;

  friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

// Quantities computed across groups. Sweeps report cherry_crossing_m per n:
// the first m at which the cherry rate falls below 1/2 after having been at
// least 1/2 at a smaller m.
struct DerivedValue {
  std::string name;
  std::size_t n = 0;
  double value = 0;
  bool defined = false;

  friend bool operator==(const DerivedValue&, const DerivedValue&) = default;
};

struct SummaryTable {
  std::vector<SummaryRow> rows;  // ordered by (study, n, m, k)
  std::vector<DerivedValue> derived;

  friend bool operator==(const SummaryTable&, const SummaryTable&) = default;
};

struct StudyResult {
  ExperimentConfig config;
  std::vector<TrialRecord> records;  // ordered by (study, n, m, k, trial)
  SummaryTable summary;
};

struct WilsonInterval {
  double low = 0;
  double high = 0;
};

// 95% Wilson score interval for `successes` out of `trials`.
WilsonInterval Wilson(std::size_t successes, std::size_t trials);

// Linear-interpolation quantile of an ascending sample.
double Quantile(const std::vector<double>& sorted, double q);

// Groups records by (study, n, m, k) and aggregates every metric, then adds
// the study's derived values.
SummaryTable Summarize(const std::vector<TrialRecord>& records);

std::uint64_t GroupKey(std::size_t n, std::uint64_t m);
std::uint64_t TrialSeed(std::uint64_t master, StudyKind study, std::size_t n,
                        std::uint64_t m, int trial);

// Single trials. Each is a pure function of its arguments.
//
// Hitting: tau1, tau_conn, tau1_eq_conn, tau1_scaled = tau1 / (n log n / 2),
// giant_fraction; alpha_star of the giant of G_tau1 (exact up to
// exact_limit, local-search bound up to local_search_limit) with
// resilient_below_half = (1/2 - eps < alpha_star); greedy_satisfied above
// local_search_limit.
TrialRecord RunHittingTrial(const ExperimentConfig& cfg, std::size_t n, int trial);
// Sweep: giant_fraction, cherry, greedy_satisfied, greedy_error, d_set_size,
// max_d_neighbours, alpha_star for small giants.
TrialRecord RunSweepTrial(const ExperimentConfig& cfg, std::size_t n, std::uint64_t m,
                          int trial);
// K-core: core_fraction, core_k_connected, tau_k, tau_kconn, tau_k_eq_kconn,
// attack_absent at alpha = 1/2 - eps for small k-connected cores.
TrialRecord RunKCoreTrial(const ExperimentConfig& cfg, std::size_t n, std::uint64_t m,
                          int trial);
// Audit: one flag per audited property plus its max_observed, witness
// recheck flag, regime flag, tiny/atyp counts and max_d_neighbours.
TrialRecord RunAuditTrial(const ExperimentConfig& cfg, std::size_t n, int trial);

// Runs every (group, trial) of the configured study on cfg.threads workers.
StudyResult RunStudy(const ExperimentConfig& cfg);

// Per-study entry points; RunStudy dispatches on cfg.study.
StudyResult RunHittingTimeStudy(const ExperimentConfig& cfg);
StudyResult RunResilienceSweep(const ExperimentConfig& cfg);
StudyResult RunKCoreStudy(const ExperimentConfig& cfg);
StudyResult RunPropertyAuditStudy(const ExperimentConfig& cfg);

}  // namespace resil

#endif  // RESIL_EXPERIMENTS_H_

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

#include "resil/experiments.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

#include "resil/classify.h"
#include "resil/graph.h"
#include "resil/parallel.h"
#include "resil/process.h"
#include "resil/random.h"
#include "resil/resilience.h"

namespace resil {
namespace {

std::uint64_t StudyStream(StudyKind study) {
  switch (study) {
    case StudyKind::kHitting:
      return 1;
    case StudyKind::kSweep:
      return 2;
    case StudyKind::kKCore:
      return 3;
    case StudyKind::kAudit:
      return 4;
  }
  return 0;
}

TrialRecord NewRecord(const ExperimentConfig& cfg, std::size_t n, std::uint64_t m, int k,
                      int trial) {
  TrialRecord rec;
  rec.study = cfg.study;
  rec.n = n;
  rec.m = m;
  rec.k = k;
  rec.trial = trial;
  rec.seed = TrialSeed(cfg.seed, cfg.study, n, m, trial);
  return rec;
}

double Log(std::size_t n) { return std::log(static_cast<double>(n)); }

// Greedy attack on a connected piece of a larger graph; records the outcome.
void RecordGreedy(TrialRecord& rec, const Graph& g, double p, std::size_t n_total,
                  const ExperimentConfig& cfg, std::uint64_t seed) {
  if (g.n() < 2) return;
  const VertexClassification cls = ClassifyVertices(g, p, cfg.delta);
  const double d_threshold = (0.5 + cfg.delta) * static_cast<double>(n_total) * p;
  GreedyAttackStats stats;
  bool satisfied = false;
  bool error = false;
  try {
    satisfied = GreedyPartitionAttack(g, cls, d_threshold, cfg.epsilon, seed, &stats).satisfied;
  } catch (const GreedyAttackError&) {
    error = true;
  }
  rec.values["greedy_satisfied"] = Cell::Flag(satisfied);
  rec.values["greedy_error"] = Cell::Flag(error);
  rec.values["d_set_size"] = Cell::Number(static_cast<double>(stats.d_set_size));
  rec.values["max_d_neighbours"] = Cell::Number(static_cast<double>(stats.max_d_neighbours));
}

void RecordThreshold(TrialRecord& rec, const Graph& giant, const ExperimentConfig& cfg,
                     std::uint64_t seed, bool greedy_fallback, double p, std::size_t n_total) {
  if (giant.n() < 2) return;
  const Rational target = Rational(1, 2) - cfg.epsilon;
  if (giant.n() <= cfg.exact_limit) {
    const auto report = ExactResilienceThreshold(giant, ExactLimits{cfg.exact_limit, 16, 1});
    rec.values["alpha_star"] = Cell::Exact(report.alpha_star);
    rec.values["resilient_below_half"] = Cell::Flag(target < report.alpha_star);
  } else if (giant.n() <= cfg.local_search_limit) {
    LocalSearchOptions options;
    options.restarts = cfg.local_search_restarts;
    options.seed = DeriveSeed(seed, 1);
    const auto report = LocalSearchResilienceThreshold(giant, options);
    rec.values["alpha_star_upper"] = Cell::Exact(report.alpha_star);
  } else if (greedy_fallback) {
    RecordGreedy(rec, giant, p, n_total, cfg, DeriveSeed(seed, 2));
  }
}

}  // namespace

std::string ToString(Cell::Kind kind) {
  switch (kind) {
    case Cell::Kind::kNumber:
      return "number";
    case Cell::Kind::kFlag:
      return "flag";
    case Cell::Kind::kRational:
      return "rational";
  }
  return "?";
}

Cell::Kind ParseCellKind(std::string_view text) {
  if (text == "number") return Cell::Kind::kNumber;
  if (text == "flag") return Cell::Kind::kFlag;
  if (text == "rational") return Cell::Kind::kRational;
  throw std::invalid_argument("unknown cell kind '" + std::string(text) + "'");
}

WilsonInterval Wilson(std::size_t successes, std::size_t trials) {
  if (trials == 0) return {0, 1};
  const double z = 1.959963984540054;
  const double nn = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / nn;
  const double denom = 1 + z * z / nn;
  const double centre = (phat + z * z / (2 * nn)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / nn + z * z / (4 * nn * nn)) / denom;
  const double low = successes == 0 ? 0.0 : std::max(0.0, centre - half);
  const double high = successes == trials ? 1.0 : std::min(1.0, centre + half);
  return {low, high};
}

double Quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0;
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

std::uint64_t GroupKey(std::size_t n, std::uint64_t m) {
  return DeriveSeed(static_cast<std::uint64_t>(n), m);
}

std::uint64_t TrialSeed(std::uint64_t master, StudyKind study, std::size_t n,
                        std::uint64_t m, int trial) {
  const std::uint64_t s = DeriveSeed(master, StudyStream(study));
  return DeriveSeed(DeriveSeed(s, GroupKey(n, m)), static_cast<std::uint64_t>(trial));
}

SummaryTable Summarize(const std::vector<TrialRecord>& records) {
  using Key = std::tuple<int, std::size_t, std::uint64_t, int>;
  std::map<Key, std::vector<const TrialRecord*>> groups;
  for (const auto& rec : records) {
    groups[{static_cast<int>(rec.study), rec.n, rec.m, rec.k}].push_back(&rec);
  }
  SummaryTable table;
  for (const auto& [key, members] : groups) {
    SummaryRow row;
    row.study = members.front()->study;
    row.n = members.front()->n;
    row.m = members.front()->m;
    row.k = members.front()->k;
    row.trials = members.size();
    std::map<std::string, std::vector<double>> samples;
    std::map<std::string, Cell::Kind> kinds;
    for (const TrialRecord* rec : members) {
      for (const auto& [name, cell] : rec->values) {
        samples[name].push_back(cell.number);
        kinds[name] = cell.kind;
      }
    }
    for (auto& [name, xs] : samples) {
      MetricSummary s;
      s.kind = kinds[name];
      s.count = xs.size();
      s.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
      std::sort(xs.begin(), xs.end());
      s.min = xs.front();
      s.max = xs.back();
      s.q25 = Quantile(xs, 0.25);
      s.median = Quantile(xs, 0.5);
      s.q75 = Quantile(xs, 0.75);
      if (s.kind == Cell::Kind::kFlag) {
        s.successes = static_cast<std::size_t>(std::count(xs.begin(), xs.end(), 1.0));
        const auto w = Wilson(s.successes, s.count);
        s.wilson_low = w.low;
        s.wilson_high = w.high;
      }
      row.metrics.emplace(name, s);
    }
    table.rows.push_back(std::move(row));
  }

  // Sweep: first m (ascending) at which the cherry rate falls below 1/2
  // after having been at least 1/2.
  std::map<std::size_t, DerivedValue> crossing;
  std::map<std::size_t, bool> seen_high;
  for (const SummaryRow& row : table.rows) {
    if (row.study != StudyKind::kSweep) continue;
    auto& d = crossing[row.n];
    d.name = "cherry_crossing_m";
    d.n = row.n;
    const auto it = row.metrics.find("cherry");
    if (d.defined || it == row.metrics.end()) continue;
    if (2 * it->second.successes >= it->second.count) {
      seen_high[row.n] = true;
    } else if (seen_high[row.n]) {
      d.defined = true;
      d.value = static_cast<double>(row.m);
    }
  }
  for (auto& [n, d] : crossing) table.derived.push_back(d);
  return table;
}

TrialRecord RunHittingTrial(const ExperimentConfig& cfg, std::size_t n, int trial) {
  TrialRecord rec = NewRecord(cfg, n, 0, 1, trial);
  const ProcessTrace trace = SampleProcess(n, rec.seed);
  const std::uint64_t tau1 = HittingTimeMinDegree(trace, 1);
  const std::uint64_t tau_conn = HittingTimeKConnectivity(trace, 1);
  rec.values["tau1"] = Cell::Number(static_cast<double>(tau1));
  rec.values["tau_conn"] = Cell::Number(static_cast<double>(tau_conn));
  rec.values["tau1_eq_conn"] = Cell::Flag(tau1 == tau_conn);
  rec.values["tau1_scaled"] =
      Cell::Number(static_cast<double>(tau1) / (0.5 * static_cast<double>(n) * Log(n)));
  const Graph g = GraphAt(trace, tau1);
  const Subgraph giant = GiantComponent(g);
  rec.values["giant_fraction"] =
      Cell::Number(static_cast<double>(giant.graph.n()) / static_cast<double>(n));
  const double p1 = static_cast<double>(tau1) / static_cast<double>(NumPairs(n));
  RecordThreshold(rec, giant.graph, cfg, rec.seed, true, p1, n);
  return rec;
}

TrialRecord RunSweepTrial(const ExperimentConfig& cfg, std::size_t n, std::uint64_t m,
                          int trial) {
  TrialRecord rec = NewRecord(cfg, n, m, 1, trial);
  const Graph g = SampleGnm(n, m, rec.seed);
  rec.values["m_scaled"] =
      Cell::Number(static_cast<double>(m) / (static_cast<double>(n) * Log(n) / 6.0));
  if (g.m() == 0) {
    rec.values["giant_fraction"] = Cell::Number(1.0 / static_cast<double>(n));
    rec.values["cherry"] = Cell::Flag(false);
    return rec;
  }
  const Subgraph giant = GiantComponent(g);
  rec.values["giant_fraction"] =
      Cell::Number(static_cast<double>(giant.graph.n()) / static_cast<double>(n));
  rec.values["cherry"] = Cell::Flag(CherryAttack(giant.graph).has_value());
  const double p1 = static_cast<double>(m) / static_cast<double>(NumPairs(n));
  if (giant.graph.n() <= cfg.exact_limit) {
    RecordThreshold(rec, giant.graph, cfg, rec.seed, false, p1, n);
  } else {
    RecordGreedy(rec, giant.graph, p1, n, cfg, DeriveSeed(rec.seed, 2));
  }
  return rec;
}

TrialRecord RunKCoreTrial(const ExperimentConfig& cfg, std::size_t n, std::uint64_t m,
                          int trial) {
  const int k = cfg.k;
  TrialRecord rec = NewRecord(cfg, n, m, k, trial);
  const ProcessTrace trace = SampleProcess(n, rec.seed);
  const Graph g = GraphAt(trace, m);
  const Subgraph core = KCore(g, k);
  rec.values["core_fraction"] =
      Cell::Number(static_cast<double>(core.graph.n()) / static_cast<double>(n));
  const bool core_kconn = core.graph.n() > 0 && IsKConnected(core.graph, k);
  rec.values["core_k_connected"] = Cell::Flag(core_kconn);
  if (static_cast<std::size_t>(k) + 1 <= n) {
    const std::uint64_t tau_k = HittingTimeMinDegree(trace, k);
    const std::uint64_t tau_kconn = HittingTimeKConnectivity(trace, k);
    rec.values["tau_k"] = Cell::Number(static_cast<double>(tau_k));
    rec.values["tau_kconn"] = Cell::Number(static_cast<double>(tau_kconn));
    rec.values["tau_k_eq_kconn"] = Cell::Flag(tau_k == tau_kconn);
  }
  if (core_kconn && core.graph.n() <= cfg.exact_limit) {
    const BudgetRule rule = KeepDegreeBudget{Rational(1, 2) - cfg.epsilon, k};
    ExactLimits limits;
    limits.max_separator_n = cfg.exact_limit;
    limits.max_bipartition_n = cfg.exact_limit;
    rec.values["attack_absent"] =
        Cell::Flag(!FindKConnAttack(core.graph, rule, k, nullptr, limits).has_value());
  }
  return rec;
}

TrialRecord RunAuditTrial(const ExperimentConfig& cfg, std::size_t n, int trial) {
  TrialRecord rec = NewRecord(cfg, n, 0, 0, trial);
  const double p0 = cfg.p0_factor * Log(n) / (3.0 * static_cast<double>(n));
  const double p_prime = cfg.p_prime_factor * p0;
  const CoupledSample cs = SampleCoupled(n, p0, p_prime, rec.seed);
  const double eps = cfg.epsilon.ToDouble();
  rec.values["regime_ok"] =
      Cell::Flag(p0 >= (1 + eps) * Log(n) / (3.0 * static_cast<double>(n)) &&
                 p_prime <= eps * p0);
  const VertexClassification cls =
      ClassifyVertices(cs.g_minus, p0, cfg.delta, std::nullopt, "g_minus");
  rec.values["tiny_count"] = Cell::Number(static_cast<double>(cls.tiny.size()));
  rec.values["atyp_count"] = Cell::Number(static_cast<double>(cls.atyp.size()));

  std::vector<std::pair<AuditReport, const Graph*>> reports;
  for (auto& r : AuditNeighbourhoods(cs.g_plus, cls, cfg.L)) {
    reports.emplace_back(std::move(r), &cs.g_plus);
  }
  reports.emplace_back(AuditAtypSize(cls), &cs.g_minus);
  reports.emplace_back(
      AuditEdgeCounts(cs.g_plus, cs.p1, cfg.c, cfg.subset_trials, DeriveSeed(rec.seed, 3)),
      &cs.g_plus);
  bool recheck_ok = true;
  std::size_t witnesses = 0;
  for (const auto& [report, graph] : reports) {
    rec.values[report.property] = Cell::Flag(report.holds);
    rec.values[report.property + "_max"] = Cell::Number(report.max_observed);
    for (std::size_t i = 0; i < report.violations.size(); ++i) {
      ++witnesses;
      recheck_ok = recheck_ok && RecheckWitness(report, i, *graph, &cls);
    }
  }
  rec.values["witnesses"] = Cell::Number(static_cast<double>(witnesses));
  rec.values["witnesses_recheck_ok"] = Cell::Flag(recheck_ok);

  // D-set statistics from the greedy construction on G+. The star-condition
  // slack has no influence on them, so any admissible value will do.
  GreedyAttackStats stats;
  const double d_threshold = (0.5 + cfg.delta) * static_cast<double>(n) * cs.p1;
  try {
    GreedyPartitionAttack(cs.g_plus, cls, d_threshold, Rational(1, 10), DeriveSeed(rec.seed, 4),
                          &stats);
  } catch (const GreedyAttackError&) {
  }
  rec.values["d_set_size"] = Cell::Number(static_cast<double>(stats.d_set_size));
  rec.values["max_d_neighbours"] = Cell::Number(static_cast<double>(stats.max_d_neighbours));
  return rec;
}

StudyResult RunStudy(const ExperimentConfig& cfg) {
  ValidateConfig(cfg);
  struct Task {
    std::size_t n;
    std::uint64_t m;
    int trial;
  };
  std::vector<Task> tasks;
  const std::set<std::size_t> ns(cfg.n.begin(), cfg.n.end());
  for (std::size_t n : ns) {
    std::vector<std::uint64_t> ms = {0};
    if (cfg.study == StudyKind::kSweep || cfg.study == StudyKind::kKCore) {
      ms = EdgeCountsFor(cfg, n);
    }
    for (std::uint64_t m : ms) {
      for (int t = 0; t < cfg.trials; ++t) tasks.push_back({n, m, t});
    }
  }
  StudyResult result;
  result.config = cfg;
  result.records.resize(tasks.size());
  ParallelFor(tasks.size(), cfg.threads, [&](std::size_t i) {
    const Task& task = tasks[i];
    switch (cfg.study) {
      case StudyKind::kHitting:
        result.records[i] = RunHittingTrial(cfg, task.n, task.trial);
        break;
      case StudyKind::kSweep:
        result.records[i] = RunSweepTrial(cfg, task.n, task.m, task.trial);
        break;
      case StudyKind::kKCore:
        result.records[i] = RunKCoreTrial(cfg, task.n, task.m, task.trial);
        break;
      case StudyKind::kAudit:
        result.records[i] = RunAuditTrial(cfg, task.n, task.trial);
        break;
    }
  });
  result.summary = Summarize(result.records);
  return result;
}

namespace {

StudyResult RunAs(ExperimentConfig cfg, StudyKind kind) {
  cfg.study = kind;
  return RunStudy(cfg);
}

}  // namespace

StudyResult RunHittingTimeStudy(const ExperimentConfig& cfg) {
  return RunAs(cfg, StudyKind::kHitting);
}

StudyResult RunResilienceSweep(const ExperimentConfig& cfg) {
  return RunAs(cfg, StudyKind::kSweep);
}

StudyResult RunKCoreStudy(const ExperimentConfig& cfg) { return RunAs(cfg, StudyKind::kKCore); }

StudyResult RunPropertyAuditStudy(const ExperimentConfig& cfg) {
  return RunAs(cfg, StudyKind::kAudit);
}

}  // namespace resil

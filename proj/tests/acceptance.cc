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

// Release acceptance checks. Prints one line per criterion:
//   criterion N PASS: <summary>
//   criterion N FAIL: <summary>
// and exits nonzero if any selected criterion fails.
//
//   acceptance [--criterion N]...

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fixtures.h"
#include "oracles.h"
#include "resil/classify.h"
#include "resil/experiments.h"
#include "resil/parallel.h"
#include "resil/process.h"
#include "resil/random.h"
#include "resil/resilience.h"
#include "resil/serialize.h"

namespace resil {
namespace {

// Pinned tolerances and budgets.
constexpr double kC1Seconds = 10;
constexpr double kC2Seconds = 600;
constexpr int kC2RandomGraphs = 200;
constexpr double kC4MinRate = 0.90;
constexpr int kC4Trials = 100;
constexpr double kC4Seconds = 300;
constexpr int kC5Trials = 200;
constexpr double kC5FinalRate = 0.85;
constexpr int kC5AllowedInversions = 1;
constexpr double kC5Seconds = 600;
constexpr double kC6MinRate = 0.90;
constexpr int kC6Trials = 100;
constexpr double kC6Seconds = 600;
constexpr int kC7SamplesPerN = 10;
constexpr std::size_t kC7NaiveUpToN = 9;
constexpr double kC7Seconds = 600;

constexpr std::uint64_t kMasterSeed = 20260101;

struct Verdict {
  bool pass = false;
  std::string summary;
};

class Timer {
 public:
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::string RateText(std::size_t hits, std::size_t total) {
  const WilsonInterval w = Wilson(hits, total);
  return Fmt("%zu/%zu = %.3f [%.3f, %.3f]", hits, total,
             static_cast<double>(hits) / static_cast<double>(total), w.low, w.high);
}

const std::vector<std::pair<int, int>> kAlphas = {{1, 4}, {1, 3}, {1, 2}, {2, 3}};

// 1. Exact thresholds of cycles and complete graphs.
Verdict ExactThresholds() {
  Timer timer;
  int checked = 0;
  std::string bad;
  auto check = [&](const char* name, std::size_t n, const Graph& g, Rational expect) {
    const ResilienceReport r = ExactResilienceThreshold(g);
    const auto [num, den] = oracle::ThresholdByEnumeration(g);
    ++checked;
    if (r.alpha_star != expect || r.alpha_star != Rational(num, den)) {
      bad += Fmt(" %s%zu: got %s want %s oracle %lld/%lld;", name, n,
                 r.alpha_star.ToString().c_str(), expect.ToString().c_str(),
                 static_cast<long long>(num), static_cast<long long>(den));
    }
  };
  for (std::size_t n = 4; n <= 12; ++n) check("C", n, testing::Cycle(n), Rational(1, 2));
  for (std::size_t n = 3; n <= 12; ++n) {
    check("K", n, testing::Complete(n),
          Rational(static_cast<std::int64_t>((n + 1) / 2), static_cast<std::int64_t>(n - 1)));
  }
  const double secs = timer.Seconds();
  return {bad.empty() && secs < kC1Seconds,
          Fmt("%d thresholds exact, %.2fs (budget %.0fs)", checked, secs, kC1Seconds) + bad};
}

// 2. Cut searches agree with enumeration over all admissible H.
Verdict OracleEquivalence() {
  Timer timer;
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::size_t uncertified = 0;
  std::string first;
  auto record = [&](bool lib, bool naive, const Graph& g, const std::string& what) {
    ++cases;
    if (lib != naive) {
      ++mismatches;
      if (first.empty()) first = Fmt(" first mismatch: n=%zu m=%zu %s", g.n(), g.m(), what.c_str());
    }
  };

  std::vector<Graph> corpus;
  std::size_t classes = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& edges : oracle::NonIsomorphicGraphs(n)) {
      Graph g(n, edges);
      if (IsConnected(g) || n == 1) {
        corpus.push_back(std::move(g));
        ++classes;
      }
    }
  }
  SplitMix64 rng(DeriveSeed(kMasterSeed, 2));
  for (int t = 0; t < kC2RandomGraphs; ++t) {
    const std::size_t n = 4 + rng.UniformBelow(7);
    const double p = 0.3 + 0.4 * static_cast<double>(rng.UniformBelow(1000)) / 1000;
    corpus.push_back(testing::RandomConnected(n, p, rng));
  }

  for (const Graph& g : corpus) {
    for (auto [p, q] : kAlphas) {
      const FractionBudget rule{Rational(p, q)};
      const auto cut = FindDisconnectingAttack(g, rule);
      record(cut.has_value(), oracle::NaiveAttackExists(g, oracle::Budgets(g, p, q, 0), 1), g,
             Fmt("alpha=%d/%d", p, q));
      if (cut && !CertifyAttack(g, *cut, rule).certified) ++uncertified;
    }
  }
  std::size_t kconn_graphs = 0;
  for (std::size_t i = 0; i < classes; ++i) {
    const Graph& g = corpus[i];
    for (int k = 2; k <= 3; ++k) {
      if (!oracle::IsKConnected(g, k)) continue;
      ++kconn_graphs;
      for (auto [p, q] : kAlphas) {
        for (int keep : {0, k}) {
          const BudgetRule rule = keep == 0 ? BudgetRule{FractionBudget{Rational(p, q)}}
                                            : BudgetRule{KeepDegreeBudget{Rational(p, q), k}};
          const auto cut = FindKConnAttack(g, rule, k);
          record(cut.has_value(), oracle::NaiveAttackExists(g, oracle::Budgets(g, p, q, keep), k),
                 g, Fmt("k=%d %s", k, Describe(rule).c_str()));
          if (cut && !CertifyAttack(g, *cut, rule, k).certified) ++uncertified;
        }
      }
    }
  }
  const double secs = timer.Seconds();
  return {mismatches == 0 && uncertified == 0 && secs < kC2Seconds,
          Fmt("%zu connected classes n<=7 + %d random n<=10; %zu k-connected (k=2,3) cases; "
              "%zu comparisons, %zu mismatches, %zu uncertified, %.1fs (budget %.0fs)",
              classes, kC2RandomGraphs, kconn_graphs, cases, mismatches, uncertified, secs,
              kC2Seconds) +
              first};
}

// 3. Cherry gadget.
Verdict CherryObstruction() {
  const Graph g = testing::CherryGadget();  // a=0, b=1, c=2, d=3, e=4, f=5
  const auto edge = CherryAttack(g);
  if (!edge || *edge != Edge{2, 3}) return {false, "cherry_attack did not return {c,d} = {2,3}"};
  const std::vector<Edge> h = {*edge};
  const bool allowed = BudgetAllows(g, h, FractionBudget{Rational(1, 3)});
  const auto comps = ConnectedComponents(RemoveEdges(g, h));
  const std::vector<Vertex> cherry = {0, 1, 2};
  const bool split = comps.size() == 2 &&
                     (comps[0].members() == cherry || comps[1].members() == cherry);
  return {allowed && split,
          Fmt("returned {2,3}; Fraction(1/3) admits H: %s; G-H has %zu components%s",
              allowed ? "yes" : "no", comps.size(), split ? " with {a,b,c} split off" : "")};
}

// 4. Greedy partition attack on G(n, m) at m = ceil(n log n).
Verdict GreedyAtDeskScale() {
  Timer timer;
  constexpr std::size_t n = 4096;
  const std::uint64_t m = static_cast<std::uint64_t>(std::ceil(n * std::log(static_cast<double>(n))));
  const double p1 = static_cast<double>(m) / static_cast<double>(NumPairs(n));
  const double delta = ExperimentConfig{}.delta;
  const Rational epsilon(1, 10);
  std::vector<int> satisfied(kC4Trials, 0);
  std::vector<int> errors(kC4Trials, 0);
  std::vector<double> worst(kC4Trials, 0);
  ParallelFor(kC4Trials, 0, [&](std::size_t t) {
    const std::uint64_t seed = DeriveSeed(DeriveSeed(kMasterSeed, 4), t);
    const Graph g = SampleGnm(n, m, seed);
    const VertexClassification cls = ClassifyVertices(g, p1, delta);
    try {
      const AttackOutcome out = GreedyPartitionAttack(g, cls, (0.5 + delta) * n * p1, epsilon,
                                                      DeriveSeed(seed, 1));
      satisfied[t] = out.satisfied;
      worst[t] = out.max_ratio.ToDouble();
    } catch (const GreedyAttackError&) {
      errors[t] = 1;
    }
  });
  std::size_t hits = 0;
  std::size_t errs = 0;
  for (int t = 0; t < kC4Trials; ++t) {
    hits += satisfied[t];
    errs += errors[t];
  }
  std::vector<double> sorted = worst;
  std::sort(sorted.begin(), sorted.end());
  const double rate = static_cast<double>(hits) / kC4Trials;
  const double secs = timer.Seconds();
  return {rate >= kC4MinRate && secs < kC4Seconds,
          Fmt("n=%zu m=%llu eps=1/10 delta=%.2f: star condition in ", n,
              static_cast<unsigned long long>(m), delta) +
              RateText(hits, kC4Trials) +
              Fmt(" (need >= %.2f); %zu rearrangement-cap errors; median max ratio %.3f; %.1fs",
                  kC4MinRate, errs, Quantile(sorted, 0.5), secs)};
}

// 5. tau_1 = tau_conn concordance across n.
Verdict HittingTimeConcordance() {
  Timer timer;
  ExperimentConfig cfg;
  cfg.study = StudyKind::kHitting;
  cfg.n = {256, 1024, 4096};
  cfg.trials = kC5Trials;
  cfg.seed = kMasterSeed;
  cfg.exact_limit = 0;         // thresholds are not needed here
  cfg.local_search_limit = 0;
  std::vector<std::size_t> hits(cfg.n.size(), 0);
  std::vector<std::size_t> totals(cfg.n.size(), 0);
  for (std::size_t i = 0; i < cfg.n.size(); ++i) {
    const std::size_t n = cfg.n[i];
    std::vector<int> eq(kC5Trials, 0);
    ParallelFor(kC5Trials, 0, [&](std::size_t t) {
      const ProcessTrace trace =
          SampleProcess(n, TrialSeed(cfg.seed, cfg.study, n, 0, static_cast<int>(t)));
      eq[t] = HittingTimeMinDegree(trace, 1) == HittingTimeKConnectivity(trace, 1);
    });
    for (int e : eq) hits[i] += e;
    totals[i] = kC5Trials;
  }
  int inversions = 0;
  bool inversions_overlap = true;
  std::string detail;
  for (std::size_t i = 0; i < cfg.n.size(); ++i) {
    detail += Fmt(" n=%zu: ", cfg.n[i]) + RateText(hits[i], totals[i]) + ";";
    if (i > 0 && hits[i] < hits[i - 1]) {
      ++inversions;
      const WilsonInterval a = Wilson(hits[i - 1], totals[i - 1]);
      const WilsonInterval b = Wilson(hits[i], totals[i]);
      inversions_overlap = inversions_overlap && b.high >= a.low;
    }
  }
  const double final_rate = static_cast<double>(hits.back()) / static_cast<double>(totals.back());
  const double secs = timer.Seconds();
  return {inversions <= kC5AllowedInversions && inversions_overlap && final_rate > kC5FinalRate &&
              secs < kC5Seconds,
          Fmt("%d inversion(s)%s, final rate %.3f (need > %.2f), %.1fs;", inversions,
              inversions_overlap ? "" : " outside Wilson overlap", final_rate, kC5FinalRate,
              secs) +
              detail};
}

// Replays one serialized violation from scratch. True iff it is genuine.
bool IndependentRecheck(const nlohmann::json& report, const nlohmann::json& witness,
                        const Graph& g_minus, const Graph& g_plus, double p0, double delta,
                        int L) {
  const std::size_t n = g_plus.n();
  const double np = static_cast<double>(n) * p0;
  auto tiny = [&](Vertex v) { return static_cast<double>(g_minus.degree(v)) < delta * np; };
  auto atyp = [&](Vertex v) {
    const double d = static_cast<double>(g_minus.degree(v));
    return d < (1 - delta) * np || d > (1 + delta) * np;
  };
  const std::vector<Vertex> vs = witness["vertices"].get<std::vector<Vertex>>();
  const std::string property = report["property"];
  if (vs.empty()) return false;
  for (Vertex v : vs) {
    if (v >= n) return false;
  }
  if (property == "tiny_ball3") {
    const Vertex centre = vs[0];
    std::vector<int> dist(n, -1);
    std::queue<Vertex> q;
    dist[centre] = 0;
    q.push(centre);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      if (dist[v] == 3) continue;
      for (Vertex w : g_plus.neighbours(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
      }
    }
    const std::set<Vertex> listed(vs.begin() + 1, vs.end());
    for (Vertex v : listed) {
      if (v == centre || dist[v] < 0 || !tiny(v)) return false;
    }
    return listed.size() == vs.size() - 1 && listed.size() > 2;
  }
  if (property == "atyp_neighbours") {
    const std::set<Vertex> listed(vs.begin() + 1, vs.end());
    for (Vertex v : listed) {
      if (!g_plus.HasEdge(vs[0], v) || !atyp(v)) return false;
    }
    return listed.size() == vs.size() - 1 && static_cast<int>(listed.size()) > L;
  }
  if (property == "tiny_triangle") {
    if (vs.size() != 3) return false;
    const bool triangle =
        g_plus.HasEdge(vs[0], vs[1]) && g_plus.HasEdge(vs[1], vs[2]) && g_plus.HasEdge(vs[0], vs[2]);
    return triangle && tiny(vs[0]) + tiny(vs[1]) + tiny(vs[2]) >= 2;
  }
  if (property == "atyp_size") {
    const std::set<Vertex> listed(vs.begin(), vs.end());
    for (Vertex v : listed) {
      if (!atyp(v)) return false;
    }
    return listed.size() == vs.size() &&
           static_cast<double>(listed.size()) > static_cast<double>(n) / std::log(static_cast<double>(n));
  }
  return false;
}

// 6. Structural audits on coupled samples.
Verdict StructuralAudits() {
  Timer timer;
  ExperimentConfig cfg;
  cfg.study = StudyKind::kAudit;
  cfg.n = {4096};
  cfg.trials = kC6Trials;
  cfg.seed = kMasterSeed;
  cfg.p0_factor = 1.2;
  cfg.p_prime_factor = 0.5;
  cfg.epsilon = Rational(1, 2);  // smallest slack with p' <= epsilon p0
  cfg.delta = 0.05;
  cfg.L = 30;
  cfg.threads = 0;
  const StudyResult result = RunStudy(cfg);

  // Independent replay of every emitted witness.
  std::size_t witnesses = 0;
  std::size_t genuine = 0;
  std::vector<std::size_t> per_trial_witnesses(result.records.size(), 0);
  std::vector<std::size_t> per_trial_genuine(result.records.size(), 0);
  ParallelFor(result.records.size(), 0, [&](std::size_t i) {
    const TrialRecord& rec = result.records[i];
    const std::size_t n = rec.n;
    const double p0 = cfg.p0_factor * std::log(static_cast<double>(n)) / (3.0 * n);
    const CoupledSample cs = SampleCoupled(n, p0, cfg.p_prime_factor * p0, rec.seed);
    const VertexClassification cls = ClassifyVertices(cs.g_minus, p0, cfg.delta);
    std::vector<AuditReport> reports;
    for (auto& r : AuditNeighbourhoods(cs.g_plus, cls, cfg.L)) reports.push_back(std::move(r));
    reports.push_back(AuditAtypSize(cls));
    for (const AuditReport& r : reports) {
      const nlohmann::json j = nlohmann::json::parse(ToJson(r).dump());
      for (const auto& w : j["violations"]) {
        ++per_trial_witnesses[i];
        per_trial_genuine[i] += IndependentRecheck(j, w, cs.g_minus, cs.g_plus, p0, cfg.delta, cfg.L);
      }
    }
  });
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    witnesses += per_trial_witnesses[i];
    genuine += per_trial_genuine[i];
  }

  const std::vector<std::pair<const char*, std::vector<const char*>>> conditions = {
      {"C2", {audit::kTinyBall}},
      {"C3", {audit::kAtypNeighbours, audit::kTinyTriangle}},
      {"C4", {audit::kAtypSize}}};
  bool pass = witnesses == genuine;
  std::string detail;
  for (const auto& [name, props] : conditions) {
    std::size_t hits = 0;
    for (const TrialRecord& rec : result.records) {
      bool all = true;
      for (const char* prop : props) all = all && rec.values.at(prop).number == 1;
      hits += all;
    }
    const double rate = static_cast<double>(hits) / static_cast<double>(result.records.size());
    pass = pass && rate >= kC6MinRate;
    detail += Fmt(" %s ", name) + RateText(hits, result.records.size()) + ";";
  }
  double atyp_mean = 0;
  double ball_max = 0;
  for (const TrialRecord& rec : result.records) {
    atyp_mean += rec.values.at("atyp_count").number / static_cast<double>(result.records.size());
    ball_max = std::max(ball_max, rec.values.at("tiny_ball3_max").number);
  }
  const double secs = timer.Seconds();
  pass = pass && secs < kC6Seconds;
  return {pass, Fmt("n=4096 p0=1.2 log n/(3n) p'=0.5 p0 delta=0.05 L=30, need >= %.2f each;",
                    kC6MinRate) +
                    detail +
                    Fmt(" witnesses genuine %zu/%zu; mean |atyp| %.0f (bound %.0f); max tiny in "
                        "a 3-ball %.0f; %.1fs",
                        genuine, witnesses, atyp_mean, 4096 / std::log(4096.0), ball_max, secs)};
}

// 7. k-connectivity certificates on small dense graphs.
Verdict KConnLoop() {
  Timer timer;
  const KeepDegreeBudget rule{Rational(1, 3), 2};
  std::size_t instances = 0;
  std::size_t skipped = 0;
  std::size_t naive_checked = 0;
  std::size_t mismatches = 0;
  std::size_t present = 0;
  std::size_t uncertified = 0;
  std::string first;
  for (std::size_t n = 3; n <= 12; ++n) {
    const std::uint64_t full = NumPairs(n);
    const std::uint64_t dense = static_cast<std::uint64_t>(std::ceil(0.8 * static_cast<double>(full)));
    for (std::uint64_t m : {full, dense}) {
      for (int s = 0; s < kC7SamplesPerN; ++s) {
        const Graph g = SampleGnm(n, m, DeriveSeed(DeriveSeed(kMasterSeed, 7), n * 1000 + m * 10 + s));
        if (!IsKConnected(g, 2)) {
          ++skipped;
          continue;
        }
        ++instances;
        const auto cut = FindKConnAttack(g, rule, 2);
        const auto budget = oracle::Budgets(g, 1, 3, 2);
        const bool expect = oracle::BoundaryAttackExists(g, budget, 2);
        bool agree = cut.has_value() == expect;
        if (n <= kC7NaiveUpToN) {
          ++naive_checked;
          agree = agree && oracle::NaiveAttackExists(g, budget, 2) == expect;
        }
        if (!agree) {
          ++mismatches;
          if (first.empty()) first = Fmt(" first mismatch n=%zu m=%llu", n, static_cast<unsigned long long>(m));
        }
        if (cut) {
          ++present;
          uncertified += !CertifyAttack(g, *cut, rule, 2).certified;
        }
      }
    }
  }
  const double secs = timer.Seconds();
  return {mismatches == 0 && uncertified == 0 && secs < kC7Seconds,
          Fmt("3<=n<=12, m in {C(n,2), ceil(0.8 C(n,2))}, %d samples each: %zu 2-connected "
              "instances (%zu skipped as not 2-connected), certificates on %zu; %zu also by full "
              "H enumeration (n<=%zu); %zu mismatches, %zu uncertified, %.1fs",
              kC7SamplesPerN, instances, skipped, present, naive_checked, kC7NaiveUpToN,
              mismatches, uncertified, secs) +
              first};
}

// 8. Byte-identical JSON across reruns and thread counts.
Verdict Reproducibility() {
  Timer timer;
  std::vector<ExperimentConfig> configs(4);
  configs[0].study = StudyKind::kHitting;
  configs[0].n = {14, 128, 1024};
  configs[0].trials = 12;
  configs[1].study = StudyKind::kSweep;
  configs[1].n = {16, 512};
  configs[1].m_factor = {0.75, 1.5, 2.5};
  configs[1].trials = 8;
  configs[2].study = StudyKind::kKCore;
  configs[2].n = {12, 200};
  configs[2].m_factor = {2, 4};
  configs[2].trials = 8;
  configs[3].study = StudyKind::kAudit;
  configs[3].n = {512, 1024};
  configs[3].epsilon = Rational(1, 2);
  configs[3].trials = 6;
  configs[3].subset_trials = 200;
  std::string detail;
  bool pass = true;
  for (ExperimentConfig cfg : configs) {
    cfg.seed = kMasterSeed;
    std::set<std::string> outputs;
    for (unsigned threads : {1u, 1u, 3u, 8u}) {
      cfg.threads = threads;
      outputs.insert(ResultToJsonText(RunStudy(cfg)));
    }
    pass = pass && outputs.size() == 1;
    detail += Fmt(" %s:%s", ToString(cfg.study).c_str(), outputs.size() == 1 ? "identical" : "DIFFERS");
  }
  return {pass, std::string("4 runs per study (threads 1, 1, 3, 8);") + detail + Fmt(", %.1fs", timer.Seconds())};
}

}  // namespace
}  // namespace resil

int main(int argc, char** argv) {
  using namespace resil;
  const std::map<int, std::function<Verdict()>> criteria = {
      {1, ExactThresholds},   {2, OracleEquivalence},      {3, CherryObstruction},
      {4, GreedyAtDeskScale}, {5, HittingTimeConcordance}, {6, StructuralAudits},
      {7, KConnLoop},         {8, Reproducibility}};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      selected.push_back(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N]...\n");
      return 2;
    }
  }
  if (selected.empty()) {
    for (const auto& [id, fn] : criteria) selected.push_back(id);
  }
  int failures = 0;
  for (int id : selected) {
    auto it = criteria.find(id);
    if (it == criteria.end()) {
      std::fprintf(stderr, "unknown criterion %d\n", id);
      return 2;
    }
    Verdict v;
    try {
      v = it->second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d %s: %s\n", id, v.pass ? "PASS" : "FAIL", v.summary.c_str());
    std::fflush(stdout);
    failures += !v.pass;
  }
  return failures == 0 ? 0 : 1;
}

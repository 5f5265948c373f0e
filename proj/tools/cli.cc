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

#include "cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "resil/classify.h"
#include "resil/config.h"
#include "resil/experiments.h"
#include "resil/graph.h"
#include "resil/graph_io.h"
#include "resil/process.h"
#include "resil/rational.h"
#include "resil/resilience.h"
#include "resil/serialize.h"

namespace resil::cli {
namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Destination chosen by --out: a file, or the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw EmitError("cannot write " + path);
    stream_ = file_.get();
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

Rational ParseAlpha(const std::string& text, const char* flag) {
  try {
    const Rational r = Rational::Parse(text);
    if (r < Rational(0, 1) || r > Rational(1, 1)) {
      throw UsageError(std::string(flag) + " must lie in [0, 1]");
    }
    return r;
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(flag) + " expects a rational such as 1/2, got '" + text + "'");
  }
}

void CheckProbability(double p, const char* flag) {
  if (!(p >= 0 && p <= 1)) throw UsageError(std::string(flag) + " must lie in [0, 1]");
}

void WriteOrder(std::ostream& out, std::size_t n, const std::vector<Edge>& order) {
  out << n << ' ' << order.size() << '\n';
  for (const Edge& e : order) out << e.u << ' ' << e.v << '\n';
}

void WriteMap(const std::string& path, const Subgraph& sub) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw EmitError("cannot write " + path);
  for (Vertex v : sub.to_original) file << v << '\n';
}

struct Options {
  // Shared.
  std::string graph;
  std::string out;
  std::uint64_t seed = 1;
  std::size_t n = 0;
  int k = 1;

  // sample
  std::uint64_t m = 0;
  bool m_given = false;
  double p = 0;
  double p0 = 0;
  double p_prime = 0;
  std::string out_minus;
  std::string out_plus;

  // giant / kcore
  std::string map_out;

  // classify / audit / greedy
  double delta = 0.05;
  std::string reference;
  int L = 30;
  double c = 2.0;
  double p_edges = -1;
  std::uint64_t subset_trials = 1000;
  std::string epsilon = "1/10";
  double d_threshold = -1;

  // attacks / threshold / verify
  std::string alpha;
  std::string rule = "fraction";
  std::string mode = "exact";
  int restarts = 32;
  std::size_t exact_limit = 24;
  std::size_t separator_limit = 16;
  unsigned threads = 1;
  std::string cut;

  // study
  std::string study_kind;
  std::string config;
  std::string table = "records";
};

BudgetRule MakeRule(const Options& o, int k) {
  const Rational alpha = ParseAlpha(o.alpha, "--alpha");
  if (o.rule == "fraction") return FractionBudget{alpha};
  if (o.rule == "keep-degree") return KeepDegreeBudget{alpha, k};
  throw UsageError("--rule must be fraction or keep-degree");
}

int RunSample(const std::string& kind, const Options& o, std::ostream& out) {
  if (o.n < 2) throw UsageError("--n must be at least 2");
  if (kind == "process") {
    const ProcessTrace trace = SampleProcess(o.n, o.seed);
    const std::uint64_t m = o.m_given ? o.m : trace.num_pairs();
    if (m > trace.num_pairs()) throw UsageError("--m exceeds n(n-1)/2");
    Sink sink(o.out, out);
    WriteOrder(*sink, o.n, ProcessPrefix(trace, m));
    return kOk;
  }
  if (kind == "gnm") {
    if (!o.m_given) throw UsageError("sample gnm needs --m");
    if (o.m > NumPairs(o.n)) throw UsageError("--m exceeds n(n-1)/2");
    Sink sink(o.out, out);
    WriteGraphText(*sink, SampleGnm(o.n, o.m, o.seed));
    return kOk;
  }
  if (kind == "gnp") {
    CheckProbability(o.p, "--p");
    Sink sink(o.out, out);
    WriteGraphText(*sink, SampleGnp(o.n, o.p, o.seed));
    return kOk;
  }
  if (kind == "coupled") {
    CheckProbability(o.p0, "--p0");
    CheckProbability(o.p_prime, "--p-prime");
    const CoupledSample cs = SampleCoupled(o.n, o.p0, o.p_prime, o.seed);
    if (!o.out_minus.empty()) WriteGraphFile(o.out_minus, cs.g_minus);
    if (!o.out_plus.empty()) WriteGraphFile(o.out_plus, cs.g_plus);
    Sink sink(o.out, out);
    *sink << json{{"n", o.n},
                  {"seed", o.seed},
                  {"p0", cs.p0},
                  {"p_prime", cs.p_prime},
                  {"p1", cs.p1},
                  {"minus_edges", cs.g_minus.m()},
                  {"plus_edges", cs.g_plus.m()}}
                 .dump(2)
          << '\n';
    return kOk;
  }
  throw UsageError("unknown sampler '" + kind + "'");
}

int RunHittingTimes(const Options& o, std::ostream& out) {
  if (o.n < 2) throw UsageError("--n must be at least 2");
  if (o.k < 1 || static_cast<std::size_t>(o.k) > o.n - 1) {
    throw UsageError("--k must lie in [1, n-1]");
  }
  const ProcessTrace trace = SampleProcess(o.n, o.seed);
  json times = json::array();
  for (int j = 1; j <= o.k; ++j) {
    times.push_back({{"k", j},
                     {"tau_k", HittingTimeMinDegree(trace, j)},
                     {"tau_kconn", HittingTimeKConnectivity(trace, j)}});
  }
  Sink sink(o.out, out);
  *sink << json{{"trace", TraceDescriptor(trace)}, {"hitting_times", times}}.dump(2) << '\n';
  return kOk;
}

int RunClassify(const Options& o, std::ostream& out) {
  const Graph g = ReadGraphFile(o.graph);
  const VertexClassification cls = ClassifyVertices(g, o.p, o.delta);
  Sink sink(o.out, out);
  *sink << json{{"p", cls.p},
                {"delta", cls.delta},
                {"tiny", cls.tiny.members()},
                {"atyp", cls.atyp.members()}}
               .dump(2)
        << '\n';
  return kOk;
}

int RunAudit(const Options& o, std::ostream& out) {
  const Graph g = ReadGraphFile(o.graph);
  const Graph reference = o.reference.empty() ? g : ReadGraphFile(o.reference);
  if (reference.n() != g.n()) throw UsageError("--reference has a different vertex count");
  CheckProbability(o.p, "--p");
  const VertexClassification cls = ClassifyVertices(reference, o.p, o.delta);
  json reports = json::array();
  bool all = true;
  for (const auto& r : AuditNeighbourhoods(g, cls, o.L)) {
    all = all && r.holds;
    reports.push_back(ToJson(r));
  }
  if (g.n() > 1) {
    const AuditReport size = AuditAtypSize(cls);
    all = all && size.holds;
    reports.push_back(ToJson(size));
  }
  const double p_edges = o.p_edges >= 0 ? o.p_edges : o.p;
  const AuditReport density = AuditEdgeCounts(g, p_edges, o.c, o.subset_trials, o.seed);
  all = all && density.holds;
  reports.push_back(ToJson(density));
  Sink sink(o.out, out);
  *sink << reports.dump(2) << '\n';
  return all ? kOk : kNegative;
}

int RunAttack(const std::string& kind, const Options& o, std::ostream& out) {
  const Graph g = ReadGraphFile(o.graph);
  Sink sink(o.out, out);
  if (kind == "cherry") {
    const auto edge = CherryAttack(g);
    if (!edge) {
      *sink << "none\n";
      return kNegative;
    }
    *sink << json{{"edge", {edge->u, edge->v}}}.dump() << '\n';
    return kOk;
  }
  if (kind == "greedy") {
    CheckProbability(o.p, "--p");
    Rational eps;
    try {
      eps = Rational::Parse(o.epsilon);
    } catch (const std::invalid_argument&) {
      throw UsageError("--epsilon expects a rational such as 1/10");
    }
    const VertexClassification cls = ClassifyVertices(g, o.p, o.delta);
    const double d_threshold =
        o.d_threshold >= 0 ? o.d_threshold
                           : (0.5 + o.delta) * static_cast<double>(g.n()) * o.p;
    GreedyAttackStats stats;
    const AttackOutcome outcome =
        GreedyPartitionAttack(g, cls, d_threshold, eps, o.seed, &stats);
    json j = ToJson(outcome);
    j["d_set_size"] = stats.d_set_size;
    j["max_d_neighbours"] = stats.max_d_neighbours;
    j["rearrangements"] = stats.rearrangements;
    *sink << j.dump() << '\n';
    return outcome.satisfied ? kOk : kNegative;
  }
  if (kind == "exact" || kind == "kconn") {
    ExactLimits limits;
    limits.max_bipartition_n = o.exact_limit;
    limits.max_separator_n = o.separator_limit;
    limits.threads = o.threads;
    const int k = kind == "kconn" ? o.k : 1;
    const BudgetRule rule = MakeRule(o, k);
    const auto cut = kind == "exact" ? FindDisconnectingAttack(g, rule, nullptr, limits)
                                     : FindKConnAttack(g, rule, k, nullptr, limits);
    if (!cut) {
      *sink << "resilient\n";
      return kNegative;
    }
    *sink << ToJson(MakeOutcome(g, *cut, true)).dump() << '\n';
    return kOk;
  }
  throw UsageError("unknown attack '" + kind + "'");
}

int RunThreshold(const Options& o, std::ostream& out) {
  const Graph g = ReadGraphFile(o.graph);
  ResilienceReport report;
  if (o.mode == "exact") {
    ExactLimits limits;
    limits.max_bipartition_n = o.exact_limit;
    limits.threads = o.threads;
    report = ExactResilienceThreshold(g, limits);
  } else if (o.mode == "local") {
    LocalSearchOptions options;
    options.restarts = o.restarts;
    options.seed = o.seed;
    report = LocalSearchResilienceThreshold(g, options);
  } else {
    throw UsageError("--mode must be exact or local");
  }
  Sink sink(o.out, out);
  *sink << ToJson(report).dump() << '\n';
  return kOk;
}

int RunVerifyCut(const Options& o, std::ostream& out) {
  const Graph g = ReadGraphFile(o.graph);
  std::ifstream in(o.cut);
  if (!in) throw UsageError("cannot open " + o.cut);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed cut JSON: ") + e.what());
  }
  const Cut cut = CutFromJson(j, g.n());
  const Certification verdict = CertifyAttack(g, cut, MakeRule(o, o.k), o.k);
  Sink sink(o.out, out);
  *sink << (verdict.certified ? "certified: " : "rejected: ") << verdict.reason << '\n';
  return verdict.certified ? kOk : kNegative;
}

int RunStudyCommand(const Options& o, const std::vector<std::pair<std::string, std::string>>& overrides,
                    std::ostream& out) {
  ExperimentConfig cfg;
  if (!o.config.empty()) cfg = LoadConfigFile(o.config);
  ApplyEnvironment(cfg);
  SetConfigValue(cfg, "study", o.study_kind);
  for (const auto& [key, value] : overrides) SetConfigValue(cfg, key, value);
  if (o.table != "records" && o.table != "summary") {
    throw UsageError("--table must be records or summary");
  }
  const StudyResult result = RunStudy(cfg);
  EmitOptions options;
  if (cfg.timestamp) options.timestamp = UtcTimestamp();
  if (cfg.format == "csv" && o.table == "summary") {
    Sink sink(cfg.out, out);
    *sink << SummaryToCsv(result.summary);
    return kOk;
  }
  Emit(result, cfg.format, cfg.out, out, options);
  return kOk;
}

void AddGraph(CLI::App* cmd, Options& o) {
  cmd->add_option("--graph", o.graph, "Graph file ('n m' header, then 'u v' lines)")
      ->required()
      ->check(CLI::ExistingFile);
}

void AddOut(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "Write output to this file instead of stdout");
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random graph process simulator and resilience toolkit", "resil"};
  app.set_version_flag("--version", CodeVersion());
  app.require_subcommand(1);
  Options o;
  std::string sub_kind;

  auto* sample = app.add_subcommand("sample", "Sample a process order, G(n,m), G(n,p) or a coupled pair");
  sample->add_option("kind", sub_kind, "process | gnm | gnp | coupled")
      ->required()
      ->check(CLI::IsMember({"process", "gnm", "gnp", "coupled"}));
  sample->add_option("--n", o.n, "Vertex count")->required();
  sample->add_option("--seed", o.seed, "64-bit seed");
  auto* m_opt = sample->add_option("--m", o.m, "Edge count (gnm) or prefix length (process)");
  sample->add_option("--p", o.p, "Edge probability (gnp)");
  sample->add_option("--p0", o.p0, "Base probability (coupled)");
  sample->add_option("--p-prime", o.p_prime, "Sprinkling probability (coupled)");
  sample->add_option("--out-minus", o.out_minus, "Write G- here (coupled)");
  sample->add_option("--out-plus", o.out_plus, "Write G+ here (coupled)");
  AddOut(sample, o);

  auto* hitting = app.add_subcommand("hitting-times", "Hitting times tau_j and tau_j-conn, j = 1..k");
  hitting->add_option("--n", o.n, "Vertex count")->required();
  hitting->add_option("--seed", o.seed, "64-bit seed");
  hitting->add_option("--k", o.k, "Largest j to report");
  AddOut(hitting, o);

  auto* giant = app.add_subcommand("giant", "Extract the largest component");
  AddGraph(giant, o);
  giant->add_option("--map-out", o.map_out, "Write original vertex ids, one per line");
  AddOut(giant, o);

  auto* kcore = app.add_subcommand("kcore", "Extract the k-core");
  AddGraph(kcore, o);
  kcore->add_option("--k", o.k, "Core order (>= 2)")->required();
  kcore->add_option("--map-out", o.map_out, "Write original vertex ids, one per line");
  AddOut(kcore, o);

  auto* classify = app.add_subcommand("classify", "List tiny and atypical vertices");
  AddGraph(classify, o);
  classify->add_option("--p", o.p, "Edge probability")->required();
  classify->add_option("--delta", o.delta, "Class width in (0, 1)");
  AddOut(classify, o);

  auto* audit = app.add_subcommand("audit", "Neighbourhood, class size and edge density audits");
  AddGraph(audit, o);
  audit->add_option("--reference", o.reference,
                    "Graph whose degrees define the classes (default: --graph)")
      ->check(CLI::ExistingFile);
  audit->add_option("--p", o.p, "Edge probability of the reference graph")->required();
  audit->add_option("--p-edges", o.p_edges, "Edge probability for the density audit (default: --p)");
  audit->add_option("--delta", o.delta, "Class width in (0, 1)");
  audit->add_option("--L", o.L, "Allowed atypical neighbours per vertex");
  audit->add_option("--c", o.c, "Edge density constant");
  audit->add_option("--subset-trials", o.subset_trials, "Random subsets to check");
  audit->add_option("--seed", o.seed, "Seed for subset sampling");
  AddOut(audit, o);

  auto* attack = app.add_subcommand("attack", "Run an attack and print its certificate");
  attack->add_option("kind", sub_kind, "cherry | greedy | exact | kconn")
      ->required()
      ->check(CLI::IsMember({"cherry", "greedy", "exact", "kconn"}));
  AddGraph(attack, o);
  attack->add_option("--alpha", o.alpha, "Budget fraction as a rational p/q (exact, kconn)");
  attack->add_option("--rule", o.rule, "fraction | keep-degree (exact, kconn)");
  attack->add_option("--k", o.k, "Connectivity order (kconn)");
  attack->add_option("--p", o.p, "Edge probability for the classes (greedy)");
  attack->add_option("--delta", o.delta, "Class width (greedy)");
  attack->add_option("--epsilon", o.epsilon, "Star condition slack as a rational (greedy)");
  attack->add_option("--d-threshold", o.d_threshold,
                     "Crossing degree above which a vertex joins D (greedy; default (1/2+delta)np)");
  attack->add_option("--seed", o.seed, "Seed for the equipartition (greedy)");
  attack->add_option("--exact-limit", o.exact_limit, "Largest n for bipartition enumeration");
  attack->add_option("--separator-limit", o.separator_limit, "Largest n for separator enumeration");
  attack->add_option("--threads", o.threads, "Worker threads for enumeration (0 = all cores)");
  AddOut(attack, o);

  auto* threshold = app.add_subcommand("threshold", "Connectivity resilience threshold alpha*");
  AddGraph(threshold, o);
  threshold->add_option("--mode", o.mode, "exact | local");
  threshold->add_option("--restarts", o.restarts, "Local search restarts");
  threshold->add_option("--seed", o.seed, "Local search seed");
  threshold->add_option("--exact-limit", o.exact_limit, "Largest n for exact mode");
  threshold->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  AddOut(threshold, o);

  auto* verify = app.add_subcommand("verify-cut", "Replay a cut certificate against a graph and budget");
  AddGraph(verify, o);
  verify->add_option("--cut", o.cut, "Cut JSON with fields S, A, B")->required()->check(CLI::ExistingFile);
  verify->add_option("--alpha", o.alpha, "Budget fraction as a rational p/q")->required();
  verify->add_option("--rule", o.rule, "fraction | keep-degree");
  verify->add_option("--k", o.k, "Connectivity order (separator may hold k-1 vertices)");
  AddOut(verify, o);

  auto* study = app.add_subcommand("study", "Run a Monte Carlo study");
  study->add_option("kind", o.study_kind, "hitting | sweep | kcore | audit")
      ->required()
      ->check(CLI::IsMember({"hitting", "sweep", "kcore", "audit"}));
  study->add_option("--config", o.config, "Config file (key = value lines)")->check(CLI::ExistingFile);
  study->add_option("--table", o.table, "records | summary (csv only)");
  const std::vector<std::pair<std::string, std::string>> study_keys = {
      {"n", "Vertex counts, comma separated"},
      {"m", "Edge counts, comma separated"},
      {"m_factor", "Edge counts as multiples of n log n / 6"},
      {"k", "Connectivity order"},
      {"epsilon", "Slack as a rational"},
      {"delta", "Class width"},
      {"L", "Allowed atypical neighbours"},
      {"c", "Edge density constant"},
      {"trials", "Trials per group"},
      {"seed", "Master seed"},
      {"p0_factor", "p0 = factor * log n / (3n)"},
      {"p_prime_factor", "p' = factor * p0"},
      {"subset_trials", "Random subsets per density audit"},
      {"exact_limit", "Exact computations up to this n"},
      {"local_search_limit", "Local search up to this n"},
      {"local_search_restarts", "Local search restarts"},
      {"threads", "Worker threads (0 = all cores)"},
      {"format", "json | csv"},
      {"out", "Output file"},
      {"timestamp", "Add a timestamp field (true | false)"},
  };
  std::vector<std::string> study_values(study_keys.size());
  std::vector<CLI::Option*> study_options;
  for (std::size_t i = 0; i < study_keys.size(); ++i) {
    // Both --m-factor and --m_factor spell the m_factor key.
    std::string flag = "--" + study_keys[i].first;
    if (flag.find('_') != std::string::npos) {
      std::string dashed = flag;
      for (char& ch : dashed) {
        if (ch == '_') ch = '-';
      }
      flag = dashed + "," + flag;
    }
    study_options.push_back(study->add_option(flag, study_values[i], study_keys[i].second));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kOk : kUsage;
  }
  o.m_given = m_opt->count() > 0;

  try {
    if (*sample) return RunSample(sub_kind, o, out);
    if (*hitting) return RunHittingTimes(o, out);
    if (*giant || *kcore) {
      const Graph g = ReadGraphFile(o.graph);
      Subgraph sub;
      if (*giant) {
        sub = GiantComponent(g);
      } else {
        if (o.k < 2) throw UsageError("--k must be at least 2");
        sub = KCore(g, o.k);
      }
      WriteMap(o.map_out, sub);
      Sink sink(o.out, out);
      WriteGraphText(*sink, sub.graph);
      return kOk;
    }
    if (*classify) return RunClassify(o, out);
    if (*audit) return RunAudit(o, out);
    if (*attack) return RunAttack(sub_kind, o, out);
    if (*threshold) return RunThreshold(o, out);
    if (*verify) return RunVerifyCut(o, out);
    if (*study) {
      std::vector<std::pair<std::string, std::string>> overrides;
      for (std::size_t i = 0; i < study_keys.size(); ++i) {
        if (study_options[i]->count() > 0) {
          overrides.emplace_back(study_keys[i].first, study_values[i]);
        }
      }
      return RunStudyCommand(o, overrides, out);
    }
  } catch (const ParseError& e) {
    err << "error: malformed graph file: " << e.what() << '\n';
    return kUsage;
  } catch (const ConfigError& e) {
    err << "error: config: " << e.what() << '\n';
    return kUsage;
  } catch (const EmitError& e) {
    err << "error: " << e.what() << '\n';
    return kRuntime;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kUsage;
}

}  // namespace resil::cli

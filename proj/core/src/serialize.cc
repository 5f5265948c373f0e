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

#include "resil/serialize.h"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#ifndef RESIL_VERSION
#define RESIL_VERSION "unknown"
#endif

namespace resil {
namespace {

using nlohmann::json;

json Members(const VertexSet& s) { return s.members(); }

json EdgeList(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

VertexSet SetFromJson(const json& j, std::size_t n, const char* field) {
  if (!j.is_array()) {
    throw std::invalid_argument(std::string("cut field '") + field + "' must be an array");
  }
  VertexSet s(n);
  for (const auto& x : j) {
    if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= n) {
      throw std::invalid_argument(std::string("cut field '") + field +
                                  "' holds a value that is not a vertex below " +
                                  std::to_string(n));
    }
    s.insert(x.get<Vertex>());
  }
  return s;
}

std::string Real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json CellToJson(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::kNumber:
      return c.number;
    case Cell::Kind::kFlag:
      return c.number != 0;
    case Cell::Kind::kRational:
      return c.exact.ToString();
  }
  return nullptr;
}

Cell CellFromJson(const json& j) {
  if (j.is_boolean()) return Cell::Flag(j.get<bool>());
  if (j.is_string()) return Cell::Exact(Rational::Parse(j.get<std::string>()));
  if (j.is_number()) return Cell::Number(j.get<double>());
  throw std::invalid_argument("record value must be a number, boolean or rational string");
}

std::vector<std::string_view> SplitCsv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T ParseField(std::string_view text, std::size_t line, const char* what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("csv line " + std::to_string(line) + ": bad " + what);
  }
  return value;
}

constexpr std::string_view kCsvColumns = "study,n,m,k,trial,seed,metric,kind,value";

}  // namespace

std::string CodeVersion() { return std::string("resil ") + RESIL_VERSION; }

json ToJson(const AuditReport& report) {
  json violations = json::array();
  for (const Witness& w : report.violations) {
    violations.push_back(
        {{"vertices", w.vertices}, {"measured", w.measured}, {"bound", w.bound}});
  }
  json params = json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  return {{"property", report.property},
          {"holds", report.holds},
          {"max_observed", report.max_observed},
          {"bound", report.bound},
          {"violations", violations},
          {"params", params}};
}

json ToJson(const Cut& cut) {
  return {{"S", Members(cut.separator)}, {"A", Members(cut.side_a)}, {"B", Members(cut.side_b)}};
}

json ToJson(const AttackOutcome& outcome) {
  json j = ToJson(outcome.cut);
  j["H"] = EdgeList(outcome.h_edges);
  j["max_ratio"] = outcome.max_ratio.ToString();
  j["satisfied"] = outcome.satisfied;
  return j;
}

json ToJson(const ResilienceReport& report) {
  return {{"alpha_star", report.alpha_star.ToString()},
          {"method", ToString(report.method)},
          {"witness", ToJson(report.witness)}};
}

json TraceDescriptor(const ProcessTrace& trace) {
  return {{"n", trace.n}, {"seed", trace.seed}, {"generator", std::string(kTraceGenerator)}};
}

Cut CutFromJson(const json& j, std::size_t n) {
  if (!j.is_object()) throw std::invalid_argument("cut must be a JSON object");
  if (!j.contains("A") || !j.contains("B")) {
    throw std::invalid_argument("cut needs fields 'A' and 'B'");
  }
  Cut cut{j.contains("S") ? SetFromJson(j["S"], n, "S") : VertexSet(n),
          SetFromJson(j["A"], n, "A"), SetFromJson(j["B"], n, "B")};
  return cut;
}

json ConfigEcho(const ExperimentConfig& cfg) {
  return {{"study", ToString(cfg.study)},
          {"n", cfg.n},
          {"m", cfg.m},
          {"m_factor", cfg.m_factor},
          {"k", cfg.k},
          {"epsilon", cfg.epsilon.ToString()},
          {"delta", cfg.delta},
          {"L", cfg.L},
          {"c", cfg.c},
          {"trials", cfg.trials},
          {"seed", cfg.seed},
          {"p0_factor", cfg.p0_factor},
          {"p_prime_factor", cfg.p_prime_factor},
          {"subset_trials", cfg.subset_trials},
          {"exact_limit", cfg.exact_limit},
          {"local_search_limit", cfg.local_search_limit},
          {"local_search_restarts", cfg.local_search_restarts}};
}

json ResultToJson(const StudyResult& result, const EmitOptions& options) {
  json records = json::array();
  for (const TrialRecord& rec : result.records) {
    json values = json::object();
    for (const auto& [name, cell] : rec.values) values[name] = CellToJson(cell);
    records.push_back({{"study", ToString(rec.study)},
                       {"n", rec.n},
                       {"m", rec.m},
                       {"k", rec.k},
                       {"trial", rec.trial},
                       {"seed", rec.seed},
                       {"values", values}});
  }
  json rows = json::array();
  for (const SummaryRow& row : result.summary.rows) {
    json metrics = json::object();
    for (const auto& [name, s] : row.metrics) {
      json m = {{"kind", ToString(s.kind)}, {"count", s.count}, {"mean", s.mean},
                {"min", s.min},             {"max", s.max},     {"q25", s.q25},
                {"median", s.median},       {"q75", s.q75}};
      if (s.kind == Cell::Kind::kFlag) {
        m["successes"] = s.successes;
        m["wilson_low"] = s.wilson_low;
        m["wilson_high"] = s.wilson_high;
      }
      metrics[name] = m;
    }
    rows.push_back({{"study", ToString(row.study)},
                    {"n", row.n},
                    {"m", row.m},
                    {"k", row.k},
                    {"trials", row.trials},
                    {"metrics", metrics}});
  }
  json derived = json::array();
  for (const DerivedValue& d : result.summary.derived) {
    json item = {{"name", d.name}, {"n", d.n}, {"defined", d.defined}};
    item["value"] = d.defined ? json(d.value) : json(nullptr);
    derived.push_back(item);
  }
  json out = {{"schema_version", kSchemaVersion},
              {"code_version", CodeVersion()},
              {"generator", std::string(kTraceGenerator)},
              {"config", ConfigEcho(result.config)},
              {"records", records},
              {"summary", {{"rows", rows}, {"derived", derived}}}};
  if (options.timestamp) out["timestamp"] = *options.timestamp;
  return out;
}

std::string ResultToJsonText(const StudyResult& result, const EmitOptions& options) {
  return ResultToJson(result, options).dump(2) + "\n";
}

std::vector<TrialRecord> RecordsFromJson(const json& j) {
  std::vector<TrialRecord> out;
  for (const auto& r : j.at("records")) {
    TrialRecord rec;
    rec.study = ParseStudyKind(r.at("study").get<std::string>());
    rec.n = r.at("n").get<std::size_t>();
    rec.m = r.at("m").get<std::uint64_t>();
    rec.k = r.at("k").get<int>();
    rec.trial = r.at("trial").get<int>();
    rec.seed = r.at("seed").get<std::uint64_t>();
    for (const auto& [name, value] : r.at("values").items()) {
      rec.values[name] = CellFromJson(value);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

SummaryTable SummaryFromJson(const json& j) {
  SummaryTable table;
  const json& summary = j.at("summary");
  for (const auto& r : summary.at("rows")) {
    SummaryRow row;
    row.study = ParseStudyKind(r.at("study").get<std::string>());
    row.n = r.at("n").get<std::size_t>();
    row.m = r.at("m").get<std::uint64_t>();
    row.k = r.at("k").get<int>();
    row.trials = r.at("trials").get<std::size_t>();
    for (const auto& [name, m] : r.at("metrics").items()) {
      MetricSummary s;
      s.kind = ParseCellKind(m.at("kind").get<std::string>());
      s.count = m.at("count").get<std::size_t>();
      s.mean = m.at("mean").get<double>();
      s.min = m.at("min").get<double>();
      s.max = m.at("max").get<double>();
      s.q25 = m.at("q25").get<double>();
      s.median = m.at("median").get<double>();
      s.q75 = m.at("q75").get<double>();
      if (s.kind == Cell::Kind::kFlag) {
        s.successes = m.at("successes").get<std::size_t>();
        s.wilson_low = m.at("wilson_low").get<double>();
        s.wilson_high = m.at("wilson_high").get<double>();
      }
      row.metrics.emplace(name, s);
    }
    table.rows.push_back(std::move(row));
  }
  for (const auto& d : summary.at("derived")) {
    DerivedValue v;
    v.name = d.at("name").get<std::string>();
    v.n = d.at("n").get<std::size_t>();
    v.defined = d.at("defined").get<bool>();
    if (v.defined) v.value = d.at("value").get<double>();
    table.derived.push_back(std::move(v));
  }
  return table;
}

std::string RecordsToCsv(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  out << "# resil study records, schema " << kSchemaVersion << ": " << kCsvColumns << "\n";
  out << kCsvColumns << "\n";
  for (const TrialRecord& rec : records) {
    for (const auto& [name, cell] : rec.values) {
      out << ToString(rec.study) << ',' << rec.n << ',' << rec.m << ',' << rec.k << ','
          << rec.trial << ',' << rec.seed << ',' << name << ',' << ToString(cell.kind) << ',';
      switch (cell.kind) {
        case Cell::Kind::kNumber:
          out << Real(cell.number);
          break;
        case Cell::Kind::kFlag:
          out << (cell.number != 0 ? 1 : 0);
          break;
        case Cell::Kind::kRational:
          out << cell.exact.ToString();
          break;
      }
      out << "\n";
    }
  }
  return out.str();
}

std::vector<TrialRecord> ParseRecordsCsv(std::string_view text) {
  std::vector<TrialRecord> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool header_seen = false;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kCsvColumns) {
        throw std::invalid_argument("csv line " + std::to_string(line_no) +
                                    ": unexpected header");
      }
      header_seen = true;
      continue;
    }
    const auto f = SplitCsv(line);
    if (f.size() != 9) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected 9 fields");
    }
    const StudyKind study = ParseStudyKind(f[0]);
    const auto n = ParseField<std::size_t>(f[1], line_no, "n");
    const auto m = ParseField<std::uint64_t>(f[2], line_no, "m");
    const auto k = ParseField<int>(f[3], line_no, "k");
    const auto trial = ParseField<int>(f[4], line_no, "trial");
    const auto seed = ParseField<std::uint64_t>(f[5], line_no, "seed");
    if (out.empty() || out.back().study != study || out.back().n != n || out.back().m != m ||
        out.back().k != k || out.back().trial != trial || out.back().seed != seed) {
      TrialRecord rec;
      rec.study = study;
      rec.n = n;
      rec.m = m;
      rec.k = k;
      rec.trial = trial;
      rec.seed = seed;
      out.push_back(std::move(rec));
    }
    Cell cell;
    switch (ParseCellKind(f[7])) {
      case Cell::Kind::kNumber: {
        const std::string s(f[8]);
        char* end = nullptr;
        const double x = std::strtod(s.c_str(), &end);
        if (s.empty() || end != s.c_str() + s.size()) {
          throw std::invalid_argument("csv line " + std::to_string(line_no) + ": bad number");
        }
        cell = Cell::Number(x);
        break;
      }
      case Cell::Kind::kFlag:
        cell = Cell::Flag(ParseField<int>(f[8], line_no, "flag") != 0);
        break;
      case Cell::Kind::kRational:
        cell = Cell::Exact(Rational::Parse(f[8]));
        break;
    }
    out.back().values[std::string(f[6])] = cell;
  }
  return out;
}

std::string SummaryToCsv(const SummaryTable& table) {
  std::ostringstream out;
  const std::string_view cols =
      "study,n,m,k,trials,metric,kind,count,mean,min,max,q25,median,q75,successes,"
      "wilson_low,wilson_high";
  out << "# resil study summary, schema " << kSchemaVersion << ": " << cols << "\n";
  out << cols << "\n";
  for (const SummaryRow& row : table.rows) {
    for (const auto& [name, s] : row.metrics) {
      out << ToString(row.study) << ',' << row.n << ',' << row.m << ',' << row.k << ','
          << row.trials << ',' << name << ',' << ToString(s.kind) << ',' << s.count << ','
          << Real(s.mean) << ',' << Real(s.min) << ',' << Real(s.max) << ',' << Real(s.q25)
          << ',' << Real(s.median) << ',' << Real(s.q75) << ',';
      if (s.kind == Cell::Kind::kFlag) {
        out << s.successes << ',' << Real(s.wilson_low) << ',' << Real(s.wilson_high);
      } else {
        out << ",,";
      }
      out << "\n";
    }
  }
  return out.str();
}

void Emit(const StudyResult& result, std::string_view format,
          const std::filesystem::path& path, std::ostream& out, const EmitOptions& options) {
  std::string text;
  if (format == "json") {
    text = ResultToJsonText(result, options);
  } else if (format == "csv") {
    text = RecordsToCsv(result.records);
  } else {
    throw std::invalid_argument("unknown format '" + std::string(format) + "'");
  }
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw EmitError("cannot write " + path.string());
  file << text;
  file.close();
  if (!file) throw EmitError("error while writing " + path.string());
}

std::string UtcTimestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace resil

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

#include "resil/config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "resil/process.h"

namespace resil {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitList(std::string_view value) {
  std::vector<std::string_view> items;
  std::size_t start = 0;
  while (true) {
    const auto comma = value.find(',', start);
    items.push_back(Trim(value.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

template <typename T>
T ParseInteger(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError("'" + std::string(key) + "' expects an integer, got '" +
                      std::string(text) + "'");
  }
  return value;
}

double ParseReal(std::string_view key, std::string_view text) {
  const std::string s(text);
  char* end = nullptr;
  const double value = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(value)) {
    throw ConfigError("'" + std::string(key) + "' expects a real number, got '" + s + "'");
  }
  return value;
}

bool ParseBool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ConfigError("'" + std::string(key) + "' expects true or false");
}

std::string Real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <typename T, typename F>
std::string JoinList(const std::vector<T>& items, F format) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += format(items[i]);
  }
  return out;
}

}  // namespace

ConfigError::ConfigError(std::size_t line, const std::string& what)
    : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}

ConfigError::ConfigError(const std::string& what) : std::invalid_argument(what) {}

std::string ToString(StudyKind kind) {
  switch (kind) {
    case StudyKind::kHitting:
      return "hitting";
    case StudyKind::kSweep:
      return "sweep";
    case StudyKind::kKCore:
      return "kcore";
    case StudyKind::kAudit:
      return "audit";
  }
  return "?";
}

StudyKind ParseStudyKind(std::string_view text) {
  if (text == "hitting") return StudyKind::kHitting;
  if (text == "sweep") return StudyKind::kSweep;
  if (text == "kcore") return StudyKind::kKCore;
  if (text == "audit") return StudyKind::kAudit;
  throw ConfigError("unknown study '" + std::string(text) +
                    "' (expected hitting, sweep, kcore or audit)");
}

void SetConfigValue(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  value = Trim(value);
  if (key == "study") {
    cfg.study = ParseStudyKind(value);
  } else if (key == "n") {
    cfg.n.clear();
    if (!value.empty()) {
      for (auto item : SplitList(value)) cfg.n.push_back(ParseInteger<std::size_t>(key, item));
    }
  } else if (key == "m") {
    cfg.m.clear();
    if (!value.empty()) {
      for (auto item : SplitList(value)) {
        cfg.m.push_back(ParseInteger<std::uint64_t>(key, item));
      }
    }
  } else if (key == "m_factor") {
    cfg.m_factor.clear();
    if (!value.empty()) {
      for (auto item : SplitList(value)) cfg.m_factor.push_back(ParseReal(key, item));
    }
  } else if (key == "k") {
    cfg.k = ParseInteger<int>(key, value);
  } else if (key == "epsilon") {
    try {
      cfg.epsilon = Rational::Parse(value);
    } catch (const std::invalid_argument&) {
      throw ConfigError("'epsilon' expects a rational such as 1/10");
    }
  } else if (key == "delta") {
    cfg.delta = ParseReal(key, value);
  } else if (key == "L") {
    cfg.L = ParseInteger<int>(key, value);
  } else if (key == "c") {
    cfg.c = ParseReal(key, value);
  } else if (key == "trials") {
    cfg.trials = ParseInteger<int>(key, value);
  } else if (key == "seed") {
    cfg.seed = ParseInteger<std::uint64_t>(key, value);
  } else if (key == "p0_factor") {
    cfg.p0_factor = ParseReal(key, value);
  } else if (key == "p_prime_factor") {
    cfg.p_prime_factor = ParseReal(key, value);
  } else if (key == "subset_trials") {
    cfg.subset_trials = ParseInteger<std::uint64_t>(key, value);
  } else if (key == "exact_limit") {
    cfg.exact_limit = ParseInteger<std::size_t>(key, value);
  } else if (key == "local_search_limit") {
    cfg.local_search_limit = ParseInteger<std::size_t>(key, value);
  } else if (key == "local_search_restarts") {
    cfg.local_search_restarts = ParseInteger<int>(key, value);
  } else if (key == "threads") {
    cfg.threads = ParseInteger<unsigned>(key, value);
  } else if (key == "format") {
    if (value != "json" && value != "csv") throw ConfigError("'format' must be json or csv");
    cfg.format = std::string(value);
  } else if (key == "out") {
    cfg.out = std::string(value);
  } else if (key == "timestamp") {
    cfg.timestamp = ParseBool(key, value);
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
}

ExperimentConfig ParseConfig(std::string_view text) {
  ExperimentConfig cfg;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    std::string_view line =
        text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++line_no;
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "expected 'key = value'");
    const auto key = Trim(line.substr(0, eq));
    if (!seen.insert(std::string(key)).second) {
      throw ConfigError(line_no, "key '" + std::string(key) + "' given twice");
    }
    try {
      SetConfigValue(cfg, key, line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(line_no, e.what());
    }
  }
  return cfg;
}

ExperimentConfig LoadConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseConfig(buf.str());
}

std::string FormatConfig(const ExperimentConfig& cfg) {
  auto integer = [](auto x) { return std::to_string(x); };
  std::ostringstream out;
  out << "study = " << ToString(cfg.study) << "\n";
  out << "n = " << JoinList(cfg.n, integer) << "\n";
  out << "m = " << JoinList(cfg.m, integer) << "\n";
  out << "m_factor = " << JoinList(cfg.m_factor, Real) << "\n";
  out << "k = " << cfg.k << "\n";
  out << "epsilon = " << cfg.epsilon.ToString() << "\n";
  out << "delta = " << Real(cfg.delta) << "\n";
  out << "L = " << cfg.L << "\n";
  out << "c = " << Real(cfg.c) << "\n";
  out << "trials = " << cfg.trials << "\n";
  out << "seed = " << cfg.seed << "\n";
  out << "p0_factor = " << Real(cfg.p0_factor) << "\n";
  out << "p_prime_factor = " << Real(cfg.p_prime_factor) << "\n";
  out << "subset_trials = " << cfg.subset_trials << "\n";
  out << "exact_limit = " << cfg.exact_limit << "\n";
  out << "local_search_limit = " << cfg.local_search_limit << "\n";
  out << "local_search_restarts = " << cfg.local_search_restarts << "\n";
  out << "threads = " << cfg.threads << "\n";
  out << "format = " << cfg.format << "\n";
  out << "out = " << cfg.out << "\n";
  out << "timestamp = " << (cfg.timestamp ? "true" : "false") << "\n";
  return out.str();
}

void ApplyEnvironment(ExperimentConfig& cfg) {
  const char* env = std::getenv("RESILIENCE_SEED");
  if (env == nullptr) return;
  try {
    SetConfigValue(cfg, "seed", env);
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("RESILIENCE_SEED: ") + e.what());
  }
}

void ValidateConfig(const ExperimentConfig& cfg) {
  if (cfg.n.empty()) throw ConfigError("'n' needs at least one value");
  for (std::size_t n : cfg.n) {
    if (n < 2) throw ConfigError("every n must be at least 2");
  }
  if (cfg.m.empty() && cfg.m_factor.empty()) {
    throw ConfigError("give either 'm' or 'm_factor'");
  }
  for (double f : cfg.m_factor) {
    if (!(f > 0)) throw ConfigError("every m_factor must be positive");
  }
  if (cfg.trials < 1) throw ConfigError("'trials' must be at least 1");
  if (cfg.k < 1) throw ConfigError("'k' must be at least 1");
  if (cfg.study == StudyKind::kKCore && cfg.k < 2) {
    throw ConfigError("the kcore study needs k >= 2");
  }
  // In the audit study epsilon is the coupling slack of p' <= epsilon * p0,
  // elsewhere the star-condition slack.
  if (cfg.study == StudyKind::kAudit) {
    if (!(cfg.epsilon > Rational(0, 1) && cfg.epsilon < Rational(1, 1))) {
      throw ConfigError("'epsilon' must lie in (0, 1) for the audit study");
    }
  } else if (!(cfg.epsilon > Rational(0, 1) && cfg.epsilon < Rational(1, 2))) {
    throw ConfigError("'epsilon' must lie in (0, 1/2)");
  }
  if (!(cfg.delta > 0 && cfg.delta < 1)) throw ConfigError("'delta' must lie in (0, 1)");
  if (cfg.L < 0) throw ConfigError("'L' must be nonnegative");
  if (!(cfg.c > 0)) throw ConfigError("'c' must be positive");
  if (!(cfg.p0_factor > 0)) throw ConfigError("'p0_factor' must be positive");
  if (cfg.p_prime_factor < 0) throw ConfigError("'p_prime_factor' must be nonnegative");
  if (cfg.study == StudyKind::kAudit && cfg.p_prime_factor > cfg.epsilon.ToDouble()) {
    throw ConfigError("audit regime requires p' <= epsilon * p0 (p_prime_factor = " +
                      Real(cfg.p_prime_factor) + " > epsilon = " + cfg.epsilon.ToString() +
                      ")");
  }
  if (cfg.study == StudyKind::kAudit) {
    for (std::size_t n : cfg.n) {
      const double p0 = cfg.p0_factor * std::log(static_cast<double>(n)) / (3.0 * n);
      if (p0 > 1) throw ConfigError("p0 exceeds 1 for n = " + std::to_string(n));
    }
  }
  if (cfg.local_search_restarts < 1) {
    throw ConfigError("'local_search_restarts' must be at least 1");
  }
}

std::vector<std::uint64_t> EdgeCountsFor(const ExperimentConfig& cfg, std::size_t n) {
  const std::uint64_t total = NumPairs(n);
  std::vector<std::uint64_t> out;
  if (!cfg.m.empty()) {
    for (auto m : cfg.m) out.push_back(std::min(m, total));
  } else {
    const double unit = static_cast<double>(n) * std::log(static_cast<double>(n)) / 6.0;
    for (double f : cfg.m_factor) {
      const double m = std::ceil(f * unit);
      out.push_back(m >= static_cast<double>(total) ? total : static_cast<std::uint64_t>(m));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace resil

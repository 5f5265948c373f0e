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

#include <cmath>
#include <cstdlib>

#include <gtest/gtest.h>

#include "resil/config.h"
#include "resil/random.h"

namespace resil {
namespace {

std::size_t ErrorLine(std::string_view text) {
  try {
    ParseConfig(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return 0;
}

TEST(Config, ParsesEntriesCommentsAndLists) {
  const ExperimentConfig cfg = ParseConfig(
      "# sweep over two sizes\n"
      "study = sweep\n"
      "  n = 64, 128   # trailing comment\n"
      "m_factor = 0.5,1,2\n"
      "\n"
      "epsilon = 1/20\n"
      "trials=7\n"
      "threads = 3\n");
  EXPECT_EQ(cfg.study, StudyKind::kSweep);
  EXPECT_EQ(cfg.n, (std::vector<std::size_t>{64, 128}));
  EXPECT_EQ(cfg.m_factor, (std::vector<double>{0.5, 1, 2}));
  EXPECT_EQ(cfg.epsilon, Rational(1, 20));
  EXPECT_EQ(cfg.trials, 7);
  EXPECT_EQ(cfg.threads, 3u);
  EXPECT_EQ(cfg.k, ExperimentConfig{}.k);
}

TEST(Config, ErrorsNameTheLine) {
  EXPECT_EQ(ErrorLine("trials = 3\nbogus = 1\n"), 2u);
  EXPECT_EQ(ErrorLine("trials = 3\n\ntrials = 4\n"), 3u);
  EXPECT_EQ(ErrorLine("trials three\n"), 1u);
  EXPECT_EQ(ErrorLine("n = 10, x\n"), 1u);
  EXPECT_EQ(ErrorLine("epsilon = 0.1\n"), 1u);
  EXPECT_EQ(ErrorLine("format = xml\n"), 1u);
  EXPECT_EQ(ErrorLine("study = everything\n"), 1u);
}

TEST(Config, FormatRoundTripsLosslessly) {
  SplitMix64 rng(41);
  for (int t = 0; t < 200; ++t) {
    ExperimentConfig cfg;
    cfg.study = static_cast<StudyKind>(rng() % 4);
    cfg.n = {static_cast<std::size_t>(2 + rng() % 5000), 9};
    if (rng() % 2) cfg.m = {rng() % 100000, 17};
    cfg.m_factor = {std::ldexp(static_cast<double>(rng() >> 11), -50), 1.0 / 3};
    cfg.k = 1 + static_cast<int>(rng() % 4);
    cfg.epsilon = Rational(1 + static_cast<std::int64_t>(rng() % 9), 20);
    cfg.delta = std::ldexp(static_cast<double>(rng() >> 11), -53);
    cfg.c = 0.1 + static_cast<double>(rng() % 1000) / 7;
    cfg.trials = 1 + static_cast<int>(rng() % 1000);
    cfg.seed = rng();
    cfg.p0_factor = 1.0 / (1 + rng() % 7);
    cfg.threads = static_cast<unsigned>(rng() % 9);
    cfg.format = rng() % 2 ? "csv" : "json";
    cfg.out = rng() % 2 ? "" : "results/out.json";
    cfg.timestamp = rng() % 2;
    EXPECT_EQ(ParseConfig(FormatConfig(cfg)), cfg) << FormatConfig(cfg);
  }
}

TEST(Config, EnvironmentOverridesSeed) {
  ExperimentConfig cfg;
  cfg.seed = 5;
  ::setenv("RESILIENCE_SEED", "123456789012", 1);
  ApplyEnvironment(cfg);
  EXPECT_EQ(cfg.seed, 123456789012u);
  ::setenv("RESILIENCE_SEED", "nope", 1);
  EXPECT_THROW(ApplyEnvironment(cfg), ConfigError);
  ::unsetenv("RESILIENCE_SEED");
  ApplyEnvironment(cfg);
  EXPECT_EQ(cfg.seed, 123456789012u);
}

TEST(Config, Validation) {
  EXPECT_NO_THROW(ValidateConfig(ExperimentConfig{}));
  auto invalid = [](auto mutate) {
    ExperimentConfig cfg;
    mutate(cfg);
    EXPECT_THROW(ValidateConfig(cfg), ConfigError);
  };
  invalid([](ExperimentConfig& c) { c.trials = 0; });
  invalid([](ExperimentConfig& c) { c.delta = 1.5; });
  invalid([](ExperimentConfig& c) { c.n = {}; });
  invalid([](ExperimentConfig& c) { c.n = {1}; });
  invalid([](ExperimentConfig& c) { c.epsilon = Rational(1, 2); });
  invalid([](ExperimentConfig& c) {
    c.study = StudyKind::kKCore;
    c.k = 1;
  });
  invalid([](ExperimentConfig& c) {
    c.study = StudyKind::kAudit;
    c.p_prime_factor = 0.5;
    c.epsilon = Rational(1, 10);
  });
  invalid([](ExperimentConfig& c) {
    c.study = StudyKind::kAudit;
    c.epsilon = Rational(1, 1);
  });
  ExperimentConfig audit;
  audit.study = StudyKind::kAudit;
  audit.epsilon = Rational(1, 2);
  EXPECT_NO_THROW(ValidateConfig(audit));
}

TEST(Config, EdgeCounts) {
  ExperimentConfig cfg;
  cfg.m_factor = {1.0, 0.5, 1.0};
  const double base = 1000 * std::log(1000.0) / 6;
  EXPECT_EQ(EdgeCountsFor(cfg, 1000),
            (std::vector<std::uint64_t>{static_cast<std::uint64_t>(std::ceil(0.5 * base)),
                                        static_cast<std::uint64_t>(std::ceil(base))}));
  cfg.m = {50, 10, 10, 1000};
  EXPECT_EQ(EdgeCountsFor(cfg, 10), (std::vector<std::uint64_t>{10, 45}));
}

}  // namespace
}  // namespace resil

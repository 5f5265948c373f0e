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
#include <cstdint>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "oracles.h"
#include "resil/process.h"
#include "resil/random.h"

namespace resil {
namespace {

// Edge set of a 4-vertex graph as a 6-bit code.
unsigned Code4(const Graph& g) {
  unsigned code = 0;
  for (const Edge& e : g.edges()) code |= 1u << PairIndex(4, e.u, e.v);
  return code;
}

double Sigma(double trials, double p) { return std::sqrt(trials * p * (1 - p)); }

TEST(Random, DerivedStreamsDiffer) {
  EXPECT_NE(DeriveSeed(1, 0), DeriveSeed(1, 1));
  EXPECT_NE(DeriveSeed(1, 0), DeriveSeed(2, 0));
  EXPECT_EQ(DeriveSeed(5, 9), DeriveSeed(5, 9));
}

TEST(Random, SplitMix64ReferenceOutputs) {
  // First outputs for seed 1234567 of the published SplitMix64 generator.
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng(), 6457827717110365317ull);
  EXPECT_EQ(rng(), 3203168211198807973ull);
  EXPECT_EQ(rng(), 9817491932198370423ull);
}

TEST(Pairs, IndexRoundTrip) {
  for (std::uint64_t n : {2u, 3u, 7u, 50u}) {
    for (std::uint64_t i = 0; i < NumPairs(n); ++i) {
      const Edge e = PairFromIndex(n, i);
      EXPECT_LT(e.u, e.v);
      EXPECT_EQ(PairIndex(n, e.u, e.v), i);
    }
  }
}

TEST(Process, SinglePair) {
  const auto order = ProcessOrder(SampleProcess(2, 99));
  ASSERT_EQ(order.size(), 1u);
  EXPECT_EQ(order[0], (Edge{0, 1}));
}

TEST(Process, DeterministicPermutation) {
  for (std::size_t n : {4u, 9u, 40u}) {
    const auto a = ProcessOrder(SampleProcess(n, 31));
    EXPECT_EQ(a, ProcessOrder(SampleProcess(n, 31)));
    std::set<Edge> distinct(a.begin(), a.end());
    EXPECT_EQ(distinct.size(), NumPairs(n));
    EXPECT_EQ(a.size(), NumPairs(n));
  }
}

TEST(Process, StreamMatchesPrefix) {
  const ProcessTrace t = SampleProcess(30, 5);
  const auto prefix = ProcessPrefix(t, 100);
  EdgeStream s(t);
  for (const Edge& e : prefix) EXPECT_EQ(s.Next(), e);
  EXPECT_EQ(s.position(), 100u);
}

TEST(Process, FirstPairIsUniform) {
  constexpr int kSeeds = 100000;
  std::map<Edge, int> first;
  for (int s = 0; s < kSeeds; ++s) {
    EdgeStream stream(SampleProcess(4, DeriveSeed(777, s)));
    ++first[stream.Next()];
  }
  ASSERT_EQ(first.size(), 6u);
  const double sigma = Sigma(kSeeds, 1.0 / 6);
  for (const auto& [edge, count] : first) {
    EXPECT_NEAR(count, kSeeds / 6.0, 3 * sigma) << edge.u << "-" << edge.v;
  }
}

TEST(Process, GraphAtEndpointsAndNesting) {
  const ProcessTrace t = SampleProcess(9, 8);
  EXPECT_EQ(GraphAt(t, 0).m(), 0u);
  EXPECT_EQ(GraphAt(t, NumPairs(9)), testing::Complete(9));
  Graph prev = GraphAt(t, 0);
  for (std::uint64_t m = 1; m <= NumPairs(9); ++m) {
    const Graph next = GraphAt(t, m);
    EXPECT_TRUE(IsSubgraph(prev, next));
    EXPECT_EQ(next.m(), m);
    prev = next;
  }
}

// Seed whose 3-vertex trace is {0,1}, {0,2}, {1,2}.
std::uint64_t CanonicalTriangleSeed() {
  const std::vector<Edge> want = {{0, 1}, {0, 2}, {1, 2}};
  for (std::uint64_t s = 0;; ++s) {
    if (ProcessOrder(SampleProcess(3, s)) == want) return s;
  }
}

TEST(HittingTimes, TriangleExamples) {
  const ProcessTrace t = SampleProcess(3, CanonicalTriangleSeed());
  EXPECT_EQ(HittingTimeMinDegree(t, 1), 2u);
  EXPECT_EQ(HittingTimeMinDegree(t, 2), 3u);
  EXPECT_EQ(HittingTimeKConnectivity(t, 1), 2u);
  EXPECT_EQ(HittingTimeKConnectivity(t, 2), 3u);
}

TEST(HittingTimes, MinDegreeMatchesRecomputation) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const std::size_t n = 2 + s % 25;
    const ProcessTrace t = SampleProcess(n, s);
    for (int k = 1; k <= 3 && static_cast<std::size_t>(k) < n; ++k) {
      std::uint64_t expect = 0;
      while (GraphAt(t, expect).MinDegree() < static_cast<std::size_t>(k)) ++expect;
      EXPECT_EQ(HittingTimeMinDegree(t, k), expect) << "n=" << n << " k=" << k;
    }
  }
}

TEST(HittingTimes, KConnectivityMatchesLinearScan) {
  for (std::uint64_t s = 0; s < 80; ++s) {
    const std::size_t n = 3 + s % 6;
    const ProcessTrace t = SampleProcess(n, 1000 + s);
    for (int k = 1; k <= 3 && static_cast<std::size_t>(k) < n; ++k) {
      std::uint64_t expect = 0;
      while (!oracle::IsKConnected(GraphAt(t, expect), k)) ++expect;
      EXPECT_EQ(HittingTimeKConnectivity(t, k), expect) << "n=" << n << " k=" << k;
    }
  }
}

TEST(HittingTimes, OrderedAcrossPropertiesAndK) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const ProcessTrace t = SampleProcess(60, s);
    std::uint64_t prev = 0;
    for (int k = 1; k <= 3; ++k) {
      const auto tk = HittingTimeMinDegree(t, k);
      EXPECT_LE(tk, HittingTimeKConnectivity(t, k));
      EXPECT_GE(tk, prev);
      prev = tk;
    }
  }
}

// k-connectivity persists once reached: the property is monotone under edge
// addition, which is what licenses the bisection in the hitting-time search.
TEST(HittingTimes, KConnectivityIsMonotoneAlongTrace) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const ProcessTrace t = SampleProcess(8, 50 + s);
    for (int k = 1; k <= 3; ++k) {
      bool seen = false;
      for (std::uint64_t m = 0; m <= NumPairs(8); ++m) {
        const bool now = oracle::IsKConnected(GraphAt(t, m), k);
        if (seen) EXPECT_TRUE(now);
        seen = seen || now;
      }
    }
  }
}

TEST(Gnm, Examples) {
  EXPECT_EQ(SampleGnm(4, 6, 3), testing::Complete(4));
  EXPECT_EQ(SampleGnm(4, 0, 3).m(), 0u);
  EXPECT_EQ(SampleGnm(40, 100, 3), SampleGnm(40, 100, 3));
  EXPECT_EQ(SampleGnm(40, 100, 3).m(), 100u);
}

TEST(Gnm, ThreeEdgeGraphsUniform) {
  constexpr int kSeeds = 60000;
  std::map<unsigned, int> freq;
  for (int s = 0; s < kSeeds; ++s) ++freq[Code4(SampleGnm(4, 3, DeriveSeed(4, s)))];
  ASSERT_EQ(freq.size(), 20u);
  const double sigma = Sigma(kSeeds, 1.0 / 20);
  for (const auto& [code, count] : freq) EXPECT_NEAR(count, kSeeds / 20.0, 3 * sigma) << code;
}

// Two-sample chi-square homogeneity test, df = 19, critical value at 0.001.
TEST(Gnm, ProcessPrefixHasSameDistribution) {
  constexpr int kSeeds = 100000;
  std::map<unsigned, std::pair<double, double>> freq;
  for (int s = 0; s < kSeeds; ++s) {
    ++freq[Code4(GraphAt(SampleProcess(4, DeriveSeed(10, s)), 3))].first;
    ++freq[Code4(SampleGnm(4, 3, DeriveSeed(11, s)))].second;
  }
  ASSERT_EQ(freq.size(), 20u);
  double chi2 = 0;
  for (const auto& [code, ab] : freq) {
    const double d = ab.first - ab.second;
    chi2 += d * d / (ab.first + ab.second);
  }
  EXPECT_LT(chi2, 43.82);
}

TEST(Gnp, Examples) {
  EXPECT_EQ(SampleGnp(30, 0.0, 1).m(), 0u);
  EXPECT_EQ(SampleGnp(30, 1.0, 1), testing::Complete(30));
  EXPECT_EQ(SampleGnp(100, 0.1, 7), SampleGnp(100, 0.1, 7));
}

TEST(Gnp, MeanEdgeCountMatchesBinomial) {
  constexpr int kSeeds = 10000;
  double sum = 0;
  for (int s = 0; s < kSeeds; ++s) sum += static_cast<double>(SampleGnp(100, 0.1, DeriveSeed(12, s)).m());
  const double sd_of_mean = std::sqrt(4950 * 0.1 * 0.9 / kSeeds);
  EXPECT_NEAR(sum / kSeeds, 495.0, 3 * sd_of_mean);
}

TEST(Coupled, Examples) {
  const CoupledSample same = SampleCoupled(40, 0.2, 0.0, 5);
  EXPECT_EQ(same.g_plus, same.g_minus);
  EXPECT_DOUBLE_EQ(same.p1, 0.2);

  const CoupledSample fresh = SampleCoupled(40, 0.0, 0.3, 5);
  EXPECT_EQ(fresh.g_minus.m(), 0u);
  EXPECT_GT(fresh.g_plus.m(), 0u);
}

TEST(Coupled, NestedWithExactP1) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const CoupledSample c = SampleCoupled(60, 0.1, 0.05, s);
    EXPECT_TRUE(IsSubgraph(c.g_minus, c.g_plus));
    EXPECT_EQ(c.p1, 1 - (1 - 0.1) * (1 - 0.05));
  }
}

TEST(Coupled, EdgeFrequencyOfUnion) {
  constexpr int kSeeds = 10000;
  double edges = 0;
  for (int s = 0; s < kSeeds; ++s) edges += static_cast<double>(SampleCoupled(50, 0.2, 0.1, DeriveSeed(13, s)).g_plus.m());
  const double draws = 1225.0 * kSeeds;
  EXPECT_NEAR(edges / draws, 0.28, 3 * std::sqrt(0.28 * 0.72 / draws));
}

}  // namespace
}  // namespace resil

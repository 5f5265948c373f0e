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

// Samplers for the random graph process, G(n,m), G(n,p) and coupled pairs
// G- ⊆ G+, plus hitting times along a process trace.
//
// A trace is stored implicitly as (n, seed). Its edge order is the output of a
// Fisher-Yates shuffle of the N = n(n-1)/2 pair indices, where step i swaps
// position i with i + UniformBelow(N - i). EdgeStream runs that shuffle lazily
// with a sparse map of displaced slots, so reading the first m edges costs
// O(m) time and memory however large N is.

#ifndef RESIL_PROCESS_H_
#define RESIL_PROCESS_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "resil/graph.h"
#include "resil/random.h"

namespace resil {

inline constexpr std::string_view kTraceGenerator = "splitmix64-fisher-yates/1";

constexpr std::uint64_t NumPairs(std::uint64_t n) {
  return n < 2 ? 0 : n * (n - 1) / 2;
}

// Lexicographic rank of the pair {u, v} among all pairs with u < v.
std::uint64_t PairIndex(std::uint64_t n, Vertex u, Vertex v);
Edge PairFromIndex(std::uint64_t n, std::uint64_t index);

struct ProcessTrace {
  std::size_t n = 0;
  std::uint64_t seed = 0;

  std::uint64_t num_pairs() const { return NumPairs(n); }
};

ProcessTrace SampleProcess(std::size_t n, std::uint64_t seed);

// Streams the edge arrival order of a trace.
class EdgeStream {
 public:
  explicit EdgeStream(const ProcessTrace& trace);

  bool done() const { return position_ >= total_; }
  std::uint64_t position() const { return position_; }
  Edge Next();

 private:
  std::uint64_t Slot(std::uint64_t i) const;

  std::uint64_t n_;
  std::uint64_t total_;
  std::uint64_t position_ = 0;
  SplitMix64 rng_;
  std::unordered_map<std::uint64_t, std::uint64_t> displaced_;
};

// First m arrivals (all N when m is omitted).
std::vector<Edge> ProcessOrder(const ProcessTrace& trace);
std::vector<Edge> ProcessPrefix(const ProcessTrace& trace, std::uint64_t m);

// G_m. Throws std::invalid_argument if m > N.
Graph GraphAt(const ProcessTrace& trace, std::uint64_t m);

// Smallest m with minimum degree >= k, in one streaming pass.
std::uint64_t HittingTimeMinDegree(const ProcessTrace& trace, int k);

// Smallest m with G_m k-connected. k = 1 streams with union-find; k >= 2
// gallops then bisects from the min-degree hitting time, relying on
// k-connectivity being monotone along the process.
std::uint64_t HittingTimeKConnectivity(const ProcessTrace& trace, int k);

// Uniform m-subset: the first m arrivals of SampleProcess(n, seed).
Graph SampleGnm(std::size_t n, std::uint64_t m, std::uint64_t seed);

// Independent Bernoulli(p) per pair via geometric skipping over pair ranks.
Graph SampleGnp(std::size_t n, double p, std::uint64_t seed);

struct CoupledSample {
  Graph g_minus;
  Graph g_plus;
  double p0 = 0;
  double p_prime = 0;
  double p1 = 0;
};

// g_minus ~ G(n,p0) on stream 0 of seed, g_plus = g_minus ∪ G(n,p') with the
// extra graph on stream 1; p1 = 1 - (1-p0)(1-p').
CoupledSample SampleCoupled(std::size_t n, double p0, double p_prime,
                            std::uint64_t seed);

}  // namespace resil

#endif  // RESIL_PROCESS_H_

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

#include "resil/process.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "resil/union_find.h"

namespace resil {
namespace {

// Rank of the first pair in row u: sum_{i<u} (n-1-i).
std::uint64_t RowStart(std::uint64_t n, std::uint64_t u) {
  return u * (2 * n - u - 1) / 2;
}

void CheckProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

std::uint64_t PairIndex(std::uint64_t n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return RowStart(n, u) + (v - u - 1);
}

Edge PairFromIndex(std::uint64_t n, std::uint64_t index) {
  // Invert RowStart with a floating estimate, then correct by stepping.
  const double nn = static_cast<double>(n);
  const double disc = (2 * nn - 1) * (2 * nn - 1) - 8.0 * static_cast<double>(index);
  auto u = static_cast<std::uint64_t>(
      std::max(0.0, std::floor(((2 * nn - 1) - std::sqrt(std::max(0.0, disc))) / 2)));
  if (u > n - 2) u = n - 2;
  while (u > 0 && RowStart(n, u) > index) --u;
  while (u + 1 < n - 1 && RowStart(n, u + 1) <= index) ++u;
  const std::uint64_t v = u + 1 + (index - RowStart(n, u));
  return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

ProcessTrace SampleProcess(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("a process needs n >= 2");
  return ProcessTrace{n, seed};
}

EdgeStream::EdgeStream(const ProcessTrace& trace)
    : n_(trace.n), total_(trace.num_pairs()), rng_(trace.seed) {}

std::uint64_t EdgeStream::Slot(std::uint64_t i) const {
  auto it = displaced_.find(i);
  return it == displaced_.end() ? i : it->second;
}

Edge EdgeStream::Next() {
  if (done()) throw std::out_of_range("edge stream exhausted");
  const std::uint64_t i = position_++;
  const std::uint64_t j = i + rng_.UniformBelow(total_ - i);
  const std::uint64_t chosen = Slot(j);
  if (j != i) displaced_[j] = Slot(i);
  displaced_.erase(i);
  return PairFromIndex(n_, chosen);
}

std::vector<Edge> ProcessPrefix(const ProcessTrace& trace, std::uint64_t m) {
  if (m > trace.num_pairs()) {
    throw std::invalid_argument("m = " + std::to_string(m) + " exceeds N = " +
                                std::to_string(trace.num_pairs()));
  }
  std::vector<Edge> out;
  out.reserve(m);
  EdgeStream stream(trace);
  for (std::uint64_t i = 0; i < m; ++i) out.push_back(stream.Next());
  return out;
}

std::vector<Edge> ProcessOrder(const ProcessTrace& trace) {
  return ProcessPrefix(trace, trace.num_pairs());
}

Graph GraphAt(const ProcessTrace& trace, std::uint64_t m) {
  return Graph(trace.n, ProcessPrefix(trace, m));
}

std::uint64_t HittingTimeMinDegree(const ProcessTrace& trace, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > trace.n - 1) {
    throw std::invalid_argument("min-degree hitting time needs 1 <= k <= n-1");
  }
  std::vector<int> deg(trace.n, 0);
  std::size_t deficient = trace.n;
  EdgeStream stream(trace);
  while (deficient > 0) {
    const Edge e = stream.Next();
    if (++deg[e.u] == k) --deficient;
    if (++deg[e.v] == k) --deficient;
  }
  return stream.position();
}

std::uint64_t HittingTimeKConnectivity(const ProcessTrace& trace, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > trace.n - 1) {
    throw std::invalid_argument("k-connectivity hitting time needs 1 <= k <= n-1");
  }
  if (k == 1) {
    DisjointSets sets(trace.n);
    EdgeStream stream(trace);
    while (sets.num_sets() > 1) {
      const Edge e = stream.Next();
      sets.Unite(e.u, e.v);
    }
    return stream.position();
  }

  const std::uint64_t total = trace.num_pairs();
  EdgeStream stream(trace);
  std::vector<Edge> prefix;
  auto connected_at = [&](std::uint64_t m) {
    while (prefix.size() < m) prefix.push_back(stream.Next());
    return IsKConnected(Graph(trace.n, std::span(prefix.data(), m)), k);
  };

  // Invariant: G_lo is not k-connected (or lo is the first candidate), G_hi is.
  std::uint64_t lo = HittingTimeMinDegree(trace, k);
  if (connected_at(lo)) return lo;
  std::uint64_t step = 1;
  std::uint64_t hi = lo;
  while (true) {
    hi = std::min(total, lo + step);
    if (connected_at(hi)) break;
    lo = hi;
    step *= 2;
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (connected_at(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

Graph SampleGnm(std::size_t n, std::uint64_t m, std::uint64_t seed) {
  if (m > NumPairs(n)) {
    throw std::invalid_argument("m = " + std::to_string(m) + " exceeds N = " +
                                std::to_string(NumPairs(n)));
  }
  if (n < 2) return Graph(n, {});
  return GraphAt(SampleProcess(n, seed), m);
}

Graph SampleGnp(std::size_t n, double p, std::uint64_t seed) {
  CheckProbability(p, "p");
  const std::uint64_t total = NumPairs(n);
  std::vector<Edge> edges;
  if (p == 0.0 || total == 0) return Graph(n, edges);
  if (p == 1.0) {
    edges.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) edges.push_back(PairFromIndex(n, i));
    return Graph(n, edges);
  }
  SplitMix64 rng(seed);
  const double log_q = std::log1p(-p);
  // Gap before the next present pair is Geometric(p) on {0, 1, ...}.
  std::uint64_t index = 0;
  while (true) {
    const double u = rng.UniformDouble();
    const double skip = std::floor(std::log1p(-u) / log_q);
    if (skip >= static_cast<double>(total - index)) break;
    index += static_cast<std::uint64_t>(skip);
    edges.push_back(PairFromIndex(n, index));
    if (++index >= total) break;
  }
  return Graph(n, edges);
}

CoupledSample SampleCoupled(std::size_t n, double p0, double p_prime,
                            std::uint64_t seed) {
  CheckProbability(p0, "p0");
  CheckProbability(p_prime, "p_prime");
  CoupledSample out;
  out.p0 = p0;
  out.p_prime = p_prime;
  out.p1 = 1.0 - (1.0 - p0) * (1.0 - p_prime);
  out.g_minus = SampleGnp(n, p0, DeriveSeed(seed, 0));
  out.g_plus = Union(out.g_minus, SampleGnp(n, p_prime, DeriveSeed(seed, 1)));
  return out;
}

}  // namespace resil

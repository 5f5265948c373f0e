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

#ifndef RESIL_TESTS_FIXTURES_H_
#define RESIL_TESTS_FIXTURES_H_

#include <cstdint>
#include <vector>

#include "resil/graph.h"
#include "resil/random.h"

namespace resil::testing {

inline Graph Cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.push_back(Edge::Of(v, static_cast<Vertex>((v + 1) % n)));
  return Graph(n, e);
}

inline Graph Complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  }
  return Graph(n, e);
}

inline Graph Path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph(n, e);
}

// Centre 0, leaves 1..leaves.
inline Graph Star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Graph(leaves + 1, e);
}

// a=0, b=1 hang off c=2; c attaches to d=3, which sits on the triangle d, e=4, f=5.
inline Graph CherryGadget() {
  const std::vector<Edge> e = {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}};
  return Graph(6, e);
}

// Independent coin flips with probability p, one draw per pair in
// lexicographic order.
inline Graph CoinGraph(std::size_t n, double p, SplitMix64& rng) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) e.push_back({u, v});
    }
  }
  return Graph(n, e);
}

// Rejection-samples a connected coin graph.
inline Graph RandomConnected(std::size_t n, double p, SplitMix64& rng) {
  for (;;) {
    Graph g = CoinGraph(n, p, rng);
    if (IsConnected(g)) return g;
  }
}

}  // namespace resil::testing

#endif  // RESIL_TESTS_FIXTURES_H_

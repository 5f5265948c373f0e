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

// Degree-based vertex classes and audits of the local structure around them.
//
// With reference graph G on n vertices, edge probability p and 0 < delta < 1:
//   tiny = { v : deg(v) < delta * n * p }
//   atyp = { v : deg(v) outside [(1-delta) n p, (1+delta) n p] }
// Logarithms are natural throughout.

#ifndef RESIL_CLASSIFY_H_
#define RESIL_CLASSIFY_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resil/graph.h"

namespace resil {

struct VertexClassification {
  std::string reference;  // free-form id of the degree source, e.g. "g_minus"
  double p = 0;
  double delta = 0;
  VertexSet tiny;
  VertexSet atyp;

  std::size_t universe() const { return tiny.universe(); }
};

struct TailBounds {
  double upper = 0;  // P[X >= (1+delta) mu] <= exp(-delta^2 mu / 3)
  double lower = 0;  // P[X <= (1-delta) mu] <= exp(-delta^2 mu / 2)
};

// Chernoff bounds for X ~ Bin(n, p), mu = np.
TailBounds ChernoffTailBounds(std::uint64_t n, double p, double delta);

VertexClassification ClassifyVertices(
    const Graph& reference, double p, double delta,
    const std::optional<VertexSet>& restrict_to = std::nullopt,
    std::string reference_id = "");

// Re-expresses a classification of a parent graph in a subgraph's labels.
VertexClassification RestrictToSubgraph(const VertexClassification& cls,
                                        const Subgraph& sub);

// One failing instance. Layout of `vertices` per property:
//   tiny_ball3       [centre, tiny vertices within distance 3 ...]
//   atyp_neighbours  [centre, atypical neighbours ...]
//   tiny_triangle    [a, b, c] with a < b < c
//   atyp_size        atypical vertices, ascending
//   edge_density     the subset X, ascending
struct Witness {
  std::vector<Vertex> vertices;
  double measured = 0;
  double bound = 0;
};

struct AuditReport {
  std::string property;
  bool holds = true;
  double max_observed = 0;
  double bound = 0;
  std::vector<Witness> violations;  // sorted by first vertex
  std::map<std::string, double> params;
};

namespace audit {
inline constexpr const char* kTinyBall = "tiny_ball3";
inline constexpr const char* kAtypNeighbours = "atyp_neighbours";
inline constexpr const char* kTinyTriangle = "tiny_triangle";
inline constexpr const char* kAtypSize = "atyp_size";
inline constexpr const char* kEdgeDensity = "edge_density";
}  // namespace audit

// |atyp| <= n / log n with n the classification universe. Throws for n <= 1.
AuditReport AuditAtypSize(const VertexClassification& cls);

// Three reports over g_plus:
//   [0] every v has at most 2 tiny vertices within distance 3
//   [1] every v has at most L atypical neighbours
//   [2] every triangle holds at most one tiny vertex
// max_observed carries the worst value seen, so [1].max_observed is the
// smallest L that would have passed.
std::array<AuditReport, 3> AuditNeighbourhoods(const Graph& g_plus,
                                               const VertexClassification& cls,
                                               int L);

// Two-sided edge count bound
//   |e(X) - C(|X|,2) p| <= c |X| sqrt(n p)
// checked on every subset of size <= 4 (connected ones suffice for the upper
// side; the lower side is trivially true for such small sets unless the
// subtracted term is below C(|X|,2) p, in which case all subsets are scanned
// when n <= 64), on `subset_trials` random subsets, and on the structured
// sets V, each component and closed neighbourhoods of the top-degree
// vertices. Sound but incomplete: a pass is evidence, not proof.
// max_observed is the largest |e(X) - C(|X|,2)p| / (|X| sqrt(np)) seen.
AuditReport AuditEdgeCounts(const Graph& g, double p, double c,
                            std::uint64_t subset_trials, std::uint64_t seed);

// Replays report.violations[index] from scratch against g (and cls for the
// degree-class properties) using the parameters echoed in report.params.
// True iff the witness is a genuine violation.
bool RecheckWitness(const AuditReport& report, std::size_t index,
                    const Graph& g, const VertexClassification* cls);

}  // namespace resil

#endif  // RESIL_CLASSIFY_H_

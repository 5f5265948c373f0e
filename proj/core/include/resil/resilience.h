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

// Edge-removal budgets, exact resilience decisions and attacks.
//
// An adversary removes a spanning subgraph H of G subject to a per-vertex
// budget on deg_H(v). Every budget here is monotone (shrinking H keeps it
// admissible), so G loses connectivity under some admissible H iff some
// bipartition (A, B) has an admissible crossing edge set E_G(A, B). The same
// holds for k-connectivity with a separator S of at most k-1 vertices taken
// out first. The exact searches below enumerate those cuts.

#ifndef RESIL_RESILIENCE_H_
#define RESIL_RESILIENCE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "resil/classify.h"
#include "resil/graph.h"
#include "resil/rational.h"

namespace resil {

// deg_H(v) <= alpha * deg_G(v).
struct FractionBudget {
  Rational alpha;
};

// deg_H(v) <= alpha * deg_G(v) and deg_G(v) - deg_H(v) >= k.
struct KeepDegreeBudget {
  Rational alpha;
  int k = 1;
};

// deg_H(v) <= deg_G(v) - keep_tiny   for tiny v,
//             deg_G(v) - keep_atyp   for atypical, non-tiny v,
//             alpha * deg_G(v)       otherwise.
// Classes come from the classification passed alongside the rule; the deltas
// and p are kept so PiecewiseClassification can rebuild it from G.
struct PiecewiseBudget {
  Rational alpha;
  double delta_tiny = 0;
  int keep_tiny = 1;
  double delta_atyp = 0;
  int keep_atyp = 1;
  double p = 0;
};

using BudgetRule = std::variant<FractionBudget, KeepDegreeBudget, PiecewiseBudget>;

class BudgetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string Describe(const BudgetRule& rule);

// Tiny vertices from delta_tiny and atypical ones from delta_atyp, both
// measured in g with the rule's p.
VertexClassification PiecewiseClassification(const Graph& g,
                                             const PiecewiseBudget& rule);

// Largest admissible deg_H(v) per vertex. Negative entries mean that not even
// H = ∅ is admissible at that vertex (e.g. deg_G(v) < k under
// KeepDegreeBudget). Piecewise rules need `cls`.
std::vector<std::int64_t> VertexBudgets(const Graph& g, const BudgetRule& rule,
                                        const VertexClassification* cls = nullptr);

// h must be a subset of g's edges (throws otherwise).
bool BudgetAllows(const Graph& g, std::span<const Edge> h,
                  const BudgetRule& rule,
                  const VertexClassification* cls = nullptr);

// Separator S plus a bipartition (A, B) of V \ S.
struct Cut {
  VertexSet separator;
  VertexSet side_a;
  VertexSet side_b;

  // S = ∅, B = `side_b`, A = the rest.
  static Cut Bipartition(std::size_t n, std::span<const Vertex> side_b);

  // Throws std::invalid_argument unless A, B are nonempty, S, A, B are
  // pairwise disjoint and cover 0..n-1.
  void Validate(std::size_t n) const;

  friend bool operator==(const Cut&, const Cut&) = default;
};

// E_G(A, B): edges with one end in A and the other in B.
std::vector<Edge> CrossingEdges(const Graph& g, const Cut& cut);

// deg_{G[A,B]}(v) / deg_G(v) per vertex (0/1 when deg_G(v) = 0).
std::vector<Rational> CutRatios(const Graph& g, const Cut& cut);

struct AttackOutcome {
  Cut cut;
  std::vector<Edge> h_edges;
  std::vector<Rational> ratios;
  Rational max_ratio;
  bool satisfied = false;
};

AttackOutcome MakeOutcome(const Graph& g, Cut cut, bool satisfied);

enum class ThresholdMethod { kExact, kLocalSearchUpperBound };

struct ResilienceReport {
  Rational alpha_star;
  Cut witness;
  ThresholdMethod method = ThresholdMethod::kExact;
};

std::string ToString(ThresholdMethod method);

// Size caps for the enumerations. Configuration, not constants.
struct ExactLimits {
  std::size_t max_bipartition_n = 24;
  std::size_t max_separator_n = 16;
  unsigned threads = 1;
};

struct LocalSearchOptions {
  int restarts = 32;
  std::uint64_t seed = 0;
  // Hill-climbing steps per restart, as a multiple of n.
  int step_factor = 50;
};

class ExactLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bipartition (S = ∅) whose crossing edges the rule admits, or nullopt when
// none exists. Among certificates the one with the smallest code is returned,
// where the code of a cut is the bitmask of B over vertices 1..n-1 (vertex 0
// is always in A). Throws for disconnected g or n above the limit.
std::optional<Cut> FindDisconnectingAttack(const Graph& g, const BudgetRule& rule,
                                           const VertexClassification* cls = nullptr,
                                           const ExactLimits& limits = {});

// alpha* = min over bipartitions of max_v deg_{G[A,B]}(v) / deg_G(v). g is
// Fraction(alpha)-resilient with respect to connectivity iff alpha < alpha*.
ResilienceReport ExactResilienceThreshold(const Graph& g,
                                          const ExactLimits& limits = {});

// Upper bound on alpha* by seeded hill climbing with restarts.
ResilienceReport LocalSearchResilienceThreshold(const Graph& g,
                                                const LocalSearchOptions& options);

// (S, A, B) with |S| <= k-1 whose crossing edges the rule admits, so that
// G - H - S is disconnected; nullopt when none exists. Separators are tried
// by size, then lexicographically; bipartitions of V \ S by code as above,
// relative to the smallest vertex of V \ S. Throws unless g is k-connected.
std::optional<Cut> FindKConnAttack(const Graph& g, const BudgetRule& rule, int k,
                                   const VertexClassification* cls = nullptr,
                                   const ExactLimits& limits = {});

// A degree-3 vertex c with exactly two degree-1 neighbours; returns its third
// edge {c, d}. Smallest c wins.
std::optional<Edge> CherryAttack(const Graph& g);

// Every vertex satisfies deg_{G[A,B]}(v) <= (1/2 + epsilon) deg_G(v).
bool VerifyStarCondition(const Graph& g, const Cut& cut, const Rational& epsilon);

class GreedyAttackError : public std::runtime_error {
 public:
  GreedyAttackError(const std::string& what, Cut partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const Cut& partial_cut() const { return partial_; }

 private:
  Cut partial_;
};

struct GreedyAttackStats {
  std::size_t d_set_size = 0;
  std::size_t max_d_neighbours = 0;  // max_v |N(v) ∩ D|
  std::size_t rearrangements = 0;
};

// Partition construction against a typical random graph:
//  1. random equipartition A'/B' (seeded);
//  2. D = vertices whose crossing degree exceeds d_threshold;
//  3. start from A'/B' minus (atyp ∪ D);
//  4. insert (atyp ∪ D) \ tiny, then the tiny ones, in ascending order, each
//     to A if it has at least as many neighbours already in A as in B, else B;
//  5. while some tiny v has crossing degree > deg(v)/2, move the smallest
//     such v to the other side (at most n moves, else GreedyAttackError);
//  6. satisfied = VerifyStarCondition(g, cut, epsilon).
// cls must be over g's vertices (see RestrictToSubgraph).
AttackOutcome GreedyPartitionAttack(const Graph& g, const VertexClassification& cls,
                                    double d_threshold, const Rational& epsilon,
                                    std::uint64_t seed,
                                    GreedyAttackStats* stats = nullptr);

struct Certification {
  bool certified = false;
  std::string reason;
};

// Replays a cut end to end: H = E_G(A, B) must be admitted by the rule, |S|
// must be at most k-1 and (G - H) - S must be disconnected.
Certification CertifyAttack(const Graph& g, const Cut& cut, const BudgetRule& rule,
                            int k = 1, const VertexClassification* cls = nullptr);

}  // namespace resil

#endif  // RESIL_RESILIENCE_H_

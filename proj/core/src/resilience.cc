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

#include "resil/resilience.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "resil/parallel.h"
#include "resil/random.h"

namespace resil {
namespace {

using Mask = std::uint64_t;

std::vector<Mask> AdjacencyMasks(const Graph& g) {
  std::vector<Mask> adj(g.n(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

VertexSet SetOf(std::size_t n, Mask m) {
  VertexSet s(n);
  while (m != 0) {
    s.insert(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return s;
}

// Spreads the low bits of `code` over the set bits of `positions`.
Mask Deposit(Mask code, Mask positions) {
  Mask out = 0;
  while (positions != 0 && code != 0) {
    const Mask low = positions & -positions;
    if (code & 1) out |= low;
    code >>= 1;
    positions &= positions - 1;
  }
  return out;
}

// Splits [begin, end) into chunks and returns the smallest code for which
// `test` holds, scanning each chunk in ascending order.
template <typename Test>
std::optional<Mask> FirstCode(Mask begin, Mask end, unsigned threads, Test test) {
  if (begin >= end) return std::nullopt;
  threads = ResolveThreads(threads);
  const Mask span = end - begin;
  const std::size_t chunks =
      threads <= 1 ? 1 : static_cast<std::size_t>(std::min<Mask>(span, threads * 8));
  std::vector<std::optional<Mask>> found(chunks);
  std::atomic<Mask> best{std::numeric_limits<Mask>::max()};
  ParallelFor(chunks, threads, [&](std::size_t c) {
    const Mask lo = begin + span * c / chunks;
    const Mask hi = begin + span * (c + 1) / chunks;
    for (Mask code = lo; code < hi; ++code) {
      if (code > best.load(std::memory_order_relaxed)) return;
      if (test(code)) {
        found[c] = code;
        Mask cur = best.load();
        while (code < cur && !best.compare_exchange_weak(cur, code)) {
        }
        return;
      }
    }
  });
  for (const auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

void CheckExactSize(const Graph& g, std::size_t limit, const char* what) {
  if (g.n() > limit || g.n() > 63) {
    throw ExactLimitError(std::string(what) + ": n = " + std::to_string(g.n()) +
                          " exceeds the exact-mode cap of " +
                          std::to_string(std::min<std::size_t>(limit, 63)) +
                          "; use the local-search threshold or the greedy attack");
  }
}

std::size_t CrossingDegree(const Graph& g, const Cut& cut, Vertex v) {
  const VertexSet* other = nullptr;
  if (cut.side_a.contains(v)) {
    other = &cut.side_b;
  } else if (cut.side_b.contains(v)) {
    other = &cut.side_a;
  } else {
    return 0;
  }
  std::size_t d = 0;
  for (Vertex w : g.neighbours(v)) d += other->contains(w) ? 1 : 0;
  return d;
}

}  // namespace

std::string Describe(const BudgetRule& rule) {
  return std::visit(
      [](const auto& r) -> std::string {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, FractionBudget>) {
          return "fraction(" + r.alpha.ToString() + ")";
        } else if constexpr (std::is_same_v<T, KeepDegreeBudget>) {
          return "keep-degree(" + r.alpha.ToString() + ", k=" + std::to_string(r.k) + ")";
        } else {
          return "piecewise(" + r.alpha.ToString() + ", K_t=" +
                 std::to_string(r.keep_tiny) + ", K_a=" + std::to_string(r.keep_atyp) + ")";
        }
      },
      rule);
}

VertexClassification PiecewiseClassification(const Graph& g,
                                             const PiecewiseBudget& rule) {
  VertexClassification tiny = ClassifyVertices(g, rule.p, rule.delta_tiny);
  VertexClassification atyp = ClassifyVertices(g, rule.p, rule.delta_atyp);
  tiny.atyp = atyp.atyp;
  tiny.reference = "piecewise";
  return tiny;
}

std::vector<std::int64_t> VertexBudgets(const Graph& g, const BudgetRule& rule,
                                        const VertexClassification* cls) {
  std::vector<std::int64_t> out(g.n());
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, PiecewiseBudget>) {
          if (cls == nullptr) {
            throw BudgetError("piecewise budget needs a vertex classification");
          }
          if (cls->universe() != g.n()) {
            throw BudgetError("classification universe does not match the graph");
          }
        }
        for (Vertex v = 0; v < g.n(); ++v) {
          const auto d = static_cast<std::int64_t>(g.degree(v));
          if constexpr (std::is_same_v<T, FractionBudget>) {
            out[v] = r.alpha.FloorTimes(d);
          } else if constexpr (std::is_same_v<T, KeepDegreeBudget>) {
            out[v] = std::min(r.alpha.FloorTimes(d), d - r.k);
          } else {
            if (cls->tiny.contains(v)) {
              out[v] = d - r.keep_tiny;
            } else if (cls->atyp.contains(v)) {
              out[v] = d - r.keep_atyp;
            } else {
              out[v] = r.alpha.FloorTimes(d);
            }
          }
        }
      },
      rule);
  return out;
}

bool BudgetAllows(const Graph& g, std::span<const Edge> h, const BudgetRule& rule,
                  const VertexClassification* cls) {
  const auto budget = VertexBudgets(g, rule, cls);
  std::vector<std::int64_t> deg_h(g.n(), 0);
  for (const Edge& e : h) {
    if (!g.HasEdge(e.u, e.v)) {
      throw BudgetError("H contains {" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + "}, which is not an edge of G");
    }
    ++deg_h[e.u];
    ++deg_h[e.v];
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (deg_h[v] > budget[v]) return false;
  }
  return true;
}

Cut Cut::Bipartition(std::size_t n, std::span<const Vertex> side_b) {
  Cut cut{VertexSet(n), VertexSet::Full(n), VertexSet::FromMembers(n, side_b)};
  cut.side_a -= cut.side_b;
  return cut;
}

void Cut::Validate(std::size_t n) const {
  if (separator.universe() != n || side_a.universe() != n || side_b.universe() != n) {
    throw std::invalid_argument("cut is over a different vertex universe");
  }
  if (side_a.empty() || side_b.empty()) {
    throw std::invalid_argument("cut sides must be nonempty");
  }
  if (!(side_a & side_b).empty() || !(side_a & separator).empty() ||
      !(side_b & separator).empty()) {
    throw std::invalid_argument("cut parts must be pairwise disjoint");
  }
  if ((side_a | side_b | separator).size() != n) {
    throw std::invalid_argument("cut parts must cover every vertex");
  }
}

std::vector<Edge> CrossingEdges(const Graph& g, const Cut& cut) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if ((cut.side_a.contains(e.u) && cut.side_b.contains(e.v)) ||
        (cut.side_b.contains(e.u) && cut.side_a.contains(e.v))) {
      out.push_back(e);
    }
  }
  return out;
}

std::vector<Rational> CutRatios(const Graph& g, const Cut& cut) {
  std::vector<Rational> out(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto d = static_cast<std::int64_t>(g.degree(v));
    out[v] = d == 0 ? Rational()
                    : Rational(static_cast<std::int64_t>(CrossingDegree(g, cut, v)), d);
  }
  return out;
}

AttackOutcome MakeOutcome(const Graph& g, Cut cut, bool satisfied) {
  AttackOutcome out;
  out.h_edges = CrossingEdges(g, cut);
  out.ratios = CutRatios(g, cut);
  out.max_ratio = out.ratios.empty()
                      ? Rational()
                      : *std::max_element(out.ratios.begin(), out.ratios.end());
  out.cut = std::move(cut);
  out.satisfied = satisfied;
  return out;
}

std::string ToString(ThresholdMethod method) {
  return method == ThresholdMethod::kExact ? "exact" : "local-search-upper-bound";
}

std::optional<Cut> FindDisconnectingAttack(const Graph& g, const BudgetRule& rule,
                                           const VertexClassification* cls,
                                           const ExactLimits& limits) {
  CheckExactSize(g, limits.max_bipartition_n, "disconnecting attack");
  if (g.n() >= 2 && !IsConnected(g)) {
    throw std::invalid_argument("disconnecting attack needs a connected graph");
  }
  const std::size_t n = g.n();
  if (n < 2) return std::nullopt;
  const auto budget = VertexBudgets(g, rule, cls);
  if (std::any_of(budget.begin(), budget.end(), [](auto b) { return b < 0; })) {
    return std::nullopt;
  }
  const auto adj = AdjacencyMasks(g);
  const Mask full = (n == 64) ? ~Mask{0} : (Mask{1} << n) - 1;
  auto admissible = [&](Mask code) {
    const Mask b = code << 1;
    const Mask a = full & ~b;
    for (Vertex v = 0; v < n; ++v) {
      const Mask other = ((b >> v) & 1) ? a : b;
      if (std::popcount(adj[v] & other) > budget[v]) return false;
    }
    return true;
  };
  const auto code = FirstCode(1, Mask{1} << (n - 1), limits.threads, admissible);
  if (!code) return std::nullopt;
  Cut cut{VertexSet(n), SetOf(n, full & ~(*code << 1)), SetOf(n, *code << 1)};
  return cut;
}

ResilienceReport ExactResilienceThreshold(const Graph& g, const ExactLimits& limits) {
  CheckExactSize(g, limits.max_bipartition_n, "exact threshold");
  const std::size_t n = g.n();
  if (n < 2 || !IsConnected(g)) {
    throw std::invalid_argument("resilience threshold needs a connected graph with n >= 2");
  }
  const auto adj = AdjacencyMasks(g);
  std::vector<std::int64_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = static_cast<std::int64_t>(g.degree(v));
  const Mask full = (n == 64) ? ~Mask{0} : (Mask{1} << n) - 1;
  const Mask end = Mask{1} << (n - 1);

  const unsigned threads = ResolveThreads(limits.threads);
  const std::size_t chunks =
      threads <= 1 ? 1 : static_cast<std::size_t>(std::min<Mask>(end - 1, threads * 8));
  struct Best {
    std::int64_t num = 2, den = 1;  // above any ratio
    Mask code = 0;
  };
  std::vector<Best> best(chunks);
  ParallelFor(chunks, threads, [&](std::size_t c) {
    const Mask lo = 1 + (end - 1) * c / chunks;
    const Mask hi = 1 + (end - 1) * (c + 1) / chunks;
    Best& mine = best[c];
    for (Mask code = lo; code < hi; ++code) {
      const Mask b = code << 1;
      const Mask a = full & ~b;
      std::int64_t num = 0, den = 1;
      bool pruned = false;
      for (Vertex v = 0; v < n; ++v) {
        const Mask other = ((b >> v) & 1) ? a : b;
        const std::int64_t cut = std::popcount(adj[v] & other);
        if (cut * den > num * deg[v]) {
          num = cut;
          den = deg[v];
          // Cannot beat the incumbent (ties keep the smaller code).
          if (num * mine.den >= mine.num * den) {
            pruned = true;
            break;
          }
        }
      }
      if (!pruned && num * mine.den < mine.num * den) mine = {num, den, code};
    }
  });
  Best overall;
  for (const Best& b : best) {
    if (b.code == 0) continue;
    if (overall.code == 0 || b.num * overall.den < overall.num * b.den) overall = b;
  }
  ResilienceReport report;
  report.alpha_star = Rational(overall.num, overall.den);
  report.witness = Cut{VertexSet(n), SetOf(n, full & ~(overall.code << 1)),
                       SetOf(n, overall.code << 1)};
  report.method = ThresholdMethod::kExact;
  return report;
}

namespace {

// Hill climbing on (max ratio, number of vertices at the max) with single
// vertex flips.
class LocalSearch {
 public:
  explicit LocalSearch(const Graph& g) : g_(g), side_(g.n()), cut_(g.n()) {}

  void Reset(const std::vector<char>& side) {
    side_ = side;
    counts_.clear();
    size_b_ = 0;
    for (Vertex v = 0; v < g_.n(); ++v) {
      size_b_ += side_[v];
      cut_[v] = 0;
      for (Vertex w : g_.neighbours(v)) cut_[v] += side_[w] != side_[v];
      ++counts_[Ratio(v)];
    }
  }

  void Climb(std::size_t max_steps) {
    for (std::size_t step = 0; step < max_steps; ++step) {
      if (!ImproveOnce()) return;
    }
  }

  Rational MaxRatio() const { return counts_.rbegin()->first; }
  const std::vector<char>& side() const { return side_; }

 private:
  Rational Ratio(Vertex v) const {
    const auto d = static_cast<std::int64_t>(g_.degree(v));
    return d == 0 ? Rational() : Rational(cut_[v], d);
  }

  void Flip(Vertex v) {
    auto drop = [&](Vertex x) {
      auto it = counts_.find(Ratio(x));
      if (--it->second == 0) counts_.erase(it);
    };
    drop(v);
    for (Vertex w : g_.neighbours(v)) drop(w);
    side_[v] ^= 1;
    size_b_ += side_[v] ? 1 : -1;
    cut_[v] = static_cast<std::int64_t>(g_.degree(v)) - cut_[v];
    for (Vertex w : g_.neighbours(v)) cut_[w] += side_[w] != side_[v] ? 1 : -1;
    ++counts_[Ratio(v)];
    for (Vertex w : g_.neighbours(v)) ++counts_[Ratio(w)];
  }

  std::pair<Rational, int> Objective() const {
    return {counts_.rbegin()->first, counts_.rbegin()->second};
  }

  bool TryFlip(Vertex v, const std::pair<Rational, int>& current) {
    const bool leaves_empty =
        (side_[v] && size_b_ == 1) ||
        (!side_[v] && g_.n() - size_b_ == 1);
    if (leaves_empty) return false;
    Flip(v);
    const auto next = Objective();
    if (next.first < current.first ||
        (next.first == current.first && next.second < current.second)) {
      return true;
    }
    Flip(v);
    return false;
  }

  bool ImproveOnce() {
    const auto current = Objective();
    std::vector<Vertex> worst;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (Ratio(v) == current.first) worst.push_back(v);
    }
    for (Vertex v : worst) {
      if (TryFlip(v, current)) return true;
    }
    // Pull a crossing neighbour over instead.
    for (Vertex v : worst) {
      for (Vertex w : g_.neighbours(v)) {
        if (side_[w] != side_[v] && TryFlip(w, current)) return true;
      }
    }
    return false;
  }

  const Graph& g_;
  std::vector<char> side_;  // 1 = B
  std::vector<std::int64_t> cut_;
  std::map<Rational, int> counts_;
  std::size_t size_b_ = 0;
};

}  // namespace

ResilienceReport LocalSearchResilienceThreshold(const Graph& g,
                                                const LocalSearchOptions& options) {
  const std::size_t n = g.n();
  if (n < 2 || !IsConnected(g)) {
    throw std::invalid_argument("resilience threshold needs a connected graph with n >= 2");
  }
  if (options.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  LocalSearch search(g);
  std::optional<Rational> best;
  std::vector<char> best_side;
  for (int r = 0; r < options.restarts; ++r) {
    SplitMix64 rng(DeriveSeed(options.seed, static_cast<std::uint64_t>(r)));
    std::vector<char> side(n, 0);
    if (r % 2 == 0) {
      for (Vertex v = 0; v < n; ++v) side[v] = rng.Bernoulli(0.5) ? 1 : 0;
    } else {
      // Breadth-first ball of random target size around a random vertex.
      const std::size_t target = 1 + rng.UniformBelow(n - 1);
      const auto start = static_cast<Vertex>(rng.UniformBelow(n));
      std::vector<Vertex> queue{start};
      side[start] = 1;
      std::size_t taken = 1;
      for (std::size_t head = 0; head < queue.size() && taken < target; ++head) {
        for (Vertex w : g.neighbours(queue[head])) {
          if (taken >= target) break;
          if (!side[w]) {
            side[w] = 1;
            ++taken;
            queue.push_back(w);
          }
        }
      }
    }
    const auto in_b = static_cast<std::size_t>(std::count(side.begin(), side.end(), 1));
    if (in_b == 0) side[rng.UniformBelow(n)] = 1;
    if (in_b == n) side[rng.UniformBelow(n)] = 0;
    search.Reset(side);
    search.Climb(static_cast<std::size_t>(options.step_factor) * n);
    const Rational value = search.MaxRatio();
    if (!best || value < *best) {
      best = value;
      best_side = search.side();
    }
  }
  std::vector<Vertex> b;
  for (Vertex v = 0; v < n; ++v) {
    if (best_side[v]) b.push_back(v);
  }
  ResilienceReport report;
  report.alpha_star = *best;
  report.witness = Cut::Bipartition(n, b);
  report.method = ThresholdMethod::kLocalSearchUpperBound;
  return report;
}

std::optional<Cut> FindKConnAttack(const Graph& g, const BudgetRule& rule, int k,
                                   const VertexClassification* cls,
                                   const ExactLimits& limits) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  CheckExactSize(g, limits.max_separator_n, "k-connectivity attack");
  if (!IsKConnected(g, k)) {
    throw std::invalid_argument("k-connectivity attack needs a " + std::to_string(k) +
                                "-connected graph");
  }
  const std::size_t n = g.n();
  const auto budget = VertexBudgets(g, rule, cls);
  if (std::any_of(budget.begin(), budget.end(), [](auto b) { return b < 0; })) {
    return std::nullopt;
  }
  const auto adj = AdjacencyMasks(g);
  const Mask full = (n == 64) ? ~Mask{0} : (Mask{1} << n) - 1;

  // Separators by size, each size in lexicographic order.
  std::vector<Vertex> sep;
  std::optional<Cut> found;
  std::function<bool(std::size_t, Vertex)> choose = [&](std::size_t size,
                                                        Vertex start) -> bool {
    if (sep.size() == size) {
      Mask s_mask = 0;
      for (Vertex s : sep) s_mask |= Mask{1} << s;
      const Mask rest = full & ~s_mask;
      if (std::popcount(rest) < 2) return false;
      const Mask anchor = rest & -rest;
      const Mask free = rest & ~anchor;
      const Mask end = Mask{1} << std::popcount(free);
      auto admissible = [&](Mask code) {
        const Mask b = Deposit(code, free);
        const Mask a = rest & ~b;
        for (Vertex v = 0; v < n; ++v) {
          if ((rest >> v & 1) == 0) continue;
          const Mask other = ((b >> v) & 1) ? a : b;
          if (std::popcount(adj[v] & other) > budget[v]) return false;
        }
        return true;
      };
      const auto code = FirstCode(1, end, limits.threads, admissible);
      if (!code) return false;
      const Mask b = Deposit(*code, free);
      found = Cut{SetOf(n, s_mask), SetOf(n, rest & ~b), SetOf(n, b)};
      return true;
    }
    for (Vertex v = start; v < n; ++v) {
      sep.push_back(v);
      const bool done = choose(size, v + 1);
      sep.pop_back();
      if (done) return true;
    }
    return false;
  };
  for (int size = 0; size <= k - 1; ++size) {
    if (choose(static_cast<std::size_t>(size), 0)) return found;
  }
  return std::nullopt;
}

std::optional<Edge> CherryAttack(const Graph& g) {
  for (Vertex c = 0; c < g.n(); ++c) {
    if (g.degree(c) != 3) continue;
    int leaves = 0;
    std::optional<Vertex> other;
    for (Vertex w : g.neighbours(c)) {
      if (g.degree(w) == 1) {
        ++leaves;
      } else {
        other = w;
      }
    }
    if (leaves == 2 && other) return Edge::Of(c, *other);
  }
  return std::nullopt;
}

bool VerifyStarCondition(const Graph& g, const Cut& cut, const Rational& epsilon) {
  if (!cut.separator.empty()) {
    throw std::invalid_argument("star condition is defined for bipartitions only");
  }
  cut.Validate(g.n());
  const Rational limit = Rational(1, 2) + epsilon;
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto d = static_cast<std::int64_t>(g.degree(v));
    const auto crossing = static_cast<std::int64_t>(CrossingDegree(g, cut, v));
    // crossing <= limit * d
    if (static_cast<__int128>(crossing) * limit.den() >
        static_cast<__int128>(limit.num()) * d) {
      return false;
    }
  }
  return true;
}

AttackOutcome GreedyPartitionAttack(const Graph& g, const VertexClassification& cls,
                                    double d_threshold, const Rational& epsilon,
                                    std::uint64_t seed, GreedyAttackStats* stats) {
  const std::size_t n = g.n();
  if (cls.universe() != n) {
    throw std::invalid_argument("classification universe does not match the graph");
  }
  if (!(epsilon > Rational(0, 1) && epsilon < Rational(1, 2))) {
    throw std::invalid_argument("epsilon must lie in (0, 1/2)");
  }
  if (n < 2) throw std::invalid_argument("greedy attack needs n >= 2");

  // 0 = A, 1 = B, -1 = unassigned.
  std::vector<int> side(n, -1);
  auto partial_cut = [&] {
    Cut cut{VertexSet(n), VertexSet(n), VertexSet(n)};
    for (Vertex v = 0; v < n; ++v) {
      if (side[v] == 0) cut.side_a.insert(v);
      if (side[v] == 1) cut.side_b.insert(v);
      if (side[v] < 0) cut.separator.insert(v);
    }
    return cut;
  };

  // 1. Equipartition from a seeded shuffle: first ceil(n/2) go to A.
  {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    SplitMix64 rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) {
      std::swap(perm[i], perm[rng.UniformBelow(i + 1)]);
    }
    for (std::size_t i = 0; i < n; ++i) side[perm[i]] = i < (n + 1) / 2 ? 0 : 1;
  }

  // 2. D from crossing degrees of the equipartition.
  VertexSet d_set(n);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t crossing = 0;
    for (Vertex w : g.neighbours(v)) crossing += side[w] != side[v];
    if (static_cast<double>(crossing) > d_threshold) d_set.insert(v);
  }
  const VertexSet pending = cls.atyp | d_set;
  if (stats != nullptr) {
    stats->d_set_size = d_set.size();
    stats->max_d_neighbours = 0;
    for (Vertex v = 0; v < n; ++v) {
      std::size_t hits = 0;
      for (Vertex w : g.neighbours(v)) hits += d_set.contains(w) ? 1 : 0;
      stats->max_d_neighbours = std::max(stats->max_d_neighbours, hits);
    }
  }

  // 3. Strip the pending vertices.
  pending.ForEach([&](Vertex v) { side[v] = -1; });

  // 4. Majority insertion, non-tiny first.
  auto insert = [&](Vertex v) {
    std::size_t in_a = 0, in_b = 0;
    for (Vertex w : g.neighbours(v)) {
      if (side[w] == 0) ++in_a;
      if (side[w] == 1) ++in_b;
    }
    side[v] = in_a >= in_b ? 0 : 1;
  };
  (pending - cls.tiny).ForEach(insert);
  (pending & cls.tiny).ForEach(insert);

  // 5. Move tiny vertices whose crossing degree exceeds half their degree.
  auto crossing_of = [&](Vertex v) {
    std::size_t crossing = 0;
    for (Vertex w : g.neighbours(v)) crossing += side[w] != side[v];
    return crossing;
  };
  std::size_t moves = 0;
  while (true) {
    std::optional<Vertex> violator;
    cls.tiny.ForEach([&](Vertex v) {
      if (!violator && 2 * crossing_of(v) > g.degree(v)) violator = v;
    });
    if (!violator) break;
    if (moves >= n) {
      throw GreedyAttackError(
          "tiny-vertex rearrangement did not settle within n moves; the input "
          "likely violates the neighbourhood conditions the construction needs",
          partial_cut());
    }
    side[*violator] ^= 1;
    ++moves;
  }
  if (stats != nullptr) stats->rearrangements = moves;

  Cut cut = partial_cut();
  if (cut.side_a.empty() || cut.side_b.empty()) {
    throw GreedyAttackError("greedy construction left one side empty", std::move(cut));
  }
  const bool satisfied = VerifyStarCondition(g, cut, epsilon);
  return MakeOutcome(g, std::move(cut), satisfied);
}

Certification CertifyAttack(const Graph& g, const Cut& cut, const BudgetRule& rule,
                            int k, const VertexClassification* cls) {
  try {
    cut.Validate(g.n());
  } catch (const std::invalid_argument& e) {
    return {false, std::string("malformed cut: ") + e.what()};
  }
  if (cut.separator.size() > static_cast<std::size_t>(std::max(k - 1, 0))) {
    return {false, "separator has more than k-1 vertices"};
  }
  const auto h = CrossingEdges(g, cut);
  if (!BudgetAllows(g, h, rule, cls)) {
    return {false, "crossing edges exceed the budget of " + Describe(rule)};
  }
  const Graph rest = RemoveEdges(g, h);
  const Subgraph survivor = InducedSubgraph(rest, cut.side_a | cut.side_b);
  if (IsConnected(survivor.graph)) {
    return {false, "graph stays connected after removing H and S"};
  }
  return {true, "H = E(A,B) is admissible and G - H - S is disconnected"};
}

}  // namespace resil

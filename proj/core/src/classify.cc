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

#include "resil/classify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "resil/random.h"

namespace resil {
namespace {

void CheckDelta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
}

void SortWitnesses(AuditReport& r) {
  std::stable_sort(r.violations.begin(), r.violations.end(),
                   [](const Witness& a, const Witness& b) {
                     return a.vertices < b.vertices;
                   });
  r.holds = r.violations.empty();
}

// Witness cap for the sampled edge-density audit, where the number of
// violating subsets is unbounded.
constexpr std::size_t kMaxDensityWitnesses = 64;

struct DensityCheck {
  const Graph& g;
  double p;
  double c;
  double root_np;
  AuditReport& report;
  std::set<std::vector<Vertex>> seen;
  std::uint64_t subsets_checked = 0;

  double Bound(std::size_t s) const { return c * static_cast<double>(s) * root_np; }
  double Expected(std::size_t s) const {
    return 0.5 * static_cast<double>(s) * static_cast<double>(s - 1) * p;
  }

  // `members` need not be sorted; `edges` is e(X).
  void Record(std::vector<Vertex> members, std::uint64_t edges) {
    ++subsets_checked;
    const std::size_t s = members.size();
    const double deviation = static_cast<double>(edges) - Expected(s);
    const double bound = Bound(s);
    if (root_np > 0) {
      report.max_observed = std::max(
          report.max_observed,
          std::abs(deviation) / (static_cast<double>(s) * root_np));
    } else if (edges > 0) {
      report.max_observed = INFINITY;
    }
    if (std::abs(deviation) > bound) {
      std::sort(members.begin(), members.end());
      if (seen.size() < kMaxDensityWitnesses && seen.insert(members).second) {
        report.violations.push_back(
            {std::move(members), static_cast<double>(edges),
             deviation > 0 ? Expected(s) + bound : Expected(s) - bound});
      }
    }
  }
};

std::uint64_t InducedEdges(const Graph& g, const std::vector<Vertex>& members,
                           std::vector<char>& mark) {
  for (Vertex v : members) mark[v] = 1;
  std::uint64_t twice = 0;
  for (Vertex v : members) {
    for (Vertex w : g.neighbours(v)) twice += mark[w];
  }
  for (Vertex v : members) mark[v] = 0;
  return twice / 2;
}

// ESU enumeration of connected vertex sets of size <= 4, each visited once.
void EnumerateConnectedSmallSets(const Graph& g, DensityCheck& check) {
  std::vector<Vertex> sub;
  std::vector<char> in_sub(g.n(), 0);

  std::function<void(std::vector<Vertex>, Vertex, std::uint64_t)> extend =
      [&](std::vector<Vertex> ext, Vertex root, std::uint64_t edges) {
        if (sub.size() >= 2) check.Record(sub, edges);
        if (sub.size() == 4) return;
        while (!ext.empty()) {
          const Vertex w = ext.back();
          ext.pop_back();
          std::vector<Vertex> next = ext;
          for (Vertex u : g.neighbours(w)) {
            if (u <= root || in_sub[u]) continue;
            bool adjacent_to_sub = false;
            for (Vertex s : sub) {
              if (g.HasEdge(u, s)) {
                adjacent_to_sub = true;
                break;
              }
            }
            if (!adjacent_to_sub &&
                std::find(next.begin(), next.end(), u) == next.end()) {
              next.push_back(u);
            }
          }
          std::uint64_t added = 0;
          for (Vertex s : sub) added += g.HasEdge(w, s) ? 1 : 0;
          sub.push_back(w);
          in_sub[w] = 1;
          extend(std::move(next), root, edges + added);
          in_sub[w] = 0;
          sub.pop_back();
        }
      };

  for (Vertex v = 0; v < g.n(); ++v) {
    std::vector<Vertex> ext;
    for (Vertex u : g.neighbours(v)) {
      if (u > v) ext.push_back(u);
    }
    sub.assign(1, v);
    in_sub[v] = 1;
    extend(std::move(ext), v, 0);
    in_sub[v] = 0;
  }
}

}  // namespace

TailBounds ChernoffTailBounds(std::uint64_t n, double p, double delta) {
  CheckDelta(delta);
  const double mu = static_cast<double>(n) * p;
  return {std::exp(-delta * delta * mu / 3.0),
          std::exp(-delta * delta * mu / 2.0)};
}

VertexClassification ClassifyVertices(const Graph& reference, double p,
                                      double delta,
                                      const std::optional<VertexSet>& restrict_to,
                                      std::string reference_id) {
  CheckDelta(delta);
  if (restrict_to && restrict_to->universe() != reference.n()) {
    throw std::invalid_argument("restrict_to is over a different vertex universe");
  }
  VertexClassification cls;
  cls.reference = std::move(reference_id);
  cls.p = p;
  cls.delta = delta;
  cls.tiny = VertexSet(reference.n());
  cls.atyp = VertexSet(reference.n());
  const double np = static_cast<double>(reference.n()) * p;
  for (Vertex v = 0; v < reference.n(); ++v) {
    if (restrict_to && !restrict_to->contains(v)) continue;
    const auto d = static_cast<double>(reference.degree(v));
    if (d < delta * np) cls.tiny.insert(v);
    if (d < (1.0 - delta) * np || d > (1.0 + delta) * np) cls.atyp.insert(v);
  }
  return cls;
}

VertexClassification RestrictToSubgraph(const VertexClassification& cls,
                                        const Subgraph& sub) {
  VertexClassification out;
  out.reference = cls.reference;
  out.p = cls.p;
  out.delta = cls.delta;
  out.tiny = VertexSet(sub.to_original.size());
  out.atyp = VertexSet(sub.to_original.size());
  for (std::size_t i = 0; i < sub.to_original.size(); ++i) {
    const Vertex v = sub.to_original[i];
    if (cls.tiny.contains(v)) out.tiny.insert(static_cast<Vertex>(i));
    if (cls.atyp.contains(v)) out.atyp.insert(static_cast<Vertex>(i));
  }
  return out;
}

AuditReport AuditAtypSize(const VertexClassification& cls) {
  const std::size_t n = cls.universe();
  if (n <= 1) throw std::invalid_argument("atyp size audit needs n >= 2");
  AuditReport r;
  r.property = audit::kAtypSize;
  r.bound = static_cast<double>(n) / std::log(static_cast<double>(n));
  r.max_observed = static_cast<double>(cls.atyp.size());
  r.params = {{"n", static_cast<double>(n)}, {"p", cls.p}, {"delta", cls.delta}};
  if (r.max_observed > r.bound) {
    r.violations.push_back({cls.atyp.members(), r.max_observed, r.bound});
  }
  SortWitnesses(r);
  return r;
}

std::array<AuditReport, 3> AuditNeighbourhoods(const Graph& g_plus,
                                               const VertexClassification& cls,
                                               int L) {
  const std::size_t n = g_plus.n();
  if (cls.universe() != n) {
    throw std::invalid_argument(
        "classification and graph have different vertex universes");
  }
  std::array<AuditReport, 3> out;
  const std::map<std::string, double> params{
      {"p", cls.p}, {"delta", cls.delta}, {"L", static_cast<double>(L)}};

  // Tiny vertices within distance 3: grow radius-3 balls from each tiny
  // vertex and count, which touches only the tiny vertices' surroundings.
  {
    AuditReport& r = out[0];
    r.property = audit::kTinyBall;
    r.bound = 2;
    r.params = params;
    std::vector<std::uint32_t> count(n, 0);
    cls.tiny.ForEach([&](Vertex t) {
      Ball(g_plus, t, 3).ForEach([&](Vertex v) { ++count[v]; });
    });
    for (Vertex v = 0; v < n; ++v) {
      r.max_observed = std::max(r.max_observed, static_cast<double>(count[v]));
      if (count[v] > 2) {
        Witness w;
        w.vertices.push_back(v);
        const auto ball = Ball(g_plus, v, 3) & cls.tiny;
        for (Vertex t : ball.members()) w.vertices.push_back(t);
        w.measured = count[v];
        w.bound = 2;
        r.violations.push_back(std::move(w));
      }
    }
    SortWitnesses(r);
  }

  {
    AuditReport& r = out[1];
    r.property = audit::kAtypNeighbours;
    r.bound = L;
    r.params = params;
    for (Vertex v = 0; v < n; ++v) {
      std::vector<Vertex> hits;
      for (Vertex w : g_plus.neighbours(v)) {
        if (cls.atyp.contains(w)) hits.push_back(w);
      }
      r.max_observed = std::max(r.max_observed, static_cast<double>(hits.size()));
      if (hits.size() > static_cast<std::size_t>(L)) {
        Witness w;
        w.vertices.push_back(v);
        w.vertices.insert(w.vertices.end(), hits.begin(), hits.end());
        w.measured = static_cast<double>(hits.size());
        w.bound = L;
        r.violations.push_back(std::move(w));
      }
    }
    SortWitnesses(r);
  }

  {
    AuditReport& r = out[2];
    r.property = audit::kTinyTriangle;
    r.bound = 1;
    r.params = params;
    std::set<std::array<Vertex, 3>> bad;
    cls.tiny.ForEach([&](Vertex a) {
      auto nb = g_plus.neighbours(a);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (!g_plus.HasEdge(nb[i], nb[j])) continue;
          std::array<Vertex, 3> tri{a, nb[i], nb[j]};
          std::sort(tri.begin(), tri.end());
          int tiny_count = 0;
          for (Vertex x : tri) tiny_count += cls.tiny.contains(x) ? 1 : 0;
          r.max_observed = std::max(r.max_observed, static_cast<double>(tiny_count));
          if (tiny_count > 1) bad.insert(tri);
        }
      }
    });
    for (const auto& tri : bad) {
      double tiny_count = 0;
      for (Vertex x : tri) tiny_count += cls.tiny.contains(x) ? 1 : 0;
      r.violations.push_back({{tri.begin(), tri.end()}, tiny_count, 1});
    }
    SortWitnesses(r);
  }
  return out;
}

AuditReport AuditEdgeCounts(const Graph& g, double p, double c,
                            std::uint64_t subset_trials, std::uint64_t seed) {
  if (!(c > 0)) throw std::invalid_argument("c must be positive");
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("p must lie in [0, 1]");
  const std::size_t n = g.n();
  AuditReport r;
  r.property = audit::kEdgeDensity;
  r.params = {{"p", p},
              {"c", c},
              {"subset_trials", static_cast<double>(subset_trials)},
              {"seed", static_cast<double>(seed)}};
  const double root_np = std::sqrt(static_cast<double>(n) * p);
  r.bound = c;  // on the normalized scale of max_observed
  DensityCheck check{g, p, c, root_np, r, {}, 0};
  std::vector<char> mark(n, 0);

  // (a) small subsets. Singletons have e(X) = 0 and always pass.
  for (Vertex v = 0; v < n; ++v) check.Record({v}, 0);
  EnumerateConnectedSmallSets(g, check);
  bool lower_small_trivial = true;
  for (std::size_t s = 2; s <= 4; ++s) {
    if (check.Expected(s) - check.Bound(s) > 0) lower_small_trivial = false;
  }
  double lower_small_checked = 1;
  if (!lower_small_trivial) {
    if (n <= 64) {
      std::vector<Vertex> x;
      std::function<void(Vertex)> rec = [&](Vertex start) {
        if (x.size() >= 2) check.Record(x, InducedEdges(g, x, mark));
        if (x.size() == 4) return;
        for (Vertex v = start; v < n; ++v) {
          x.push_back(v);
          rec(v + 1);
          x.pop_back();
        }
      };
      rec(0);
    } else {
      lower_small_checked = 0;
    }
  }
  r.params["small_lower_checked"] = lower_small_checked;

  // (b) random subsets of uniformly random size.
  if (n > 0) {
    SplitMix64 rng(seed);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    for (std::uint64_t t = 0; t < subset_trials; ++t) {
      const std::size_t size = 1 + rng.UniformBelow(n);
      for (std::size_t i = 0; i < size; ++i) {
        std::swap(perm[i], perm[i + rng.UniformBelow(n - i)]);
      }
      std::vector<Vertex> x(perm.begin(), perm.begin() + size);
      check.Record(x, InducedEdges(g, x, mark));
    }
  }

  // (c) structured sets.
  if (n > 0) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    check.Record(all, g.m());
    for (const VertexSet& comp : ConnectedComponents(g)) {
      if (comp.size() < 2 || comp.size() == n) continue;
      auto members = comp.members();
      check.Record(members, InducedEdges(g, members, mark));
    }
    std::vector<Vertex> by_degree = all;
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) {
      return g.degree(a) > g.degree(b);
    });
    for (std::size_t i = 0; i < std::min<std::size_t>(10, n); ++i) {
      const Vertex v = by_degree[i];
      std::vector<Vertex> x(g.neighbours(v).begin(), g.neighbours(v).end());
      x.push_back(v);
      check.Record(x, InducedEdges(g, x, mark));
    }
  }
  r.params["subsets_checked"] = static_cast<double>(check.subsets_checked);
  SortWitnesses(r);
  return r;
}

bool RecheckWitness(const AuditReport& report, std::size_t index,
                    const Graph& g, const VertexClassification* cls) {
  if (index >= report.violations.size()) return false;
  const Witness& w = report.violations[index];
  const auto& vs = w.vertices;
  auto param = [&](const char* key) {
    auto it = report.params.find(key);
    if (it == report.params.end()) {
      throw std::invalid_argument(std::string("report lacks parameter ") + key);
    }
    return it->second;
  };
  auto need_cls = [&] {
    if (cls == nullptr || cls->universe() != g.n()) {
      throw std::invalid_argument("witness replay needs a matching classification");
    }
  };
  for (Vertex v : vs) {
    if (v >= g.n()) return false;
  }
  const std::string& prop = report.property;
  if (prop == audit::kTinyBall) {
    need_cls();
    if (vs.empty()) return false;
    // Independent BFS to depth 3.
    std::vector<int> dist(g.n(), -1);
    std::vector<Vertex> queue{vs[0]};
    dist[vs[0]] = 0;
    std::size_t count = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      if (dist[x] == 3) continue;
      for (Vertex y : g.neighbours(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
          if (cls->tiny.contains(y)) ++count;
        }
      }
    }
    for (std::size_t i = 1; i < vs.size(); ++i) {
      if (dist[vs[i]] < 1 || !cls->tiny.contains(vs[i])) return false;
    }
    return count > 2 && count == vs.size() - 1;
  }
  if (prop == audit::kAtypNeighbours) {
    need_cls();
    if (vs.empty()) return false;
    std::size_t count = 0;
    for (Vertex y : g.neighbours(vs[0])) count += cls->atyp.contains(y) ? 1 : 0;
    return static_cast<double>(count) > param("L");
  }
  if (prop == audit::kTinyTriangle) {
    need_cls();
    if (vs.size() != 3) return false;
    if (!g.HasEdge(vs[0], vs[1]) || !g.HasEdge(vs[1], vs[2]) ||
        !g.HasEdge(vs[0], vs[2])) {
      return false;
    }
    int tiny_count = 0;
    for (Vertex x : vs) tiny_count += cls->tiny.contains(x) ? 1 : 0;
    return tiny_count > 1;
  }
  if (prop == audit::kAtypSize) {
    need_cls();
    for (Vertex v : vs) {
      if (!cls->atyp.contains(v)) return false;
    }
    const auto n = static_cast<double>(g.n());
    return static_cast<double>(vs.size()) > n / std::log(n);
  }
  if (prop == audit::kEdgeDensity) {
    const double p = param("p");
    const double c = param("c");
    std::set<Vertex> x(vs.begin(), vs.end());
    if (x.size() != vs.size() || x.empty()) return false;
    std::uint64_t edges = 0;
    for (const Edge& e : g.edges()) {
      if (x.count(e.u) && x.count(e.v)) ++edges;
    }
    const auto s = static_cast<double>(x.size());
    const double expected = s * (s - 1) / 2 * p;
    return std::abs(static_cast<double>(edges) - expected) >
           c * s * std::sqrt(static_cast<double>(g.n()) * p);
  }
  throw std::invalid_argument("unknown audit property " + prop);
}

}  // namespace resil

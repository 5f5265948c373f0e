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

#include "resil/graph.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>

namespace resil {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u >= n || e.v >= n) {
      throw GraphError("edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "} outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    }
    edges_.push_back(Edge::Of(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  neighbours_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    neighbours_[cursor[e.u]++] = e.v;
    neighbours_[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(neighbours_.begin() + offsets_[v],
              neighbours_.begin() + offsets_[v + 1]);
  }
}

bool Graph::HasEdge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_ || a == b) return false;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nb = neighbours(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::size_t Graph::MinDegree() const {
  if (n_ == 0) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

Subgraph InducedSubgraph(const Graph& g, const VertexSet& keep) {
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  Subgraph out;
  out.to_original = keep.members();
  std::vector<Vertex> relabel(g.n(), kAbsent);
  for (std::size_t i = 0; i < out.to_original.size(); ++i) {
    relabel[out.to_original[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (relabel[e.u] != kAbsent && relabel[e.v] != kAbsent) {
      edges.push_back({relabel[e.u], relabel[e.v]});
    }
  }
  out.graph = Graph(out.to_original.size(), edges);
  return out;
}

std::vector<std::uint32_t> ComponentLabels(const Graph& g) {
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label(g.n(), kUnseen);
  std::vector<Vertex> stack;
  std::uint32_t next = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (label[s] != kUnseen) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbours(v)) {
        if (label[w] == kUnseen) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<VertexSet> ConnectedComponents(const Graph& g) {
  const auto label = ComponentLabels(g);
  std::uint32_t count = 0;
  for (auto l : label) count = std::max(count, l + 1);
  std::vector<VertexSet> comps(count, VertexSet(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) comps[label[v]].insert(v);
  // Labels already follow smallest-member order, so a stable sort by size
  // gives the required tie-break.
  std::stable_sort(comps.begin(), comps.end(),
                   [](const VertexSet& a, const VertexSet& b) {
                     return a.size() > b.size();
                   });
  return comps;
}

bool IsConnected(const Graph& g) {
  if (g.n() == 0) return false;
  const auto label = ComponentLabels(g);
  return std::all_of(label.begin(), label.end(),
                     [](std::uint32_t l) { return l == 0; });
}

Subgraph GiantComponent(const Graph& g) {
  if (g.m() == 0) throw GraphError("no giant: graph has no edges");
  const auto label = ComponentLabels(g);
  std::vector<std::size_t> sizes;
  for (auto l : label) {
    if (l >= sizes.size()) sizes.resize(l + 1, 0);
    ++sizes[l];
  }
  // First maximum wins, i.e. the component with the smallest vertex.
  const auto best = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  VertexSet keep(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    if (label[v] == best) keep.insert(v);
  }
  return InducedSubgraph(g, keep);
}

Subgraph KCore(const Graph& g, int k) {
  if (k < 0) throw GraphError("k-core needs k >= 0");
  std::vector<std::size_t> deg(g.n());
  std::vector<char> removed(g.n(), 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < g.n(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < static_cast<std::size_t>(k)) {
      removed[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    for (Vertex w : g.neighbours(v)) {
      if (removed[w]) continue;
      if (--deg[w] < static_cast<std::size_t>(k)) {
        removed[w] = 1;
        queue.push_back(w);
      }
    }
  }
  VertexSet keep(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!removed[v]) keep.insert(v);
  }
  return InducedSubgraph(g, keep);
}

namespace {

// Iterative Tarjan lowpoint search; true iff g (connected) has no cut vertex.
bool HasNoArticulationPoint(const Graph& g) {
  const std::size_t n = g.n();
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> disc(n, kUnvisited), low(n, 0);
  std::vector<Vertex> parent(n, 0);
  std::vector<std::size_t> next_child(n, 0);
  std::vector<Vertex> stack{0};
  std::uint32_t time = 0;
  std::size_t root_children = 0;
  disc[0] = low[0] = time++;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    auto nb = g.neighbours(v);
    if (next_child[v] < nb.size()) {
      const Vertex w = nb[next_child[v]++];
      if (disc[w] == kUnvisited) {
        parent[w] = v;
        disc[w] = low[w] = time++;
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    if (v == 0) break;
    const Vertex p = parent[v];
    low[p] = std::min(low[p], low[v]);
    if (p != 0 && low[v] >= disc[p]) return false;
  }
  return root_children <= 1;
}

// Number of internally vertex-disjoint s-t paths, capped at `cap`; s and t
// must be distinct and non-adjacent. Unit-capacity flow on the split graph.
int LocalVertexConnectivity(const Graph& g, Vertex s, Vertex t, int cap) {
  const std::size_t n = g.n();
  // Node 2v = v_in, 2v+1 = v_out. Arcs stored with explicit reverse index.
  struct Arc {
    std::uint32_t to;
    std::uint32_t rev;
    int cap;
  };
  std::vector<std::vector<Arc>> adj(2 * n);
  auto add_arc = [&](std::uint32_t a, std::uint32_t b, int c) {
    adj[a].push_back({b, static_cast<std::uint32_t>(adj[b].size()), c});
    adj[b].push_back({a, static_cast<std::uint32_t>(adj[a].size() - 1), 0});
  };
  const int big = cap + 1;
  for (Vertex v = 0; v < n; ++v) {
    add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  }
  for (const Edge& e : g.edges()) {
    add_arc(2 * e.u + 1, 2 * e.v, 1);
    add_arc(2 * e.v + 1, 2 * e.u, 1);
  }
  const std::uint32_t source = 2 * s + 1;
  const std::uint32_t sink = 2 * t;
  int flow = 0;
  std::vector<std::int64_t> via(2 * n);
  std::vector<std::uint32_t> prev(2 * n);
  while (flow < cap) {
    std::fill(via.begin(), via.end(), -1);
    std::deque<std::uint32_t> bfs{source};
    via[source] = 0;
    while (!bfs.empty() && via[sink] < 0) {
      const auto x = bfs.front();
      bfs.pop_front();
      for (std::uint32_t i = 0; i < adj[x].size(); ++i) {
        const Arc& a = adj[x][i];
        if (a.cap > 0 && via[a.to] < 0) {
          via[a.to] = i;
          prev[a.to] = x;
          bfs.push_back(a.to);
        }
      }
    }
    if (via[sink] < 0) break;
    for (std::uint32_t x = sink; x != source; x = prev[x]) {
      Arc& a = adj[prev[x]][via[x]];
      a.cap -= 1;
      adj[x][a.rev].cap += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

bool IsKConnected(const Graph& g, int k) {
  if (k < 1) throw GraphError("k-connectivity needs k >= 1");
  const std::size_t n = g.n();
  if (n < static_cast<std::size_t>(k) + 1) return false;
  if (g.MinDegree() < static_cast<std::size_t>(k)) return false;
  if (!IsConnected(g)) return false;
  if (k == 1) return true;
  if (k == 2) return HasNoArticulationPoint(g);
  // A separator of size < k misses one of the first k vertices; that vertex
  // is then split from some non-neighbour, so checking those pairs suffices.
  for (Vertex s = 0; s < static_cast<Vertex>(k); ++s) {
    for (Vertex t = 0; t < n; ++t) {
      if (t == s || g.HasEdge(s, t)) continue;
      if (LocalVertexConnectivity(g, s, t, k) < k) return false;
    }
  }
  return true;
}

VertexSet Ball(const Graph& g, Vertex v, int radius) {
  if (v >= g.n()) throw GraphError("ball centre outside graph");
  VertexSet out(g.n());
  std::vector<int> dist(g.n(), -1);
  std::vector<Vertex> frontier{v}, next;
  dist[v] = 0;
  for (int d = 1; d <= radius && !frontier.empty(); ++d) {
    next.clear();
    for (Vertex x : frontier) {
      for (Vertex w : g.neighbours(x)) {
        if (dist[w] < 0) {
          dist[w] = d;
          out.insert(w);
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return out;
}

Graph RemoveEdges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> drop(removed.begin(), removed.end());
  for (Edge& e : drop) e = Edge::Of(e.u, e.v);
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  kept.reserve(g.m());
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  return Graph(g.n(), kept);
}

Graph Union(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) throw GraphError("union of graphs on different n");
  std::vector<Edge> all(a.edges().begin(), a.edges().end());
  all.insert(all.end(), b.edges().begin(), b.edges().end());
  return Graph(a.n(), all);
}

bool IsSubgraph(const Graph& sub, const Graph& super) {
  if (sub.n() != super.n()) return false;
  return std::includes(super.edges().begin(), super.edges().end(),
                       sub.edges().begin(), sub.edges().end());
}

}  // namespace resil

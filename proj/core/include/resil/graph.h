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

// Immutable simple undirected graphs and the structural queries the rest of
// the library is built on: components, the giant, k-cores, k-connectivity
// and bounded-radius balls.

#ifndef RESIL_GRAPH_H_
#define RESIL_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "resil/vertex_set.h"

namespace resil {

// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge Of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on vertices 0..n-1 in compressed adjacency form.
// Neighbour lists are sorted ascending; edges() is sorted lexicographically.
class Graph {
 public:
  Graph() = default;

  // Duplicate pairs (in either orientation) collapse to one edge. Throws
  // GraphError on self-loops or endpoints >= n.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const { return n_; }
  std::size_t m() const { return edges_.size(); }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbours(Vertex v) const {
    return {neighbours_.data() + offsets_[v], degree(v)};
  }
  std::span<const Edge> edges() const { return edges_; }

  bool HasEdge(Vertex a, Vertex b) const;
  std::size_t MinDegree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> neighbours_;
};

inline Graph BuildGraph(std::size_t n, std::span<const Edge> edges) {
  return Graph(n, edges);
}

// Induced subgraph together with the map from its labels to the parent's.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_original;

  VertexSet OriginalVertices(std::size_t parent_universe) const {
    return VertexSet::FromMembers(parent_universe, to_original);
  }
};

// Vertices of `keep` are relabelled 0..|keep|-1 in ascending order.
Subgraph InducedSubgraph(const Graph& g, const VertexSet& keep);

// Component id per vertex; ids are assigned in order of smallest member.
std::vector<std::uint32_t> ComponentLabels(const Graph& g);

// Ordered by decreasing size, ties by smallest contained vertex.
std::vector<VertexSet> ConnectedComponents(const Graph& g);

bool IsConnected(const Graph& g);

// Largest component as an induced subgraph. Ties go to the component with
// the smallest vertex. Throws GraphError("no giant") on edgeless input.
Subgraph GiantComponent(const Graph& g);

// Maximal induced subgraph with minimum degree >= k (possibly empty).
Subgraph KCore(const Graph& g, int k);

// True iff n >= k+1 and removing any k-1 vertices leaves g connected.
bool IsKConnected(const Graph& g, int k);

// All vertices u != v within distance `radius` of v.
VertexSet Ball(const Graph& g, Vertex v, int radius);

// Graph with the given edges removed. Edges absent from g are ignored.
Graph RemoveEdges(const Graph& g, std::span<const Edge> removed);

// Edge-set union on a common vertex count.
Graph Union(const Graph& a, const Graph& b);

bool IsSubgraph(const Graph& sub, const Graph& super);

}  // namespace resil

#endif  // RESIL_GRAPH_H_

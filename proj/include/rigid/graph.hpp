// Copyright 2026 The Rigid Embeddings Authors
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

#ifndef RIGID_GRAPH_HPP_
#define RIGID_GRAPH_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rigid {

// Unordered vertex pair, stored with a < b. Vertex labels are 1-based.
struct Edge {
  int a = 0;
  int b = 0;

  Edge() = default;
  Edge(int i, int j) : a(i < j ? i : j), b(i < j ? j : i) {}

  auto operator<=>(const Edge&) const = default;
  bool Contains(int v) const { return a == v || b == v; }
  int Other(int v) const { return a == v ? b : a; }
  std::string ToString() const;  // "i-j"
};

// Undirected simple graph on vertices 1..n. Immutable once built.
class Graph {
 public:
  static constexpr int kMaxVertices = 63;

  Graph() = default;
  // Throws invalid-argument on self-loops, duplicate edges, or labels
  // outside 1..n.
  Graph(int n, std::vector<Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  // Sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  bool HasEdge(int i, int j) const;
  bool HasEdge(const Edge& e) const { return HasEdge(e.a, e.b); }
  int Degree(int v) const;
  int MinDegree() const;
  std::vector<int> Neighbors(int v) const;
  // Bit j set iff j is adjacent to v.
  std::uint64_t NeighborMask(int v) const { return adjacency_[v]; }
  std::vector<Edge> NonEdges() const;
  // All vertex triples {i<j<k} that are pairwise adjacent.
  std::vector<std::array<int, 3>> Triangles() const;

  Graph WithEdges(std::span<const Edge> extra) const;
  Graph WithoutEdge(const Edge& e) const;
  // Deletes vertex v and relabels vertices above v down by one.
  Graph WithoutVertex(int v) const;
  // perm[v] is the new label of old vertex v (perm[0] unused).
  Graph Relabeled(std::span<const int> perm) const;

  // |E| = 3|V| - 6, the edge count of a minimally rigid graph in R^3.
  bool HasGeiringerEdgeCount() const { return edge_count() == 3 * n_ - 6; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adjacency_;  // indexed by label, size n+1
};

}  // namespace rigid

#endif  // RIGID_GRAPH_HPP_

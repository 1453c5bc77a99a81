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

#include "rigid/graph.hpp"

#include <algorithm>
#include <bit>

#include "rigid/error.hpp"

namespace rigid {

std::string Edge::ToString() const {
  return std::to_string(a) + "-" + std::to_string(b);
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1 || n > kMaxVertices) {
    Fail(ErrorCode::kInvalidArgument,
         "vertex count " + std::to_string(n) + " outside 1.." +
             std::to_string(kMaxVertices));
  }
  adjacency_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    if (e.a < 1 || e.b > n) {
      Fail(ErrorCode::kInvalidArgument, "edge " + e.ToString() + " out of range");
    }
    if (e.a == e.b) {
      Fail(ErrorCode::kInvalidArgument, "self-loop at vertex " + std::to_string(e.a));
    }
    const std::uint64_t bit = std::uint64_t{1} << e.b;
    if (adjacency_[e.a] & bit) {
      Fail(ErrorCode::kInvalidArgument, "duplicate edge " + e.ToString());
    }
    adjacency_[e.a] |= bit;
    adjacency_[e.b] |= std::uint64_t{1} << e.a;
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, [&] {
        std::vector<Edge> list;
        list.reserve(edges.size());
        for (auto [i, j] : edges) list.emplace_back(i, j);
        return list;
      }()) {}

bool Graph::HasEdge(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) return false;
  return (adjacency_[i] >> j) & 1U;
}

int Graph::Degree(int v) const { return std::popcount(adjacency_[v]); }

int Graph::MinDegree() const {
  int best = n_;
  for (int v = 1; v <= n_; ++v) best = std::min(best, Degree(v));
  return best;
}

std::vector<int> Graph::Neighbors(int v) const {
  std::vector<int> out;
  for (std::uint64_t m = adjacency_[v]; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

std::vector<Edge> Graph::NonEdges() const {
  std::vector<Edge> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (!HasEdge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::array<int, 3>> Graph::Triangles() const {
  std::vector<std::array<int, 3>> out;
  for (const Edge& e : edges_) {
    std::uint64_t common = adjacency_[e.a] & adjacency_[e.b];
    common &= ~((std::uint64_t{2} << e.b) - 1);  // keep k > b
    for (; common != 0; common &= common - 1) {
      out.push_back({e.a, e.b, std::countr_zero(common)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::WithEdges(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Graph(n_, std::move(all));
}

Graph Graph::WithoutEdge(const Edge& e) const {
  if (!HasEdge(e)) {
    Fail(ErrorCode::kInvalidArgument, "edge " + e.ToString() + " not in graph");
  }
  std::vector<Edge> rest;
  rest.reserve(edges_.size() - 1);
  for (const Edge& f : edges_) {
    if (f != e) rest.push_back(f);
  }
  return Graph(n_, std::move(rest));
}

Graph Graph::WithoutVertex(int v) const {
  std::vector<Edge> rest;
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  for (const Edge& f : edges_) {
    if (!f.Contains(v)) rest.emplace_back(shift(f.a), shift(f.b));
  }
  return Graph(n_ - 1, std::move(rest));
}

Graph Graph::Relabeled(std::span<const int> perm) const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& f : edges_) out.emplace_back(perm[f.a], perm[f.b]);
  return Graph(n_, std::move(out));
}

}  // namespace rigid

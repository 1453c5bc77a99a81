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

#include "rigid/henneberg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "rigid/canonical.hpp"
#include "rigid/error.hpp"
#include "rigid/parallel.hpp"

namespace rigid {
namespace {

void RequireVertex(const Graph& g, int v) {
  if (v < 1 || v > g.vertex_count()) {
    Fail(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " not in graph");
  }
}

void RequireDistinct(std::vector<int> vs, const char* what) {
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
    Fail(ErrorCode::kInvalidArgument, std::string(what) + ": vertices must be distinct");
  }
}

Graph Extend(const Graph& g, const std::vector<Edge>& removed, const std::vector<int>& join) {
  const int v = g.vertex_count() + 1;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) edges.push_back(e);
  }
  for (int t : join) edges.emplace_back(t, v);
  return Graph(v, std::move(edges));
}

}  // namespace

const char* LastStepName(LastStep step) {
  return step == LastStep::kH1Capable ? "H1" : "H2";
}

Graph HennebergH1(const Graph& g, const std::array<int, 3>& targets) {
  for (int t : targets) RequireVertex(g, t);
  RequireDistinct({targets.begin(), targets.end()}, "H1 targets");
  return Extend(g, {}, {targets.begin(), targets.end()});
}

Graph HennebergH2(const Graph& g, const Edge& removed, const std::array<int, 2>& extra) {
  if (!g.HasEdge(removed)) {
    Fail(ErrorCode::kInvalidArgument, "H2: edge " + removed.ToString() + " not in graph");
  }
  for (int t : extra) RequireVertex(g, t);
  RequireDistinct({removed.a, removed.b, extra[0], extra[1]}, "H2");
  return Extend(g, {removed}, {removed.a, removed.b, extra[0], extra[1]});
}

Graph HennebergH3(const Graph& g, H3Variant variant, const std::array<Edge, 2>& removed,
                  const std::vector<int>& attach) {
  for (const Edge& e : removed) {
    if (!g.HasEdge(e)) {
      Fail(ErrorCode::kInvalidArgument, "H3: edge " + e.ToString() + " not in graph");
    }
  }
  if (removed[0] == removed[1]) {
    Fail(ErrorCode::kInvalidArgument, "H3: removed edges coincide");
  }
  std::set<int> ends = {removed[0].a, removed[0].b, removed[1].a, removed[1].b};
  const bool disjoint = ends.size() == 4;
  if (variant == H3Variant::kX && (!disjoint || attach.size() != 1)) {
    Fail(ErrorCode::kInvalidArgument,
         "H3x needs two disjoint edges and one attachment vertex");
  }
  if (variant == H3Variant::kV && (ends.size() != 3 || attach.size() != 2)) {
    Fail(ErrorCode::kInvalidArgument,
         "H3v needs two edges sharing one vertex and two attachment vertices");
  }
  std::vector<int> join(ends.begin(), ends.end());
  for (int t : attach) {
    RequireVertex(g, t);
    join.push_back(t);
  }
  RequireDistinct(join, "H3");
  return Extend(g, {removed[0], removed[1]}, join);
}

LastStep ClassifyLastStep(const Graph& g) {
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (g.Degree(v) == 3) return LastStep::kH1Capable;
  }
  return LastStep::kH2Required;
}

Graph CompleteGraph(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

std::vector<std::vector<Graph>> GenerateCatalogLevels(int n) {
  if (n < kMinCatalogVertices || n > kMaxCatalogVertices) {
    Fail(ErrorCode::kUnsupported, "catalog size " + std::to_string(n) + " outside [4, 12]");
  }
  std::vector<std::vector<Graph>> levels;
  levels.push_back({CanonicalGraph(CompleteGraph(4))});
  for (int m = 4; m < n; ++m) {
    const std::vector<Graph>& parents = levels.back();
    std::map<CanonicalLabel, Graph> children;
    std::mutex merge;
    ParallelFor(parents.size(), [&](std::size_t idx) {
      const Graph& g = parents[idx];
      std::map<CanonicalLabel, Graph> local;
      auto add = [&](const Graph& child) {
        CanonicalResult c = Canonicalize(child);
        if (!local.contains(c.label)) local.emplace(c.label, child.Relabeled(c.perm));
      };
      for (int a = 1; a <= m; ++a) {
        for (int b = a + 1; b <= m; ++b) {
          for (int c = b + 1; c <= m; ++c) add(HennebergH1(g, {a, b, c}));
        }
      }
      for (const Edge& e : g.edges()) {
        for (int a = 1; a <= m; ++a) {
          if (e.Contains(a)) continue;
          for (int b = a + 1; b <= m; ++b) {
            if (!e.Contains(b)) add(HennebergH2(g, e, {a, b}));
          }
        }
      }
      std::lock_guard<std::mutex> lock(merge);
      children.merge(local);
    });
    std::vector<Graph> level;
    level.reserve(children.size());
    for (auto& [label, graph] : children) level.push_back(std::move(graph));
    levels.push_back(std::move(level));
  }
  return levels;
}

std::vector<Graph> GenerateCatalog(int n) { return GenerateCatalogLevels(n).back(); }

}  // namespace rigid

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


#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "rigid/canonical.hpp"
#include "rigid/error.hpp"
#include "rigid/graph.hpp"
#include "rigid/henneberg.hpp"
#include "rigid/named_graphs.hpp"
#include "rigid/rigidity.hpp"

namespace rigid {
namespace {

// Permutation indexed by label; slot 0 unused.
std::vector<int> RandomPerm(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n + 1));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  return perm;
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

Graph FiveVertexGraph() { return HennebergH1(CompleteGraph(4), {1, 2, 3}); }

TEST_CASE("edges are normalized and printed as i-j") {
  const Edge e(5, 2);
  CHECK(e.a == 2);
  CHECK(e.b == 5);
  CHECK(e.ToString() == "2-5");
  CHECK(e.Other(2) == 5);
  CHECK(Edge(1, 3) < Edge(2, 3));
}

TEST_CASE("graph queries") {
  const Graph k4 = CompleteGraph(4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.HasGeiringerEdgeCount());
  CHECK(k4.Triangles().size() == 4);
  CHECK(k4.NonEdges().empty());
  CHECK(k4.MinDegree() == 3);
  const Graph g = k4.WithoutEdge(Edge(1, 2));
  CHECK_FALSE(g.HasEdge(1, 2));
  CHECK(g.NonEdges() == std::vector<Edge>{Edge(1, 2)});
  const Graph h = named::G48().WithoutVertex(7);
  CHECK(h.vertex_count() == 6);
  CHECK(h.edge_count() == 10);
}

TEST_CASE("H1 on K4 gives the 5-vertex Geiringer graph") {
  const Graph g = FiveVertexGraph();
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 9);
  CHECK(CanonicalForm(g) == CanonicalForm(CompleteGraph(5).WithoutEdge(Edge(4, 5))));
  CHECK(CodeOf([] { HennebergH1(CompleteGraph(4), {1, 1, 2}); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("H2 splits an edge") {
  const Graph g = HennebergH2(FiveVertexGraph(), Edge(1, 2), {3, 4});
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 12);
  CHECK_FALSE(g.HasEdge(1, 2));
  CHECK(g.Degree(6) == 4);
  CHECK(CodeOf([] { HennebergH2(FiveVertexGraph(), Edge(4, 5), {1, 2}); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("H3 steps") {
  const Graph g7 = named::G48();
  // v1v2 and v3v4 are disjoint edges of G48.
  const Graph x = HennebergH3(g7, H3Variant::kX, {Edge(1, 2), Edge(3, 4)}, {5});
  CHECK(x.vertex_count() == 8);
  CHECK(x.edge_count() == 18);
  CHECK(x.Degree(8) == 5);
  CHECK(IsGenericallyRigid(x));
  const Graph v = HennebergH3(g7, H3Variant::kV, {Edge(1, 2), Edge(1, 3)}, {5, 6});
  CHECK(v.edge_count() == 18);
  CHECK(CodeOf([&] { HennebergH3(g7, H3Variant::kV, {Edge(1, 2), Edge(3, 4)}, {5, 6}); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([&] { HennebergH3(g7, H3Variant::kX, {Edge(1, 2), Edge(1, 3)}, {5}); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("catalog sizes and last steps") {
  const auto levels = GenerateCatalogLevels(8);
  REQUIRE(levels.size() == 5);
  const std::size_t sizes[] = {1, 1, 4, 26, 374};
  const int h2[] = {0, 0, 1, 6, 63};
  for (std::size_t i = 0; i < levels.size(); ++i) {
    CHECK(levels[i].size() == sizes[i]);
    int k = 0;
    for (const Graph& g : levels[i]) k += ClassifyLastStep(g) == LastStep::kH2Required;
    CHECK(k == h2[i]);
  }
  CHECK(GenerateCatalog(6).size() == 4);
  CHECK(CodeOf([] { GenerateCatalog(13); }) == ErrorCode::kUnsupported);
}

TEST_CASE("catalog graphs are Geiringer, rigid and pairwise non-isomorphic") {
  for (int n = 4; n <= 7; ++n) {
    std::set<CanonicalLabel> labels;
    for (const Graph& g : GenerateCatalog(n)) {
      CHECK(g.vertex_count() == n);
      CHECK(g.HasGeiringerEdgeCount());
      CHECK(IsGenericallyRigid(g));
      CHECK(g.MinDegree() >= 3);
      CHECK((ClassifyLastStep(g) == LastStep::kH1Capable) == (g.MinDegree() == 3));
      labels.insert(CanonicalForm(g));
    }
    CHECK(labels.size() == GenerateCatalog(n).size());
  }
}

TEST_CASE("last step classification") {
  CHECK(ClassifyLastStep(named::G16()) == LastStep::kH2Required);
  CHECK(ClassifyLastStep(HennebergH1(named::G16(), {1, 2, 3})) == LastStep::kH1Capable);
  CHECK(std::string(LastStepName(LastStep::kH2Required)) == "H2");
}

TEST_CASE("canonical labels are invariant under relabeling") {
  std::mt19937_64 rng(7);
  for (const Graph& g : {CompleteGraph(4), named::G16(), named::G48(), named::G128()}) {
    const CanonicalLabel label = CanonicalForm(g);
    for (int k = 0; k < 100; ++k) {
      const Graph h = g.Relabeled(RandomPerm(g.vertex_count(), rng));
      REQUIRE(CanonicalForm(h) == label);
    }
  }
}

TEST_CASE("canonical permutation is an explicit isomorphism") {
  std::mt19937_64 rng(8);
  for (const Graph& g : GenerateCatalog(7)) {
    const Graph h = g.Relabeled(RandomPerm(7, rng));
    const CanonicalResult a = Canonicalize(g);
    const CanonicalResult b = Canonicalize(h);
    CHECK(a.label == b.label);
    CHECK(g.Relabeled(a.perm) == h.Relabeled(b.perm));
  }
}

TEST_CASE("distinct named graphs have distinct labels") {
  CHECK(CanonicalForm(named::G32a()) != CanonicalForm(named::G32b()));
  CHECK(CanonicalForm(named::G16a()) != CanonicalForm(named::G16b()));
  CHECK(CanonicalForm(named::G48()).Hex().size() % 2 == 0);
}

}  // namespace
}  // namespace rigid

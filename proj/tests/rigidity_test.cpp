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
#include <random>

#include "doctest.h"
#include "rigid/error.hpp"
#include "rigid/henneberg.hpp"
#include "rigid/named_graphs.hpp"
#include "rigid/rigidity.hpp"

namespace rigid {
namespace {

// Two copies of K5 minus the edge v1v2, sharing v1 and v2; each half turns
// about the axis v1v2.
Graph DoubleBanana() {
  std::vector<Edge> edges;
  for (const std::vector<int>& half : {std::vector<int>{1, 2, 3, 4, 5}, std::vector<int>{1, 2, 6, 7, 8}}) {
    for (std::size_t i = 0; i < half.size(); ++i) {
      for (std::size_t j = i + 1; j < half.size(); ++j) {
        if (!(half[i] == 1 && half[j] == 2)) edges.emplace_back(half[i], half[j]);
      }
    }
  }
  return Graph(8, edges);
}

TEST_CASE("rigidity matrix rows") {
  std::mt19937_64 rng(3);
  const Eigen::MatrixX3d p = RandomRealization(4, rng);
  CHECK(p.cwiseAbs().maxCoeff() <= 1.0);
  const Eigen::MatrixXd r = RigidityMatrix(CompleteGraph(4), p);
  CHECK(r.rows() == 6);
  CHECK(r.cols() == 12);
  CHECK(NumericalRank(r) == 6);
  // Each row is orthogonal to translations.
  for (int k = 0; k < 3; ++k) {
    Eigen::VectorXd shift = Eigen::VectorXd::Zero(12);
    for (int v = 0; v < 4; ++v) shift[3 * v + k] = 1.0;
    CHECK((r * shift).norm() < 1e-12);
  }
}

TEST_CASE("generic rigidity") {
  CHECK(IsGenericallyRigid(CompleteGraph(4)));
  CHECK(IsGenericallyRigid(named::G48()));
  const Graph banana = DoubleBanana();
  CHECK(banana.HasGeiringerEdgeCount());
  CHECK_FALSE(IsGenericallyRigid(banana));
  std::mt19937_64 rng(4);
  const Eigen::MatrixXd m = RigidityMatrix(banana, RandomRealization(8, rng));
  CHECK(NumericalRank(m) == 3 * 8 - 6 - 1);
}

TEST_CASE("global rigidity") {
  CHECK(IsGloballyRigid(CompleteGraph(5)));
  CHECK_FALSE(IsGloballyRigid(named::G48()));
  const std::vector<Edge> extra{Edge(1, 7)};
  CHECK(IsGloballyRigid(named::G48().WithEdges(extra)));
  CHECK_THROWS_AS(IsGloballyRigid(DoubleBanana()), Error);
}

TEST_CASE("globally rigid extensions") {
  const Graph five = HennebergH1(CompleteGraph(4), {1, 2, 3});
  CHECK(FindGlobalExtension(five) == std::vector<Edge>{Edge(4, 5)});
  CHECK(FindGlobalExtension(named::G48()) == std::vector<Edge>{Edge(1, 7)});
  CHECK(FindGlobalExtension(CompleteGraph(5).WithoutEdge(Edge(2, 4))) ==
        std::vector<Edge>{Edge(2, 4)});
  CHECK(FindGlobalExtension(CompleteGraph(5)).empty());
}

TEST_CASE("suitable subgraphs") {
  const Graph g = named::G48();
  const auto subs = SuitableSubgraphs(g);
  CHECK(subs.size() == 20);
  CHECK(std::is_sorted(subs.begin(), subs.end()));
  for (const SamplingSubgraph& s : subs) {
    CHECK(g.Degree(s.u) == 4);
    std::vector<int> nbrs = g.Neighbors(s.u);
    std::vector<int> want{s.v, s.w, s.p, s.c};
    std::sort(want.begin(), want.end());
    CHECK(nbrs == want);
    CHECK(g.HasEdge(s.p, s.v));
    CHECK(g.HasEdge(s.v, s.w));
    CHECK(s.spherical == g.HasEdge(s.c, s.w));
  }
  const SamplingSubgraph fig{2, 3, 1, 7, 6, true};
  CHECK(std::find(subs.begin(), subs.end(), fig) != subs.end());
  CHECK(SuitableSubgraphs(CompleteGraph(4)).empty());
}

}  // namespace
}  // namespace rigid

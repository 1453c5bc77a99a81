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

#ifndef RIGID_RIGIDITY_HPP_
#define RIGID_RIGIDITY_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "rigid/graph.hpp"

namespace rigid {

// Random point configuration in the unit box, drawn from the integer grid
// [-1e6, 1e6]^3 and scaled by 1e-6. Row v-1 holds vertex v.
Eigen::MatrixX3d RandomRealization(int n, std::mt19937_64& rng);

// |E| x 3n matrix whose row for edge ij is (p_i - p_j) in the columns of i
// and (p_j - p_i) in the columns of j.
Eigen::MatrixXd RigidityMatrix(const Graph& g, const Eigen::MatrixX3d& points);

// Numerical rank: singular values below 1e-8 times the largest count as 0.
int NumericalRank(const Eigen::MatrixXd& m);

inline constexpr int kRigidityTrials = 3;

// Rigidity-matrix rank equals 3n - 6 at one of three random realizations.
bool IsGenericallyRigid(const Graph& g, std::uint64_t seed = 1);

// Stress-matrix test: at a random realization, a random equilibrium stress
// has an n x n stress matrix of rank n - 4. One-sided (a false result can be
// a false negative with negligible probability); three trials. Throws
// invalid-argument when g is not generically rigid.
bool IsGloballyRigid(const Graph& g, std::uint64_t seed = 1);

// Smallest set of non-edges whose addition makes g globally rigid, trying
// subset sizes 1 .. n-4 in lexicographic order. Returns the empty set when
// g is already globally rigid. Throws not-found when the search is exhausted.
std::vector<Edge> FindGlobalExtension(const Graph& g, std::uint64_t seed = 1);

// Five vertices u, v, w, p, c with N(u) = {v, w, p, c} and pv, vw in E.
struct SamplingSubgraph {
  int u = 0;
  int v = 0;
  int w = 0;
  int p = 0;
  int c = 0;
  bool spherical = false;  // cw in E

  auto operator<=>(const SamplingSubgraph&) const = default;
};

// One record per (u, v, {w, p}): the two tuples differing only by swapping
// w and p describe the same subgraph, so the orientation with cw in E is
// kept, falling back to w < p. Sorted by (u, v, w, p, c).
std::vector<SamplingSubgraph> SuitableSubgraphs(const Graph& g);

}  // namespace rigid

#endif  // RIGID_RIGIDITY_HPP_

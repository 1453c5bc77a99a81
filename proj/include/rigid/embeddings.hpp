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

#ifndef RIGID_EMBEDDINGS_HPP_
#define RIGID_EMBEDDINGS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "rigid/graph.hpp"
#include "rigid/homotopy.hpp"
#include "rigid/lengths.hpp"
#include "rigid/polynomial.hpp"

namespace rigid {

struct CountOptions {
  Formulation formulation = Formulation::kSphere;
  std::optional<std::array<int, 3>> triangle;     // sphere; DefaultTriangle otherwise
  std::optional<std::vector<Edge>> cm_variables;  // CM; first admissible set otherwise
  std::uint64_t seed = 1;
  TrackerOptions tracker;
};

struct EmbeddingCount {
  int complex_count = 0;
  int real_count = 0;
  int near_real_count = 0;  // nonreal roots within the near-real band
  Formulation formulation = Formulation::kSphere;
  std::array<int, 3> triangle{};
  std::vector<Edge> cm_variables;
  // Lengths are divided by `unit` (their maximum) before solving; solution
  // coordinates are in that unit.
  double unit = 1.0;
  PolynomialSystem system;
  SolutionSet solutions;
};

// Complex and real embedding counts. Sphere: root counts of the sphere
// system. CM: roots of a distance subsystem, real ones kept only when the
// embeddability inequalities hold, both counts doubled for the reflection.
// Throws infeasible on a violated triangle and not-found without a CM
// subsystem.
EmbeddingCount CountEmbeddings(const Graph& g, const LengthAssignment& d,
                               const CountOptions& opts = {});

// Re-solves a sphere count for new lengths by a parameter homotopy from the
// previous roots; falls back to a fresh solve when paths fail. Paths may
// diverge at special lengths, so callers chaining re-solves should keep the
// state with the most roots as the start.
EmbeddingCount RecountEmbeddings(const Graph& g, const LengthAssignment& d,
                                 const EmbeddingCount& previous, std::uint64_t seed,
                                 const TrackerOptions& tracker = {});

// Real embeddings (vertex v in row v - 1, original length units) of a
// sphere-formulation count.
std::vector<Eigen::MatrixX3d> RealEmbeddings(const EmbeddingCount& count, int n);

// Minimum over all triangles of the sphere-system bound: the mixed volume
// when the system has at most 4 variables, otherwise its complex root count.
// Throws not-found when g has no triangle.
int MinMixedVolumeOverTriangles(const Graph& g, const LengthAssignment& d,
                                std::uint64_t seed = 1, const TrackerOptions& tracker = {});

// Mixed volume of the distance subsystems in |V| - 4 variables: twice the
// minimum over all admissible globally rigid variable sets (reflection
// doubling). Throws unsupported when |V| - 4 > 4 and not-found when no set
// admits a subsystem.
int DistanceSubsystemMixedVolume(const Graph& g, std::uint64_t seed = 1);

// Points in R^3 whose pairwise distances are the given ones (classical
// multidimensional scaling). Throws infeasible when the distances are not
// embeddable in R^3 (bordered CM rank above 5 or a negative Gram eigenvalue).
Eigen::MatrixX3d RealizeFromDistances(const Eigen::MatrixXd& distances);

}  // namespace rigid

#endif  // RIGID_EMBEDDINGS_HPP_

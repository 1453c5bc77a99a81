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

#ifndef RIGID_MIXED_VOLUME_HPP_
#define RIGID_MIXED_VOLUME_HPP_

#include <cstdint>
#include <vector>

#include "rigid/polynomial.hpp"

namespace rigid {

using IntPoint = std::vector<std::int64_t>;

inline constexpr int kMaxMixedVolumeDimension = 4;

struct NewtonPolytope {
  int ambient_dimension = 0;
  int affine_dimension = -1;        // -1 for the empty polytope
  std::vector<IntPoint> vertices;   // sorted, in convex position

  bool degenerate() const { return affine_dimension < ambient_dimension; }
};

// Convex hull vertices of the exponent vectors of p. Exact; works in any
// ambient dimension as long as the affine dimension is at most 4.
NewtonPolytope NewtonPolytopeOf(const Polynomial& p);
std::vector<NewtonPolytope> NewtonPolytopes(const PolynomialSystem& sys);

// Affine dimension of a point set (exact), -1 when empty.
int AffineDimension(const std::vector<IntPoint>& pts);

// d! * Euclidean volume of conv(pts) in R^d, d = point length <= 4; zero
// when the hull is not full-dimensional.
std::int64_t NormalizedVolume(const std::vector<IntPoint>& pts);

// Points of conv(pts) that are extreme, sorted. Full-dimensional or not.
std::vector<IntPoint> ConvexHullVertices(const std::vector<IntPoint>& pts);

// Normalized mixed volume of n polytopes in R^n (n <= 4): n unit simplices
// give 1. Inclusion-exclusion over Minkowski sums of subsets. Throws
// unsupported for n > 4 and invalid-argument on a dimension mismatch.
std::int64_t MixedVolume(const std::vector<NewtonPolytope>& polytopes);

}  // namespace rigid

#endif  // RIGID_MIXED_VOLUME_HPP_

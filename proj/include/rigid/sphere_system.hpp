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

#ifndef RIGID_SPHERE_SYSTEM_HPP_
#define RIGID_SPHERE_SYSTEM_HPP_

#include <array>

#include <Eigen/Dense>

#include "rigid/graph.hpp"
#include "rigid/lengths.hpp"
#include "rigid/polynomial.hpp"

namespace rigid {

struct FixedTriangle {
  Eigen::Vector3d v1 = Eigen::Vector3d::Zero();
  Eigen::Vector3d v2 = Eigen::Vector3d::Zero();
  Eigen::Vector3d v3 = Eigen::Vector3d::Zero();
  bool degenerate = false;  // collinear: x3 == 0
};

// v1 = (0, 0, 0), v2 = (0, d12, 0), v3 = (x3, y3, 0) with x3 >= 0.
// Throws infeasible when the triangle inequality fails.
FixedTriangle FixedTriangleCoordinates(double d12, double d13, double d23);

// Sphere equations with v1 v2 v3 fixed: per free vertex v the unknowns
// x_v, y_v, z_v, s_v, one equation x^2 + y^2 + z^2 = s per free vertex and
// s_u + s_v - 2 <p_u, p_v> = d_uv^2 per edge outside the triangle, with
// fixed positions substituted. Square of size 4(n - 3).
PolynomialSystem BuildSphereSystem(const Graph& g, const LengthAssignment& d,
                                   const std::array<int, 3>& triangle);

// Triangle of g minimizing the total degree of the sphere system (the
// number of edges between free vertices), ties broken lexicographically.
// Throws not-found when g has no triangle.
std::array<int, 3> DefaultTriangle(const Graph& g);

// Coordinates of every vertex (row v-1) from a sphere-system solution.
Eigen::MatrixX3cd SphereSolutionPoints(const PolynomialSystem& sys,
                                       const Eigen::VectorXcd& values, int n);

}  // namespace rigid

#endif  // RIGID_SPHERE_SYSTEM_HPP_

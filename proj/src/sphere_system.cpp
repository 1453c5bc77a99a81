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

#include "rigid/sphere_system.hpp"

#include <cmath>

#include "rigid/error.hpp"

namespace rigid {

FixedTriangle FixedTriangleCoordinates(double d12, double d13, double d23) {
  if (!(d12 > 0 && d13 > 0 && d23 > 0)) {
    Fail(ErrorCode::kInvalidArgument, "triangle lengths must be positive");
  }
  FixedTriangle t;
  t.v2 = {0.0, d12, 0.0};
  const double y3 = (d13 * d13 - d23 * d23 + d12 * d12) / (2.0 * d12);
  const double x3_sq = d13 * d13 - y3 * y3;
  const double scale = std::max({d12, d13, d23});
  const double tol = 1e-12 * scale * scale;
  if (x3_sq < -tol) {
    Fail(ErrorCode::kInfeasible, "triangle inequality violated");
  }
  if (x3_sq <= tol) {
    t.degenerate = true;
    t.v3 = {0.0, y3, 0.0};
  } else {
    t.v3 = {std::sqrt(x3_sq), y3, 0.0};
  }
  return t;
}

PolynomialSystem BuildSphereSystem(const Graph& g, const LengthAssignment& d,
                                   const std::array<int, 3>& triangle) {
  const auto [t1, t2, t3] = triangle;
  if (!g.HasEdge(t1, t2) || !g.HasEdge(t1, t3) || !g.HasEdge(t2, t3)) {
    Fail(ErrorCode::kInvalidArgument, "fixed triangle is not a triangle of the graph");
  }
  d.RequireCovers(g);
  const FixedTriangle frame =
      FixedTriangleCoordinates(d.At(t1, t2), d.At(t1, t3), d.At(t2, t3));

  PolynomialSystem sys;
  sys.formulation = Formulation::kSphere;
  sys.triangle = triangle;
  sys.fixed_positions[t1] = frame.v1;
  sys.fixed_positions[t2] = frame.v2;
  sys.fixed_positions[t3] = frame.v3;

  const int n = g.vertex_count();
  for (int v = 1; v <= n; ++v) {
    if (sys.fixed_positions.contains(v)) continue;
    const int base = sys.size();
    sys.vertex_variables[v] = {base, base + 1, base + 2, base + 3};
    const std::string id = std::to_string(v);
    sys.variables.push_back("x" + id);
    sys.variables.push_back("y" + id);
    sys.variables.push_back("z" + id);
    sys.variables.push_back("s" + id);
  }
  const int m = sys.size();
  auto var = [m](int index, Complex c = 1.0) { return Polynomial::Variable(m, index, c); };

  for (const auto& [v, idx] : sys.vertex_variables) {
    Polynomial p(m);
    for (int k = 0; k < 3; ++k) p += var(idx[k]) * var(idx[k]);
    p -= var(idx[3]);
    sys.polynomials.push_back(std::move(p));
  }
  for (const Edge& e : g.edges()) {
    const bool fa = sys.fixed_positions.contains(e.a);
    const bool fb = sys.fixed_positions.contains(e.b);
    if (fa && fb) continue;
    Polynomial p = Polynomial::Constant(m, -d.Squared(e.a, e.b));
    if (!fa && !fb) {
      const auto& ia = sys.vertex_variables[e.a];
      const auto& ib = sys.vertex_variables[e.b];
      p += var(ia[3]) + var(ib[3]);
      for (int k = 0; k < 3; ++k) p -= var(ia[k], 2.0) * var(ib[k]);
    } else {
      const int fixed = fa ? e.a : e.b;
      const int free = fa ? e.b : e.a;
      const Eigen::Vector3d& q = sys.fixed_positions[fixed];
      const auto& idx = sys.vertex_variables[free];
      p += var(idx[3]);
      p += Polynomial::Constant(m, q.squaredNorm());
      for (int k = 0; k < 3; ++k) {
        if (q[k] != 0.0) p -= var(idx[k], 2.0 * q[k]);
      }
    }
    sys.polynomials.push_back(std::move(p));
  }
  sys.Validate();
  return sys;
}

std::array<int, 3> DefaultTriangle(const Graph& g) {
  const auto triangles = g.Triangles();
  if (triangles.empty()) Fail(ErrorCode::kNotFound, "graph has no triangle");
  std::array<int, 3> best{};
  int best_count = -1;
  for (const auto& t : triangles) {
    int free_edges = 0;
    for (const Edge& e : g.edges()) {
      auto fixed = [&](int v) { return v == t[0] || v == t[1] || v == t[2]; };
      if (!fixed(e.a) && !fixed(e.b)) ++free_edges;
    }
    if (best_count < 0 || free_edges < best_count) {
      best_count = free_edges;
      best = t;
    }
  }
  return best;
}

Eigen::MatrixX3cd SphereSolutionPoints(const PolynomialSystem& sys,
                                       const Eigen::VectorXcd& values, int n) {
  Eigen::MatrixX3cd pts(n, 3);
  for (int v = 1; v <= n; ++v) {
    if (auto it = sys.fixed_positions.find(v); it != sys.fixed_positions.end()) {
      pts.row(v - 1) = it->second.cast<Complex>().transpose();
    } else {
      const auto& idx = sys.vertex_variables.at(v);
      for (int k = 0; k < 3; ++k) pts(v - 1, k) = values(idx[k]);
    }
  }
  return pts;
}

}  // namespace rigid

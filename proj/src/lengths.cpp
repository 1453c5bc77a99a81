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

#include "rigid/lengths.hpp"

#include <cmath>

#include "rigid/error.hpp"
#include "rigid/rigidity.hpp"

namespace rigid {

LengthAssignment::LengthAssignment(
    std::initializer_list<std::pair<const Edge, double>> values) {
  for (const auto& [e, d] : values) Set(e, d);
}

void LengthAssignment::Set(const Edge& e, double length) {
  if (!std::isfinite(length) || length <= 0.0) {
    Fail(ErrorCode::kInvalidArgument,
         "length of " + e.ToString() + " must be positive, got " + std::to_string(length));
  }
  values_[e] = length;
}

double LengthAssignment::At(const Edge& e) const {
  auto it = values_.find(e);
  if (it == values_.end()) Fail(ErrorCode::kNotFound, "no length for edge " + e.ToString());
  return it->second;
}

void LengthAssignment::RequireCovers(const Graph& g) const {
  for (const Edge& e : g.edges()) {
    if (!Contains(e)) {
      Fail(ErrorCode::kInvalidArgument, "missing length for edge " + e.ToString());
    }
  }
}

LengthAssignment LengthAssignment::Restricted(const Graph& g) const {
  LengthAssignment out;
  for (const Edge& e : g.edges()) out.Set(e, At(e));
  return out;
}

LengthAssignment LengthAssignment::Scaled(double factor) const {
  LengthAssignment out;
  for (const auto& [e, d] : values_) out.Set(e, d * factor);
  return out;
}

double LengthAssignment::MaxLength() const {
  double m = 0.0;
  for (const auto& [e, d] : values_) m = std::max(m, d);
  return m;
}

Eigen::VectorXd LengthAssignment::AsVector(const Graph& g) const {
  Eigen::VectorXd v(g.edge_count());
  int i = 0;
  for (const Edge& e : g.edges()) v(i++) = At(e);
  return v;
}

LengthAssignment InducedLengths(const Graph& g, const Eigen::MatrixX3d& points) {
  LengthAssignment out;
  for (const Edge& e : g.edges()) {
    out.Set(e, (points.row(e.a - 1) - points.row(e.b - 1)).norm());
  }
  return out;
}

LengthAssignment GenericLengths(const Graph& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> jitter(-0.05, 0.05);
  // Redraw until every triangle of g stays strictly feasible after jitter.
  while (true) {
    const Eigen::MatrixX3d pts = RandomRealization(g.vertex_count(), rng);
    LengthAssignment out;
    for (const Edge& e : g.edges()) {
      const double d = (pts.row(e.a - 1) - pts.row(e.b - 1)).norm();
      out.Set(e, d * (1.0 + jitter(rng)));
    }
    bool feasible = true;
    for (const auto& [i, j, k] : g.Triangles()) {
      const double a = out.At(i, j);
      const double b = out.At(i, k);
      const double c = out.At(j, k);
      if (a + b <= c * 1.001 || a + c <= b * 1.001 || b + c <= a * 1.001) feasible = false;
    }
    if (feasible) return out;
  }
}

}  // namespace rigid

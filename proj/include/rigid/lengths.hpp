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

#ifndef RIGID_LENGTHS_HPP_
#define RIGID_LENGTHS_HPP_

#include <map>
#include <random>

#include <Eigen/Dense>

#include "rigid/graph.hpp"

namespace rigid {

// Positive length per edge.
class LengthAssignment {
 public:
  LengthAssignment() = default;
  LengthAssignment(std::initializer_list<std::pair<const Edge, double>> values);

  // Throws invalid-argument for non-positive or non-finite lengths.
  void Set(const Edge& e, double length);
  bool Contains(const Edge& e) const { return values_.contains(e); }
  // Throws not-found when e has no length.
  double At(const Edge& e) const;
  double At(int i, int j) const { return At(Edge(i, j)); }
  double Squared(int i, int j) const {
    const double d = At(i, j);
    return d * d;
  }

  const std::map<Edge, double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  // Throws invalid-argument naming the first edge of g without a length.
  void RequireCovers(const Graph& g) const;
  // Only the entries for edges of g.
  LengthAssignment Restricted(const Graph& g) const;
  LengthAssignment Scaled(double factor) const;
  double MaxLength() const;
  // Lengths of the edges of g, in edge order.
  Eigen::VectorXd AsVector(const Graph& g) const;

  bool operator==(const LengthAssignment&) const = default;

 private:
  std::map<Edge, double> values_;
};

// Edge distances of a point configuration (row v-1 is vertex v).
LengthAssignment InducedLengths(const Graph& g, const Eigen::MatrixX3d& points);

// Random realization in the unit box; each induced length is multiplied by
// (1 + u), u uniform in [-0.05, 0.05].
LengthAssignment GenericLengths(const Graph& g, std::mt19937_64& rng);

}  // namespace rigid

#endif  // RIGID_LENGTHS_HPP_

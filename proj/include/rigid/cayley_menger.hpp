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

#ifndef RIGID_CAYLEY_MENGER_HPP_
#define RIGID_CAYLEY_MENGER_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rigid/graph.hpp"
#include "rigid/lengths.hpp"
#include "rigid/polynomial.hpp"

namespace rigid {

// Entry of the bordered distance matrix.
struct CmEntry {
  enum class Kind { kConstant, kUnknown, kMissing };
  Kind kind = Kind::kConstant;
  double value = 0.0;  // squared length, or 0/1 on the diagonal/border
  int unknown = -1;    // index into the unknown list
};

// (n+1) x (n+1) bordered matrix: row/column 0 is the border of ones with a
// zero corner, entry (i, j) for vertices i, j is d_ij^2 on edges, the unknown
// x_k on unknowns[k], and kMissing on the remaining non-edges.
struct CmMatrix {
  int n = 0;
  std::vector<Edge> unknowns;
  std::vector<std::vector<CmEntry>> entries;

  const CmEntry& at(int i, int j) const { return entries[i][j]; }
  bool complete() const;  // no kMissing entries
};

// Throws invalid-argument when an unknown is an edge or repeated.
CmMatrix BuildCmMatrix(const Graph& g, const LengthAssignment& d,
                       const std::vector<Edge>& unknowns);

// Determinant of the principal bordered submatrix on the given vertices as a
// polynomial in the unknowns. Throws invalid-argument on a missing entry.
Polynomial CmMinor(const CmMatrix& m, const std::vector<int>& points);

// Five-point vertex sets whose bordered 6x6 minor is fully known and
// contains at least one unknown, in lexicographic order.
std::vector<std::array<int, 5>> CandidateMinors(const CmMatrix& m);

// Square system in the squared lengths of vars: |vars| bordered 6x6 minors
// (which vanish for every configuration in R^3) jointly involving every
// variable, with a nonsingular Jacobian at a random point. Candidates are
// added greedily in lexicographic order when they bring new variables; if
// that selection is singular, all combinations are tried in lexicographic
// order. Throws not-found when none qualifies.
PolynomialSystem CmSubsystem(const Graph& g, const LengthAssignment& d,
                             const std::vector<Edge>& vars, std::uint64_t seed = 1);

// Every k-subset of non-edges (lexicographic) that admits a CM subsystem.
// With require_global, only subsets whose addition makes g globally rigid.
// Stops after `limit` sets when limit > 0.
std::vector<std::vector<Edge>> EnumerateCmVariableSets(const Graph& g, int k,
                                                       bool require_global,
                                                       std::uint64_t seed = 1,
                                                       std::size_t limit = 0);

// One embeddability inequality (-1)^k det(CM') >= -eps on a point subset.
struct Inequality {
  std::vector<int> points;
  double value = 0.0;  // (-1)^k det(CM')
  double epsilon = 0.0;
  bool satisfied() const { return value >= -epsilon; }
};

// All inequalities on 2, 3 and 4 points whose pairwise squared distances
// are known from d and the assignment (unknown edge -> squared length).
// eps = 1e-9 * m^(k-1) with m the largest entry of CM'.
std::vector<Inequality> Inequalities(const Graph& g, const LengthAssignment& d,
                                     const std::map<Edge, double>& assignment);

// True iff every inequality holds.
bool EvaluateInequalities(const Graph& g, const LengthAssignment& d,
                          const std::map<Edge, double>& assignment);

// Point subsets (3 or 4 points) whose only non-edge pair is `unknown`: the
// triangular and tetrangular inequalities that constrain it alone.
std::vector<std::vector<int>> InequalitiesInvolving(const Graph& g, const Edge& unknown);

}  // namespace rigid

#endif  // RIGID_CAYLEY_MENGER_HPP_

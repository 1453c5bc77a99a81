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

#ifndef RIGID_BOUNDS_HPP_
#define RIGID_BOUNDS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rigid/graph.hpp"

namespace rigid {

using BigInt = boost::multiprecision::cpp_int;

enum class CountProvenance { kDoubling, kSolved, kPaper };

const char* CountProvenanceName(CountProvenance p);

// Maximal complex (c3) and real (r3) embedding counts of one graph.
struct CountRecord {
  std::string label;
  std::optional<int> c3;
  std::optional<int> r3;
  CountProvenance provenance = CountProvenance::kSolved;
};

// Key used for catalog records: the hex canonical label.
std::string GraphLabel(const Graph& g);

// Fills every graph of `catalog` that has a degree-3 vertex with twice the
// counts of the graph left by deleting it. Graphs are processed by vertex
// count, so parents may come from `base` or from smaller catalog graphs.
// All degree-3 vertices with a known parent must agree, and so must a base
// entry for the graph itself; otherwise throws inconsistent. Graphs without
// a known parent keep their base entry or get none.
std::map<std::string, CountRecord> PropagateH1Doubling(
    const std::vector<Graph>& catalog, const std::map<std::string, CountRecord>& base);

// Published maximal counts: K4, the octahedron, the six 7-vertex graphs
// whose last step must be H2, G128, and c3 of G160 (its r3 is open).
std::map<std::string, CountRecord> PublishedCounts();

struct GlueBound {
  BigInt value;
  bool flagged = false;  // rH does not divide rG; value is the floor of a rational
};

// 2^((n - nH) mod (nG - nH)) * rH * (rG / rH)^floor((n - nH) / (nG - nH)):
// the real count of k copies of G glued along a common H, plus H1 steps for
// the remaining vertices. For n < nG this is H followed by H1 steps. Throws
// invalid-argument unless nH <= n, nH < nG and rG, rH >= 1.
GlueBound GlueLowerBound(int rG, int nG, int rH, int nH, int n);

// (rG / rH)^(1 / (nG - nH)), the growth rate of the bound above.
double AsymptoticBase(int rG, int nG, int rH, int nH);

}  // namespace rigid

#endif  // RIGID_BOUNDS_HPP_

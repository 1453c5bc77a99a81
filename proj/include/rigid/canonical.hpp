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

#ifndef RIGID_CANONICAL_HPP_
#define RIGID_CANONICAL_HPP_

#include <compare>
#include <string>
#include <vector>

#include "rigid/graph.hpp"

namespace rigid {

// Relabeling-invariant encoding of a graph: the vertex count followed by
// the upper-triangular adjacency bits of the canonically ordered graph.
// Two graphs share a label iff they are isomorphic.
struct CanonicalLabel {
  std::string bytes;

  auto operator<=>(const CanonicalLabel&) const = default;
  std::string Hex() const;
};

struct CanonicalResult {
  CanonicalLabel label;
  // perm[v] is the canonical position (1-based) of vertex v; perm[0] unused.
  std::vector<int> perm;
};

// Individualization-refinement search: color refinement by neighbour-color
// multisets, then branching over every vertex of the first smallest
// non-singleton cell. The label is the minimum leaf encoding.
CanonicalResult Canonicalize(const Graph& g);

inline CanonicalLabel CanonicalForm(const Graph& g) {
  return Canonicalize(g).label;
}

// The canonical representative g.Relabeled(perm).
Graph CanonicalGraph(const Graph& g);

// Encoding of g under its current labeling (no search).
CanonicalLabel EncodeLabeled(const Graph& g);

}  // namespace rigid

#endif  // RIGID_CANONICAL_HPP_

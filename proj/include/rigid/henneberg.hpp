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

#ifndef RIGID_HENNEBERG_HPP_
#define RIGID_HENNEBERG_HPP_

#include <array>
#include <string>
#include <vector>

#include "rigid/graph.hpp"

namespace rigid {

// Henneberg steps. Each returns a new graph with vertex n+1 appended.

// Joins a new vertex to three distinct existing vertices.
Graph HennebergH1(const Graph& g, const std::array<int, 3>& targets);

// Deletes `removed` and joins a new vertex to its endpoints and to the two
// `extra` vertices.
Graph HennebergH2(const Graph& g, const Edge& removed, const std::array<int, 2>& extra);

enum class H3Variant { kX, kV };

// X-replacement: `removed` are two disjoint edges and `attach` holds one
// further vertex. Double V-replacement: `removed` share exactly one vertex
// and `attach` holds two further vertices. Either way the new vertex is
// joined to five distinct vertices.
Graph HennebergH3(const Graph& g, H3Variant variant, const std::array<Edge, 2>& removed,
                  const std::vector<int>& attach);

enum class LastStep { kH1Capable, kH2Required };

const char* LastStepName(LastStep step);

// A Geiringer graph can come from an H1 step iff it has a degree-3 vertex.
LastStep ClassifyLastStep(const Graph& g);

inline constexpr int kMinCatalogVertices = 4;
inline constexpr int kMaxCatalogVertices = 12;

// All non-isomorphic Geiringer graphs on n vertices reachable from K4 by H1
// and H2 steps, as canonical representatives sorted by canonical label.
// Throws unsupported for n outside [4, 12].
std::vector<Graph> GenerateCatalog(int n);

// Every catalog level from 4 up to n; element i holds level 4 + i.
std::vector<std::vector<Graph>> GenerateCatalogLevels(int n);

Graph CompleteGraph(int n);

}  // namespace rigid

#endif  // RIGID_HENNEBERG_HPP_

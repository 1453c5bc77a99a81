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

#ifndef RIGID_NAMED_GRAPHS_HPP_
#define RIGID_NAMED_GRAPHS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rigid/graph.hpp"
#include "rigid/lengths.hpp"

namespace rigid::named {

// Geiringer graphs referred to by name, with the usual vertex numbering.
// The suffix is the number of complex embeddings.
Graph G16();   // octahedron (cyclohexane), 6 vertices
Graph G48();
Graph G32a();
Graph G32b();
Graph G24();
Graph G16a();
Graph G16b();
Graph G128();
Graph G160();

// Looks up one of the names above ("G48", "G16a", ...).
std::optional<Graph> ByName(const std::string& name);
std::vector<std::string> Names();

// Edge lengths with known real embedding counts.
LengthAssignment G48Lengths28();   // 28 real embeddings
LengthAssignment G48Lengths32();   // G48Lengths28 with uv, uw, up, uc resampled
LengthAssignment G48Lengths48();
LengthAssignment G16aLengths16();
LengthAssignment G16bLengths16();
LengthAssignment G24Lengths24();
LengthAssignment G32aLengths32();
LengthAssignment G32bLengths32();
LengthAssignment G128Lengths128();
LengthAssignment G160Lengths132();

// "<graph>-<real count>", e.g. "G48-28" for G48Lengths28.
std::optional<LengthAssignment> LengthsByName(const std::string& name);

}  // namespace rigid::named

#endif  // RIGID_NAMED_GRAPHS_HPP_

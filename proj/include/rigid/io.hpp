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

#ifndef RIGID_IO_HPP_
#define RIGID_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "rigid/coupler.hpp"
#include "rigid/graph.hpp"
#include "rigid/henneberg.hpp"
#include "rigid/lengths.hpp"
#include "rigid/rigidity.hpp"

namespace rigid {

using Json = nlohmann::json;

// Graph JSON: {"vertices": n, "edges": [[i, j], ...]}.
Json GraphToJson(const Graph& g);
Graph GraphFromJson(const Json& j);

// Length JSON: {"edges": {"i-j": length, ...}}.
Json LengthsToJson(const LengthAssignment& d);
LengthAssignment LengthsFromJson(const Json& j);

// Throws not-found when the file cannot be opened and invalid-argument on
// malformed JSON.
Json ReadJsonFile(const std::string& path);
void WriteJsonFile(const std::string& path, const Json& j);

// "1-2,1-3,..." in edge order.
std::string EdgeListString(const Graph& g);
Graph GraphFromEdgeList(const std::string& text);

// First line of every exported artifact: "# version=..., seed=..., config=<hash>".
struct ArtifactHeader {
  std::string version;
  std::uint64_t seed = 0;
  std::string config_hash;
};

std::string LibraryVersion();
// FNV-1a of the canonical configuration text, 16 hex digits.
std::string ConfigHash(const std::string& config);
void WriteHeader(std::ostream& os, const ArtifactHeader& header);

// Catalog TSV: label<TAB>edge-list<TAB>lastStep, one graph per line.
struct CatalogEntry {
  std::string label;
  Graph graph;
  LastStep last_step = LastStep::kH1Capable;
};

void WriteCatalog(std::ostream& os, const std::vector<CatalogEntry>& entries);
// Lines starting with '#' are skipped; the lastStep column is optional
// and recomputed when absent.
std::vector<CatalogEntry> ReadCatalog(std::istream& is);

struct ResultRow {
  std::string graph_id;
  std::string formulation;
  std::string triangle;  // "i,j,k" or empty
  std::uint64_t seed = 0;
  std::optional<long long> mixed_volume;
  int complex_count = 0;
  int real_count = 0;
  double wall_time_s = 0.0;
};

void WriteResultsCsv(std::ostream& os, const std::vector<ResultRow>& rows);

// "# graph=..., subgraph=u,v,w,p,c, t=..." then x,y,z rows.
void WriteCurveCsv(std::ostream& os, const std::string& graph_id, const SamplingSubgraph& sub,
                   double t, const std::vector<Eigen::Vector3d>& points);

std::string SubgraphString(const SamplingSubgraph& sub);
// Parses "u,v,w,p,c"; the spherical flag is left false.
SamplingSubgraph ParseSubgraph(const std::string& text);

// phi,theta,t,r,realCount; failed records are written with realCount "nan".
void WriteSamplingLogHeader(std::ostream& os);
void AppendSamplingLog(std::ostream& os, const SamplingSubgraph& sub,
                       const std::vector<SampleRecord>& records);

struct ClassificationRow {
  std::string label;
  int n = 0;
  LastStep last_step = LastStep::kH1Capable;
  std::optional<int> c3;
  std::optional<int> r3;
  std::string provenance;
};

void WriteClassificationCsv(std::ostream& os, const std::vector<ClassificationRow>& rows);

}  // namespace rigid

#endif  // RIGID_IO_HPP_

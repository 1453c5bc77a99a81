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

#include "rigid/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "rigid/error.hpp"

namespace rigid {
namespace {

int ParseInt(std::string_view s, const std::string& what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    Fail(ErrorCode::kInvalidArgument, "bad integer '" + std::string(s) + "' in " + what);
  }
  return v;
}

Edge ParseEdge(std::string_view s) {
  const auto dash = s.find('-');
  if (dash == std::string_view::npos) {
    Fail(ErrorCode::kInvalidArgument, "edge '" + std::string(s) + "' is not of the form i-j");
  }
  return Edge(ParseInt(s.substr(0, dash), "edge"), ParseInt(s.substr(dash + 1), "edge"));
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

// Shortest text that reads back to the same double.
std::string Num(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return ec == std::errc() ? std::string(buf, ptr) : "nan";
}

}  // namespace

Json GraphToJson(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.a, e.b});
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

Graph GraphFromJson(const Json& j) {
  try {
    std::vector<Edge> edges;
    for (const Json& e : j.at("edges")) {
      if (e.size() != 2) Fail(ErrorCode::kInvalidArgument, "graph edge must have two endpoints");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(j.at("vertices").get<int>(), std::move(edges));
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kInvalidArgument, std::string("malformed graph JSON: ") + e.what());
  }
}

Json LengthsToJson(const LengthAssignment& d) {
  Json edges = Json::object();
  for (const auto& [e, len] : d.values()) edges[e.ToString()] = len;
  return {{"edges", edges}};
}

LengthAssignment LengthsFromJson(const Json& j) {
  try {
    LengthAssignment d;
    for (const auto& [key, value] : j.at("edges").items()) d.Set(ParseEdge(key), value.get<double>());
    return d;
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kInvalidArgument, std::string("malformed length JSON: ") + e.what());
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kNotFound, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kInvalidArgument, path + ": " + e.what());
  }
}

void WriteJsonFile(const std::string& path, const Json& j) {
  // Written to a sibling and renamed so readers never see a partial file.
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) Fail(ErrorCode::kNotFound, "cannot write " + tmp);
    out << j.dump(2) << '\n';
    if (!out) Fail(ErrorCode::kNotFound, "write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    Fail(ErrorCode::kNotFound, "cannot rename " + tmp + " to " + path);
  }
}

std::string EdgeListString(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += ',';
    out += e.ToString();
  }
  return out;
}

Graph GraphFromEdgeList(const std::string& text) {
  std::vector<Edge> edges;
  int n = 0;
  for (const std::string& item : Split(text, ',')) {
    const Edge e = ParseEdge(item);
    n = std::max(n, e.b);
    edges.push_back(e);
  }
  return Graph(n, std::move(edges));
}

std::string LibraryVersion() { return "0.1.0"; }

std::string ConfigHash(const std::string& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : config) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

void WriteHeader(std::ostream& os, const ArtifactHeader& header) {
  os << "# version=" << header.version << ", seed=" << header.seed
     << ", config=" << header.config_hash << '\n';
}

void WriteCatalog(std::ostream& os, const std::vector<CatalogEntry>& entries) {
  for (const CatalogEntry& e : entries) {
    os << e.label << '\t' << EdgeListString(e.graph) << '\t' << LastStepName(e.last_step) << '\n';
  }
}

std::vector<CatalogEntry> ReadCatalog(std::istream& is) {
  std::vector<CatalogEntry> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> cols = Split(line, '\t');
    if (cols.size() < 2) Fail(ErrorCode::kInvalidArgument, "catalog line needs label and edges");
    CatalogEntry e{cols[0], GraphFromEdgeList(cols[1]), LastStep::kH1Capable};
    if (cols.size() > 2 && (cols[2] == "H1" || cols[2] == "H2")) {
      e.last_step = cols[2] == "H1" ? LastStep::kH1Capable : LastStep::kH2Required;
    } else {
      e.last_step = ClassifyLastStep(e.graph);
    }
    out.push_back(std::move(e));
  }
  return out;
}

void WriteResultsCsv(std::ostream& os, const std::vector<ResultRow>& rows) {
  os << "graph_id,formulation,triangle,seed,mixedVolume,complexCount,realCount,wall_time_s\n";
  for (const ResultRow& r : rows) {
    os << r.graph_id << ',' << r.formulation << ",\"" << r.triangle << "\"," << r.seed << ','
       << (r.mixed_volume ? std::to_string(*r.mixed_volume) : "") << ',' << r.complex_count
       << ',' << r.real_count << ',' << std::fixed << std::setprecision(3) << r.wall_time_s
       << std::defaultfloat << '\n';
  }
}

std::string SubgraphString(const SamplingSubgraph& sub) {
  return std::to_string(sub.u) + ',' + std::to_string(sub.v) + ',' + std::to_string(sub.w) +
         ',' + std::to_string(sub.p) + ',' + std::to_string(sub.c);
}

SamplingSubgraph ParseSubgraph(const std::string& text) {
  const std::vector<std::string> parts = Split(text, ',');
  if (parts.size() != 5) Fail(ErrorCode::kInvalidArgument, "subgraph must be u,v,w,p,c");
  SamplingSubgraph sub;
  sub.u = ParseInt(parts[0], "subgraph");
  sub.v = ParseInt(parts[1], "subgraph");
  sub.w = ParseInt(parts[2], "subgraph");
  sub.p = ParseInt(parts[3], "subgraph");
  sub.c = ParseInt(parts[4], "subgraph");
  return sub;
}

void WriteCurveCsv(std::ostream& os, const std::string& graph_id, const SamplingSubgraph& sub,
                   double t, const std::vector<Eigen::Vector3d>& points) {
  os << "# graph=" << graph_id << ", subgraph=" << SubgraphString(sub) << ", t=" << Num(t) << '\n';
  os << "x,y,z\n";
  for (const Eigen::Vector3d& p : points) {
    os << Num(p.x()) << ',' << Num(p.y()) << ',' << Num(p.z()) << '\n';
  }
}

void WriteSamplingLogHeader(std::ostream& os) { os << "subgraph,phi,theta,t,r,realCount\n"; }

void AppendSamplingLog(std::ostream& os, const SamplingSubgraph& sub,
                       const std::vector<SampleRecord>& records) {
  for (const SampleRecord& r : records) {
    os << '"' << SubgraphString(sub) << "\"," << Num(r.phi) << ',' << Num(r.theta) << ','
       << Num(r.t) << ',' << Num(r.r) << ',' << (r.failed ? "nan" : std::to_string(r.real_count))
       << '\n';
  }
}

void WriteClassificationCsv(std::ostream& os, const std::vector<ClassificationRow>& rows) {
  os << "label,n,lastStep,c3,r3,provenance\n";
  for (const ClassificationRow& r : rows) {
    os << r.label << ',' << r.n << ',' << LastStepName(r.last_step) << ','
       << (r.c3 ? std::to_string(*r.c3) : "") << ',' << (r.r3 ? std::to_string(*r.r3) : "")
       << ',' << r.provenance << '\n';
  }
}

}  // namespace rigid

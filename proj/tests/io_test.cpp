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


#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "rigid/error.hpp"
#include "rigid/henneberg.hpp"
#include "rigid/io.hpp"
#include "rigid/named_graphs.hpp"

namespace rigid {
namespace {

std::string TempPath(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST_CASE("graph JSON round trip") {
  for (const std::string& name : named::Names()) {
    const Graph g = *named::ByName(name);
    const Json j = GraphToJson(g);
    CHECK(j.at("vertices") == g.vertex_count());
    CHECK(GraphFromJson(Json::parse(j.dump())) == g);
    CHECK(GraphFromEdgeList(EdgeListString(g)) == g);
  }
  CHECK(GraphToJson(CompleteGraph(4)).dump() ==
        R"({"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]],"vertices":4})");
  CHECK(CodeOf([] { GraphFromJson(Json::parse(R"({"edges":[[1,2,3]],"vertices":3})")); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { GraphFromJson(Json::parse(R"({"edges":[]})")); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { GraphFromEdgeList("1-2,x"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("length JSON round trip is exact") {
  std::mt19937_64 rng(1);
  const Graph g = named::G48();
  const LengthAssignment d = GenericLengths(g, rng);
  CHECK(LengthsFromJson(Json::parse(LengthsToJson(d).dump())) == d);
  const Json j = LengthsToJson(named::G48Lengths28());
  CHECK(j.at("edges").contains("1-2"));
  CHECK(LengthsFromJson(Json::parse(R"({"edges":{"2-1":1.5}})")).At(1, 2) == 1.5);
  CHECK(CodeOf([] { LengthsFromJson(Json::parse(R"({"edges":{"12":1.5}})")); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { LengthsFromJson(Json::parse(R"({"lengths":{}})")); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("JSON files") {
  const std::string path = TempPath("rigid_io_test.json");
  WriteJsonFile(path, LengthsToJson(named::G48Lengths48()));
  CHECK(LengthsFromJson(ReadJsonFile(path)) == named::G48Lengths48());
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  std::ofstream(path) << "{not json";
  CHECK(CodeOf([&] { ReadJsonFile(path); }) == ErrorCode::kInvalidArgument);
  std::filesystem::remove(path);
  CHECK(CodeOf([&] { ReadJsonFile(path); }) == ErrorCode::kNotFound);
}

TEST_CASE("artifact headers") {
  CHECK(ConfigHash("abc").size() == 16);
  CHECK(ConfigHash("abc") == ConfigHash("abc"));
  CHECK(ConfigHash("abc") != ConfigHash("abd"));
  // FNV-1a of the empty string is the offset basis.
  CHECK(ConfigHash("") == "cbf29ce484222325");
  std::ostringstream os;
  WriteHeader(os, {LibraryVersion(), 42, ConfigHash("x")});
  CHECK(os.str() == "# version=0.1.0, seed=42, config=" + ConfigHash("x") + "\n");
}

TEST_CASE("catalog TSV round trip") {
  std::vector<CatalogEntry> entries;
  for (const Graph& g : GenerateCatalog(6)) {
    entries.push_back({"g" + std::to_string(entries.size()), g, ClassifyLastStep(g)});
  }
  std::stringstream ss;
  ss << "# header\n";
  WriteCatalog(ss, entries);
  const auto back = ReadCatalog(ss);
  REQUIRE(back.size() == entries.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].label == entries[i].label);
    CHECK(back[i].graph == entries[i].graph);
    CHECK(back[i].last_step == entries[i].last_step);
  }
  std::istringstream two_columns("g16\t" + EdgeListString(named::G16()) + "\n");
  CHECK(ReadCatalog(two_columns).front().last_step == LastStep::kH2Required);
  std::istringstream bad("onlylabel\n");
  CHECK(CodeOf([&] { ReadCatalog(bad); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("results CSV") {
  std::ostringstream os;
  WriteResultsCsv(os, {{"G48", "sphere", "1,2,3", 7, 48, 48, 28, 3.25},
                       {"G48", "cm", "", 7, std::nullopt, 48, 28, 0.5}});
  const auto lines = Lines(os.str());
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "graph_id,formulation,triangle,seed,mixedVolume,complexCount,realCount,wall_time_s");
  CHECK(lines[1] == "G48,sphere,\"1,2,3\",7,48,48,28,3.250");
  CHECK(lines[2] == "G48,cm,\"\",7,,48,28,0.500");
}

TEST_CASE("curve and sampling exports") {
  const SamplingSubgraph sub{2, 3, 1, 7, 6, true};
  CHECK(SubgraphString(sub) == "2,3,1,7,6");
  const SamplingSubgraph parsed = ParseSubgraph("2,3,1,7,6");
  CHECK(parsed.u == 2);
  CHECK(parsed.c == 6);
  CHECK_FALSE(parsed.spherical);
  CHECK(CodeOf([] { ParseSubgraph("1,2,3"); }) == ErrorCode::kInvalidArgument);

  std::ostringstream curve;
  WriteCurveCsv(curve, "G48", sub, 0.1, {Eigen::Vector3d(1.0, -0.5, 0.25)});
  const auto lines = Lines(curve.str());
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "# graph=G48, subgraph=2,3,1,7,6, t=0.1");
  CHECK(lines[1] == "x,y,z");
  CHECK(lines[2] == "1,-0.5,0.25");

  std::ostringstream log;
  WriteSamplingLogHeader(log);
  SampleRecord ok;
  ok.phi = 0.5;
  ok.theta = 1.0;
  ok.t = 2.0;
  ok.r = 3.0;
  ok.real_count = 28;
  SampleRecord failed = ok;
  failed.failed = true;
  AppendSamplingLog(log, sub, {ok, failed});
  const auto rows = Lines(log.str());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "subgraph,phi,theta,t,r,realCount");
  CHECK(rows[1] == "\"2,3,1,7,6\",0.5,1,2,3,28");
  CHECK(rows[2] == "\"2,3,1,7,6\",0.5,1,2,3,nan");
}

TEST_CASE("classification CSV") {
  std::ostringstream os;
  WriteClassificationCsv(os, {{"ab", 7, LastStep::kH2Required, 48, 48, "paper"},
                              {"cd", 8, LastStep::kH1Capable, 320, std::nullopt, "doubling"}});
  const auto lines = Lines(os.str());
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "label,n,lastStep,c3,r3,provenance");
  CHECK(lines[1] == "ab,7,H2,48,48,paper");
  CHECK(lines[2] == "cd,8,H1,320,,doubling");
}

}  // namespace
}  // namespace rigid

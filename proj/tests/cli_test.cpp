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


#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rigid/io.hpp"
#include "rigid/named_graphs.hpp"

namespace rigid {
namespace {

namespace fs = std::filesystem;

const fs::path& Dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "rigid_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string PathOf(const std::string& name) { return (Dir() / name).string(); }

// Runs the CLI with stdout and stderr captured; returns the exit status.
int Run(const std::string& args, const std::string& tag = "run") {
  const std::string cmd = std::string(RIGID_EMBED_PATH) + " " + args + " > " +
                          PathOf(tag + ".stdout") + " 2> " + PathOf(tag + ".stderr");
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> Lines(const std::string& path) {
  std::vector<std::string> out;
  std::ifstream in(path);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string DropLastField(const std::string& line) { return line.substr(0, line.rfind(',')); }

TEST_CASE("generate") {
  const std::string cat = PathOf("cat6.tsv");
  const std::string cls = PathOf("cls6.csv");
  REQUIRE(Run("generate --n 6 --out " + cat + " --classification " + cls) == 0);
  const auto lines = Lines(cat);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0].rfind("# version=0.1.0, seed=1, config=", 0) == 0);
  std::istringstream body(Slurp(cat));
  const auto entries = ReadCatalog(body);
  CHECK(entries.size() == 4);
  int h2 = 0;
  for (const auto& e : entries) h2 += e.last_step == LastStep::kH2Required;
  CHECK(h2 == 1);
  const auto rows = Lines(cls);
  REQUIRE(rows.size() == 6);
  CHECK(rows[1] == "label,n,lastStep,c3,r3,provenance");
  CHECK(Run("generate --n 13") == 1);
}

TEST_CASE("count is reproducible") {
  const std::string a = PathOf("count_a.csv");
  const std::string b = PathOf("count_b.csv");
  REQUIRE(Run("count --graph G48 --lengths G48-28 --out " + a) == 0);
  REQUIRE(Run("--seed 1 count --graph G48 --lengths G48-28 --out " + b) == 0);
  const auto la = Lines(a);
  const auto lb = Lines(b);
  REQUIRE(la.size() == 3);
  REQUIRE(lb.size() == 3);
  CHECK(la[0] == lb[0]);
  CHECK(la[1] == "graph_id,formulation,triangle,seed,mixedVolume,complexCount,realCount,wall_time_s");
  CHECK(DropLastField(la[2]) == DropLastField(lb[2]));
  CHECK(DropLastField(la[2]).find(",48,28") != std::string::npos);
}

TEST_CASE("count with generic lengths and the distance formulation") {
  const std::string out = PathOf("count_generic.csv");
  const std::string lengths = PathOf("generic.json");
  REQUIRE(Run("--seed 5 count --graph G48 --formulation cm --out " + out + " --write-lengths " +
              lengths) == 0);
  const auto lines = Lines(out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[2].find(",48,48,") != std::string::npos);  // mixed volume and complex count
  CHECK(LengthsFromJson(ReadJsonFile(lengths)).size() == 15);
}

TEST_CASE("count input errors") {
  Json j = LengthsToJson(named::G48Lengths28());
  j["edges"].erase("1-2");
  const std::string missing = PathOf("missing.json");
  WriteJsonFile(missing, j);
  CHECK(Run("count --graph G48 --lengths " + missing) == 1);

  Json far = LengthsToJson(named::G48Lengths28());
  far["edges"]["1-2"] = 100.0;
  const std::string bad = PathOf("infeasible.json");
  WriteJsonFile(bad, far);
  CHECK(Run("count --graph G48 --triangle 1,2,3 --lengths " + bad, "infeasible") == 2);
  CHECK(Slurp(PathOf("infeasible.stderr")).rfind("error: infeasible", 0) == 0);

  const std::string graph = PathOf("k4.json");
  WriteJsonFile(graph, GraphToJson(named::G16()));
  CHECK(Run("count --graph " + graph + " --lengths G48-28") == 1);
  CHECK(Run("count --graph NoSuchGraph") == 1);
}

TEST_CASE("bound") {
  REQUIRE(Run("bound --rG 132 --nG 8 --n 13", "bound") == 0);
  const std::string text = Slurp(PathOf("bound.stdout"));
  CHECK(text.find("bound=17424") != std::string::npos);
  CHECK(text.find("base=2.655") != std::string::npos);
  CHECK(Run("bound --rG 132 --nG 2 --n 13") == 1);
}

TEST_CASE("maximize trivial cases") {
  const std::string out = PathOf("best.json");
  REQUIRE(Run("maximize --graph G48 --lengths G48-28 --strategy tree --target 20 --out " + out,
              "met") == 0);
  const Json best = ReadJsonFile(out);
  CHECK(best.at("real_count") == 28);
  CHECK(LengthsFromJson(best) == named::G48Lengths28());
  CHECK(Run("--budget-seconds 0 maximize --graph G48 --lengths G48-28 --strategy tree --target 48") == 3);
  CHECK(Run("maximize --graph G48 --lengths G48-28 --strategy linear --order 1,2,3") == 1);
}

TEST_CASE("curve export") {
  const std::string out = PathOf("curve.csv");
  const std::string markers = PathOf("markers.csv");
  REQUIRE(Run("curve --graph G48 --lengths G48-28 --subgraph 2,3,1,7,6 --steps 3 --out " + out +
              " --markers " + markers) == 0);
  const auto lines = Lines(out);
  REQUIRE(lines.size() >= 3);
  CHECK(lines[0].rfind("# version=", 0) == 0);
  CHECK(lines[1].rfind("# graph=G48, subgraph=2,3,1,7,6, t=", 0) == 0);
  CHECK(lines[2] == "x,y,z");
  CHECK(Lines(markers).size() == 3 + 28);
}

}  // namespace
}  // namespace rigid

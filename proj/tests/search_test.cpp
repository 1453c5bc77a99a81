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


#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "rigid/error.hpp"
#include "rigid/henneberg.hpp"
#include "rigid/named_graphs.hpp"
#include "rigid/search.hpp"

namespace rigid {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

SearchOptions SmallGrid() {
  SearchOptions opts;
  opts.grid.phi_points = 4;
  opts.grid.theta_points = 4;
  return opts;
}

std::string TempPath(const char* name) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(p);
  return p.string();
}

TEST_CASE("trivial searches return the start") {
  const Graph g = named::G48();
  const LengthAssignment d0 = named::G48Lengths28();

  SUBCASE("target already met") {
    SearchOptions opts;
    opts.target = 28;
    const SearchResult r = TreeSearch(g, d0, opts);
    CHECK(r.lengths == d0);
    CHECK(r.real_count == 28);
    CHECK(r.nodes == 0);
    CHECK(r.reached_target);
  }
  SUBCASE("zero budget") {
    SearchOptions opts;
    opts.target = 48;
    opts.budget.wall_seconds = 0.0;
    const SearchResult r = TreeSearch(g, d0, opts);
    CHECK(r.lengths == d0);
    CHECK(r.start_count == 28);
    CHECK(r.budget_exhausted);
    CHECK_FALSE(r.reached_target);
  }
  SUBCASE("empty order") {
    const SearchResult r = LinearSearch(g, d0, {}, SearchOptions{});
    CHECK(r.lengths == d0);
    CHECK(r.real_count == 28);
    CHECK(r.path.empty());
  }
  SUBCASE("no perturbation") {
    PerturbationOptions opts;
    opts.sigma = 0.0;
    opts.iterations = 2;
    const PerturbationResult r = StochasticPerturbation(g, d0, opts);
    CHECK(r.lengths == d0);
    CHECK(r.real_count == 28);
    CHECK(r.history == std::vector<int>{28, 28});
  }
}

TEST_CASE("search argument checks") {
  const Graph k4 = CompleteGraph(4);
  LengthAssignment d;
  for (const Edge& e : k4.edges()) d.Set(e, 1.0);
  CHECK(CodeOf([&] { TreeSearch(k4, d, SearchOptions{}); }) == ErrorCode::kUnsupported);
  const Graph g = named::G48();
  for (const SamplingSubgraph& s : SuitableSubgraphs(g)) {
    if (s.spherical) continue;
    CHECK(CodeOf([&] { LinearSearch(g, named::G48Lengths28(), {s}, SearchOptions{}); }) ==
          ErrorCode::kUnsupported);
  }
}

TEST_CASE("stochastic perturbation never loses real embeddings") {
  PerturbationOptions opts;
  opts.sigma = 0.02;
  opts.iterations = 4;
  opts.seed = 3;
  const PerturbationResult r = StochasticPerturbation(named::G48(), named::G48Lengths28(), opts);
  CHECK(r.history.size() == 4);
  CHECK(std::is_sorted(r.history.begin(), r.history.end()));
  CHECK(r.real_count >= 28);
  CHECK(RealCount(named::G48(), r.lengths, 1) == r.real_count);
}

TEST_CASE("checkpoints resume") {
  const Graph g = named::G48();
  const LengthAssignment d0 = named::G48Lengths28();
  const std::vector<SamplingSubgraph> order{{2, 3, 1, 7, 6, true}};
  SearchOptions opts = SmallGrid();
  opts.checkpoint_path = TempPath("rigid_search_checkpoint.json");
  const SearchResult first = LinearSearch(g, d0, order, opts);
  CHECK_FALSE(first.resumed);
  CHECK(first.real_count >= first.start_count);
  CHECK(std::filesystem::exists(*opts.checkpoint_path));
  const SearchResult again = LinearSearch(g, d0, order, opts);
  CHECK(again.resumed);
  CHECK(again.real_count == first.real_count);
  CHECK(again.lengths == first.lengths);
  CHECK(again.nodes == first.nodes);
  SearchOptions other = opts;
  other.seed = 2;
  CHECK(CodeOf([&] { LinearSearch(g, d0, order, other); }) == ErrorCode::kInconsistent);
  CHECK(CodeOf([&] { TreeSearch(g, d0, opts); }) == ErrorCode::kInconsistent);
  std::filesystem::remove(*opts.checkpoint_path);
}

TEST_CASE("linear search along three subgraphs reaches 48") {
  const Graph g = named::G48();
  const std::vector<SamplingSubgraph> order{
      {5, 6, 1, 7, 4, true}, {4, 3, 1, 7, 5, true}, {3, 2, 1, 7, 4, true}};
  SearchOptions opts;
  opts.target = 48;
  const SearchResult r = LinearSearch(g, named::G48Lengths28(), order, opts);
  CHECK(r.start_count == 28);
  CHECK(r.real_count == 48);
  CHECK(r.reached_target);
  REQUIRE(r.path.size() == 3);
  for (std::size_t i = 0; i < r.path.size(); ++i) {
    CHECK(r.path[i].sub == order[i]);
    if (i > 0) CHECK(r.path[i].real_count >= r.path[i - 1].real_count);
  }
  CHECK(RealCount(g, r.lengths, 7) == 48);
}

}  // namespace
}  // namespace rigid

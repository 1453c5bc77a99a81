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

#ifndef RIGID_SEARCH_HPP_
#define RIGID_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rigid/coupler.hpp"
#include "rigid/graph.hpp"
#include "rigid/homotopy.hpp"
#include "rigid/lengths.hpp"
#include "rigid/rigidity.hpp"

namespace rigid {

struct SearchBudget {
  int max_depth = 6;
  double wall_seconds = 4.0 * 3600.0;  // 0 returns the start; infinity: no cap
  int max_nodes = 0;                   // 0: unlimited
};

// Called after each grid with the subgraph and its records.
using GridObserver =
    std::function<void(const SamplingSubgraph&, const std::vector<SampleRecord>&)>;

struct SearchOptions {
  int target = 0;
  std::uint64_t seed = 1;
  GridSpec grid;  // jitter_seed is derived from seed and the node
  ClusterOptions cluster;
  SearchBudget budget;
  TrackerOptions tracker;
  // JSON snapshot of the frontier every `checkpoint_every` nodes; an
  // existing file is resumed from.
  std::optional<std::string> checkpoint_path;
  int checkpoint_every = 10;
  GridObserver on_grid;
};

struct SearchStep {
  SamplingSubgraph sub;
  int real_count = 0;
  LengthAssignment lengths;
};

struct SearchResult {
  LengthAssignment lengths;
  int real_count = 0;
  int start_count = 0;
  int nodes = 0;
  bool reached_target = false;
  bool budget_exhausted = false;
  bool resumed = false;
  // Improving steps from the start to the best lengths.
  std::vector<SearchStep> path;
  double seconds = 0.0;
};

// Depth-first over the state tree: each node samples every spherical
// suitable subgraph, and children are the cluster representatives whose
// real count strictly exceeds the node's, highest first. Stops at the
// target or when the budget runs out. Throws unsupported when g has no
// spherical suitable subgraph.
SearchResult TreeSearch(const Graph& g, const LengthAssignment& d0, const SearchOptions& opts);

// Fixed pipeline: the representatives of stage i (real count not below the
// input's) are the inputs of stage i + 1, explored depth-first.
SearchResult LinearSearch(const Graph& g, const LengthAssignment& d0,
                          const std::vector<SamplingSubgraph>& order, const SearchOptions& opts);

struct PerturbationOptions {
  double sigma = 0.05;
  int iterations = 100;
  std::uint64_t seed = 1;
  double wall_seconds = std::numeric_limits<double>::infinity();
  TrackerOptions tracker;
};

struct PerturbationResult {
  LengthAssignment lengths;
  int real_count = 0;
  std::vector<int> history;  // best real count after each iteration
  bool budget_exhausted = false;
};

// Hill climbing: every length is multiplied by 1 + sigma * N(0, 1) and the
// move is kept iff the real count does not decrease. Infeasible moves are
// rejected.
PerturbationResult StochasticPerturbation(const Graph& g, const LengthAssignment& d0,
                                          const PerturbationOptions& opts);

// Real count of d0 (sphere formulation, default triangle).
int RealCount(const Graph& g, const LengthAssignment& d, std::uint64_t seed,
              const TrackerOptions& tracker = {});

}  // namespace rigid

#endif  // RIGID_SEARCH_HPP_

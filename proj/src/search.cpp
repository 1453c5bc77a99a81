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

#include "rigid/search.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <mutex>
#include <random>

#include "rigid/embeddings.hpp"
#include "rigid/error.hpp"
#include "rigid/io.hpp"
#include "rigid/parallel.hpp"

namespace rigid {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t Mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Node {
  LengthAssignment lengths;
  int real_count = 0;
  int depth = 0;  // tree depth, or pipeline stage for the linear search
  std::vector<SearchStep> path;
};

struct Candidate {
  SamplingSubgraph sub;
  SampleRecord record;
};

// Higher count first; ties go to the lexicographically smallest lengths.
bool Better(int count_a, const LengthAssignment& a, int count_b, const LengthAssignment& b) {
  if (count_a != count_b) return count_a > count_b;
  const auto& va = a.values();
  const auto& vb = b.values();
  return std::lexicographical_compare(
      va.begin(), va.end(), vb.begin(), vb.end(),
      [](const auto& x, const auto& y) { return x.second < y.second; });
}

class Run {
 public:
  Run(const Graph& g, const SearchOptions& opts) : g_(g), opts_(opts), start_(Clock::now()) {}

  double Elapsed() const {
    return prior_seconds_ + std::chrono::duration<double>(Clock::now() - start_).count();
  }
  bool OutOfTime() const {
    return Elapsed() >= opts_.budget.wall_seconds;
  }

  // Samples each subgraph around `node` and returns every cluster
  // representative. Subgraphs not started before the deadline are skipped.
  std::vector<Candidate> Expand(const Node& node, const std::vector<SamplingSubgraph>& subs,
                                std::uint64_t node_seed, bool& cut_short) {
    std::vector<std::vector<Candidate>> found(subs.size());
    std::vector<char> skipped(subs.size(), 0);
    std::mutex observer_mutex;
    ParallelFor(subs.size(), [&](std::size_t i) {
      if (OutOfTime()) {
        skipped[i] = 1;
        return;
      }
      CouplerFamily fam;
      try {
        fam = MakeCouplerFamily(g_, node.lengths, subs[i]);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kDegenerate || e.code() == ErrorCode::kInfeasible) return;
        throw;
      }
      GridSpec spec = opts_.grid;
      const std::uint64_t seed = Mix(node_seed, i);
      spec.jitter_seed = seed;
      std::optional<EmbeddingCount> state;
      const std::vector<SampleRecord> records =
          SampleGrid(fam, spec, state, seed, opts_.tracker);
      if (opts_.on_grid) {
        std::lock_guard<std::mutex> lock(observer_mutex);
        opts_.on_grid(subs[i], records);
      }
      auto evaluate = [&](double phi, double theta) {
        const CouplerPoint pt = LengthsFromPhiTheta(fam, phi, theta);
        SampleRecord rec;
        rec.phi = phi;
        rec.theta = theta;
        rec.t = pt.t;
        rec.r = pt.r;
        rec.lengths = pt.lengths;
        const EmbeddingCount count =
            state ? RecountEmbeddings(g_, pt.lengths, *state, seed, opts_.tracker)
                  : CountEmbeddings(g_, pt.lengths);
        rec.real_count = count.real_count;
        rec.complex_count = count.complex_count;
        return rec;
      };
      for (SampleRecord& rec : ClusterCandidates(records, evaluate, opts_.cluster)) {
        found[i].push_back({subs[i], std::move(rec)});
      }
    });
    cut_short = std::find(skipped.begin(), skipped.end(), 1) != skipped.end();
    std::vector<Candidate> out;
    for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
    std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
      return Better(a.record.real_count, a.record.lengths, b.record.real_count, b.record.lengths);
    });
    return out;
  }

  void Offer(const Node& node) {
    if (Better(node.real_count, node.lengths, result_.real_count, result_.lengths)) {
      result_.real_count = node.real_count;
      result_.lengths = node.lengths;
      result_.path = node.path;
    }
  }

  // Returns true when the search should stop.
  bool Budgeted() {
    if (OutOfTime() || (opts_.budget.max_nodes > 0 && result_.nodes >= opts_.budget.max_nodes)) {
      result_.budget_exhausted = true;
      return true;
    }
    return false;
  }

  bool Reached() const { return opts_.target > 0 && result_.real_count >= opts_.target; }

  // Depth-first loop shared by both drivers. `children` maps a node to its
  // ordered children (best first).
  SearchResult Search(const LengthAssignment& d0, const char* kind,
                      const std::function<std::vector<Node>(const Node&, bool&)>& children,
                      int max_depth) {
    std::vector<Node> stack;
    if (!Resume(kind, stack)) {
      Node root{d0, RealCount(g_, d0, opts_.seed, opts_.tracker), 0, {}};
      result_.lengths = d0;
      result_.real_count = root.real_count;
      result_.start_count = root.real_count;
      stack.push_back(std::move(root));
    }
    while (!stack.empty() && !Reached()) {
      if (Budgeted()) break;
      Node node = std::move(stack.back());
      stack.pop_back();
      if (node.depth >= max_depth) continue;
      ++result_.nodes;
      bool cut_short = false;
      std::vector<Node> kids = children(node, cut_short);
      for (const Node& k : kids) Offer(k);
      if (cut_short) {
        // Not fully expanded; put it back so a resumed run redoes it.
        --result_.nodes;
        stack.push_back(std::move(node));
        result_.budget_exhausted = true;
        break;
      }
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(std::move(*it));
      if (opts_.checkpoint_path && result_.nodes % std::max(1, opts_.checkpoint_every) == 0) {
        Checkpoint(kind, stack);
      }
    }
    if (!stack.empty() && !Reached() && OutOfTime()) result_.budget_exhausted = true;
    if (opts_.checkpoint_path) Checkpoint(kind, stack);
    result_.reached_target = Reached();
    result_.seconds = Elapsed();
    return result_;
  }

 private:
  static Json StepsToJson(const std::vector<SearchStep>& steps) {
    Json out = Json::array();
    for (const SearchStep& s : steps) {
      out.push_back({{"subgraph", SubgraphString(s.sub)},
                     {"spherical", s.sub.spherical},
                     {"real_count", s.real_count},
                     {"lengths", LengthsToJson(s.lengths)}});
    }
    return out;
  }

  static std::vector<SearchStep> StepsFromJson(const Json& j) {
    std::vector<SearchStep> out;
    for (const Json& s : j) {
      SearchStep step;
      step.sub = ParseSubgraph(s.at("subgraph").get<std::string>());
      step.sub.spherical = s.at("spherical").get<bool>();
      step.real_count = s.at("real_count").get<int>();
      step.lengths = LengthsFromJson(s.at("lengths"));
      out.push_back(std::move(step));
    }
    return out;
  }

  void Checkpoint(const char* kind, const std::vector<Node>& stack) const {
    Json frontier = Json::array();
    for (const Node& n : stack) {
      frontier.push_back({{"lengths", LengthsToJson(n.lengths)},
                          {"real_count", n.real_count},
                          {"depth", n.depth},
                          {"path", StepsToJson(n.path)}});
    }
    const Json j = {{"version", LibraryVersion()},
                    {"search", kind},
                    {"graph", GraphToJson(g_)},
                    {"seed", opts_.seed},
                    {"target", opts_.target},
                    {"nodes", result_.nodes},
                    {"elapsed_s", Elapsed()},
                    {"start_count", result_.start_count},
                    {"best",
                     {{"lengths", LengthsToJson(result_.lengths)},
                      {"real_count", result_.real_count},
                      {"path", StepsToJson(result_.path)}}},
                    {"frontier", frontier}};
    WriteJsonFile(*opts_.checkpoint_path, j);
  }

  bool Resume(const char* kind, std::vector<Node>& stack) {
    if (!opts_.checkpoint_path || !std::filesystem::exists(*opts_.checkpoint_path)) return false;
    const Json j = ReadJsonFile(*opts_.checkpoint_path);
    try {
      if (j.at("search").get<std::string>() != kind || GraphFromJson(j.at("graph")) != g_ ||
          j.at("seed").get<std::uint64_t>() != opts_.seed) {
        Fail(ErrorCode::kInconsistent, "checkpoint belongs to a different search");
      }
      result_.nodes = j.at("nodes").get<int>();
      prior_seconds_ = j.at("elapsed_s").get<double>();
      result_.start_count = j.at("start_count").get<int>();
      result_.lengths = LengthsFromJson(j.at("best").at("lengths"));
      result_.real_count = j.at("best").at("real_count").get<int>();
      result_.path = StepsFromJson(j.at("best").at("path"));
      for (const Json& n : j.at("frontier")) {
        stack.push_back({LengthsFromJson(n.at("lengths")), n.at("real_count").get<int>(),
                         n.at("depth").get<int>(), StepsFromJson(n.at("path"))});
      }
    } catch (const Json::exception& e) {
      Fail(ErrorCode::kInvalidArgument, std::string("malformed checkpoint: ") + e.what());
    }
    result_.resumed = true;
    return true;
  }

  const Graph& g_;
  const SearchOptions& opts_;
  Clock::time_point start_;
  double prior_seconds_ = 0.0;
  SearchResult result_;
};

std::vector<SamplingSubgraph> SphericalSubgraphs(const Graph& g) {
  std::vector<SamplingSubgraph> out;
  for (const SamplingSubgraph& s : SuitableSubgraphs(g)) {
    if (s.spherical) out.push_back(s);
  }
  return out;
}

// Grids depend on the node's lengths, not on the order nodes are visited.
std::uint64_t LengthsHash(const LengthAssignment& d) {
  return std::stoull(ConfigHash(LengthsToJson(d).dump()), nullptr, 16);
}

Node Child(const Node& parent, const Candidate& c) {
  Node kid{c.record.lengths, c.record.real_count, parent.depth + 1, parent.path};
  kid.path.push_back({c.sub, c.record.real_count, c.record.lengths});
  return kid;
}

}  // namespace

int RealCount(const Graph& g, const LengthAssignment& d, std::uint64_t seed,
              const TrackerOptions& tracker) {
  CountOptions opts;
  opts.seed = seed;
  opts.tracker = tracker;
  return CountEmbeddings(g, d, opts).real_count;
}

SearchResult TreeSearch(const Graph& g, const LengthAssignment& d0, const SearchOptions& opts) {
  const std::vector<SamplingSubgraph> subs = SphericalSubgraphs(g);
  if (subs.empty()) Fail(ErrorCode::kUnsupported, "graph has no spherical suitable subgraph");
  d0.RequireCovers(g);
  Run run(g, opts);
  auto children = [&](const Node& node, bool& cut_short) {
    std::vector<Node> out;
    const std::uint64_t node_seed = Mix(opts.seed, LengthsHash(node.lengths));
    for (const Candidate& c : run.Expand(node, subs, node_seed, cut_short)) {
      if (c.record.real_count > node.real_count) out.push_back(Child(node, c));
    }
    return out;
  };
  return run.Search(d0, "tree", children, opts.budget.max_depth);
}

SearchResult LinearSearch(const Graph& g, const LengthAssignment& d0,
                          const std::vector<SamplingSubgraph>& order, const SearchOptions& opts) {
  d0.RequireCovers(g);
  std::vector<SamplingSubgraph> stages;
  for (SamplingSubgraph s : order) {
    s.spherical = g.HasEdge(s.c, s.w);
    if (!s.spherical) Fail(ErrorCode::kUnsupported, "subgraph " + SubgraphString(s) + " lacks cw");
    stages.push_back(s);
  }
  Run run(g, opts);
  auto children = [&](const Node& node, bool& cut_short) {
    std::vector<Node> out;
    const std::uint64_t node_seed = Mix(opts.seed, LengthsHash(node.lengths));
    const std::vector<SamplingSubgraph> one{stages[static_cast<std::size_t>(node.depth)]};
    for (const Candidate& c : run.Expand(node, one, node_seed, cut_short)) {
      if (c.record.real_count >= node.real_count) out.push_back(Child(node, c));
    }
    return out;
  };
  return run.Search(d0, "linear", children, static_cast<int>(stages.size()));
}

PerturbationResult StochasticPerturbation(const Graph& g, const LengthAssignment& d0,
                                          const PerturbationOptions& opts) {
  d0.RequireCovers(g);
  const auto start = Clock::now();
  CountOptions copts;
  copts.seed = opts.seed;
  copts.tracker = opts.tracker;
  EmbeddingCount state = CountEmbeddings(g, d0, copts);
  PerturbationResult out;
  out.lengths = d0;
  out.real_count = state.real_count;
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> normal;
  for (int it = 0; it < opts.iterations; ++it) {
    if (std::chrono::duration<double>(Clock::now() - start).count() >= opts.wall_seconds) {
      out.budget_exhausted = true;
      break;
    }
    LengthAssignment d;
    bool positive = true;
    for (const auto& [e, len] : out.lengths.values()) {
      const double next = len * (1.0 + opts.sigma * normal(rng));
      if (!(next > 0.0)) {
        positive = false;
        break;
      }
      d.Set(e, next);
    }
    if (positive) {
      try {
        EmbeddingCount count = RecountEmbeddings(g, d, state, Mix(opts.seed, it), opts.tracker);
        if (count.real_count >= out.real_count) {
          out.real_count = count.real_count;
          out.lengths = d;
          if (count.complex_count >= state.complex_count) state = std::move(count);
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kInfeasible && e.code() != ErrorCode::kSolverError) throw;
      }
    }
    out.history.push_back(out.real_count);
  }
  return out;
}

}  // namespace rigid

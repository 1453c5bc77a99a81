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

// rigid_embed: catalog generation, embedding counts, length search, coupler
// curves and gluing bounds from the command line.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rigid/bounds.hpp"
#include "rigid/coupler.hpp"
#include "rigid/embeddings.hpp"
#include "rigid/error.hpp"
#include "rigid/henneberg.hpp"
#include "rigid/io.hpp"
#include "rigid/mixed_volume.hpp"
#include "rigid/named_graphs.hpp"
#include "rigid/parallel.hpp"
#include "rigid/rigidity.hpp"
#include "rigid/search.hpp"
#include "rigid/sphere_system.hpp"

namespace fs = std::filesystem;
using namespace rigid;

namespace {

enum Exit : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInfeasible = 2,
  kExitBudget = 3,
  kExitSolver = 4,
};

struct Common {
  std::uint64_t seed = 1;
  int threads = 0;
  double budget_seconds = 4.0 * 3600.0;
  std::optional<double> real_tolerance;
  std::optional<double> corrector_tolerance;

  TrackerOptions Tracker() const {
    TrackerOptions t;
    if (real_tolerance) t.real_tolerance = *real_tolerance;
    if (corrector_tolerance) t.corrector_tolerance = *corrector_tolerance;
    return t;
  }
};

// Canonical "key=value;" text of a command's settings, hashed into headers.
class Config {
 public:
  explicit Config(const std::string& command) { Add("command", command); }
  template <typename T>
  Config& Add(const std::string& key, const T& value) {
    std::ostringstream os;
    os << std::setprecision(17) << value;
    items_[key] = os.str();
    return *this;
  }
  std::string Text() const {
    std::string out;
    for (const auto& [k, v] : items_) out += k + '=' + v + ';';
    return out;
  }

 private:
  std::map<std::string, std::string> items_;
};

ArtifactHeader Header(const Common& common, const Config& config) {
  return {LibraryVersion(), common.seed, ConfigHash(config.Text())};
}

Json Meta(const Common& common, const Config& config) {
  const ArtifactHeader h = Header(common, config);
  return {{"version", h.version}, {"seed", h.seed}, {"config", h.config_hash}};
}

// A file path or one of the built-in names.
Graph LoadGraph(const std::string& spec, std::string& id) {
  if (fs::exists(spec)) {
    id = fs::path(spec).stem().string();
    return GraphFromJson(ReadJsonFile(spec));
  }
  if (auto g = named::ByName(spec)) {
    id = spec;
    return *g;
  }
  Fail(ErrorCode::kNotFound, "no graph file or built-in graph named '" + spec + "'");
}

LengthAssignment LoadLengths(const std::string& spec) {
  if (fs::exists(spec)) return LengthsFromJson(ReadJsonFile(spec));
  if (auto d = named::LengthsByName(spec)) return *d;
  Fail(ErrorCode::kNotFound, "no length file or built-in lengths named '" + spec + "'");
}

std::array<int, 3> ParseTriangle(const std::string& text) {
  std::array<int, 3> tri{};
  char c1 = 0;
  char c2 = 0;
  std::istringstream in(text);
  if (!(in >> tri[0] >> c1 >> tri[1] >> c2 >> tri[2]) || c1 != ',' || c2 != ',' ||
      in.peek() != std::char_traits<char>::eof()) {
    Fail(ErrorCode::kInvalidArgument, "triangle must be i,j,k");
  }
  return tri;
}

// Output path or stdout for "" and "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) Fail(ErrorCode::kNotFound, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string Absolute(const std::string& path) {
  return path.empty() || path == "-" ? path : fs::absolute(path).string();
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  int n = 7;
  std::string out;
  std::string classification;
};

int RunGenerate(const Common& common, const GenerateArgs& args) {
  const Config config = Config("generate").Add("n", args.n);
  const auto levels = GenerateCatalogLevels(args.n);
  std::vector<Graph> all;
  for (const auto& level : levels) all.insert(all.end(), level.begin(), level.end());
  const std::vector<Graph>& top = levels.back();

  std::vector<CatalogEntry> entries;
  int h2 = 0;
  for (const Graph& g : top) {
    entries.push_back({GraphLabel(g), g, ClassifyLastStep(g)});
    if (entries.back().last_step == LastStep::kH2Required) ++h2;
  }
  Output out(args.out);
  WriteHeader(out.stream(), Header(common, config));
  WriteCatalog(out.stream(), entries);

  if (!args.classification.empty()) {
    const auto counts = PropagateH1Doubling(all, PublishedCounts());
    std::vector<ClassificationRow> rows;
    for (const CatalogEntry& e : entries) {
      ClassificationRow row{e.label, e.graph.vertex_count(), e.last_step, {}, {}, "unknown"};
      if (auto it = counts.find(e.label); it != counts.end()) {
        row.c3 = it->second.c3;
        row.r3 = it->second.r3;
        row.provenance = CountProvenanceName(it->second.provenance);
      }
      rows.push_back(row);
    }
    Output cls(args.classification);
    WriteHeader(cls.stream(), Header(common, config));
    WriteClassificationCsv(cls.stream(), rows);
  }
  std::cerr << "n=" << args.n << " graphs=" << top.size() << " h2_required=" << h2 << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------- count

struct CountArgs {
  std::string graph;
  std::string lengths;
  std::string formulation = "sphere";
  std::string triangle;
  std::string out;
  std::string write_lengths;
};

int RunCount(const Common& common, const CountArgs& args) {
  std::string id;
  const Graph g = LoadGraph(args.graph, id);
  LengthAssignment d;
  if (args.lengths.empty()) {
    std::mt19937_64 rng(common.seed);
    d = GenericLengths(g, rng);
  } else {
    d = LoadLengths(args.lengths);
  }
  d.RequireCovers(g);
  const Config config = Config("count")
                            .Add("graph", EdgeListString(g))
                            .Add("lengths", LengthsToJson(d.Restricted(g)).dump())
                            .Add("formulation", args.formulation)
                            .Add("triangle", args.triangle);

  CountOptions opts;
  opts.seed = common.seed;
  opts.tracker = common.Tracker();
  opts.formulation =
      args.formulation == "cm" ? Formulation::kCayleyMenger : Formulation::kSphere;
  if (!args.triangle.empty()) opts.triangle = ParseTriangle(args.triangle);

  const auto start = std::chrono::steady_clock::now();
  const EmbeddingCount count = CountEmbeddings(g, d, opts);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  ResultRow row;
  row.graph_id = id;
  row.formulation = args.formulation;
  row.seed = common.seed;
  row.complex_count = count.complex_count;
  row.real_count = count.real_count;
  row.wall_time_s = secs;
  if (count.formulation == Formulation::kSphere) {
    row.triangle = std::to_string(count.triangle[0]) + ',' + std::to_string(count.triangle[1]) +
                   ',' + std::to_string(count.triangle[2]);
    if (count.system.size() <= kMaxMixedVolumeDimension) {
      row.mixed_volume = MixedVolume(NewtonPolytopes(count.system));
    }
  } else if (g.vertex_count() - 4 <= kMaxMixedVolumeDimension) {
    row.mixed_volume = DistanceSubsystemMixedVolume(g, common.seed);
  }
  Output out(args.out);
  WriteHeader(out.stream(), Header(common, config));
  WriteResultsCsv(out.stream(), {row});
  if (!args.write_lengths.empty()) {
    Json j = LengthsToJson(d);
    j["meta"] = Meta(common, config);
    WriteJsonFile(args.write_lengths, j);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- maximize

struct MaximizeArgs {
  std::string graph;
  std::string lengths;
  std::string strategy = "tree";
  int target = 0;
  std::string order;
  double sigma = 0.05;
  int iterations = 100;
  int max_depth = 6;
  int max_nodes = 0;
  std::string checkpoint;
  std::string out;
  std::string log;
};

std::vector<SamplingSubgraph> ParseOrder(const std::string& text) {
  std::vector<SamplingSubgraph> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (!item.empty()) out.push_back(ParseSubgraph(item));
  }
  return out;
}

int RunMaximize(const Common& common, const MaximizeArgs& args) {
  std::string id;
  const Graph g = LoadGraph(args.graph, id);
  const LengthAssignment d0 = LoadLengths(args.lengths);
  d0.RequireCovers(g);
  const Config config = Config("maximize")
                            .Add("graph", EdgeListString(g))
                            .Add("lengths", LengthsToJson(d0.Restricted(g)).dump())
                            .Add("strategy", args.strategy)
                            .Add("target", args.target)
                            .Add("order", args.order)
                            .Add("sigma", args.sigma)
                            .Add("iterations", args.iterations)
                            .Add("max_depth", args.max_depth)
                            .Add("max_nodes", args.max_nodes)
                            .Add("budget_seconds", common.budget_seconds);

  std::optional<Output> log;
  if (!args.log.empty()) {
    log.emplace(args.log);
    WriteHeader(log->stream(), Header(common, config));
    WriteSamplingLogHeader(log->stream());
  }

  Json best;
  int code = kExitOk;
  if (args.strategy == "stochastic") {
    PerturbationOptions opts;
    opts.sigma = args.sigma;
    opts.iterations = args.iterations;
    opts.seed = common.seed;
    opts.wall_seconds = common.budget_seconds;
    opts.tracker = common.Tracker();
    const PerturbationResult res = StochasticPerturbation(g, d0, opts);
    best = LengthsToJson(res.lengths);
    best["real_count"] = res.real_count;
    best["history"] = res.history;
    std::cout << "realCount=" << res.real_count << " iterations=" << res.history.size() << '\n';
    if (res.budget_exhausted && (args.target == 0 || res.real_count < args.target)) {
      code = kExitBudget;
    }
  } else {
    SearchOptions opts;
    opts.target = args.target;
    opts.seed = common.seed;
    opts.budget.wall_seconds = common.budget_seconds;
    opts.budget.max_depth = args.max_depth;
    opts.budget.max_nodes = args.max_nodes;
    opts.tracker = common.Tracker();
    if (!args.checkpoint.empty()) opts.checkpoint_path = args.checkpoint;
    if (log) {
      opts.on_grid = [&](const SamplingSubgraph& sub, const std::vector<SampleRecord>& recs) {
        AppendSamplingLog(log->stream(), sub, recs);
        log->stream().flush();
      };
    }
    SearchResult res;
    if (args.strategy == "tree") {
      res = TreeSearch(g, d0, opts);
    } else if (args.strategy == "linear") {
      res = LinearSearch(g, d0, ParseOrder(args.order), opts);
    } else {
      Fail(ErrorCode::kInvalidArgument, "unknown strategy " + args.strategy);
    }
    best = LengthsToJson(res.lengths);
    best["real_count"] = res.real_count;
    best["start_count"] = res.start_count;
    best["nodes"] = res.nodes;
    Json path = Json::array();
    for (const SearchStep& s : res.path) {
      path.push_back({{"subgraph", SubgraphString(s.sub)}, {"real_count", s.real_count}});
    }
    best["path"] = path;
    std::cout << "realCount=" << res.real_count << " start=" << res.start_count
              << " nodes=" << res.nodes << " reached=" << (res.reached_target ? "yes" : "no")
              << '\n';
    for (const SearchStep& s : res.path) {
      std::cout << "  " << SubgraphString(s.sub) << " -> " << s.real_count << '\n';
    }
    if (res.budget_exhausted && !res.reached_target) code = kExitBudget;
  }
  best["meta"] = Meta(common, config);
  if (!args.out.empty()) WriteJsonFile(args.out, best);
  return code;
}

// ------------------------------------------------------------------- curve

struct CurveArgs {
  std::string graph;
  std::string lengths;
  std::string subgraph;
  std::optional<double> r_min;
  std::optional<double> r_max;
  int steps = 200;
  std::optional<double> t;
  std::string out;
  std::string markers;
};

int RunCurve(const Common& common, const CurveArgs& args) {
  std::string id;
  const Graph g = LoadGraph(args.graph, id);
  const LengthAssignment d = LoadLengths(args.lengths);
  d.RequireCovers(g);
  SamplingSubgraph sub = ParseSubgraph(args.subgraph);
  const CouplerFamily fam = MakeCouplerFamily(g, d, sub);
  sub = fam.sub;
  const double r0 = d.At(sub.u, sub.c);
  CurveSweep sweep;
  sweep.r_min = args.r_min.value_or(0.25 * r0);
  sweep.r_max = args.r_max.value_or(2.0 * r0);
  sweep.steps = args.steps;
  sweep.t = args.t;
  const double t = args.t.value_or(d.At(sub.u, sub.v));
  const Config config = Config("curve")
                            .Add("graph", EdgeListString(g))
                            .Add("lengths", LengthsToJson(d.Restricted(g)).dump())
                            .Add("subgraph", SubgraphString(sub))
                            .Add("r_min", sweep.r_min)
                            .Add("r_max", sweep.r_max)
                            .Add("steps", sweep.steps)
                            .Add("t", t);

  const auto points = TraceCouplerCurve(fam, sweep, common.seed, common.Tracker());
  if (points.empty()) std::cerr << "warning: no real coupler points over the sweep\n";
  Output out(args.out);
  WriteHeader(out.stream(), Header(common, config));
  WriteCurveCsv(out.stream(), id, sub, t, points);
  if (!args.markers.empty()) {
    // Real positions of c at the given lengths: the curve meets the sphere
    // |c - u| = d_uc in these points.
    const auto marks = CouplerPositions(fam, t, r0, common.seed, common.Tracker());
    Output m(args.markers);
    WriteHeader(m.stream(), Header(common, config));
    WriteCurveCsv(m.stream(), id, sub, t, marks);
    std::cerr << "markers=" << marks.size() << '\n';
  }
  std::cerr << "points=" << points.size() << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------- bound

struct BoundArgs {
  int rG = 0;
  int nG = 0;
  int rH = 1;
  int nH = 3;
  std::optional<int> n;
};

int RunBound(const Common& common, const BoundArgs& args) {
  Config config("bound");
  config.Add("rG", args.rG).Add("nG", args.nG).Add("rH", args.rH).Add("nH", args.nH);
  if (args.n) config.Add("n", *args.n);
  WriteHeader(std::cout, Header(common, config));
  if (args.n) {
    const GlueBound b = GlueLowerBound(args.rG, args.nG, args.rH, args.nH, *args.n);
    std::cout << "bound=" << b.value << (b.flagged ? " flagged=non-integer-ratio" : "") << '\n';
  }
  std::cout << "base=" << std::setprecision(6) << std::fixed
            << AsymptoticBase(args.rG, args.nG, args.rH, args.nH) << '\n';
  return kExitOk;
}

int ExitFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInfeasible:
    case ErrorCode::kDegenerate:
      return kExitInfeasible;
    case ErrorCode::kSolverError:
      return kExitSolver;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting and maximizing real embeddings of minimally rigid graphs in R^3"};
  app.require_subcommand(1);
  // Global flags may follow the subcommand.
  app.fallthrough();
  Common common;
  app.add_option("--seed", common.seed, "Random seed")->capture_default_str();
  app.add_option("--threads", common.threads, "Worker threads (0: all cores)")
      ->capture_default_str();
  app.add_option("--budget-seconds", common.budget_seconds, "Wall-clock budget for searches")
      ->capture_default_str();
  app.add_option("--real-tolerance", common.real_tolerance,
                 "Relative imaginary part below which a root counts as real");
  app.add_option("--corrector-tolerance", common.corrector_tolerance,
                 "Relative Newton tolerance while tracking");

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "Catalog of Geiringer graphs on n vertices");
  generate->add_option("--n", gen.n, "Vertex count (4..12)")->required();
  generate->add_option("--out", gen.out, "Catalog TSV (default: stdout)");
  generate->add_option("--classification", gen.classification,
                       "Classification CSV with propagated counts");

  CountArgs cnt;
  CLI::App* count = app.add_subcommand("count", "Complex and real embedding counts");
  count->add_option("--graph", cnt.graph, "Graph JSON file or built-in name")->required();
  count->add_option("--lengths", cnt.lengths,
                    "Length JSON file or built-in name (default: generic lengths from --seed)");
  count->add_option("--formulation", cnt.formulation, "sphere or cm")
      ->check(CLI::IsMember({"sphere", "cm"}))
      ->capture_default_str();
  count->add_option("--triangle", cnt.triangle, "Fixed triangle i,j,k (sphere)");
  count->add_option("--out", cnt.out, "Results CSV (default: stdout)");
  count->add_option("--write-lengths", cnt.write_lengths, "Save the lengths used as JSON");

  MaximizeArgs max;
  CLI::App* maximize = app.add_subcommand("maximize", "Search for lengths with more real embeddings");
  maximize->add_option("--graph", max.graph, "Graph JSON file or built-in name")->required();
  maximize->add_option("--lengths", max.lengths, "Starting lengths")->required();
  maximize->add_option("--strategy", max.strategy, "tree, linear or stochastic")
      ->check(CLI::IsMember({"tree", "linear", "stochastic"}))
      ->capture_default_str();
  maximize->add_option("--target", max.target, "Stop at this real count (0: none)");
  maximize->add_option("--order", max.order, "Linear pipeline: u,v,w,p,c;u,v,w,p,c;...");
  maximize->add_option("--sigma", max.sigma, "Stochastic relative step")->capture_default_str();
  maximize->add_option("--iterations", max.iterations, "Stochastic iterations")
      ->capture_default_str();
  maximize->add_option("--max-depth", max.max_depth, "Tree depth cap")->capture_default_str();
  maximize->add_option("--max-nodes", max.max_nodes, "Node cap (0: none)");
  maximize->add_option("--checkpoint", max.checkpoint, "Checkpoint JSON (resumed if present)");
  maximize->add_option("--out", max.out, "Best lengths JSON");
  maximize->add_option("--log", max.log, "Sampling log CSV");

  CurveArgs crv;
  CLI::App* curve = app.add_subcommand("curve", "Coupler curve of c for a sampling subgraph");
  curve->add_option("--graph", crv.graph, "Graph JSON file or built-in name")->required();
  curve->add_option("--lengths", crv.lengths, "Length JSON file or built-in name")->required();
  curve->add_option("--subgraph", crv.subgraph, "u,v,w,p,c")->required();
  curve->add_option("--r-min", crv.r_min, "Smallest uc length (default: d_uc / 4)");
  curve->add_option("--r-max", crv.r_max, "Largest uc length (default: 2 d_uc)");
  curve->add_option("--steps", crv.steps, "Sweep steps")->capture_default_str();
  curve->add_option("--t", crv.t, "Family parameter (default: d_uv)");
  curve->add_option("--out", crv.out, "Curve CSV (default: stdout)");
  curve->add_option("--markers", crv.markers, "CSV of the real positions of c at the given lengths");

  BoundArgs bnd;
  CLI::App* bound = app.add_subcommand("bound", "Gluing lower bound and its asymptotic base");
  bound->add_option("--rG", bnd.rG, "Real count of G")->required();
  bound->add_option("--nG", bnd.nG, "Vertices of G")->required();
  bound->add_option("--rH", bnd.rH, "Real count of the shared subgraph H")->capture_default_str();
  bound->add_option("--nH", bnd.nH, "Vertices of H")->capture_default_str();
  bound->add_option("--n", bnd.n, "Vertex count for the bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    SetThreadCount(common.threads);
    if (*generate) {
      gen.out = Absolute(gen.out);
      gen.classification = Absolute(gen.classification);
      return RunGenerate(common, gen);
    }
    if (*count) {
      cnt.out = Absolute(cnt.out);
      cnt.write_lengths = Absolute(cnt.write_lengths);
      return RunCount(common, cnt);
    }
    if (*maximize) {
      max.out = Absolute(max.out);
      max.log = Absolute(max.log);
      max.checkpoint = Absolute(max.checkpoint);
      return RunMaximize(common, max);
    }
    if (*curve) {
      crv.out = Absolute(crv.out);
      crv.markers = Absolute(crv.markers);
      return RunCurve(common, crv);
    }
    if (*bound) return RunBound(common, bnd);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

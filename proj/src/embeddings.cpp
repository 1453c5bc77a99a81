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

#include "rigid/embeddings.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>

#include <Eigen/Eigenvalues>

#include "rigid/cayley_menger.hpp"
#include "rigid/error.hpp"
#include "rigid/mixed_volume.hpp"
#include "rigid/sphere_system.hpp"

namespace rigid {
namespace {

void Tally(EmbeddingCount& out) {
  out.complex_count = out.solutions.complex_count();
  out.real_count = out.solutions.real_count();
  out.near_real_count = static_cast<int>(
      std::count_if(out.solutions.solutions.begin(), out.solutions.solutions.end(),
                    [](const Solution& s) { return s.near_real; }));
}

EmbeddingCount CountSphere(const Graph& g, const LengthAssignment& d, const CountOptions& opts) {
  EmbeddingCount out;
  out.formulation = Formulation::kSphere;
  out.unit = d.MaxLength();
  out.triangle = opts.triangle ? *opts.triangle : DefaultTriangle(g);
  out.system = BuildSphereSystem(g, d.Scaled(1.0 / out.unit), out.triangle);
  out.solutions = SolveTotalDegree(out.system, opts.seed, opts.tracker);
  Tally(out);
  return out;
}

EmbeddingCount CountCm(const Graph& g, const LengthAssignment& d, const CountOptions& opts) {
  EmbeddingCount out;
  out.formulation = Formulation::kCayleyMenger;
  if (opts.cm_variables) {
    out.cm_variables = *opts.cm_variables;
  } else {
    const auto sets = EnumerateCmVariableSets(g, g.vertex_count() - 4, true, opts.seed, 1);
    if (sets.empty()) Fail(ErrorCode::kNotFound, "no distance subsystem for this graph");
    out.cm_variables = sets.front();
  }
  out.unit = d.MaxLength();
  const LengthAssignment scaled = d.Scaled(1.0 / out.unit);
  out.system = CmSubsystem(g, scaled, out.cm_variables, opts.seed);
  out.solutions = SolveTotalDegree(out.system, opts.seed, opts.tracker);
  int real = 0;
  for (const Solution& s : out.solutions.solutions) {
    if (!s.is_real) continue;
    std::map<Edge, double> assignment;
    for (std::size_t i = 0; i < out.cm_variables.size(); ++i) {
      assignment[out.cm_variables[i]] = s.values[static_cast<Eigen::Index>(i)].real();
    }
    if (EvaluateInequalities(g, scaled, assignment)) ++real;
  }
  Tally(out);
  out.complex_count *= 2;
  out.real_count = 2 * real;
  out.near_real_count *= 2;
  return out;
}

}  // namespace

EmbeddingCount CountEmbeddings(const Graph& g, const LengthAssignment& d,
                               const CountOptions& opts) {
  d.RequireCovers(g);
  return opts.formulation == Formulation::kSphere ? CountSphere(g, d, opts) : CountCm(g, d, opts);
}

EmbeddingCount RecountEmbeddings(const Graph& g, const LengthAssignment& d,
                                 const EmbeddingCount& previous, std::uint64_t seed,
                                 const TrackerOptions& tracker) {
  if (previous.formulation != Formulation::kSphere) {
    Fail(ErrorCode::kUnsupported, "parameter re-solves are implemented for sphere systems");
  }
  d.RequireCovers(g);
  EmbeddingCount out;
  out.formulation = Formulation::kSphere;
  out.triangle = previous.triangle;
  // Same unit as the start system so the start roots need no rescaling.
  out.unit = previous.unit;
  out.system = BuildSphereSystem(g, d.Scaled(1.0 / out.unit), out.triangle);
  bool fresh = previous.solutions.solutions.empty();
  if (!fresh) {
    try {
      out.solutions =
          TrackParameterHomotopy(previous.system, previous.solutions, out.system, seed, tracker);
      fresh = out.solutions.failed_paths > 0;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSolverError) throw;
      fresh = true;
    }
  }
  if (fresh) out.solutions = SolveTotalDegree(out.system, seed, tracker);
  Tally(out);
  return out;
}

std::vector<Eigen::MatrixX3d> RealEmbeddings(const EmbeddingCount& count, int n) {
  if (count.formulation != Formulation::kSphere) {
    Fail(ErrorCode::kUnsupported, "embeddings are read off sphere-system solutions");
  }
  std::vector<Eigen::MatrixX3d> out;
  for (const Solution& s : count.solutions.solutions) {
    if (!s.is_real) continue;
    out.push_back(SphereSolutionPoints(count.system, s.values, n).real() * count.unit);
  }
  return out;
}

int MinMixedVolumeOverTriangles(const Graph& g, const LengthAssignment& d, std::uint64_t seed,
                                const TrackerOptions& tracker) {
  const auto triangles = g.Triangles();
  if (triangles.empty()) Fail(ErrorCode::kNotFound, "graph has no triangle");
  const LengthAssignment scaled = d.Scaled(1.0 / d.MaxLength());
  int best = std::numeric_limits<int>::max();
  for (const auto& tri : triangles) {
    const PolynomialSystem sys = BuildSphereSystem(g, scaled, tri);
    const int bound = sys.size() <= kMaxMixedVolumeDimension
                          ? static_cast<int>(MixedVolume(NewtonPolytopes(sys)))
                          : SolveTotalDegree(sys, seed, tracker).complex_count();
    best = std::min(best, bound);
  }
  return best;
}

int DistanceSubsystemMixedVolume(const Graph& g, std::uint64_t seed) {
  const int k = g.vertex_count() - 4;
  if (k > kMaxMixedVolumeDimension) {
    Fail(ErrorCode::kUnsupported, "distance subsystem has more than 4 variables");
  }
  std::mt19937_64 rng(seed);
  const LengthAssignment d = GenericLengths(g, rng);
  const auto sets = EnumerateCmVariableSets(g, k, true, seed);
  if (sets.empty()) Fail(ErrorCode::kNotFound, "no distance subsystem for this graph");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& vars : sets) {
    best = std::min(best, MixedVolume(NewtonPolytopes(CmSubsystem(g, d, vars, seed))));
  }
  return static_cast<int>(2 * best);
}

Eigen::MatrixX3d RealizeFromDistances(const Eigen::MatrixXd& distances) {
  const Eigen::Index n = distances.rows();
  if (distances.cols() != n || n < 1) {
    Fail(ErrorCode::kInvalidArgument, "distance matrix must be square and nonempty");
  }
  const Eigen::MatrixXd sq = distances.cwiseProduct(distances);
  const double m = std::max(sq.maxCoeff(), std::numeric_limits<double>::min());
  if ((sq - sq.transpose()).cwiseAbs().maxCoeff() > 1e-12 * m ||
      sq.diagonal().cwiseAbs().maxCoeff() > 1e-12 * m) {
    Fail(ErrorCode::kInvalidArgument, "distance matrix must be symmetric with zero diagonal");
  }
  Eigen::MatrixXd cm = Eigen::MatrixXd::Zero(n + 1, n + 1);
  cm.block(0, 1, 1, n).setOnes();
  cm.block(1, 0, n, 1).setOnes();
  cm.block(1, 1, n, n) = sq / m;
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(cm).singularValues();
  const auto rank = (sv.array() > 1e-8 * sv[0]).count();
  if (rank > 5) {
    Fail(ErrorCode::kInfeasible, "distances are not embeddable in R^3 (Cayley-Menger rank " +
                                     std::to_string(rank) + ")");
  }
  // Gram matrix of the centred configuration.
  const Eigen::MatrixXd j =
      Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  const Eigen::MatrixXd gram = -0.5 * j * sq * j;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
  const Eigen::VectorXd& lambda = eig.eigenvalues();  // ascending
  const double top = std::max(lambda[n - 1], 0.0);
  if (lambda[0] < -1e-8 * std::max(top, m)) {
    Fail(ErrorCode::kInfeasible, "distances are not embeddable (negative Gram eigenvalue)");
  }
  Eigen::MatrixX3d pts = Eigen::MatrixX3d::Zero(n, 3);
  for (int k = 0; k < 3 && k < n; ++k) {
    const Eigen::Index col = n - 1 - k;
    pts.col(k) = eig.eigenvectors().col(col) * std::sqrt(std::max(lambda[col], 0.0));
  }
  return pts;
}

}  // namespace rigid

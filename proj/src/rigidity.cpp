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

#include "rigid/rigidity.hpp"

#include <algorithm>
#include <functional>

#include "rigid/error.hpp"

namespace rigid {
namespace {

constexpr double kRankThreshold = 1e-8;

}  // namespace

Eigen::MatrixX3d RandomRealization(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> grid(-1000000, 1000000);
  Eigen::MatrixX3d pts(n, 3);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < 3; ++k) pts(i, k) = grid(rng) * 1e-6;
  }
  return pts;
}

Eigen::MatrixXd RigidityMatrix(const Graph& g, const Eigen::MatrixX3d& points) {
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(g.edge_count(), 3 * g.vertex_count());
  int row = 0;
  for (const Edge& e : g.edges()) {
    const Eigen::RowVector3d diff = points.row(e.a - 1) - points.row(e.b - 1);
    r.block<1, 3>(row, 3 * (e.a - 1)) = diff;
    r.block<1, 3>(row, 3 * (e.b - 1)) = -diff;
    ++row;
  }
  return r;
}

int NumericalRank(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > kRankThreshold * s(0)) ++rank;
  }
  return rank;
}

bool IsGenericallyRigid(const Graph& g, std::uint64_t seed) {
  const int n = g.vertex_count();
  if (n < 2) return true;
  const int target = n <= 3 ? n * (n - 1) / 2 : 3 * n - 6;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < kRigidityTrials; ++trial) {
    const Eigen::MatrixX3d pts = RandomRealization(n, rng);
    if (NumericalRank(RigidityMatrix(g, pts)) == target) return true;
  }
  return false;
}

bool IsGloballyRigid(const Graph& g, std::uint64_t seed) {
  const int n = g.vertex_count();
  if (!IsGenericallyRigid(g, seed)) {
    Fail(ErrorCode::kInvalidArgument, "global rigidity test needs a rigid graph");
  }
  if (n <= 4) return true;  // complete graphs on at most 4 vertices
  std::mt19937_64 rng(seed ^ 0x5eedf00dULL);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < kRigidityTrials; ++trial) {
    const Eigen::MatrixX3d pts = RandomRealization(n, rng);
    const Eigen::MatrixXd r = RigidityMatrix(g, pts);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(r, Eigen::ComputeFullU);
    const auto& s = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < s.size(); ++i) {
      if (s(i) > kRankThreshold * s(0)) ++rank;
    }
    const int stresses = g.edge_count() - rank;
    if (stresses == 0) continue;
    Eigen::VectorXd omega = Eigen::VectorXd::Zero(g.edge_count());
    for (int k = rank; k < g.edge_count(); ++k) {
      omega += normal(rng) * svd.matrixU().col(k);
    }
    Eigen::MatrixXd stress = Eigen::MatrixXd::Zero(n, n);
    int row = 0;
    for (const Edge& e : g.edges()) {
      const double w = omega(row++);
      stress(e.a - 1, e.b - 1) -= w;
      stress(e.b - 1, e.a - 1) -= w;
      stress(e.a - 1, e.a - 1) += w;
      stress(e.b - 1, e.b - 1) += w;
    }
    if (NumericalRank(stress) == n - 4) return true;
  }
  return false;
}

std::vector<Edge> FindGlobalExtension(const Graph& g, std::uint64_t seed) {
  if (IsGloballyRigid(g, seed)) return {};
  const std::vector<Edge> candidates = g.NonEdges();
  const int max_size = std::min<int>(g.vertex_count() - 4, candidates.size());
  std::vector<Edge> chosen;
  std::function<bool(std::size_t, int)> pick = [&](std::size_t start, int left) {
    if (left == 0) return IsGloballyRigid(g.WithEdges(chosen), seed);
    for (std::size_t i = start; i + left <= candidates.size(); ++i) {
      chosen.push_back(candidates[i]);
      if (pick(i + 1, left - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int size = 1; size <= max_size; ++size) {
    chosen.clear();
    if (pick(0, size)) return chosen;
  }
  Fail(ErrorCode::kNotFound, "no globally rigid extension with at most " +
                                 std::to_string(max_size) + " edges");
}

std::vector<SamplingSubgraph> SuitableSubgraphs(const Graph& g) {
  std::vector<SamplingSubgraph> out;
  for (int u = 1; u <= g.vertex_count(); ++u) {
    if (g.Degree(u) != 4) continue;
    const std::vector<int> nb = g.Neighbors(u);
    for (int v : nb) {
      for (int w : nb) {
        for (int p : nb) {
          if (w == v || p == v || p <= w) continue;
          if (!g.HasEdge(v, w) || !g.HasEdge(v, p)) continue;
          int c = 0;
          for (int x : nb) {
            if (x != v && x != w && x != p) c = x;
          }
          SamplingSubgraph s{u, v, w, p, c, g.HasEdge(c, w)};
          if (!s.spherical && g.HasEdge(c, p)) {
            std::swap(s.w, s.p);
            s.spherical = true;
          }
          out.push_back(s);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rigid

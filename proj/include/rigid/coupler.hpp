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

#ifndef RIGID_COUPLER_HPP_
#define RIGID_COUPLER_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "rigid/embeddings.hpp"
#include "rigid/graph.hpp"
#include "rigid/lengths.hpp"
#include "rigid/rigidity.hpp"

namespace rigid {

// Two-parameter length family of a sampling subgraph (u, v, w, p, c).
// Frame: v at the origin, u = (0, t, 0), w = (x_w, y_w, 0) with x_w > 0.
// The coupler curve of p is the circle y = y_p, x^2 + z^2 = z_p^2, so
// moving u along the y-axis with
//   d_uv = t, d_uw = |(x_w, y_w - t, 0)|, d_up = |(0, y_p - t, z_p)|
// leaves the coupler curve of c unchanged.
struct CouplerFamily {
  Graph graph;
  LengthAssignment base;
  SamplingSubgraph sub;
  double x_w = 0.0;
  double y_w = 0.0;
  double y_p = 0.0;
  double z_p = 0.0;
  double d_cw = 0.0;  // 0 when not spherical

  // Base lengths with uv, uw, up replaced by the family values at t > 0.
  LengthAssignment At(double t) const;
  // Fixed triangle (v, u, w) of the frame.
  std::array<int, 3> Frame() const { return {sub.v, sub.u, sub.w}; }
};

// Throws degenerate when p lies on the line uv (z_p = 0) or w on uv
// (x_w = 0), infeasible when a triangle inequality fails.
CouplerFamily MakeCouplerFamily(const Graph& g, const LengthAssignment& d,
                                const SamplingSubgraph& sub);

struct CouplerPoint {
  LengthAssignment lengths;
  double t = 0.0;
  double r = 0.0;  // length of uc
};

// phi in (-pi/2, pi/2) places u = (0, y_w + x_w tan(phi), 0); theta in
// (0, pi) is the angle at w between wu and wc, giving r by the law of
// cosines. Throws unsupported for a non-spherical family and out-of-range
// when t <= 0.
CouplerPoint LengthsFromPhiTheta(const CouplerFamily& fam, double phi, double theta);

// Inverse of the above for the base lengths: (phi, theta) of (t, r).
std::pair<double, double> PhiThetaOf(const CouplerFamily& fam, double t, double r);

struct SampleRecord {
  double phi = 0.0;
  double theta = 0.0;
  double t = 0.0;
  double r = 0.0;
  int real_count = 0;
  int complex_count = 0;
  bool failed = false;  // solver failure; counts are meaningless
  LengthAssignment lengths;
};

// Cell-centred grid: phi_i = lo + (i + 1/2 + jitter) * pitch. A nonzero seed
// draws one jitter per axis uniformly from [-1/2, 1/2).
struct GridSpec {
  int phi_points = 20;
  int theta_points = 24;
  double phi_margin = 0.05;    // phi in (-pi/2 + margin, pi/2 - margin)
  double theta_margin = 0.05;  // theta in (margin, pi - margin)
  std::uint64_t jitter_seed = 0;
  int max_solver_calls = 500;
};

std::vector<double> GridPhis(const GridSpec& spec);
std::vector<double> GridThetas(const GridSpec& spec);

// Real embedding counts over the (phi, theta) grid in row-major order, each
// point solved by a parameter homotopy from the previous one. `state` holds
// the roots of the last solved point and is updated; when empty the first
// point is solved from scratch. Points with t <= 0 are skipped.
std::vector<SampleRecord> SampleGrid(const CouplerFamily& fam, const GridSpec& spec,
                                     std::optional<EmbeddingCount>& state, std::uint64_t seed,
                                     const TrackerOptions& tracker = {});

// Evaluates one (phi, theta) point; used for cluster centres.
using SampleEvaluator = std::function<SampleRecord(double phi, double theta)>;

struct ClusterOptions {
  double epsilon = 0.15;  // radians in the (phi, theta) plane
  int min_points = 2;
};

// Records attaining the maximum real count, clustered by DBSCAN; one
// representative per cluster (noise points represent themselves): the
// centre when `evaluate` confirms it keeps the maximum, else the member
// closest to the centre. Ordered by (phi, theta) of the representative.
std::vector<SampleRecord> ClusterCandidates(const std::vector<SampleRecord>& records,
                                            const SampleEvaluator& evaluate = nullptr,
                                            const ClusterOptions& opts = {});

struct CurveSweep {
  double r_min = 0.0;
  double r_max = 0.0;
  int steps = 100;
  std::optional<double> t;  // family parameter; base lengths when unset
};

// Real positions of c (frame v, u, w; original units) over uc lengths in
// [r_min, r_max], one parameter homotopy per step.
std::vector<Eigen::Vector3d> TraceCouplerCurve(const CouplerFamily& fam, const CurveSweep& sweep,
                                               std::uint64_t seed,
                                               const TrackerOptions& tracker = {});

// Real positions of c for the family at t with uc = r.
std::vector<Eigen::Vector3d> CouplerPositions(const CouplerFamily& fam, double t, double r,
                                              std::uint64_t seed,
                                              const TrackerOptions& tracker = {});

}  // namespace rigid

#endif  // RIGID_COUPLER_HPP_

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

#include "rigid/coupler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "rigid/error.hpp"
#include "rigid/sphere_system.hpp"

namespace rigid {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> Axis(int count, double lo, double hi, double jitter) {
  std::vector<double> out;
  const double pitch = (hi - lo) / count;
  for (int i = 0; i < count; ++i) out.push_back(lo + (i + 0.5 + jitter) * pitch);
  return out;
}

double Jitter(std::uint64_t seed, int axis) {
  if (seed == 0) return 0.0;
  std::mt19937_64 rng(seed * 2 + static_cast<std::uint64_t>(axis));
  return std::uniform_real_distribution<double>(-0.5, 0.5)(rng);
}

// Counts use the frame triangle so that positions read off the solutions
// are in the frame of the family.
CountOptions Options(const CouplerFamily& fam, std::uint64_t seed, const TrackerOptions& tracker) {
  CountOptions opts;
  opts.triangle = fam.Frame();
  opts.seed = seed;
  opts.tracker = tracker;
  return opts;
}

double Distance(const SampleRecord& a, double phi, double theta) {
  return std::hypot(a.phi - phi, a.theta - theta);
}

}  // namespace

LengthAssignment CouplerFamily::At(double t) const {
  if (!(t > 0.0)) Fail(ErrorCode::kOutOfRange, "family parameter t must be positive");
  LengthAssignment out = base;
  out.Set(Edge(sub.u, sub.v), t);
  out.Set(Edge(sub.u, sub.w), std::hypot(x_w, y_w - t));
  out.Set(Edge(sub.u, sub.p), std::hypot(y_p - t, z_p));
  return out;
}

CouplerFamily MakeCouplerFamily(const Graph& g, const LengthAssignment& d,
                                const SamplingSubgraph& sub) {
  const auto [u, v, w, p, c, spherical] = sub;
  for (const Edge& e : {Edge(u, v), Edge(u, w), Edge(u, p), Edge(u, c), Edge(p, v), Edge(v, w)}) {
    if (!g.HasEdge(e)) {
      Fail(ErrorCode::kInvalidArgument, "sampling subgraph needs edge " + e.ToString());
    }
  }
  if (g.Degree(u) != 4) Fail(ErrorCode::kInvalidArgument, "sampling vertex u must have degree 4");
  d.RequireCovers(g);
  CouplerFamily fam;
  fam.graph = g;
  fam.base = d;
  fam.sub = sub;
  fam.sub.spherical = g.HasEdge(c, w);
  const double t0 = d.At(u, v);
  const FixedTriangle tri = FixedTriangleCoordinates(t0, d.At(v, w), d.At(u, w));
  fam.x_w = tri.v3.x();
  fam.y_w = tri.v3.y();
  if (tri.degenerate || fam.x_w <= 1e-12 * t0) {
    Fail(ErrorCode::kDegenerate, "w lies on the line uv");
  }
  const double dvp = d.At(v, p);
  const double dup = d.At(u, p);
  fam.y_p = (dvp * dvp - dup * dup + t0 * t0) / (2.0 * t0);
  const double zz = dvp * dvp - fam.y_p * fam.y_p;
  if (zz < -1e-12 * dvp * dvp) Fail(ErrorCode::kInfeasible, "triangle uvp violates the triangle inequality");
  if (zz <= 1e-12 * dvp * dvp) Fail(ErrorCode::kDegenerate, "p lies on the line uv (zero altitude)");
  fam.z_p = std::sqrt(zz);
  if (fam.sub.spherical) fam.d_cw = d.At(c, w);
  return fam;
}

CouplerPoint LengthsFromPhiTheta(const CouplerFamily& fam, double phi, double theta) {
  if (!fam.sub.spherical) Fail(ErrorCode::kUnsupported, "sampling needs the edge cw");
  if (!(std::abs(phi) < kPi / 2) || !(theta > 0.0 && theta < kPi)) {
    Fail(ErrorCode::kOutOfRange, "phi must lie in (-pi/2, pi/2) and theta in (0, pi)");
  }
  CouplerPoint out;
  out.t = fam.y_w + fam.x_w * std::tan(phi);
  if (!(out.t > 0.0)) Fail(ErrorCode::kOutOfRange, "angle phi places u at t <= 0");
  const double uw = fam.x_w / std::cos(phi);
  out.r = std::sqrt(uw * uw + fam.d_cw * fam.d_cw - 2.0 * uw * fam.d_cw * std::cos(theta));
  out.lengths = fam.At(out.t);
  out.lengths.Set(Edge(fam.sub.u, fam.sub.c), out.r);
  return out;
}

std::pair<double, double> PhiThetaOf(const CouplerFamily& fam, double t, double r) {
  if (!fam.sub.spherical) Fail(ErrorCode::kUnsupported, "sampling needs the edge cw");
  const double phi = std::atan((t - fam.y_w) / fam.x_w);
  const double uw = fam.x_w / std::cos(phi);
  const double cos_theta = (uw * uw + fam.d_cw * fam.d_cw - r * r) / (2.0 * uw * fam.d_cw);
  return {phi, std::acos(std::clamp(cos_theta, -1.0, 1.0))};
}

std::vector<double> GridPhis(const GridSpec& spec) {
  const double lo = -kPi / 2 + spec.phi_margin;
  return Axis(spec.phi_points, lo, -lo, Jitter(spec.jitter_seed, 0));
}

std::vector<double> GridThetas(const GridSpec& spec) {
  return Axis(spec.theta_points, spec.theta_margin, kPi - spec.theta_margin,
              Jitter(spec.jitter_seed, 1));
}

std::vector<SampleRecord> SampleGrid(const CouplerFamily& fam, const GridSpec& spec,
                                     std::optional<EmbeddingCount>& state, std::uint64_t seed,
                                     const TrackerOptions& tracker) {
  std::vector<SampleRecord> out;
  int calls = 0;
  for (double phi : GridPhis(spec)) {
    for (double theta : GridThetas(spec)) {
      if (calls >= spec.max_solver_calls) return out;
      CouplerPoint pt;
      try {
        pt = LengthsFromPhiTheta(fam, phi, theta);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kOutOfRange) continue;
        throw;
      }
      SampleRecord rec;
      rec.phi = phi;
      rec.theta = theta;
      rec.t = pt.t;
      rec.r = pt.r;
      rec.lengths = pt.lengths;
      ++calls;
      try {
        EmbeddingCount count =
            state ? RecountEmbeddings(fam.graph, pt.lengths, *state, seed, tracker)
                  : CountEmbeddings(fam.graph, pt.lengths, Options(fam, seed, tracker));
        rec.real_count = count.real_count;
        rec.complex_count = count.complex_count;
        if (!state || count.complex_count >= state->complex_count) state = std::move(count);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kSolverError && e.code() != ErrorCode::kInfeasible) throw;
        rec.failed = true;
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::vector<SampleRecord> ClusterCandidates(const std::vector<SampleRecord>& records,
                                            const SampleEvaluator& evaluate,
                                            const ClusterOptions& opts) {
  int best = -1;
  for (const SampleRecord& r : records) {
    if (!r.failed) best = std::max(best, r.real_count);
  }
  std::vector<const SampleRecord*> top;
  for (const SampleRecord& r : records) {
    if (!r.failed && r.real_count == best) top.push_back(&r);
  }
  const std::size_t m = top.size();
  auto neighbours = [&](std::size_t i) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < m; ++j) {
      if (Distance(*top[i], top[j]->phi, top[j]->theta) <= opts.epsilon) out.push_back(j);
    }
    return out;
  };
  // DBSCAN; label -1 = unvisited, clusters from 0.
  std::vector<int> label(m, -1);
  int clusters = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (label[i] != -1) continue;
    std::vector<std::size_t> seeds = neighbours(i);
    label[i] = clusters;
    if (static_cast<int>(seeds.size()) >= opts.min_points) {
      for (std::size_t k = 0; k < seeds.size(); ++k) {
        const std::size_t j = seeds[k];
        if (label[j] != -1) continue;
        label[j] = clusters;
        const std::vector<std::size_t> more = neighbours(j);
        if (static_cast<int>(more.size()) >= opts.min_points) {
          seeds.insert(seeds.end(), more.begin(), more.end());
        }
      }
    }
    ++clusters;
  }
  std::vector<SampleRecord> out;
  for (int c = 0; c < clusters; ++c) {
    double phi = 0.0;
    double theta = 0.0;
    int size = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (label[i] != c) continue;
      phi += top[i]->phi;
      theta += top[i]->theta;
      ++size;
    }
    phi /= size;
    theta /= size;
    const SampleRecord* closest = nullptr;
    for (std::size_t i = 0; i < m; ++i) {
      if (label[i] != c) continue;
      if (!closest || Distance(*top[i], phi, theta) < Distance(*closest, phi, theta)) {
        closest = top[i];
      }
    }
    std::optional<SampleRecord> centre;
    if (size > 1 && evaluate) {
      try {
        centre = evaluate(phi, theta);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kUnsupported || e.code() == ErrorCode::kInvalidArgument) throw;
      }
    }
    out.push_back(centre && !centre->failed && centre->real_count >= best ? *centre : *closest);
  }
  std::sort(out.begin(), out.end(), [](const SampleRecord& a, const SampleRecord& b) {
    return std::tie(a.phi, a.theta) < std::tie(b.phi, b.theta);
  });
  return out;
}

std::vector<Eigen::Vector3d> CouplerPositions(const CouplerFamily& fam, double t, double r,
                                              std::uint64_t seed, const TrackerOptions& tracker) {
  LengthAssignment d = fam.At(t);
  d.Set(Edge(fam.sub.u, fam.sub.c), r);
  const EmbeddingCount count =
      CountEmbeddings(fam.graph, d, Options(fam, seed, tracker));
  std::vector<Eigen::Vector3d> out;
  for (const auto& pts : RealEmbeddings(count, fam.graph.vertex_count())) {
    out.push_back(pts.row(fam.sub.c - 1).transpose());
  }
  return out;
}

std::vector<Eigen::Vector3d> TraceCouplerCurve(const CouplerFamily& fam, const CurveSweep& sweep,
                                               std::uint64_t seed,
                                               const TrackerOptions& tracker) {
  if (sweep.steps < 1 || !(sweep.r_min > 0.0) || sweep.r_max < sweep.r_min) {
    Fail(ErrorCode::kInvalidArgument, "sweep needs 0 < r_min <= r_max and at least one step");
  }
  const double t = sweep.t ? *sweep.t : fam.base.At(fam.sub.u, fam.sub.v);
  const LengthAssignment base = fam.At(t);
  const int n = fam.graph.vertex_count();
  std::optional<EmbeddingCount> state;
  std::vector<Eigen::Vector3d> out;
  for (int i = 0; i < sweep.steps; ++i) {
    const double r =
        sweep.steps == 1 ? sweep.r_min
                         : sweep.r_min + (sweep.r_max - sweep.r_min) * i / (sweep.steps - 1);
    LengthAssignment d = base;
    d.Set(Edge(fam.sub.u, fam.sub.c), r);
    EmbeddingCount count;
    try {
      count = state ? RecountEmbeddings(fam.graph, d, *state, seed, tracker)
                    : CountEmbeddings(fam.graph, d, Options(fam, seed, tracker));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSolverError) throw;
      continue;
    }
    for (const auto& pts : RealEmbeddings(count, n)) {
      out.push_back(pts.row(fam.sub.c - 1).transpose());
    }
    if (!state || count.complex_count >= state->complex_count) state = std::move(count);
  }
  return out;
}

}  // namespace rigid

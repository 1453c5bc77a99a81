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

#ifndef RIGID_HOMOTOPY_HPP_
#define RIGID_HOMOTOPY_HPP_

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "rigid/polynomial.hpp"

namespace rigid {

struct TrackerOptions {
  double initial_step = 0.02;
  double max_step = 0.1;
  // Parameter homotopies between nearby systems have nearly stationary
  // paths; they start and cap at these instead.
  double parameter_initial_step = 0.1;
  double parameter_max_step = 0.5;
  double min_step = 1e-14;
  // Newton corrections per step and the relative size at which a
  // correction counts as converged.
  int max_corrector_iterations = 3;
  double corrector_tolerance = 1e-7;
  // A step whose first correction exceeds this (relative) is rejected; this
  // keeps the predictor close enough to avoid jumping between paths.
  double max_predictor_error = 1e-3;
  // Step sizes adapt so that the first correction stays near this.
  double target_predictor_error = 1e-4;
  // Paths whose affine norm exceeds this near t = 1 are divergent.
  double divergence_norm = 1e8;
  double endgame_start = 0.9;
  // Consecutive step rejections after endgame_start that mark a path as
  // stalled (its endpoint is singular).
  int max_endgame_rejections = 8;
  // Roots whose Jacobian condition number exceeds this are treated as
  // singular and discarded with the divergent paths.
  double max_condition = 1e13;
  // Relative distance allowed between a path endpoint and its refined root.
  double endpoint_tolerance = 1e-4;

  int refine_max_iterations = 50;
  double refine_tolerance = 1e-12;  // times (1 + coefficient scale) * max|x|^degree
  double refine_step_tolerance = 1e-6;  // final Newton step, relative to 1 + |x|
  double real_tolerance = 1e-6;
  double near_real_tolerance = 1e-4;
  double dedupe_tolerance = 1e-8;  // relative; widened to 1e-14 * condition

  // Failure fraction above which the solve is repeated with a new gamma.
  double max_failure_fraction = 0.01;
  int retries = 2;
};

struct Solution {
  Eigen::VectorXcd values;
  double residual = 0.0;
  double condition = 0.0;  // of the Jacobian at the root
  bool multiple = false;   // more than one path converged here
  bool is_real = false;
  bool near_real = false;  // imaginary parts between the real and near-real tolerances
  bool failed = false;     // refinement did not converge
};

struct Provenance {
  Formulation formulation = Formulation::kSphere;
  std::uint64_t system_hash = 0;
  std::uint64_t seed = 0;
};

struct SolutionSet {
  std::vector<Solution> solutions;  // deduplicated, finite, sorted
  int tracked_paths = 0;
  int diverged_paths = 0;
  int failed_paths = 0;
  int attempts = 0;  // gamma values used
  Provenance provenance;

  int complex_count() const { return static_cast<int>(solutions.size()); }
  int real_count() const;
};

// Hash of the variables and coefficients of a system.
std::uint64_t HashSystem(const PolynomialSystem& sys);

// Total-degree homotopy (1 - t) * gamma * G + t * F with G_i = x_i^{d_i} - 1,
// tracked in projective space on a random affine chart. Endpoints are
// refined, divergent paths dropped, and duplicates merged. If more than the
// allowed fraction of paths fail, the solve is repeated with a fresh gamma
// and the results are merged; persistent failure throws solver-error.
SolutionSet SolveTotalDegree(const PolynomialSystem& sys, std::uint64_t seed,
                             const TrackerOptions& opts = {});

// Coefficient homotopy (1 - t) * gamma * F0 + t * F1 from known solutions of
// F0. The systems must share variables; paths that fail are retried with a
// fresh gamma.
SolutionSet TrackParameterHomotopy(const PolynomialSystem& from, const SolutionSet& start,
                                   const PolynomialSystem& to, std::uint64_t seed,
                                   const TrackerOptions& opts = {});

// Newton refinement on sys; marks the solution failed on divergence.
Solution Refine(const Solution& sol, const PolynomialSystem& sys,
                const TrackerOptions& opts = {});

// Max |f_i(x)|.
double Residual(const PolynomialSystem& sys, const Eigen::VectorXcd& x);

// Fills is_real / near_real from the imaginary parts.
void ClassifyReal(Solution& sol, const TrackerOptions& opts);

}  // namespace rigid

#endif  // RIGID_HOMOTOPY_HPP_

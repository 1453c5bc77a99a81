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

#include "rigid/homotopy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "rigid/error.hpp"
#include "rigid/parallel.hpp"

namespace rigid {
namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

constexpr int kMaxFactors = 16;
constexpr int kMaxSteps = 200000;

// Flat evaluator for a polynomial system, optionally homogenized with one
// extra trailing variable. Each equation can be scaled.
class Compiled {
 public:
  Compiled(const PolynomialSystem& sys, bool homogenize, bool normalize) {
    nvars_ = sys.size() + (homogenize ? 1 : 0);
    neqs_ = static_cast<int>(sys.polynomials.size());
    poly_begin_.push_back(0);
    for (const Polynomial& p : sys.polynomials) {
      const int deg = p.Degree();
      max_degree_ = std::max(max_degree_, deg);
      const double scale = normalize && p.MaxCoefficient() > 0 ? 1.0 / p.MaxCoefficient() : 1.0;
      for (const auto& [e, c] : p.terms()) {
        Term t{c * scale, static_cast<int>(factors_.size()), 0};
        int total = 0;
        for (int i = 0; i < sys.size(); ++i) {
          if (e[i] > 0) factors_.push_back({i, e[i]});
          total += e[i];
        }
        if (homogenize && total < deg) factors_.push_back({sys.size(), deg - total});
        t.end = static_cast<int>(factors_.size());
        if (t.end - t.begin > kMaxFactors) {
          Fail(ErrorCode::kUnsupported, "term has too many distinct variables");
        }
        terms_.push_back(t);
      }
      poly_begin_.push_back(static_cast<int>(terms_.size()));
    }
  }

  int variables() const { return nvars_; }
  int equations() const { return neqs_; }

  // f has size equations(); jac is equations() x variables(). Rows beyond
  // equations() are left untouched.
  void Eval(const VectorXcd& x, VectorXcd& f, MatrixXcd& jac) const {
    std::array<Complex, kMaxFactors> val{};
    std::array<Complex, kMaxFactors> der{};
    std::array<Complex, kMaxFactors + 1> prefix{};
    for (int i = 0; i < neqs_; ++i) {
      Complex sum = 0.0;
      jac.row(i).setZero();
      for (int ti = poly_begin_[i]; ti < poly_begin_[i + 1]; ++ti) {
        const Term& t = terms_[ti];
        const int k = t.end - t.begin;
        for (int j = 0; j < k; ++j) {
          const Factor& fac = factors_[t.begin + j];
          const Complex xv = x[fac.var];
          Complex p = 1.0;
          for (int r = 1; r < fac.exp; ++r) p *= xv;
          der[j] = static_cast<double>(fac.exp) * p;
          val[j] = p * xv;
        }
        prefix[0] = t.coeff;
        for (int j = 0; j < k; ++j) prefix[j + 1] = prefix[j] * val[j];
        sum += prefix[k];
        Complex suffix = 1.0;
        for (int j = k - 1; j >= 0; --j) {
          jac(i, factors_[t.begin + j].var) += prefix[j] * der[j] * suffix;
          suffix *= val[j];
        }
      }
      f[i] = sum;
    }
  }

  int max_degree() const { return max_degree_; }

  double MaxCoefficient() const {
    double m = 0.0;
    for (const Term& t : terms_) m = std::max(m, std::abs(t.coeff));
    return m;
  }

 private:
  struct Factor {
    int var;
    int exp;
  };
  struct Term {
    Complex coeff;
    int begin;
    int end;
  };
  int nvars_ = 0;
  int neqs_ = 0;
  int max_degree_ = 0;
  std::vector<Term> terms_;
  std::vector<Factor> factors_;
  std::vector<int> poly_begin_;
};

struct Scratch {
  explicit Scratch(int n)
      : h(n), ht(n), f0(n), f1(n), hx(n, n), j0(n, n), j1(n, n), lu(n) {}
  VectorXcd h, ht, f0, f1;
  MatrixXcd hx, j0, j1;
  Eigen::PartialPivLU<MatrixXcd> lu;
};

bool Close(const VectorXcd& a, const VectorXcd& b, double tol) {
  return (a - b).norm() <= tol * (1.0 + std::max(a.norm(), b.norm()));
}

class Homotopy {
 public:
  virtual ~Homotopy() = default;
  virtual int dim() const = 0;
  // Fills s.h, s.hx and, when want_t, s.ht at (x, t).
  virtual void Eval(const VectorXcd& x, double t, Scratch& s, bool want_t) const = 0;
  // Norm of the affine point represented by x.
  virtual double AffineNorm(const VectorXcd& x) const = 0;
};

// (1 - t) gamma G + t F^h on the chart a . X = 1, with G_i = X_i^d_i - X_N^d_i.
class TotalDegreeHomotopy : public Homotopy {
 public:
  TotalDegreeHomotopy(const Compiled& target, std::vector<int> degrees, VectorXcd patch,
                      Complex gamma)
      : target_(target), degrees_(std::move(degrees)), patch_(std::move(patch)), gamma_(gamma) {}

  int dim() const override { return target_.variables(); }

  void Eval(const VectorXcd& x, double t, Scratch& s, bool want_t) const override {
    const int n = target_.equations();
    target_.Eval(x, s.f1, s.j1);
    const Complex a = (1.0 - t) * gamma_;
    const Complex x0 = x[n];
    s.hx.topRows(n) = t * s.j1.topRows(n);
    for (int i = 0; i < n; ++i) {
      const int d = degrees_[i];
      Complex pi = 1.0;
      Complex p0 = 1.0;
      for (int r = 1; r < d; ++r) {
        pi *= x[i];
        p0 *= x0;
      }
      const Complex gi = pi * x[i] - p0 * x0;
      s.h[i] = a * gi + t * s.f1[i];
      s.hx(i, i) += a * static_cast<double>(d) * pi;
      s.hx(i, n) -= a * static_cast<double>(d) * p0;
      if (want_t) s.ht[i] = s.f1[i] - gamma_ * gi;
    }
    s.h[n] = patch_.dot(x) - 1.0;  // dot conjugates its first argument
    s.hx.row(n) = patch_.adjoint();
    if (want_t) s.ht[n] = 0.0;
  }

  double AffineNorm(const VectorXcd& x) const override {
    const int n = target_.equations();
    const double h = std::abs(x[n]);
    const double top = x.head(n).norm();
    return h == 0.0 ? std::numeric_limits<double>::infinity() : top / h;
  }

 private:
  const Compiled& target_;
  std::vector<int> degrees_;
  VectorXcd patch_;
  Complex gamma_;
};

// (1 - t) gamma F0^h + t F1^h on the chart a . X = 1. Tracking in projective
// space keeps paths that pass near infinity well scaled.
class ParameterHomotopy : public Homotopy {
 public:
  ParameterHomotopy(const Compiled& from, const Compiled& to, VectorXcd patch, Complex gamma)
      : from_(from), to_(to), patch_(std::move(patch)), gamma_(gamma) {}

  int dim() const override { return to_.variables(); }

  void Eval(const VectorXcd& x, double t, Scratch& s, bool want_t) const override {
    const int n = to_.equations();
    from_.Eval(x, s.f0, s.j0);
    to_.Eval(x, s.f1, s.j1);
    const Complex a = (1.0 - t) * gamma_;
    s.h.head(n) = a * s.f0.head(n) + t * s.f1.head(n);
    s.hx.topRows(n) = a * s.j0.topRows(n) + t * s.j1.topRows(n);
    s.h[n] = patch_.dot(x) - 1.0;
    s.hx.row(n) = patch_.adjoint();
    if (want_t) {
      s.ht.head(n) = s.f1.head(n) - gamma_ * s.f0.head(n);
      s.ht[n] = 0.0;
    }
  }

  double AffineNorm(const VectorXcd& x) const override {
    const int n = to_.equations();
    const double h = std::abs(x[n]);
    return h == 0.0 ? std::numeric_limits<double>::infinity() : x.head(n).norm() / h;
  }

 private:
  const Compiled& from_;
  const Compiled& to_;
  VectorXcd patch_;
  Complex gamma_;
};

// kStalled: the step size collapsed after endgame_start, which happens when
// the endpoint is singular (typically at infinity); refinement decides.
enum class PathStatus { kSuccess, kDiverged, kStalled, kFailed };

struct PathResult {
  VectorXcd x;
  PathStatus status = PathStatus::kFailed;
};

bool AllFinite(const VectorXcd& v) { return v.allFinite(); }

// dx/dt = -H_x^{-1} H_t.
bool Velocity(const Homotopy& h, const VectorXcd& x, double t, Scratch& s, VectorXcd& out) {
  h.Eval(x, t, s, true);
  s.lu.compute(s.hx);
  s.ht = -s.ht;
  out.noalias() = s.lu.solve(s.ht);
  return AllFinite(out);
}

PathResult TrackPath(const Homotopy& h, const VectorXcd& start, const TrackerOptions& opts) {
  const int n = h.dim();
  Scratch s(n);
  VectorXcd x = start, xp(n), xs(n), k1(n), k2(n), k3(n), k4(n), dx(n);
  double t = 0.0;
  double step = opts.initial_step;
  PathResult result;
  int rejections = 0;
  for (int iter = 0; iter < kMaxSteps && t < 1.0; ++iter) {
    if (step < opts.min_step) break;
    const double dt = std::min(step, 1.0 - t);
    const double t1 = (dt == 1.0 - t) ? 1.0 : t + dt;
    const double tm = t + 0.5 * dt;
    bool ok = Velocity(h, x, t, s, k1);
    if (ok) {
      xs = x + (0.5 * dt) * k1;
      ok = Velocity(h, xs, tm, s, k2);
    }
    if (ok) {
      xs = x + (0.5 * dt) * k2;
      ok = Velocity(h, xs, tm, s, k3);
    }
    if (ok) {
      xs = x + dt * k3;
      ok = Velocity(h, xs, t1, s, k4);
    }
    double first = 0.0;
    if (ok) {
      xp = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      ok = false;
      double prev = 0.0;
      // Chord iterations reuse the factorization from the last stage, which
      // was taken at t1 close to xp.
      for (int it = 0; it < opts.max_corrector_iterations; ++it) {
        h.Eval(xp, t1, s, false);
        s.h = -s.h;
        dx.noalias() = s.lu.solve(s.h);
        if (!AllFinite(dx)) break;
        const double nd = dx.norm();
        const double scale = 1.0 + xp.norm();
        if (it == 0) {
          if (nd > opts.max_predictor_error * scale) break;
          first = nd / scale;
        } else if (nd > prev) {
          break;
        }
        xp += dx;
        prev = nd;
        if (nd <= opts.corrector_tolerance * scale) {
          ok = true;
          break;
        }
      }
    }
    if (!ok) {
      step *= 0.5;
      if (++rejections > opts.max_endgame_rejections && t >= opts.endgame_start) break;
      continue;
    }
    rejections = 0;
    x = xp;
    t = t1;
    // The first correction estimates the fourth-order predictor error.
    const double factor =
        first > 0.0 ? 0.9 * std::pow(opts.target_predictor_error / first, 0.2) : 2.0;
    step = std::min(step * std::clamp(factor, 0.5, 2.0), opts.max_step);
    if (t >= opts.endgame_start && h.AffineNorm(x) > opts.divergence_norm) {
      result.x = x;
      result.status = PathStatus::kDiverged;
      return result;
    }
  }
  result.x = x;
  if (t >= 1.0) {
    result.status = PathStatus::kSuccess;
  } else if (t >= opts.endgame_start) {
    result.status = PathStatus::kStalled;
  } else {
    result.status = PathStatus::kFailed;
  }
  return result;
}

double OneNorm(const MatrixXcd& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

Solution RefineCompiled(const VectorXcd& x0, const Compiled& f, double scale,
                        const TrackerOptions& opts) {
  const int n = f.variables();
  VectorXcd x = x0, fx(n), dx(n);
  MatrixXcd jac(n, n);
  Eigen::PartialPivLU<MatrixXcd> lu(n);
  // Evaluation roundoff grows like |x|^degree.
  auto tolerance = [&](const VectorXcd& v) {
    const double m = std::max(1.0, v.cwiseAbs().maxCoeff());
    return opts.refine_tolerance * (1.0 + scale) * std::pow(m, f.max_degree());
  };
  // Both the residual and the Newton step must be small: near infinity the
  // residual tolerance is loose while Newton keeps moving outward.
  VectorXcd best = x;
  double best_res = std::numeric_limits<double>::infinity();
  bool converged = false;
  for (int it = 0; it <= opts.refine_max_iterations; ++it) {
    f.Eval(x, fx, jac);
    const double res = fx.cwiseAbs().maxCoeff();
    if (!std::isfinite(res)) break;
    lu.compute(jac);
    dx.noalias() = lu.solve(-fx);
    if (!AllFinite(dx)) break;
    if (res < best_res) {
      best_res = res;
      best = x;
    }
    if (res <= tolerance(x) && dx.norm() <= opts.refine_step_tolerance * (1.0 + x.norm())) {
      converged = true;
      best_res = res;
      best = x;
      break;
    }
    x += dx;
  }
  Solution sol;
  sol.values = best;
  sol.residual = best_res;
  sol.failed = !converged;
  if (!sol.failed) {
    f.Eval(best, fx, jac);
    lu.compute(jac);
    const MatrixXcd inv = lu.inverse();
    const double c = OneNorm(jac) * OneNorm(inv);
    sol.condition = std::isfinite(c) ? c : std::numeric_limits<double>::infinity();
  }
  return sol;
}

std::uint64_t Mix(std::uint64_t seed, int attempt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Complex RandomGamma(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, u(rng));
}


// Refined roots agree to about condition * machine epsilon, so the
// comparison widens for ill-conditioned roots.
bool Same(const Solution& a, const Solution& b, const TrackerOptions& opts) {
  const double cond = std::max(a.condition, b.condition);
  return Close(a.values, b.values, std::max(opts.dedupe_tolerance, 1e-14 * cond));
}

// Adds sol to the set unless an equal point is present; returns true when it
// was a duplicate.
bool Merge(std::vector<Solution>& set, const Solution& sol, const TrackerOptions& opts) {
  for (Solution& s : set) {
    if (Same(s, sol, opts)) {
      if (sol.residual < s.residual) {
        const bool mult = s.multiple;
        s = sol;
        s.multiple = mult;
      }
      return true;
    }
  }
  set.push_back(sol);
  return false;
}

bool LexLess(const Solution& a, const Solution& b) {
  for (Eigen::Index i = 0; i < a.values.size(); ++i) {
    if (a.values[i].real() != b.values[i].real()) return a.values[i].real() < b.values[i].real();
  }
  for (Eigen::Index i = 0; i < a.values.size(); ++i) {
    if (a.values[i].imag() != b.values[i].imag()) return a.values[i].imag() < b.values[i].imag();
  }
  return false;
}

struct AttemptStats {
  int failed = 0;
  int diverged = 0;
  int duplicates = 0;
};

// Refines, classifies and merges the endpoints of one attempt. Endpoints
// that coincide within one attempt are flagged as multiple.
AttemptStats Collect(const std::vector<PathResult>& paths, const std::vector<VectorXcd>& affine,
                     const Compiled& f, double scale, const TrackerOptions& opts,
                     std::vector<Solution>& out) {
  AttemptStats stats;
  std::vector<Solution> local;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].status == PathStatus::kDiverged) {
      ++stats.diverged;
      continue;
    }
    if (paths[i].status == PathStatus::kFailed) {
      ++stats.failed;
      continue;
    }
    if (!AllFinite(affine[i]) || affine[i].norm() > opts.divergence_norm) {
      ++stats.diverged;
      continue;
    }
    // Endpoints Newton cannot refine are singular, mostly at infinity.
    Solution sol = RefineCompiled(affine[i], f, scale, opts);
    if (sol.failed) {
      ++stats.diverged;
      continue;
    }
    // Numerically singular endpoints lie on the boundary at infinity (the
    // systems of interest have only nonsingular finite roots).
    if (sol.condition > opts.max_condition || sol.values.norm() > opts.divergence_norm) {
      ++stats.diverged;
      continue;
    }
    // Newton from an endpoint near infinity can land on an unrelated root;
    // the tracked endpoint must already sit on the root it refines to.
    if ((sol.values - affine[i]).norm() > opts.endpoint_tolerance * (1.0 + sol.values.norm())) {
      ++stats.diverged;
      continue;
    }
    ClassifyReal(sol, opts);
    for (Solution& s : local) {
      if (Same(s, sol, opts)) {
        s.multiple = true;
        sol.multiple = true;
      }
    }
    if (sol.multiple) {
      ++stats.duplicates;
      continue;
    }
    local.push_back(sol);
  }
  for (const Solution& s : local) Merge(out, s, opts);
  return stats;
}

}  // namespace

int SolutionSet::real_count() const {
  return static_cast<int>(
      std::count_if(solutions.begin(), solutions.end(), [](const Solution& s) { return s.is_real; }));
}

std::uint64_t HashSystem(const PolynomialSystem& sys) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= p[i];
      h *= 0x100000001b3ULL;
    }
  };
  for (const std::string& v : sys.variables) feed(v.data(), v.size());
  for (const Polynomial& p : sys.polynomials) {
    for (const auto& [e, c] : p.terms()) {
      feed(e.data(), e.size() * sizeof(int));
      const double parts[2] = {c.real(), c.imag()};
      feed(parts, sizeof(parts));
    }
  }
  return h;
}

double Residual(const PolynomialSystem& sys, const Eigen::VectorXcd& x) {
  double r = 0.0;
  const std::span<const Complex> span(x.data(), static_cast<std::size_t>(x.size()));
  for (const Polynomial& p : sys.polynomials) r = std::max(r, std::abs(p.Evaluate(span)));
  return r;
}

void ClassifyReal(Solution& sol, const TrackerOptions& opts) {
  const double scale = std::max(1.0, sol.values.cwiseAbs().maxCoeff());
  const double im = sol.values.imag().cwiseAbs().maxCoeff();
  sol.is_real = im <= opts.real_tolerance * scale;
  sol.near_real = !sol.is_real && im <= opts.near_real_tolerance * scale;
}

Solution Refine(const Solution& sol, const PolynomialSystem& sys, const TrackerOptions& opts) {
  const Compiled f(sys, false, false);
  Solution out = RefineCompiled(sol.values, f, f.MaxCoefficient(), opts);
  out.multiple = sol.multiple;
  ClassifyReal(out, opts);
  return out;
}

SolutionSet SolveTotalDegree(const PolynomialSystem& sys, std::uint64_t seed,
                             const TrackerOptions& opts) {
  sys.Validate();
  const int n = sys.size();
  const std::vector<int> degrees = sys.Degrees();
  const long double total = sys.TotalDegree();
  if (total > 1e7L) Fail(ErrorCode::kUnsupported, "total degree too large to track");
  const int paths = static_cast<int>(total);

  const Compiled target(sys, true, true);
  const Compiled affine(sys, false, true);
  const double scale = affine.MaxCoefficient();

  SolutionSet out;
  out.provenance = {sys.formulation, HashSystem(sys), seed};
  out.tracked_paths = paths;
  bool acceptable = false;
  for (int attempt = 0; attempt <= opts.retries; ++attempt) {
    std::mt19937_64 rng(Mix(seed, attempt));
    const Complex gamma = RandomGamma(rng);
    std::normal_distribution<double> normal;
    VectorXcd patch(n + 1);
    for (int i = 0; i <= n; ++i) patch[i] = Complex(normal(rng), normal(rng));
    const TotalDegreeHomotopy h(target, degrees, patch, gamma);

    std::vector<PathResult> results(paths);
    std::vector<VectorXcd> points(paths);
    ParallelFor(paths, [&](int k) {
      VectorXcd start(n + 1);
      int rem = k;
      for (int i = 0; i < n; ++i) {
        const int d = degrees[i];
        start[i] = std::polar(1.0, 2.0 * std::numbers::pi * (rem % d) / d);
        rem /= d;
      }
      start[n] = 1.0;
      start /= patch.dot(start);
      results[k] = TrackPath(h, start, opts);
      const Complex w = results[k].x[n];
      points[k] = results[k].x.head(n) / w;
    });
    const AttemptStats stats = Collect(results, points, affine, scale, opts, out.solutions);
    ++out.attempts;
    out.failed_paths = stats.failed;
    out.diverged_paths = stats.diverged;
    const bool few_failures = stats.failed <= opts.max_failure_fraction * paths;
    acceptable = acceptable || few_failures;
    if (few_failures && stats.duplicates == 0) break;
  }
  if (!acceptable) {
    Fail(ErrorCode::kSolverError, "path tracking failed on " + std::to_string(out.failed_paths) +
                                      " of " + std::to_string(paths) + " paths");
  }
  std::sort(out.solutions.begin(), out.solutions.end(), LexLess);
  return out;
}

SolutionSet TrackParameterHomotopy(const PolynomialSystem& from, const SolutionSet& start,
                                   const PolynomialSystem& to, std::uint64_t seed,
                                   const TrackerOptions& opts) {
  if (from.variables != to.variables || from.polynomials.size() != to.polynomials.size()) {
    Fail(ErrorCode::kInvalidArgument, "parameter homotopy endpoints have different shapes");
  }
  to.Validate();
  if (from.Degrees() != to.Degrees()) {
    Fail(ErrorCode::kInvalidArgument, "parameter homotopy endpoints have different degrees");
  }
  const Compiled f0(from, true, false);
  const Compiled f1h(to, true, false);
  const Compiled f1(to, false, false);
  const double scale = f1.MaxCoefficient();
  const int paths = start.complex_count();
  const int n = to.size();

  SolutionSet out;
  out.provenance = {to.formulation, HashSystem(to), seed};
  out.tracked_paths = paths;
  bool acceptable = false;
  for (int attempt = 0; attempt <= opts.retries; ++attempt) {
    std::mt19937_64 rng(Mix(seed, attempt));
    const Complex gamma = RandomGamma(rng);
    std::normal_distribution<double> normal;
    VectorXcd patch(n + 1);
    for (int i = 0; i <= n; ++i) patch[i] = Complex(normal(rng), normal(rng));
    const ParameterHomotopy h(f0, f1h, patch, gamma);
    TrackerOptions popts = opts;
    popts.initial_step = opts.parameter_initial_step;
    popts.max_step = opts.parameter_max_step;
    std::vector<PathResult> results(paths);
    std::vector<VectorXcd> points(paths);
    ParallelFor(paths, [&](int k) {
      VectorXcd x(n + 1);
      x.head(n) = start.solutions[k].values;
      x[n] = 1.0;
      x /= patch.dot(x);
      results[k] = TrackPath(h, x, popts);
      points[k] = results[k].x.head(n) / results[k].x[n];
    });
    const AttemptStats stats = Collect(results, points, f1, scale, opts, out.solutions);
    ++out.attempts;
    out.failed_paths = stats.failed;
    out.diverged_paths = stats.diverged;
    const bool few_failures = stats.failed <= opts.max_failure_fraction * paths;
    acceptable = acceptable || few_failures;
    if (stats.failed == 0 && stats.duplicates == 0) break;
  }
  if (!acceptable) {
    Fail(ErrorCode::kSolverError, "parameter homotopy failed on " +
                                      std::to_string(out.failed_paths) + " of " +
                                      std::to_string(paths) + " paths");
  }
  std::sort(out.solutions.begin(), out.solutions.end(), LexLess);
  return out;
}

}  // namespace rigid

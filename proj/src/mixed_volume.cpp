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

#include "rigid/mixed_volume.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rigid/error.hpp"
#include "rigid/parallel.hpp"

namespace rigid {
namespace {

using Int = __int128;

Int Abs(Int v) { return v < 0 ? -v : v; }

Int Gcd(Int a, Int b) {
  a = Abs(a);
  b = Abs(b);
  while (b != 0) {
    const Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Determinant of a small square matrix by fraction-free elimination.
Int Det(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      int r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Echelon basis of the span of the differences pts[i] - pts[0]; returns the
// pivot columns (one per basis vector).
std::vector<int> SpanPivots(const std::vector<IntPoint>& pts) {
  std::vector<std::vector<Int>> basis;
  std::vector<int> pivots;
  if (pts.empty()) return pivots;
  const std::size_t dim = pts[0].size();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Int> v(dim);
    for (std::size_t c = 0; c < dim; ++c) v[c] = pts[i][c] - pts[0][c];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const int pc = pivots[b];
      if (v[pc] == 0) continue;
      const Int f = v[pc];
      const Int g = basis[b][pc];
      Int common = 0;
      for (std::size_t c = 0; c < dim; ++c) {
        v[c] = v[c] * g - basis[b][c] * f;
        common = Gcd(common, v[c]);
      }
      if (common > 1) {
        for (Int& x : v) x /= common;
      }
    }
    const auto nz = std::find_if(v.begin(), v.end(), [](Int x) { return x != 0; });
    if (nz == v.end()) continue;
    pivots.push_back(static_cast<int>(nz - v.begin()));
    basis.push_back(std::move(v));
  }
  return pivots;
}

std::vector<IntPoint> Dedupe(std::vector<IntPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Beneath-beyond hull of full-dimensional points in R^d, 2 <= d <= 4, with
// exact orientation tests. Facets are oriented simplices of d points.
class Hull {
 public:
  explicit Hull(const std::vector<IntPoint>& pts) : pts_(pts), d_(static_cast<int>(pts[0].size())) {
    scaled_.resize(pts.size(), std::vector<Int>(d_));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (int c = 0; c < d_; ++c) scaled_[i][c] = static_cast<Int>(pts[i][c]) * (d_ + 1);
    }
    full_ = Build();
  }

  bool full_dimensional() const { return full_; }

  // Sum over facets of |det| of the cone from the first simplex vertex.
  Int NormalizedVolume() const {
    Int vol = 0;
    for (const Facet& f : facets_) {
      if (!f.alive) continue;
      std::vector<std::vector<Int>> m(d_, std::vector<Int>(d_));
      for (int r = 0; r < d_; ++r) {
        for (int c = 0; c < d_; ++c) m[r][c] = pts_[f.v[r]][c] - pts_[apex_][c];
      }
      vol += Abs(Det(std::move(m)));
    }
    return vol;
  }

  std::vector<int> FacetPoints() const {
    std::vector<int> out;
    for (const Facet& f : facets_) {
      if (f.alive) out.insert(out.end(), f.v.begin(), f.v.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // True when x lies strictly outside the hull.
  bool Beyond(const IntPoint& x) const {
    std::vector<Int> xs(d_);
    for (int c = 0; c < d_; ++c) xs[c] = static_cast<Int>(x[c]) * (d_ + 1);
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const Facet& f) { return f.alive && f.sign * Orient(f.v, xs) > 0; });
  }

 private:
  struct Facet {
    std::vector<int> v;
    int sign = 1;
    bool alive = true;
  };

  Int Orient(const std::vector<int>& v, const std::vector<Int>& x) const {
    std::vector<std::vector<Int>> m(d_, std::vector<Int>(d_));
    const auto& o = scaled_[v[0]];
    for (int r = 1; r < d_; ++r) {
      for (int c = 0; c < d_; ++c) m[r - 1][c] = scaled_[v[r]][c] - o[c];
    }
    for (int c = 0; c < d_; ++c) m[d_ - 1][c] = x[c] - o[c];
    return Det(std::move(m));
  }

  void AddFacet(std::vector<int> v) {
    const Int s = Orient(v, interior_);
    facets_.push_back({std::move(v), s > 0 ? -1 : 1, true});
  }

  bool Build() {
    // Initial simplex: grow an affinely independent set greedily.
    std::vector<int> simplex{0};
    for (int i = 1; i < static_cast<int>(pts_.size()) && static_cast<int>(simplex.size()) <= d_;
         ++i) {
      std::vector<IntPoint> trial;
      for (int s : simplex) trial.push_back(pts_[s]);
      trial.push_back(pts_[i]);
      if (static_cast<int>(SpanPivots(trial).size()) == static_cast<int>(simplex.size())) {
        simplex.push_back(i);
      }
    }
    if (static_cast<int>(simplex.size()) != d_ + 1) return false;
    apex_ = simplex[0];
    interior_.assign(d_, 0);
    for (int s : simplex) {
      for (int c = 0; c < d_; ++c) interior_[c] += pts_[s][c];
    }
    for (int skip = 0; skip <= d_; ++skip) {
      std::vector<int> v;
      for (int j = 0; j <= d_; ++j) {
        if (j != skip) v.push_back(simplex[j]);
      }
      AddFacet(std::move(v));
    }
    std::vector<bool> in_simplex(pts_.size(), false);
    for (int s : simplex) in_simplex[s] = true;
    for (int p = 0; p < static_cast<int>(pts_.size()); ++p) {
      if (!in_simplex[p]) Insert(p);
    }
    return true;
  }

  void Insert(int p) {
    std::map<std::vector<int>, int> ridges;
    bool any = false;
    for (Facet& f : facets_) {
      if (!f.alive || f.sign * Orient(f.v, scaled_[p]) <= 0) continue;
      any = true;
      f.alive = false;
      for (int j = 0; j < d_; ++j) {
        std::vector<int> r;
        for (int k = 0; k < d_; ++k) {
          if (k != j) r.push_back(f.v[k]);
        }
        std::sort(r.begin(), r.end());
        ++ridges[r];
      }
    }
    if (!any) return;
    for (auto& [r, count] : ridges) {
      if (count != 1) continue;
      std::vector<int> v = r;
      v.push_back(p);
      AddFacet(std::move(v));
    }
    if (facets_.size() > 4096) {
      std::erase_if(facets_, [](const Facet& f) { return !f.alive; });
    }
  }

  const std::vector<IntPoint>& pts_;
  int d_;
  std::vector<std::vector<Int>> scaled_;
  std::vector<Int> interior_;
  std::vector<Facet> facets_;
  int apex_ = 0;
  bool full_ = false;
};

// Points projected onto the pivot coordinates of their affine span, which
// is injective on the span.
std::vector<IntPoint> Project(const std::vector<IntPoint>& pts, const std::vector<int>& cols) {
  std::vector<IntPoint> out;
  out.reserve(pts.size());
  for (const IntPoint& p : pts) {
    IntPoint q;
    for (int c : cols) q.push_back(p[c]);
    out.push_back(std::move(q));
  }
  return out;
}

// Superset of the hull vertices (every point on a boundary facet).
std::vector<IntPoint> HullSupport(const std::vector<IntPoint>& raw) {
  std::vector<IntPoint> pts = Dedupe(raw);
  if (pts.size() <= 2) return pts;
  const std::vector<int> pivots = SpanPivots(pts);
  const int r = static_cast<int>(pivots.size());
  if (r > kMaxMixedVolumeDimension) {
    Fail(ErrorCode::kUnsupported, "polytope of affine dimension above 4");
  }
  const std::vector<IntPoint> proj = Project(pts, pivots);
  if (r == 1) {
    const auto [lo, hi] = std::minmax_element(proj.begin(), proj.end());
    return Dedupe({pts[lo - proj.begin()], pts[hi - proj.begin()]});
  }
  if (r == 0) return {pts[0]};
  const Hull hull(proj);
  std::vector<IntPoint> out;
  for (int i : hull.FacetPoints()) out.push_back(pts[i]);
  return out;
}

Int Factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

int AffineDimension(const std::vector<IntPoint>& pts) {
  if (pts.empty()) return -1;
  return static_cast<int>(SpanPivots(pts).size());
}

std::int64_t NormalizedVolume(const std::vector<IntPoint>& raw) {
  if (raw.empty()) return 0;
  const int d = static_cast<int>(raw[0].size());
  if (d > kMaxMixedVolumeDimension) Fail(ErrorCode::kUnsupported, "volume above dimension 4");
  const std::vector<IntPoint> pts = Dedupe(raw);
  if (AffineDimension(pts) < d) return 0;
  if (d == 1) return pts.back()[0] - pts.front()[0];
  const Hull hull(pts);
  return static_cast<std::int64_t>(hull.NormalizedVolume());
}

std::vector<IntPoint> ConvexHullVertices(const std::vector<IntPoint>& raw) {
  std::vector<IntPoint> cand = HullSupport(raw);
  if (cand.size() <= 2) return cand;
  const std::vector<int> pivots = SpanPivots(cand);
  const int r = static_cast<int>(pivots.size());
  if (r <= 1) return cand;
  const std::vector<IntPoint> proj = Project(cand, pivots);
  std::vector<IntPoint> out;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    std::vector<IntPoint> others;
    for (std::size_t j = 0; j < cand.size(); ++j) {
      if (j != i) others.push_back(proj[j]);
    }
    // A point is a vertex iff it is outside the hull of the others.
    if (AffineDimension(others) < r) {
      out.push_back(cand[i]);
      continue;
    }
    const Hull hull(others);
    if (hull.Beyond(proj[i])) out.push_back(cand[i]);
  }
  return out;
}

NewtonPolytope NewtonPolytopeOf(const Polynomial& p) {
  NewtonPolytope poly;
  poly.ambient_dimension = p.nvars();
  std::vector<IntPoint> pts;
  for (const auto& [e, c] : p.terms()) pts.emplace_back(e.begin(), e.end());
  poly.affine_dimension = AffineDimension(pts);
  poly.vertices = ConvexHullVertices(pts);
  return poly;
}

std::vector<NewtonPolytope> NewtonPolytopes(const PolynomialSystem& sys) {
  std::vector<NewtonPolytope> out;
  for (const Polynomial& p : sys.polynomials) out.push_back(NewtonPolytopeOf(p));
  return out;
}

std::int64_t MixedVolume(const std::vector<NewtonPolytope>& polytopes) {
  const int n = static_cast<int>(polytopes.size());
  if (n == 0) Fail(ErrorCode::kInvalidArgument, "mixed volume of no polytopes");
  if (n > kMaxMixedVolumeDimension) {
    Fail(ErrorCode::kUnsupported, "mixed volume above dimension 4 is not supported");
  }
  for (const NewtonPolytope& p : polytopes) {
    if (p.vertices.empty()) Fail(ErrorCode::kInvalidArgument, "empty polytope");
    for (const IntPoint& v : p.vertices) {
      if (static_cast<int>(v.size()) != n) {
        Fail(ErrorCode::kInvalidArgument, "polytope dimension does not match their number");
      }
    }
  }
  const int subsets = (1 << n) - 1;
  std::vector<Int> terms(subsets + 1, 0);
  ParallelFor(subsets, [&](int idx) {
    const unsigned mask = static_cast<unsigned>(idx + 1);
    std::vector<IntPoint> sum{IntPoint(n, 0)};
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      std::vector<IntPoint> next;
      next.reserve(sum.size() * polytopes[i].vertices.size());
      for (const IntPoint& a : sum) {
        for (const IntPoint& b : polytopes[i].vertices) {
          IntPoint c(n);
          for (int k = 0; k < n; ++k) c[k] = a[k] + b[k];
          next.push_back(std::move(c));
        }
      }
      sum = HullSupport(next);
    }
    const int sign = ((n - std::popcount(mask)) % 2 == 0) ? 1 : -1;
    terms[mask] = sign * static_cast<Int>(NormalizedVolume(sum));
  });
  Int total = 0;
  for (Int t : terms) total += t;
  const Int f = Factorial(n);
  if (total % f != 0) Fail(ErrorCode::kInconsistent, "mixed volume sum not divisible by n!");
  return static_cast<std::int64_t>(total / f);
}

}  // namespace rigid

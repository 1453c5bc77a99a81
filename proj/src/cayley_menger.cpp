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

#include "rigid/cayley_menger.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include <Eigen/Dense>

#include "rigid/error.hpp"
#include "rigid/rigidity.hpp"

namespace rigid {
namespace {

constexpr double kJacobianThreshold = 1e-8;
constexpr long kMaxCombinations = 2'000'000;
constexpr double kInequalityRelEps = 1e-9;

// Calls fn on each k-subset of {0..n-1} in lexicographic order until it
// returns false.
template <typename Fn>
void ForEachSubset(int n, int k, Fn&& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Polynomial EntryPolynomial(const CmEntry& e, int nvars) {
  switch (e.kind) {
    case CmEntry::Kind::kConstant:
      return e.value == 0.0 ? Polynomial(nvars) : Polynomial::Constant(nvars, e.value);
    case CmEntry::Kind::kUnknown:
      return Polynomial::Variable(nvars, e.unknown);
    case CmEntry::Kind::kMissing:
      break;
  }
  Fail(ErrorCode::kInvalidArgument, "minor uses a pair with no length or unknown");
}

Polynomial Derivative(const Polynomial& p, int var) {
  Polynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent lowered = e;
    --lowered[var];
    out.AddTerm(lowered, c * static_cast<double>(e[var]));
  }
  return out;
}

// |det| of the row-normalized Jacobian at x.
double NormalizedJacobianDet(const std::vector<const Polynomial*>& polys,
                             const std::vector<Complex>& x) {
  const int k = static_cast<int>(polys.size());
  Eigen::MatrixXd jac(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) jac(i, j) = Derivative(*polys[i], j).Evaluate(x).real();
    const double m = jac.row(i).cwiseAbs().maxCoeff();
    if (m == 0.0) return 0.0;
    jac.row(i) /= m;
  }
  return std::abs(jac.determinant());
}

bool IsKnown(const CmMatrix& m, int i, int j) {
  return m.at(i, j).kind != CmEntry::Kind::kMissing;
}

}  // namespace

bool CmMatrix::complete() const {
  for (const auto& row : entries) {
    for (const CmEntry& e : row) {
      if (e.kind == CmEntry::Kind::kMissing) return false;
    }
  }
  return true;
}

CmMatrix BuildCmMatrix(const Graph& g, const LengthAssignment& d,
                       const std::vector<Edge>& unknowns) {
  const int n = g.vertex_count();
  CmMatrix m;
  m.n = n;
  m.unknowns = unknowns;
  m.entries.assign(n + 1, std::vector<CmEntry>(n + 1));
  for (int i = 1; i <= n; ++i) {
    m.entries[0][i].value = 1.0;
    m.entries[i][0].value = 1.0;
    for (int j = i + 1; j <= n; ++j) {
      CmEntry e;
      if (g.HasEdge(i, j)) {
        e.value = d.Squared(i, j);
      } else {
        e.kind = CmEntry::Kind::kMissing;
      }
      m.entries[i][j] = e;
      m.entries[j][i] = e;
    }
  }
  std::set<Edge> seen;
  for (int k = 0; k < static_cast<int>(unknowns.size()); ++k) {
    const Edge& u = unknowns[k];
    if (u.b > n) Fail(ErrorCode::kInvalidArgument, "unknown " + u.ToString() + " out of range");
    if (g.HasEdge(u.a, u.b)) {
      Fail(ErrorCode::kInvalidArgument, "unknown " + u.ToString() + " is an edge");
    }
    if (!seen.insert(u).second) {
      Fail(ErrorCode::kInvalidArgument, "unknown " + u.ToString() + " repeated");
    }
    CmEntry e;
    e.kind = CmEntry::Kind::kUnknown;
    e.unknown = k;
    m.entries[u.a][u.b] = e;
    m.entries[u.b][u.a] = e;
  }
  return m;
}

Polynomial CmMinor(const CmMatrix& m, const std::vector<int>& points) {
  const int nvars = static_cast<int>(m.unknowns.size());
  std::vector<int> index{0};
  index.insert(index.end(), points.begin(), points.end());
  const int size = static_cast<int>(index.size());
  std::vector<std::vector<Polynomial>> a(size, std::vector<Polynomial>(size, Polynomial(nvars)));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (i != j) a[i][j] = EntryPolynomial(m.at(index[i], index[j]), nvars);
    }
  }
  // Laplace expansion along rows; memo[mask] is the minor on the rows after
  // popcount(mask) and the columns outside mask.
  const unsigned full = (1u << size) - 1;
  std::vector<std::optional<Polynomial>> memo(full + 1);
  memo[full] = Polynomial::Constant(nvars, 1.0);
  auto det = [&](auto&& self, unsigned mask) -> const Polynomial& {
    if (memo[mask]) return *memo[mask];
    const int row = std::popcount(mask);
    Polynomial sum(nvars);
    int sign = 1;
    for (int c = 0; c < size; ++c) {
      if (mask & (1u << c)) continue;
      if (!a[row][c].IsZero()) {
        Polynomial term = a[row][c] * self(self, mask | (1u << c));
        if (sign > 0) {
          sum += term;
        } else {
          sum -= term;
        }
      }
      sign = -sign;
    }
    memo[mask] = std::move(sum);
    return *memo[mask];
  };
  return det(det, 0u);
}

std::vector<std::array<int, 5>> CandidateMinors(const CmMatrix& m) {
  std::vector<std::array<int, 5>> out;
  ForEachSubset(m.n, 5, [&](const std::vector<int>& idx) {
    std::array<int, 5> pts{};
    for (int i = 0; i < 5; ++i) pts[i] = idx[i] + 1;
    bool known = true;
    bool has_unknown = false;
    for (int i = 0; i < 5 && known; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        if (!IsKnown(m, pts[i], pts[j])) {
          known = false;
          break;
        }
        if (m.at(pts[i], pts[j]).kind == CmEntry::Kind::kUnknown) has_unknown = true;
      }
    }
    if (known && has_unknown) out.push_back(pts);
    return true;
  });
  return out;
}

PolynomialSystem CmSubsystem(const Graph& g, const LengthAssignment& d,
                             const std::vector<Edge>& vars, std::uint64_t seed) {
  d.RequireCovers(g);
  const CmMatrix m = BuildCmMatrix(g, d, vars);
  const int k = static_cast<int>(vars.size());
  PolynomialSystem sys;
  sys.formulation = Formulation::kCayleyMenger;
  sys.unknown_edges = vars;
  for (const Edge& e : vars) sys.variables.push_back("d" + std::to_string(e.a) + "_" + std::to_string(e.b));
  if (k == 0) return sys;

  const auto cands = CandidateMinors(m);
  std::vector<Polynomial> polys;
  std::vector<std::uint64_t> support;
  for (const auto& pts : cands) {
    polys.push_back(CmMinor(m, std::vector<int>(pts.begin(), pts.end())).Pruned(1e-14));
    std::uint64_t mask = 0;
    for (int v : polys.back().Support()) mask |= 1ULL << v;
    support.push_back(mask);
  }
  const std::uint64_t all = (k == 64) ? ~0ULL : (1ULL << k) - 1;

  // Random point at the scale of the squared lengths.
  double mean = 0.0;
  for (const Edge& e : g.edges()) mean += d.Squared(e.a, e.b);
  mean /= static_cast<double>(g.edge_count());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  std::vector<Complex> point(k);
  for (Complex& c : point) c = u(rng) * mean;

  auto accept = [&](const std::vector<int>& chosen) {
    std::uint64_t cover = 0;
    std::vector<const Polynomial*> ps;
    for (int i : chosen) {
      cover |= support[i];
      ps.push_back(&polys[i]);
    }
    return cover == all && NormalizedJacobianDet(ps, point) > kJacobianThreshold;
  };
  auto finish = [&](const std::vector<int>& chosen) {
    for (int i : chosen) {
      sys.polynomials.push_back(polys[i]);
      sys.minors.push_back(cands[i]);
    }
    sys.Validate();
    return sys;
  };

  std::vector<int> greedy;
  std::uint64_t cover = 0;
  for (int i = 0; i < static_cast<int>(cands.size()) && static_cast<int>(greedy.size()) < k; ++i) {
    if (support[i] & ~cover) {
      greedy.push_back(i);
      cover |= support[i];
    }
  }
  if (static_cast<int>(greedy.size()) == k && accept(greedy)) return finish(greedy);

  std::vector<int> usable;
  for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
    if (support[i] != 0) usable.push_back(i);
  }
  std::optional<std::vector<int>> found;
  long tried = 0;
  ForEachSubset(static_cast<int>(usable.size()), k, [&](const std::vector<int>& idx) {
    std::vector<int> chosen;
    for (int i : idx) chosen.push_back(usable[i]);
    if (accept(chosen)) {
      found = chosen;
      return false;
    }
    return ++tried < kMaxCombinations;
  });
  if (!found) Fail(ErrorCode::kNotFound, "no nonsingular square subsystem of bordered minors");
  return finish(*found);
}

std::vector<std::vector<Edge>> EnumerateCmVariableSets(const Graph& g, int k,
                                                       bool require_global,
                                                       std::uint64_t seed, std::size_t limit) {
  // Lengths only shape coefficients; any generic assignment decides which
  // variable sets admit a nonsingular subsystem.
  std::mt19937_64 rng(seed);
  const LengthAssignment d = GenericLengths(g, rng);
  const std::vector<Edge> non_edges = g.NonEdges();
  std::vector<std::vector<Edge>> out;
  ForEachSubset(static_cast<int>(non_edges.size()), k, [&](const std::vector<int>& idx) {
    std::vector<Edge> vars;
    for (int i : idx) vars.push_back(non_edges[i]);
    if (require_global && !IsGloballyRigid(g.WithEdges(vars), seed)) return true;
    try {
      CmSubsystem(g, d, vars, seed);
      out.push_back(vars);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotFound) throw;
    }
    return limit == 0 || out.size() < limit;
  });
  return out;
}

std::vector<Inequality> Inequalities(const Graph& g, const LengthAssignment& d,
                                     const std::map<Edge, double>& assignment) {
  const int n = g.vertex_count();
  auto squared = [&](int i, int j) -> std::optional<double> {
    if (g.HasEdge(i, j)) return d.Squared(i, j);
    if (auto it = assignment.find(Edge(i, j)); it != assignment.end()) return it->second;
    return std::nullopt;
  };
  std::vector<Inequality> out;
  for (int k = 2; k <= 4; ++k) {
    ForEachSubset(n, k, [&](const std::vector<int>& idx) {
      Eigen::MatrixXd cm = Eigen::MatrixXd::Zero(k + 1, k + 1);
      double m = 0.0;
      for (int i = 0; i < k; ++i) {
        cm(0, i + 1) = cm(i + 1, 0) = 1.0;
        for (int j = i + 1; j < k; ++j) {
          const auto v = squared(idx[i] + 1, idx[j] + 1);
          if (!v) return true;
          cm(i + 1, j + 1) = cm(j + 1, i + 1) = *v;
          m = std::max(m, std::abs(*v));
        }
      }
      Inequality ineq;
      for (int i : idx) ineq.points.push_back(i + 1);
      ineq.value = (k % 2 == 0 ? 1.0 : -1.0) * cm.determinant();
      // det(CM') is homogeneous of degree k - 1 in the squared lengths.
      ineq.epsilon = kInequalityRelEps * std::pow(m, k - 1);
      out.push_back(std::move(ineq));
      return true;
    });
  }
  return out;
}

bool EvaluateInequalities(const Graph& g, const LengthAssignment& d,
                          const std::map<Edge, double>& assignment) {
  const auto all = Inequalities(g, d, assignment);
  return std::all_of(all.begin(), all.end(), [](const Inequality& q) { return q.satisfied(); });
}

std::vector<std::vector<int>> InequalitiesInvolving(const Graph& g, const Edge& unknown) {
  if (g.HasEdge(unknown.a, unknown.b)) {
    Fail(ErrorCode::kInvalidArgument, unknown.ToString() + " is an edge");
  }
  const int n = g.vertex_count();
  std::vector<int> others;
  for (int v = 1; v <= n; ++v) {
    if (v != unknown.a && v != unknown.b) others.push_back(v);
  }
  std::vector<std::vector<int>> out;
  for (int extra = 1; extra <= 2; ++extra) {
    ForEachSubset(static_cast<int>(others.size()), extra, [&](const std::vector<int>& idx) {
      std::vector<int> pts{unknown.a, unknown.b};
      for (int i : idx) pts.push_back(others[i]);
      std::sort(pts.begin(), pts.end());
      for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          if (Edge(pts[i], pts[j]) != unknown && !g.HasEdge(pts[i], pts[j])) return true;
        }
      }
      out.push_back(pts);
      return true;
    });
  }
  return out;
}

}  // namespace rigid

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


#include <cmath>
#include <random>

#include "doctest.h"
#include "rigid/cayley_menger.hpp"
#include "rigid/embeddings.hpp"
#include "rigid/error.hpp"
#include "rigid/henneberg.hpp"
#include "rigid/lengths.hpp"
#include "rigid/named_graphs.hpp"
#include "rigid/rigidity.hpp"
#include "rigid/sphere_system.hpp"

namespace rigid {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

LengthAssignment UnitLengths(const Graph& g) {
  LengthAssignment d;
  for (const Edge& e : g.edges()) d.Set(e, 1.0);
  return d;
}

Eigen::VectorXcd RandomComplex(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd x(n);
  for (int i = 0; i < n; ++i) x[i] = Complex(gauss(rng), gauss(rng));
  return x;
}

TEST_CASE("length assignments") {
  const Graph k4 = CompleteGraph(4);
  LengthAssignment d = UnitLengths(k4);
  CHECK(d.At(2, 1) == 1.0);
  CHECK(d.Scaled(2.0).At(3, 4) == 2.0);
  CHECK(d.MaxLength() == 1.0);
  CHECK(d.AsVector(k4).size() == 6);
  LengthAssignment partial;
  partial.Set(Edge(1, 2), 1.0);
  CHECK(CodeOf([&] { partial.RequireCovers(k4); }) == ErrorCode::kInvalidArgument);
  const Graph tri(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(d.Restricted(tri).size() == 3);

  std::mt19937_64 rng(1);
  const Eigen::MatrixX3d p = RandomRealization(4, rng);
  const LengthAssignment induced = InducedLengths(k4, p);
  CHECK(induced.At(1, 2) == doctest::Approx((p.row(0) - p.row(1)).norm()));
  const LengthAssignment generic = GenericLengths(named::G48(), rng);
  CHECK(generic.size() == 15);
  for (const auto& [e, len] : generic.values()) CHECK(len > 0.0);
}

TEST_CASE("fixed triangle coordinates") {
  const FixedTriangle eq = FixedTriangleCoordinates(1, 1, 1);
  CHECK(eq.v2.isApprox(Eigen::Vector3d(0, 1, 0)));
  CHECK(eq.v3.x() == doctest::Approx(std::sqrt(3.0) / 2));
  CHECK(eq.v3.y() == doctest::Approx(0.5));
  CHECK_FALSE(eq.degenerate);
  const FixedTriangle flat = FixedTriangleCoordinates(1, 1, 2);
  CHECK(flat.degenerate);
  CHECK(flat.v3.isApprox(Eigen::Vector3d(0, -1, 0)));
  CHECK(CodeOf([] { FixedTriangleCoordinates(1, 3, 1); }) == ErrorCode::kInfeasible);
}

TEST_CASE("sphere system sizes") {
  const Graph k4 = CompleteGraph(4);
  CHECK(BuildSphereSystem(k4, UnitLengths(k4), {1, 2, 3}).size() == 4);
  CHECK(BuildSphereSystem(k4, UnitLengths(k4), {2, 3, 4}).size() == 4);
  const Graph g48 = named::G48();
  const PolynomialSystem sys = BuildSphereSystem(g48, named::G48Lengths28(), {1, 2, 3});
  CHECK(sys.size() == 16);
  CHECK(sys.polynomials.size() == 16);
  sys.Validate();
  const Graph g16 = named::G16();
  CHECK(BuildSphereSystem(g16, UnitLengths(g16), g16.Triangles().front()).size() == 12);
  CHECK(CodeOf([&] { BuildSphereSystem(g48, named::G48Lengths28(), {1, 2, 7}); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("sphere equations are even in z") {
  std::mt19937_64 rng(2);
  const Graph g = named::G48();
  const PolynomialSystem sys = BuildSphereSystem(g, named::G48Lengths28(), DefaultTriangle(g));
  for (int trial = 0; trial < 5; ++trial) {
    const Eigen::VectorXcd x = RandomComplex(sys.size(), rng);
    Eigen::VectorXcd y = x;
    for (const auto& [v, idx] : sys.vertex_variables) y[idx[2]] = -y[idx[2]];
    for (const Polynomial& p : sys.polynomials) {
      const std::vector<Complex> xs(x.data(), x.data() + x.size());
      const std::vector<Complex> ys(y.data(), y.data() + y.size());
      CHECK(std::abs(p.Evaluate(xs) - p.Evaluate(ys)) <= 1e-9 * (1 + std::abs(p.Evaluate(xs))));
    }
  }
}

TEST_CASE("default triangle") {
  const Graph square(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK(CodeOf([&] { DefaultTriangle(square); }) == ErrorCode::kNotFound);
  const Graph g = named::G48();
  const auto tri = DefaultTriangle(g);
  const double best = BuildSphereSystem(g, named::G48Lengths28(), tri).TotalDegree();
  for (const auto& t : g.Triangles()) {
    CHECK(best <= BuildSphereSystem(g, named::G48Lengths28(), t).TotalDegree());
  }
}

TEST_CASE("Cayley-Menger matrix placement") {
  const Graph g = named::G48();
  const std::vector<Edge> unknowns{Edge(1, 7), Edge(2, 4), Edge(2, 5),
                                   Edge(3, 5), Edge(3, 6), Edge(4, 6)};
  const CmMatrix m = BuildCmMatrix(g, named::G48Lengths28(), unknowns);
  CHECK(m.complete());
  CHECK(m.at(0, 0).value == 0.0);
  CHECK(m.at(0, 3).value == 1.0);
  CHECK(m.at(1, 7).kind == CmEntry::Kind::kUnknown);
  CHECK(m.at(1, 7).unknown == 0);
  CHECK(m.at(6, 4).unknown == 5);
  CHECK(m.at(2, 3).value == doctest::Approx(std::pow(named::G48Lengths28().At(2, 3), 2)));

  const Graph k4 = CompleteGraph(4);
  const CmMatrix numeric = BuildCmMatrix(k4, UnitLengths(k4), {});
  CHECK(numeric.complete());
  CHECK(numeric.entries.size() == 5);
  CHECK(CodeOf([&] { BuildCmMatrix(k4, UnitLengths(k4), {Edge(1, 2)}); }) ==
        ErrorCode::kInvalidArgument);
  // Some non-edges stay missing without unknowns.
  CHECK_FALSE(BuildCmMatrix(g, named::G48Lengths28(), {}).complete());
}

TEST_CASE("bordered determinant of the regular tetrahedron") {
  // det = 288 V^2 = 4 for unit edges.
  const Graph k4 = CompleteGraph(4);
  const Polynomial det = CmMinor(BuildCmMatrix(k4, UnitLengths(k4), {}), {1, 2, 3, 4});
  CHECK(det.Degree() == 0);
  CHECK(std::abs(det.Evaluate(std::vector<Complex>{}) - Complex(4.0)) < 1e-12);
}

TEST_CASE("distance subsystem of G48") {
  const Graph g = named::G48();
  const std::vector<Edge> vars{Edge(1, 7), Edge(2, 4), Edge(2, 5)};
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const Eigen::MatrixX3d p = RandomRealization(7, rng);
    const PolynomialSystem sys = CmSubsystem(g, InducedLengths(g, p), vars);
    REQUIRE(sys.size() == 3);
    CHECK(sys.polynomials.size() == 3);
    CHECK(sys.formulation == Formulation::kCayleyMenger);
    CHECK(sys.unknown_edges == vars);
    std::vector<Complex> x;
    for (const Edge& e : vars) x.emplace_back((p.row(e.a - 1) - p.row(e.b - 1)).squaredNorm());
    for (const Polynomial& f : sys.polynomials) {
      CHECK(std::abs(f.Evaluate(x)) <= 1e-10 * (1.0 + f.MaxCoefficient()));
    }
  }
  const Graph k5 = CompleteGraph(5);
  CHECK(CmSubsystem(k5, UnitLengths(k5), {}).size() == 0);
}

TEST_CASE("inequalities constraining one unknown") {
  const Graph g = named::G48();
  const Edge x1(1, 7);
  // Oracle: point sets of size 3 or 4 through 1 and 7 whose other pairs are
  // all edges.
  int expected = 0;
  for (int a = 2; a <= 6; ++a) {
    if (g.HasEdge(1, a) && g.HasEdge(7, a)) ++expected;
    for (int b = a + 1; b <= 6; ++b) {
      if (g.HasEdge(1, a) && g.HasEdge(7, a) && g.HasEdge(1, b) && g.HasEdge(7, b) &&
          g.HasEdge(a, b)) {
        ++expected;
      }
    }
  }
  const auto sets = InequalitiesInvolving(g, x1);
  CHECK(static_cast<int>(sets.size()) == expected);
  CHECK(sets.size() == 10);
}

TEST_CASE("embeddability inequalities") {
  const Graph k4 = CompleteGraph(4);
  CHECK(EvaluateInequalities(k4, UnitLengths(k4), {}));
  LengthAssignment bad = UnitLengths(k4);
  bad.Set(Edge(2, 3), 3.0);
  CHECK_FALSE(EvaluateInequalities(k4, bad, {}));
  for (const Inequality& q : Inequalities(k4, UnitLengths(k4), {})) CHECK(q.satisfied());
}

TEST_CASE("real embeddings satisfy the inequalities") {
  const Graph g = named::G48();
  const LengthAssignment d = named::G48Lengths28();
  const EmbeddingCount count = CountEmbeddings(g, d);
  const auto embeddings = RealEmbeddings(count, 7);
  CHECK(embeddings.size() == 28);
  for (const Eigen::MatrixX3d& p : embeddings) {
    std::map<Edge, double> assignment;
    for (const Edge& e : g.NonEdges()) {
      assignment[e] = (p.row(e.a - 1) - p.row(e.b - 1)).squaredNorm();
    }
    CHECK(EvaluateInequalities(g, d, assignment));
    for (const Edge& e : g.edges()) {
      CHECK((p.row(e.a - 1) - p.row(e.b - 1)).norm() == doctest::Approx(d.At(e)).epsilon(1e-6));
    }
  }
}

}  // namespace
}  // namespace rigid

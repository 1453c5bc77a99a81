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
#include <numbers>

#include "doctest.h"
#include "properties.hpp"
#include "rigid/coupler.hpp"
#include "rigid/embeddings.hpp"
#include "rigid/error.hpp"
#include "rigid/named_graphs.hpp"

namespace rigid {
namespace {

constexpr double kPi = std::numbers::pi;

const SamplingSubgraph kSub{2, 3, 1, 7, 6, true};

CouplerFamily G48Family() { return MakeCouplerFamily(named::G48(), named::G48Lengths28(), kSub); }

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

SampleRecord Record(double phi, double theta, int real_count) {
  SampleRecord r;
  r.phi = phi;
  r.theta = theta;
  r.real_count = real_count;
  return r;
}

TEST_CASE("family frame") {
  const CouplerFamily fam = G48Family();
  const LengthAssignment& d = named::G48Lengths28();
  CHECK(fam.x_w > 0.0);
  CHECK(fam.z_p > 0.0);
  CHECK(fam.d_cw == doctest::Approx(d.At(1, 6)));
  CHECK(fam.Frame() == std::array<int, 3>{3, 2, 1});
  const LengthAssignment back = fam.At(d.At(2, 3));
  for (const Edge& e : {Edge(2, 3), Edge(1, 2), Edge(2, 7)}) {
    CHECK(back.At(e) == doctest::Approx(d.At(e)).epsilon(1e-12));
  }
  // Lengths at any t follow from the frame.
  const double t = 2.5;
  const LengthAssignment at = fam.At(t);
  CHECK(at.At(2, 3) == t);
  CHECK(at.At(1, 2) == doctest::Approx(std::hypot(fam.x_w, fam.y_w - t)));
  CHECK(at.At(2, 7) == doctest::Approx(std::hypot(fam.y_p - t, fam.z_p)));
  CHECK(at.At(2, 6) == d.At(2, 6));
  CHECK(CodeOf([&] { fam.At(0.0); }) == ErrorCode::kOutOfRange);
}

TEST_CASE("degenerate families") {
  LengthAssignment d = named::G48Lengths28();
  // p on the line uv.
  d.Set(Edge(2, 7), d.At(2, 3) + d.At(3, 7));
  CHECK(CodeOf([&] { MakeCouplerFamily(named::G48(), d, kSub); }) == ErrorCode::kDegenerate);
  d = named::G48Lengths28();
  d.Set(Edge(2, 7), 3 * (d.At(2, 3) + d.At(3, 7)));
  CHECK(CodeOf([&] { MakeCouplerFamily(named::G48(), d, kSub); }) == ErrorCode::kInfeasible);
}

TEST_CASE("angles to lengths") {
  const CouplerFamily fam = G48Family();
  const CouplerPoint zero = LengthsFromPhiTheta(fam, 0.0, 1.0);
  CHECK(zero.t == doctest::Approx(fam.y_w));
  CHECK(zero.lengths.At(1, 2) == doctest::Approx(fam.x_w));
  const CouplerPoint right = LengthsFromPhiTheta(fam, 0.3, kPi / 2);
  const double uw = right.lengths.At(1, 2);
  CHECK(right.r == doctest::Approx(std::sqrt(uw * uw + fam.d_cw * fam.d_cw)));
  double last = 0.0;
  for (int k = 1; k < 50; ++k) {
    const double r = LengthsFromPhiTheta(fam, 0.3, kPi * k / 50).r;
    CHECK(r > last);
    last = r;
  }
  const auto [phi, theta] = PhiThetaOf(fam, 3.1, 2.2);
  const CouplerPoint inv = LengthsFromPhiTheta(fam, phi, theta);
  CHECK(inv.t == doctest::Approx(3.1));
  CHECK(inv.r == doctest::Approx(2.2));

  const double low = std::atan(-fam.y_w / fam.x_w) - 0.01;
  CHECK(CodeOf([&] { LengthsFromPhiTheta(fam, low, 1.0); }) == ErrorCode::kOutOfRange);
  CHECK(CodeOf([&] { LengthsFromPhiTheta(fam, 0.0, kPi); }) == ErrorCode::kOutOfRange);
  CouplerFamily flat = fam;
  flat.sub.spherical = false;
  CHECK(CodeOf([&] { LengthsFromPhiTheta(flat, 0.0, 1.0); }) == ErrorCode::kUnsupported);
}

TEST_CASE("the sampled lengths with 32 real embeddings") {
  const CouplerFamily fam = G48Family();
  const auto [phi, theta] = PhiThetaOf(fam, 4.0519, 3.8545);
  const CouplerPoint pt = LengthsFromPhiTheta(fam, phi, theta);
  CHECK(pt.lengths.At(1, 2) == doctest::Approx(4.0534).epsilon(1e-4));
  CHECK(pt.lengths.At(2, 7) == doctest::Approx(11.1069).epsilon(1e-4));
  CHECK(CountEmbeddings(named::G48(), pt.lengths).real_count == 32);
  CHECK(CountEmbeddings(named::G48(), named::G48Lengths32()).real_count == 32);
}

TEST_CASE("grid axes") {
  GridSpec spec;
  const auto phis = GridPhis(spec);
  const auto thetas = GridThetas(spec);
  REQUIRE(phis.size() == 20);
  REQUIRE(thetas.size() == 24);
  CHECK(phis.front() > -kPi / 2 + 0.05);
  CHECK(phis.back() < kPi / 2 - 0.05);
  CHECK(thetas.front() > 0.05);
  CHECK(thetas.back() < kPi - 0.05);
  CHECK(phis[10] - phis[9] == doctest::Approx((kPi - 0.1) / 20));
  spec.jitter_seed = 17;
  const auto jittered = GridPhis(spec);
  CHECK(jittered != phis);
  CHECK(std::abs(jittered[0] - phis[0]) <= 0.5 * (kPi - 0.1) / 20);
  CHECK(GridPhis(spec) == jittered);
}

TEST_CASE("grid counts agree with fresh solves") {
  const CouplerFamily fam = G48Family();
  GridSpec spec;
  spec.phi_points = 3;
  spec.theta_points = 3;
  std::optional<EmbeddingCount> state;
  const auto records = SampleGrid(fam, spec, state, 5);
  CHECK(records.size() <= 9);
  CHECK(state.has_value());
  for (const SampleRecord& r : records) {
    REQUIRE_FALSE(r.failed);
    CHECK(r.real_count % 2 == 0);
    CHECK(r.t > 0.0);
    CHECK(r.r > 0.0);
    CHECK(CountEmbeddings(named::G48(), r.lengths).real_count == r.real_count);
  }
  spec.max_solver_calls = 2;
  std::optional<EmbeddingCount> fresh;
  CHECK(SampleGrid(fam, spec, fresh, 5).size() == 2);

  // The base point itself.
  const auto [phi, theta] = PhiThetaOf(fam, named::G48Lengths28().At(2, 3),
                                       named::G48Lengths28().At(2, 6));
  const CouplerPoint base = LengthsFromPhiTheta(fam, phi, theta);
  CHECK(CountEmbeddings(named::G48(), base.lengths).real_count == 28);
}

TEST_CASE("clustering") {
  CHECK(ClusterCandidates({}).empty());
  const auto single = ClusterCandidates({Record(0.1, 1.0, 30), Record(0.5, 2.0, 28)});
  REQUIRE(single.size() == 1);
  CHECK(single[0].phi == 0.1);
  const auto one = ClusterCandidates({Record(0.1, 1.0, 30), Record(0.2, 1.0, 30)});
  REQUIRE(one.size() == 1);
  CHECK(one[0].real_count == 30);
  const auto two = ClusterCandidates({Record(-1.0, 0.5, 30), Record(0.8, 2.5, 30),
                                      Record(0.0, 1.0, 20)});
  CHECK(two.size() == 2);
  // The centre replaces the members when it keeps the maximum.
  const SampleEvaluator keep = [](double phi, double theta) { return Record(phi, theta, 30); };
  const auto centred = ClusterCandidates({Record(0.1, 1.0, 30), Record(0.2, 1.0, 30)}, keep);
  REQUIRE(centred.size() == 1);
  CHECK(centred[0].phi == doctest::Approx(0.15));
  const SampleEvaluator drop = [](double phi, double theta) { return Record(phi, theta, 10); };
  const auto member = ClusterCandidates({Record(0.1, 1.0, 30), Record(0.2, 1.0, 30)}, drop);
  REQUIRE(member.size() == 1);
  CHECK(member[0].real_count == 30);
  // Failed records never win.
  SampleRecord failed = Record(0.0, 0.0, 99);
  failed.failed = true;
  CHECK(ClusterCandidates({failed, Record(1.0, 1.0, 4)})[0].real_count == 4);
}

TEST_CASE("coupler curve") {
  const CouplerFamily fam = G48Family();
  const double duc = named::G48Lengths28().At(2, 6);
  const auto markers = CouplerPositions(fam, named::G48Lengths28().At(2, 3), duc, 1);
  CHECK(markers.size() == 28);
  // c keeps its distances to the frame vertices u and w.
  for (const Eigen::Vector3d& c : markers) {
    const Eigen::Vector3d u(0.0, named::G48Lengths28().At(2, 3), 0.0);
    CHECK((c - u).norm() == doctest::Approx(duc).epsilon(1e-6));
    const Eigen::Vector3d w(fam.x_w, fam.y_w, 0.0);
    CHECK((c - w).norm() == doctest::Approx(fam.d_cw).epsilon(1e-6));
  }
  CurveSweep bad;
  bad.r_min = 2.0;
  bad.r_max = 1.0;
  CHECK(CodeOf([&] { TraceCouplerCurve(fam, bad, 1); }) == ErrorCode::kInvalidArgument);
  const testing::PropertyReport inv = testing::CurveInvariance(2, 31);
  CHECK(inv.cases == 2);
  CHECK(inv.ok());
}

}  // namespace
}  // namespace rigid

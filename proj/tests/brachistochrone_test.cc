// Copyright 2026 The qsl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsl/brachistochrone.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.h"
#include "qsl/speed_limits.h"
#include "test_util.h"

namespace qsl {
namespace {

using ::qsl::testing::CodeOf;
constexpr double kPi = std::numbers::pi;
constexpr Complex kI(0.0, 1.0);

// Right-handed rotation angle about q taking r1 to r2, as an arrival time
// under omega0 q.sigma; -1 when r2 is not on r1's cone about q.
double ArrivalTime(const Vec3& r1, const Vec3& r2, const Vec3& q, double omega0) {
  if (std::abs(q.dot(r1) - q.dot(r2)) > 1e-6) return -1.0;
  const Vec3 p1 = r1 - q.dot(r1) * q;
  const Vec3 p2 = r2 - q.dot(r2) * q;
  if (std::abs(p1.norm() - p2.norm()) > 1e-6) return -1.0;
  double angle = std::atan2(q.dot(p1.cross(p2)), p1.dot(p2));
  if (angle < 0) angle += 2 * kPi;
  return angle / (2 * omega0);
}

Vec3 RandomOnSphere(std::mt19937_64& rng, double radius) {
  return radius * oracle::RandomUnit(rng);
}

TEST(BrachHamiltonianTest, XToY) {
  const auto res = brach_hamiltonian(BlochVector(1, 0, 0), BlochVector(0, 1, 0));
  EXPECT_LT((res.axis - Vec3::UnitZ()).norm(), 1e-15);
  EXPECT_NEAR(res.time, kPi / 4, 1e-15);
  EXPECT_NEAR(res.phi12, kPi / 2, 1e-15);
  EXPECT_NEAR(res.fisher_on_path, 4.0, 1e-15);
  const auto arrived = evolve_bloch(BlochVector(1, 0, 0),
                                    HamiltonianSpec(res.axis), res.time);
  EXPECT_LT((arrived.vec() - Vec3(0, 1, 0)).norm(), 1e-15);
}

TEST(BrachHamiltonianTest, CoincidentInputs) {
  const BlochVector r(0.3, -0.4, 0.5);
  const auto res = brach_hamiltonian(r, r);
  EXPECT_EQ(res.time, 0.0);
  EXPECT_NEAR(res.axis.norm(), 1.0, 1e-15);
  EXPECT_NEAR(res.axis.dot(r.vec()), 0.0, 1e-15);
  EXPECT_EQ(brach_time(r, r), 0.0);
}

TEST(BrachHamiltonianTest, AntipodalFallback) {
  const BlochVector r1(0, 0, 1);
  const BlochVector r2(0, 0, -1);
  const auto res = brach_hamiltonian(r1, r2);
  EXPECT_LT((res.axis - Vec3::UnitX()).norm(), 1e-15);
  EXPECT_NEAR(res.time, kPi / 2, 1e-15);
  EXPECT_NEAR(brach_time(r1, r2), kPi / 2, 1e-15);
  const auto arrived = evolve_bloch(r1, HamiltonianSpec(res.axis), res.time);
  EXPECT_LT((arrived.vec() - r2.vec()).norm(), 1e-15);

  // e_x is parallel to r1 here, so the fallback moves to e_y.
  const auto along_x = brach_hamiltonian(BlochVector(0.5, 0, 0), BlochVector(-0.5, 0, 0));
  EXPECT_LT((along_x.axis - Vec3::UnitY()).norm(), 1e-15);
}

TEST(BrachHamiltonianTest, Errors) {
  EXPECT_EQ(CodeOf([] { brach_hamiltonian(BlochVector(1, 0, 0), BlochVector(0, 0.5, 0)); }),
            ErrorCode::kRadiusMismatch);
  EXPECT_EQ(CodeOf([] { brach_time(BlochVector(1, 0, 0), BlochVector(0, 0.5, 0)); }),
            ErrorCode::kRadiusMismatch);
  // Same direction, radii equal within tolerance but not identical.
  EXPECT_EQ(CodeOf([] {
              brach_hamiltonian(BlochVector(0.5, 0, 0), BlochVector(0.5 + 1e-10, 0, 0));
            }),
            ErrorCode::kCollinearInput);
  EXPECT_EQ(CodeOf([] { brach_hamiltonian(BlochVector(1, 0, 0), BlochVector(0, 1, 0), 0.0); }),
            ErrorCode::kInvalidRate);
}

TEST(BrachTimeTest, RadiusIndependentAtRightAngle) {
  EXPECT_NEAR(brach_time(BlochVector(0.9, 0, 0), BlochVector(0, 0.9, 0)), kPi / 4, 1e-15);
  // Cross-check on the optimal orbit with the dense first-crossing scan.
  const Vec3 r1(0.9, 0, 0), r2(0, 0.9, 0);
  const double delta = 0.5 - 0.25 * (r1 - r2).norm();
  const double scanned =
      oracle::ScanFirstCrossing(r1, Vec3::UnitZ(), 1.0, delta, 1e-5, 2.0);
  EXPECT_NEAR(scanned, kPi / 4, 2e-5);
}

TEST(BrachTimeTest, ContinuousAtCoincidence) {
  const BlochVector r1(0.7, 0, 0);
  double previous = INFINITY;
  for (double phi = 1e-1; phi > 1e-9; phi /= 10) {
    const BlochVector r2(0.7 * std::cos(phi), 0.7 * std::sin(phi), 0);
    const double t = brach_time(r1, r2);
    EXPECT_NEAR(t, phi / 2, 1e-9);
    EXPECT_LT(t, previous);
    previous = t;
  }
}

TEST(BrachPropertyTest, InvariantsOnRandomPairs) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double radius = u(rng);
    const BlochVector r1(RandomOnSphere(rng, radius));
    const BlochVector r2(RandomOnSphere(rng, radius));
    const double omega0 = 0.5 + u(rng);
    const auto res = brach_hamiltonian(r1, r2, omega0);
    EXPECT_NEAR(res.axis.norm(), 1.0, 1e-12);
    EXPECT_NEAR(res.axis.dot(r1.vec()), 0.0, 1e-12);
    EXPECT_NEAR(res.axis.dot(r2.vec()), 0.0, 1e-12);
    EXPECT_NEAR(res.time, res.phi12 / (2 * omega0), 1e-12);
    EXPECT_NEAR(res.time, brach_time(r1, r2, omega0), 1e-9);
    EXPECT_NEAR(res.fisher_on_path, 4 * omega0 * omega0 * radius * radius, 1e-12);
    EXPECT_NEAR(res.time,
                std::asin((r1.vec() - r2.vec()).norm() /
                          std::sqrt(res.fisher_on_path / (omega0 * omega0))) / omega0,
                1e-9);

    const HamiltonianSpec h(res.axis, omega0);
    EXPECT_LT((evolve_bloch(r1, h, res.time).vec() - r2.vec()).norm(), 1e-10);
    // Geodesic: the orbit stays on the plane spanned by r1 and r2.
    const Vec3 normal = r1.vec().cross(r2.vec()).normalized();
    for (double f : {0.25, 0.5, 0.75}) {
      const Vec3 mid = evolve_bloch(r1, h, f * res.time).vec();
      EXPECT_NEAR(mid.dot(normal), 0.0, 1e-12);
      EXPECT_NEAR(mid.norm(), radius, 1e-12);
    }
    // Same time as the first crossing of the matching error level.
    const DeltaLevel d(0.5 - 0.25 * (r1.vec() - r2.vec()).norm());
    EXPECT_NEAR(tau_exact(r1, h, d), res.time, 1e-9);
  }
}

TEST(BrachPropertyTest, NoFeasibleAxisIsFaster) {
  std::mt19937_64 rng(73);
  for (int pair = 0; pair < 20; ++pair) {
    const BlochVector r1(RandomOnSphere(rng, 0.8));
    const BlochVector r2(RandomOnSphere(rng, 0.8));
    const double best = brach_time(r1, r2);
    const Vec3 chord = (r1.vec() - r2.vec()).normalized();
    for (int k = 0; k < 100; ++k) {
      // Every axis orthogonal to the chord carries r1 onto r2.
      Vec3 q = oracle::RandomUnit(rng);
      q = (q - q.dot(chord) * chord).normalized();
      const double t = ArrivalTime(r1.vec(), r2.vec(), q, 1.0);
      ASSERT_GE(t, 0.0);
      EXPECT_LT((evolve_bloch(r1, HamiltonianSpec(q), t).vec() - r2.vec()).norm(), 1e-6);
      EXPECT_GE(t, best - 1e-9);
    }
  }
}

Ket MakeKet(double theta, double phi) {
  return Ket(std::cos(theta / 2), std::exp(kI * phi) * std::sin(theta / 2));
}

TEST(PureBrachTest, OrthogonalInputs) {
  const Ket psi1(1, 0), psi2(0, 1);
  const auto res = pure_brach({psi1, psi2});
  EXPECT_NEAR(res.overlap, 0.0, 1e-15);
  EXPECT_NEAR(res.time, kPi / 2, 1e-15);
  Mat2 expected = -kI * (psi1 * psi2.adjoint() - psi2 * psi1.adjoint());
  EXPECT_LT((res.hamiltonian - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(PureBrachTest, OperatorProperties) {
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    // Real overlap: common relative phase phi.
    const double phi = 2 * kPi * u(rng);
    const double t1 = kPi * u(rng), t2 = kPi * u(rng);
    if (std::abs(std::cos((t1 - t2) / 2)) > 0.999) continue;
    const double omega0 = 0.5 + u(rng);
    const Ket psi1 = MakeKet(t1, phi), psi2 = MakeKet(t2, phi);
    const auto res = pure_brach({psi1, psi2}, omega0);
    const Mat2& h = res.hamiltonian;
    EXPECT_LT((h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(std::abs(h.trace()), 0.0, 1e-12);
    EXPECT_NEAR(oracle::TraceNormEig(h) / 2, omega0, 1e-12);
    EXPECT_GE(res.overlap, 0.0);

    const BlochVector b1 = ket_to_bloch(psi1), b2 = ket_to_bloch(psi2);
    const auto bloch = brach_hamiltonian(b1, b2, omega0);
    EXPECT_LT((hamiltonian_axis(h) - bloch.axis).norm(), 1e-9);
    EXPECT_NEAR(res.time, bloch.time, 1e-9);

    const Ket out = oracle::DenseExp(h, res.time) * psi1;
    EXPECT_GT(std::norm(psi2.dot(out)), 1 - 1e-10);
  }
}

TEST(PureBrachTest, NegativeOverlapTakesTheShortArc) {
  const Ket psi1 = MakeKet(0.3, 0.0);
  const Ket psi2 = -MakeKet(1.1, 0.0);
  const auto res = pure_brach({psi1, psi2});
  EXPECT_GT(res.overlap, 0.0);
  EXPECT_NEAR(res.time, 0.4, 1e-12);
  const auto bloch = brach_hamiltonian(ket_to_bloch(psi1), ket_to_bloch(psi2));
  EXPECT_LT((hamiltonian_axis(res.hamiltonian) - bloch.axis).norm(), 1e-12);
}

TEST(PureBrachTest, OrthogonalizesAtQuarterTurn) {
  const Ket psi1 = MakeKet(0.4, 0.7), psi2 = MakeKet(1.9, 0.7);
  const auto res = pure_brach({psi1, psi2});
  const double z = res.overlap;
  const Ket out = oracle::DenseExp(res.hamiltonian, kPi / 2) * psi1;
  EXPECT_NEAR(std::abs(psi1.dot(out)), 0.0, 1e-12);
  const Ket target = (z * psi1 - psi2).normalized();
  EXPECT_NEAR(std::norm(target.dot(out)), 1.0, 1e-12);
}

TEST(PureBrachTest, Errors) {
  const Ket psi1(1, 0);
  EXPECT_EQ(CodeOf([&] { pure_brach({psi1, Ket(kI, 1) / std::sqrt(2)}); }),
            ErrorCode::kOverlapNotReal);
  EXPECT_EQ(CodeOf([&] { pure_brach({psi1, Ket(2, 0)}); }),
            ErrorCode::kLinearlyDependent);
  EXPECT_EQ(CodeOf([&] { pure_brach({psi1, Ket(-1, 0)}); }),
            ErrorCode::kLinearlyDependent);
  EXPECT_EQ(CodeOf([&] { pure_brach({psi1, Ket(0, 0)}); }),
            ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace qsl

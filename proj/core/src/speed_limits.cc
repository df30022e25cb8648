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

#include "qsl/speed_limits.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qsl/errors.h"
#include "qsl/parallel.h"

namespace qsl {
namespace {

constexpr double kPi = std::numbers::pi;

bool IsDegenerate(double perp_norm) { return perp_norm <= kNormTolerance; }

}  // namespace

DeltaLevel::DeltaLevel(double delta) : delta_(delta) {
  if (!(delta >= 0.0 && delta <= 0.5)) {
    throw Error(ErrorCode::kDeltaOutOfRange,
                "delta = " + std::to_string(delta) + " is outside [0, 1/2]");
  }
}

double orbit_error_probability(const BlochVector& r, const HamiltonianSpec& h,
                               double t) {
  return 0.5 - 0.5 * std::abs(std::sin(h.omega0() * t)) * orbit_radius(r, h);
}

double min_orbit_error(const BlochVector& r, const HamiltonianSpec& h) {
  return 0.5 - 0.5 * orbit_radius(r, h);
}

double tau_exact(const BlochVector& r, const HamiltonianSpec& h,
                 DeltaLevel delta) {
  if (delta.is_trivial()) return 0.0;
  const double perp = orbit_radius(r, h);
  if (IsDegenerate(perp)) {
    throw Error(ErrorCode::kDegenerateOrbit,
                "state commutes with the Hamiltonian; p_err stays at 1/2");
  }
  const double x = delta.contrast();
  if (x > perp + kReachabilitySlack) {
    throw Error(ErrorCode::kNotReachable,
                "1 - 2 delta = " + std::to_string(x) + " exceeds |n x r| = " +
                    std::to_string(perp));
  }
  return std::asin(std::min(1.0, x / perp)) / h.omega0();
}

double tau_mt(const BlochVector& r, const HamiltonianSpec& h,
              DeltaLevel delta) {
  if (delta.is_trivial()) return 0.0;
  const double sqrt_fisher = std::sqrt(sld(r, h).fisher);
  if (IsDegenerate(sqrt_fisher / (2.0 * h.omega0()))) {
    throw Error(ErrorCode::kDegenerateOrbit,
                "quantum Fisher information vanishes on this orbit");
  }
  return 2.0 * std::asin(delta.contrast()) / sqrt_fisher;
}

double tau_ml(const BlochVector& r, const HamiltonianSpec& h, DeltaLevel delta,
              bool symmetrized) {
  if (!h.identity_shift()) {
    throw Error(ErrorCode::kMissingIdentityShift,
                "the Margolus-Levitin bound needs H = omega0 (n.sigma + I)");
  }
  if (delta.is_trivial()) return 0.0;
  double projection = h.axis().dot(r.vec());
  if (symmetrized) projection = std::abs(projection);
  const double mean_energy = projection + 1.0;  // (tr(rho H) - E0) / omega0
  if (mean_energy <= kAlgebraTolerance) {
    throw Error(ErrorCode::kGroundState,
                "state sits at the ground state of H; the bound is singular");
  }
  const double x = delta.contrast();
  return kPi * (1.0 - std::sqrt(1.0 - x * x)) / (2.0 * h.omega0() * mean_energy);
}

ReachabilityReport classify(const BlochVector& r, const HamiltonianSpec& h,
                            DeltaLevel delta, bool ml_symmetrized) {
  ReachabilityReport report;
  report.perp_norm = orbit_radius(r, h);
  report.fisher = sld(r, h).fisher;
  report.min_perr = 0.5 - 0.5 * report.perp_norm;

  const bool degenerate = IsDegenerate(report.perp_norm);
  report.reachable =
      delta.is_trivial() ||
      (!degenerate && delta.contrast() <= report.perp_norm + kReachabilitySlack);
  if (report.reachable) report.tau_exact = tau_exact(r, h, delta);
  if (delta.is_trivial() || !degenerate) report.tau_mt = tau_mt(r, h, delta);
  if (h.identity_shift()) {
    try {
      report.tau_ml = tau_ml(r, h, delta, ml_symmetrized);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kGroundState) throw;
    }
  }
  return report;
}

bool faster_set_contains(const BlochVector& r_ref, const BlochVector& sigma,
                         const HamiltonianSpec& h) {
  return orbit_radius(sigma, h) + kAlgebraTolerance >= orbit_radius(r_ref, h);
}

std::vector<RingSample> scan_ring(const HamiltonianSpec& h, double theta_psi,
                                  int grid) {
  if (!(theta_psi >= 0.0 && theta_psi <= kPi / 2.0)) {
    throw Error(ErrorCode::kInvalidArgument, "theta_psi must lie in [0, pi/2]");
  }
  if (grid < 1) {
    throw Error(ErrorCode::kInvalidArgument, "grid resolution must be >= 1");
  }
  const double threshold = std::sin(theta_psi);
  const DeltaLevel delta(std::clamp(0.5 * (1.0 - threshold), 0.0, 0.5));

  // Orthonormal frame (e1, e2, n).
  const Vec3& n = h.axis();
  const Vec3 seed = std::abs(n.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 e1 = (seed - seed.dot(n) * n).normalized();
  const Vec3 e2 = n.cross(e1);

  const std::size_t g = static_cast<std::size_t>(grid);
  const std::size_t n_radial = g;
  const std::size_t n_polar = g + 1;
  const std::size_t n_azimuth = g;
  const std::size_t total = n_radial * n_polar * n_azimuth;

  std::vector<std::optional<RingSample>> slots(total);
  parallel_for(total, [&](std::size_t index) {
    const std::size_t k = index / (n_polar * n_azimuth) + 1;
    const std::size_t j = (index / n_azimuth) % n_polar;
    const std::size_t m = index % n_azimuth;
    const double radius = static_cast<double>(k) / static_cast<double>(g);
    const double polar = kPi * static_cast<double>(j) / static_cast<double>(g);
    const double azimuth =
        2.0 * kPi * static_cast<double>(m) / static_cast<double>(g);
    const double perp = radius * std::sin(polar);
    if (IsDegenerate(perp) || perp + kAlgebraTolerance < threshold) return;
    // Points on the unit sphere can land a few ulps outside the ball.
    Vec3 v = radius * (std::sin(polar) * (std::cos(azimuth) * e1 +
                                          std::sin(azimuth) * e2) +
                       std::cos(polar) * n);
    if (v.norm() > 1.0) v /= v.norm();
    RingSample sample;
    sample.grid_index = index;
    sample.r = BlochVector(v);
    sample.tau_exact = tau_exact(sample.r, h, delta);
    sample.fisher = sld(sample.r, h).fisher;
    slots[index] = sample;
  });

  std::vector<RingSample> out;
  for (auto& slot : slots) {
    if (slot) out.push_back(*slot);
  }
  return out;
}

}  // namespace qsl

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

// Distinguishability times of a qubit under H = omega0 n.sigma: the exact
// first-crossing time, the Mandelstam-Tamm and Margolus-Levitin lower
// bounds, reachability classification, and the "faster than" ring.
//
// All times returned here are raw times (units of the inverse of the
// rate passed in HamiltonianSpec). Multiply by omega0 for dimensionless
// values.

#ifndef QSL_SPEED_LIMITS_H_
#define QSL_SPEED_LIMITS_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "qsl/bloch.h"

namespace qsl {

// Absolute slack used when testing (1 - 2 delta) <= |n x r|.
inline constexpr double kReachabilitySlack = 1e-12;

// Target error probability delta in the closed interval [0, 1/2].
class DeltaLevel {
 public:
  explicit DeltaLevel(double delta);

  double value() const { return delta_; }
  // 1 - 2 delta.
  double contrast() const { return 1.0 - 2.0 * delta_; }
  bool is_trivial() const { return delta_ == 0.5; }

 private:
  double delta_;
};

struct ReachabilityReport {
  bool reachable = false;
  std::optional<double> tau_exact;
  std::optional<double> tau_mt;  // absent on a zero-Fisher orbit
  std::optional<double> tau_ml;  // absent without identity shift or at the ML singular point
  double fisher = 0.0;
  double perp_norm = 0.0;  // |n x r|
  double min_perr = 0.5;   // reached at omega0 t = pi/2
};

// Closed-form Helstrom error between r and its image at time t:
// 1/2 - |sin(omega0 t)| |n x r| / 2.
double orbit_error_probability(const BlochVector& r, const HamiltonianSpec& h,
                               double t);

// Smallest delta reached along the orbit.
double min_orbit_error(const BlochVector& r, const HamiltonianSpec& h);

// First time at which p_err(rho, U rho U^dagger) = delta:
// asin((1 - 2 delta) / |n x r|) / omega0 (principal branch).
// Throws NotReachable or DegenerateOrbit.
double tau_exact(const BlochVector& r, const HamiltonianSpec& h,
                 DeltaLevel delta);

// 2 asin(1 - 2 delta) / sqrt(F). Throws DegenerateOrbit when F = 0.
double tau_mt(const BlochVector& r, const HamiltonianSpec& h, DeltaLevel delta);

// pi (1 - sqrt(1 - (1-2delta)^2)) / (2 omega0 (n.r + 1)), with |n.r| when
// `symmetrized`. Requires an identity-shifted Hamiltonian; throws
// MissingIdentityShift or GroundState.
double tau_ml(const BlochVector& r, const HamiltonianSpec& h, DeltaLevel delta,
              bool symmetrized = false);

// Never throws for valid inputs.
ReachabilityReport classify(const BlochVector& r, const HamiltonianSpec& h,
                            DeltaLevel delta, bool ml_symmetrized = false);

// True iff sigma reaches every delta at least as fast as r_ref, i.e.
// F(sigma, H) >= F(r_ref, H).
bool faster_set_contains(const BlochVector& r_ref, const BlochVector& sigma,
                         const HamiltonianSpec& h);

struct RingSample {
  std::size_t grid_index = 0;
  BlochVector r;
  double tau_exact = 0.0;
  double fisher = 0.0;
};

// Samples the ball on a spherical grid adapted to the Hamiltonian axis
// (radius k/grid, polar angle j pi/grid, azimuth m 2pi/grid) and keeps the
// points with |n x r| >= sin(theta_psi) and |n x r| > 0. tau_exact is
// evaluated at delta = (1 - sin(theta_psi)) / 2, for which a pure state at
// polar angle theta_psi needs exactly pi / (2 omega0). Output is ordered by
// grid index.
std::vector<RingSample> scan_ring(const HamiltonianSpec& h, double theta_psi,
                                  int grid);

}  // namespace qsl

#endif  // QSL_SPEED_LIMITS_H_

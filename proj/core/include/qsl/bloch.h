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

// Single-qubit Bloch-ball algebra: states, unitary rotation, Helstrom error
// probability and the symmetric logarithmic derivative of a unitary path.
//
// Conventions: hbar = 1, |0> (= |e>) is the +1 eigenstate of sigma_z, and a
// Hamiltonian is omega0 * n.sigma, optionally shifted by omega0 * I.

#ifndef QSL_BLOCH_H_
#define QSL_BLOCH_H_

#include <Eigen/Dense>
#include <complex>

namespace qsl {

using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2cd;
using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kAlgebraTolerance = 1e-12;
inline constexpr double kOdeTolerance = 1e-10;

// Point of the closed unit ball. Construction rejects |r| > 1 + kNormTolerance.
class BlochVector {
 public:
  BlochVector() : r_(Vec3::Zero()) {}
  explicit BlochVector(const Vec3& r);
  BlochVector(double x, double y, double z) : BlochVector(Vec3(x, y, z)) {}

  const Vec3& vec() const { return r_; }
  double x() const { return r_.x(); }
  double y() const { return r_.y(); }
  double z() const { return r_.z(); }
  double norm() const { return r_.norm(); }
  bool is_pure() const;

  friend bool operator==(const BlochVector&, const BlochVector&) = default;

 private:
  Vec3 r_;
};

// 2x2 density operator. Validated for Hermiticity, unit trace and
// positivity, each to `tolerance`.
class QubitDensity {
 public:
  explicit QubitDensity(const Mat2& m, double tolerance = kAlgebraTolerance);

  const Mat2& matrix() const { return m_; }

 private:
  Mat2 m_;
};

class HamiltonianSpec {
 public:
  // `axis` must be a unit vector within kNormTolerance; omega0 > 0.
  HamiltonianSpec(const Vec3& axis, double omega0 = 1.0,
                  bool identity_shift = false);

  // Rescales a nonzero `direction` to unit length first.
  static HamiltonianSpec FromDirection(const Vec3& direction,
                                       double omega0 = 1.0,
                                       bool identity_shift = false);

  const Vec3& axis() const { return axis_; }
  double omega0() const { return omega0_; }
  bool identity_shift() const { return identity_shift_; }

  HamiltonianSpec with_identity_shift(bool shift) const {
    return HamiltonianSpec(axis_, omega0_, shift);
  }

  // omega0 * (n.sigma [+ I]).
  Mat2 matrix() const;
  // exp(-i H t).
  Mat2 propagator(double t) const;

 private:
  Vec3 axis_;
  double omega0_;
  bool identity_shift_;
};

struct SldResult {
  Vec3 direction;  // L = direction . sigma, units 1/time
  double fisher = 0.0;
};

// v . sigma
Mat2 pauli_dot(const Vec3& v);

QubitDensity bloch_to_density(const BlochVector& r);
BlochVector density_to_bloch(const QubitDensity& rho);

// Sum of |eigenvalues| of a Hermitian 2x2 matrix (closed form).
double trace_norm(const Mat2& hermitian);

// Minimal error probability of discriminating two equiprobable states,
// 1/2 - ||rho - sigma||_1 / 4. Symmetric, in [0, 1/2].
double helstrom_error(const QubitDensity& rho, const QubitDensity& sigma);
// Same quantity on Bloch vectors: 1/2 - |r - s| / 4.
double helstrom_error(const BlochVector& r, const BlochVector& s);

// Rotation of r about the Hamiltonian axis by angle 2 omega0 t. The identity
// shift only contributes a global phase and is ignored here.
BlochVector evolve_bloch(const BlochVector& r, const HamiltonianSpec& h,
                         double t);

// SLD of the unitary path through r: v = 2 omega0 (n x r), F = |v|^2.
// Both are constant along the orbit.
SldResult sld(const BlochVector& r, const HamiltonianSpec& h);

// |n x r|, the radius of the orbit circle.
double orbit_radius(const BlochVector& r, const HamiltonianSpec& h);

}  // namespace qsl

#endif  // QSL_BLOCH_H_

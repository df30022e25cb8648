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

#include "qsl/bloch.h"

#include <cmath>
#include <sstream>

#include "qsl/errors.h"

namespace qsl {
namespace {

constexpr Complex kI(0.0, 1.0);

std::string FormatVec(const Vec3& v) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << v.x() << ", " << v.y() << ", " << v.z() << ")";
  return os.str();
}

}  // namespace

BlochVector::BlochVector(const Vec3& r) : r_(r) {
  if (!r.allFinite()) {
    throw Error(ErrorCode::kNormViolation,
                "Bloch vector has non-finite entries " + FormatVec(r));
  }
  if (r.norm() > 1.0 + kNormTolerance) {
    throw Error(ErrorCode::kNormViolation,
                "Bloch vector " + FormatVec(r) + " lies outside the unit ball");
  }
}

bool BlochVector::is_pure() const {
  return std::abs(r_.norm() - 1.0) <= kNormTolerance;
}

QubitDensity::QubitDensity(const Mat2& m, double tolerance) : m_(m) {
  if (!m.allFinite()) {
    throw Error(ErrorCode::kInvalidDensity, "non-finite matrix entries");
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tolerance) {
    throw Error(ErrorCode::kInvalidDensity, "matrix is not Hermitian");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > tolerance) {
    throw Error(ErrorCode::kInvalidDensity, "trace differs from one");
  }
  // Smallest eigenvalue of a Hermitian 2x2 matrix.
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double half_gap = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
  if (0.5 * (a + d) - half_gap < -tolerance) {
    throw Error(ErrorCode::kInvalidDensity, "matrix has a negative eigenvalue");
  }
}

HamiltonianSpec::HamiltonianSpec(const Vec3& axis, double omega0,
                                 bool identity_shift)
    : axis_(axis), omega0_(omega0), identity_shift_(identity_shift) {
  if (!axis.allFinite() || std::abs(axis.norm() - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::kInvalidAxis,
                "Hamiltonian axis " + FormatVec(axis) + " is not a unit vector");
  }
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
    throw Error(ErrorCode::kInvalidRate, "omega0 must be positive and finite");
  }
}

HamiltonianSpec HamiltonianSpec::FromDirection(const Vec3& direction,
                                               double omega0,
                                               bool identity_shift) {
  const double n = direction.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::kInvalidAxis, "axis direction must be nonzero");
  }
  return HamiltonianSpec(direction / n, omega0, identity_shift);
}

Mat2 HamiltonianSpec::matrix() const {
  Mat2 h = omega0_ * pauli_dot(axis_);
  if (identity_shift_) h += omega0_ * Mat2::Identity();
  return h;
}

Mat2 HamiltonianSpec::propagator(double t) const {
  const double phase = omega0_ * t;
  Mat2 u = std::cos(phase) * Mat2::Identity() -
           kI * std::sin(phase) * pauli_dot(axis_);
  if (identity_shift_) u *= std::exp(-kI * phase);
  return u;
}

Mat2 pauli_dot(const Vec3& v) {
  Mat2 m;
  m << Complex(v.z(), 0.0), Complex(v.x(), -v.y()),
       Complex(v.x(), v.y()), Complex(-v.z(), 0.0);
  return m;
}

QubitDensity bloch_to_density(const BlochVector& r) {
  return QubitDensity(0.5 * (Mat2::Identity() + pauli_dot(r.vec())));
}

BlochVector density_to_bloch(const QubitDensity& rho) {
  const Mat2& m = rho.matrix();
  return BlochVector(2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(),
                     (m(0, 0) - m(1, 1)).real());
}

double trace_norm(const Mat2& hermitian) {
  const double a = hermitian(0, 0).real();
  const double d = hermitian(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double half_gap = std::hypot(0.5 * (a - d), std::abs(hermitian(0, 1)));
  return std::abs(mean + half_gap) + std::abs(mean - half_gap);
}

double helstrom_error(const QubitDensity& rho, const QubitDensity& sigma) {
  return 0.5 - 0.25 * trace_norm(rho.matrix() - sigma.matrix());
}

double helstrom_error(const BlochVector& r, const BlochVector& s) {
  return 0.5 - 0.25 * (r.vec() - s.vec()).norm();
}

BlochVector evolve_bloch(const BlochVector& r, const HamiltonianSpec& h,
                         double t) {
  const Vec3& n = h.axis();
  const Vec3& v = r.vec();
  const double angle = h.omega0() * t;
  const double s = std::sin(angle);
  return BlochVector(std::cos(2.0 * angle) * v -
                     std::sin(2.0 * angle) * v.cross(n) +
                     2.0 * s * s * v.dot(n) * n);
}

SldResult sld(const BlochVector& r, const HamiltonianSpec& h) {
  SldResult out;
  out.direction = 2.0 * h.omega0() * h.axis().cross(r.vec());
  out.fisher = out.direction.squaredNorm();
  return out;
}

double orbit_radius(const BlochVector& r, const HamiltonianSpec& h) {
  return h.axis().cross(r.vec()).norm();
}

}  // namespace qsl

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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qsl/errors.h"

namespace qsl {
namespace {

constexpr Complex kI(0.0, 1.0);

void CheckRate(double omega0) {
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
    throw Error(ErrorCode::kInvalidRate, "omega0 must be positive and finite");
  }
}

Vec3 PerpendicularAxis(const Vec3& r) {
  for (const Vec3& e : {Vec3(Vec3::UnitX()), Vec3(Vec3::UnitY())}) {
    const double rr = r.squaredNorm();
    const Vec3 p = rr > 0.0 ? Vec3(e - (e.dot(r) / rr) * r) : e;
    if (p.norm() > 1e-6) return p.normalized();
  }
  return Vec3::UnitZ();
}

void CheckRadii(const BlochVector& r1, const BlochVector& r2) {
  if (std::abs(r1.norm() - r2.norm()) > kRadiusTolerance) {
    throw Error(ErrorCode::kRadiusMismatch,
                "Bloch radii differ: |r1| = " + std::to_string(r1.norm()) +
                    ", |r2| = " + std::to_string(r2.norm()));
  }
}

}  // namespace

BrachResult brach_hamiltonian(const BlochVector& r1, const BlochVector& r2,
                              double omega0) {
  CheckRate(omega0);
  CheckRadii(r1, r2);
  const Vec3& a = r1.vec();
  const Vec3& b = r2.vec();
  const Vec3 cross = a.cross(b);

  BrachResult out;
  if ((a - b).norm() <= kAlgebraTolerance) {
    out.axis = PerpendicularAxis(a);
    out.phi12 = 0.0;
  } else if (cross.norm() <= kAlgebraTolerance) {
    if (a.dot(b) >= 0.0) {
      throw Error(ErrorCode::kCollinearInput,
                  "parallel Bloch vectors of equal radius that do not coincide");
    }
    out.axis = PerpendicularAxis(a);
    out.phi12 = std::numbers::pi;
  } else {
    out.axis = cross.normalized();
    out.phi12 = std::atan2(cross.norm(), a.dot(b));
  }
  out.time = out.phi12 / (2.0 * omega0);
  out.fisher_on_path = 4.0 * omega0 * omega0 * out.axis.cross(a).squaredNorm();
  return out;
}

double brach_time(const BlochVector& r1, const BlochVector& r2, double omega0) {
  CheckRate(omega0);
  CheckRadii(r1, r2);
  const double radius = r1.norm();
  if (radius == 0.0) return 0.0;
  const double chord = (r1.vec() - r2.vec()).norm();
  return std::asin(std::min(1.0, chord / (2.0 * radius))) / omega0;
}

PureBrachResult pure_brach(const PureBrachInput& input, double omega0) {
  CheckRate(omega0);
  const double n1 = input.psi1.norm();
  const double n2 = input.psi2.norm();
  if (!(n1 > 0.0) || !(n2 > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "kets must be nonzero");
  }
  const Ket psi1 = input.psi1 / n1;
  Ket psi2 = input.psi2 / n2;
  Complex z = psi1.dot(psi2);  // conjugates psi1
  if (std::abs(z.imag()) > kAlgebraTolerance) {
    throw Error(ErrorCode::kOverlapNotReal,
                "<psi1|psi2> has imaginary part " + std::to_string(z.imag()));
  }
  if (std::abs(z.real()) >= 1.0 - kAlgebraTolerance) {
    throw Error(ErrorCode::kLinearlyDependent, "|<psi1|psi2>| is 1");
  }
  if (z.real() < 0.0) {
    psi2 = -psi2;
    z = -z;
  }
  const double overlap = z.real();
  const Mat2 antisym = psi1 * psi2.adjoint() - psi2 * psi1.adjoint();

  PureBrachResult out;
  out.overlap = overlap;
  out.hamiltonian = (-kI * omega0 / std::sqrt(1.0 - overlap * overlap)) * antisym;
  out.time = std::acos(overlap) / omega0;
  return out;
}

BlochVector ket_to_bloch(const Ket& psi) {
  const Complex a = psi(0);
  const Complex b = psi(1);
  const Complex ab = std::conj(a) * b;
  return BlochVector(2.0 * ab.real(), 2.0 * ab.imag(),
                     std::norm(a) - std::norm(b));
}

Vec3 hamiltonian_axis(const Mat2& h) {
  // h = c0 I + q.sigma with q = (Re h10, Im h10, (h00 - h11)/2).
  const Vec3 q(h(1, 0).real(), h(1, 0).imag(),
               0.5 * (h(0, 0) - h(1, 1)).real());
  const double n = q.norm();
  return n > 0.0 ? Vec3(q / n) : Vec3::Zero();
}

}  // namespace qsl

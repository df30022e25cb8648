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

// Minimal-time unitary transfer between two Bloch vectors of equal length
// under Hamiltonians of fixed operator norm omega0.

#ifndef QSL_BRACHISTOCHRONE_H_
#define QSL_BRACHISTOCHRONE_H_

#include <Eigen/Core>

#include "qsl/bloch.h"

namespace qsl {

inline constexpr double kRadiusTolerance = 1e-9;

struct BrachResult {
  Vec3 axis;             // unit q with q.r1 = q.r2 = 0
  double time = 0.0;     // T = phi12 / (2 omega0)
  double phi12 = 0.0;    // angle between r1 and r2, in [0, pi]
  double fisher_on_path = 0.0;  // 4 omega0^2 |q x r1|^2
};

// Optimal axis is (r1 x r2)/|r1 x r2|. For antipodal inputs the axis is the
// normalized component of e_x orthogonal to r1 (e_y if that vanishes).
// Coincident inputs give T = 0 with the same fallback axis.
// Throws RadiusMismatch or CollinearInput.
BrachResult brach_hamiltonian(const BlochVector& r1, const BlochVector& r2,
                              double omega0 = 1.0);

// asin(|r1 - r2| / (2 |r1|)) / omega0. Same preconditions as above.
double brach_time(const BlochVector& r1, const BlochVector& r2,
                  double omega0 = 1.0);

using Ket = Eigen::Vector2cd;

struct PureBrachInput {
  Ket psi1;
  Ket psi2;
};

struct PureBrachResult {
  Mat2 hamiltonian;  // -i omega0 / sqrt(1 - z^2) (|psi1><psi2| - |psi2><psi1|)
  double overlap = 0.0;  // z = <psi1|psi2> after the sign fix below, z >= 0
  double time = 0.0;     // acos(z) / omega0
};

// Kets are normalized on entry. The overlap must be real; a negative overlap
// is made positive by flipping the global sign of psi2 (same physical state),
// which selects the short arc and keeps the axis equal to the Bloch-form
// brach_hamiltonian axis. Throws OverlapNotReal or LinearlyDependent.
PureBrachResult pure_brach(const PureBrachInput& input, double omega0 = 1.0);

// Bloch vector of a normalized ket.
BlochVector ket_to_bloch(const Ket& psi);

// Unit vector q with H = omega0 q.sigma for a traceless Hermitian H.
Vec3 hamiltonian_axis(const Mat2& h);

}  // namespace qsl

#endif  // QSL_BRACHISTOCHRONE_H_

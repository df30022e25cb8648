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

// Reduced qubit dynamics for a qubit coupled to one field mode through the
// Jaynes-Cummings Hamiltonian
//
//   H = omega0 a^dag a + (omega0 + detuning) sigma_z / 2
//       + g (a^dag sigma_- + a sigma_+).
//
// H conserves a^dag a + |e><e|, so it is block diagonal on
// span{|e,n>, |g,n+1>} plus the singlet |g,0>. Each block is evolved in
// closed form; there is no time stepping.
//
// Kraus operators are E_m(t) = <m| V(t) |psi> for m = 0..n_max+1: an
// excited-qubit component at the cutoff n_max still feeds |g, n_max+1>.

#ifndef QSL_CAVITY_JC_H_
#define QSL_CAVITY_JC_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "qsl/bloch.h"
#include "qsl/field_state.h"
#include "qsl/speed_limits.h"

namespace qsl {

// Reduced states may deviate from a density operator by at most this much
// before NonphysicalOutput is raised.
inline constexpr double kReducedStateTolerance = 1e-8;
// Kraus operators with operator norm at or below this are treated as zero.
inline constexpr double kKrausSupportThreshold = 1e-12;

enum class Frame {
  kLab,       // full H
  kRotating,  // free part omega0 (a^dag a + sigma_z / 2) removed
};

std::string_view frame_name(Frame frame);
Frame parse_frame(std::string_view name);

struct CavityConfig {
  double omega0 = 1.0;
  double g = 0.05;
  double detuning = 0.0;
  std::size_t n_max = 100;
  Frame frame = Frame::kLab;

  // Throws InvalidRate / InvalidArgument.
  void validate() const;

  friend bool operator==(const CavityConfig&, const CavityConfig&) = default;
};

struct KrausSet {
  double t = 0.0;
  std::vector<Mat2> operators;

  // || sum_m E_m^dag E_m - I ||, max-abs entry norm.
  double completeness_error() const;
  // sum_m E_m rho E_m^dag.
  Mat2 apply(const Mat2& rho) const;
};

struct Propagation {
  QubitDensity state;
  KrausSet kraus;
};

KrausSet jc_kraus(const FieldState& field, const CavityConfig& cfg, double t);

// Reduced qubit state at time t for the product initial state
// qubit (x) |field>. The field cutoff must not exceed cfg.n_max.
Propagation jc_propagate(const FieldState& field, const QubitDensity& qubit,
                         const CavityConfig& cfg, double t);

struct SeriesSample {
  double t = 0.0;
  double p_err = 0.5;
};

struct DistinguishabilitySeries {
  std::vector<SeriesSample> samples;
  CavityConfig config;
  BlochVector initial;
};

// p_err(rho_S(0), rho_S(t)) on the uniform grid t_i = t_max i / (steps - 1).
// Grid points are evaluated in parallel; output does not depend on the
// worker count.
DistinguishabilitySeries perr_series(const FieldState& field,
                                     const BlochVector& qubit,
                                     const CavityConfig& cfg, double t_max,
                                     std::size_t steps);

// First time with p_err <= delta + slack, linearly interpolated between the
// bracketing samples. Absent when no sample qualifies.
std::optional<double> nonunitary_tau(const DistinguishabilitySeries& series,
                                     DeltaLevel delta, double slack = 0.0);

// Indices m whose Kraus operator has norm above kKrausSupportThreshold.
std::vector<std::size_t> kraus_support(const FieldState& field,
                                       const CavityConfig& cfg, double t);

}  // namespace qsl

#endif  // QSL_CAVITY_JC_H_

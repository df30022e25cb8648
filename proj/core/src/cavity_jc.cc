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

#include "qsl/cavity_jc.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsl/errors.h"
#include "qsl/parallel.h"

namespace qsl {
namespace {

constexpr Complex kI(0.0, 1.0);

// exp(-i t B) for the block B = E0 I + [[d, G], [G, -d]] restricted to
// span{|e,n>, |g,n+1>}.
struct Block {
  Complex ee, eg, ge, gg;
};

Block EvolveBlock(std::size_t n, const CavityConfig& cfg, double t) {
  const double d = 0.5 * cfg.detuning;
  const double coupling = cfg.g * std::sqrt(static_cast<double>(n) + 1.0);
  const double rabi = std::hypot(d, coupling);
  const double c = std::cos(rabi * t);
  const double s = std::sin(rabi * t) / rabi;
  Block b{Complex(c, -s * d), Complex(0.0, -s * coupling),
          Complex(0.0, -s * coupling), Complex(c, s * d)};
  if (cfg.frame == Frame::kLab) {
    const Complex phase =
        std::exp(-kI * cfg.omega0 * (static_cast<double>(n) + 0.5) * t);
    b.ee *= phase;
    b.eg *= phase;
    b.ge *= phase;
    b.gg *= phase;
  }
  return b;
}

// Phase acquired by |g,0>.
Complex GroundPhase(const CavityConfig& cfg, double t) {
  const double energy = cfg.frame == Frame::kLab
                            ? -0.5 * (cfg.omega0 + cfg.detuning)
                            : -0.5 * cfg.detuning;
  return std::exp(-kI * energy * t);
}

double OperatorNorm(const Mat2& m) {
  // Largest singular value from the eigenvalues of m^dag m.
  const Mat2 p = m.adjoint() * m;
  const double a = p(0, 0).real();
  const double d = p(1, 1).real();
  const double top = 0.5 * (a + d) + std::hypot(0.5 * (a - d), std::abs(p(0, 1)));
  return std::sqrt(std::max(0.0, top));
}

void CheckTime(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw Error(ErrorCode::kInvalidArgument, "time must be finite and >= 0");
  }
}

}  // namespace

std::string_view frame_name(Frame frame) {
  return frame == Frame::kLab ? "lab" : "rotating";
}

Frame parse_frame(std::string_view name) {
  if (name == "lab") return Frame::kLab;
  if (name == "rotating") return Frame::kRotating;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown frame '" + std::string(name) + "'");
}

void CavityConfig::validate() const {
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
    throw Error(ErrorCode::kInvalidRate, "omega0 must be positive and finite");
  }
  if (!(g > 0.0) || !std::isfinite(g)) {
    throw Error(ErrorCode::kInvalidRate, "coupling g must be positive");
  }
  if (!std::isfinite(detuning)) {
    throw Error(ErrorCode::kInvalidRate, "detuning must be finite");
  }
  if (n_max < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n_max must be >= 1");
  }
}

double KrausSet::completeness_error() const {
  Mat2 sum = Mat2::Zero();
  for (const Mat2& e : operators) sum += e.adjoint() * e;
  return (sum - Mat2::Identity()).cwiseAbs().maxCoeff();
}

Mat2 KrausSet::apply(const Mat2& rho) const {
  Mat2 out = Mat2::Zero();
  for (const Mat2& e : operators) out += e * rho * e.adjoint();
  return out;
}

KrausSet jc_kraus(const FieldState& field, const CavityConfig& cfg, double t) {
  cfg.validate();
  CheckTime(t);
  const std::size_t n_max = field.n_max();
  if (n_max > cfg.n_max) {
    throw Error(ErrorCode::kInvalidArgument,
                "field cutoff " + std::to_string(n_max) +
                    " exceeds configured n_max " + std::to_string(cfg.n_max));
  }
  const auto& c = field.amplitudes();

  std::vector<Block> blocks;
  blocks.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) blocks.push_back(EvolveBlock(n, cfg, t));

  // Row/column 0 is |e>, 1 is |g>. E_m(s', s) = <s', m| V |s, psi>.
  KrausSet set;
  set.t = t;
  set.operators.assign(n_max + 2, Mat2::Zero());
  for (std::size_t m = 0; m <= n_max + 1; ++m) {
    Mat2& e = set.operators[m];
    if (m <= n_max) e(0, 0) = blocks[m].ee * c[m];
    if (m >= 1) e(1, 0) = blocks[m - 1].ge * c[m - 1];
    if (m + 1 <= n_max) e(0, 1) = blocks[m].eg * c[m + 1];
    if (m == 0) {
      e(1, 1) = GroundPhase(cfg, t) * c[0];
    } else if (m <= n_max) {
      e(1, 1) = blocks[m - 1].gg * c[m];
    }
  }
  return set;
}

Propagation jc_propagate(const FieldState& field, const QubitDensity& qubit,
                         const CavityConfig& cfg, double t) {
  KrausSet kraus = jc_kraus(field, cfg, t);
  Mat2 rho = kraus.apply(qubit.matrix());

  const double asymmetry = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  rho = 0.5 * (rho + rho.adjoint());
  const double trace_error = std::abs(rho.trace() - 1.0);
  const double a = rho(0, 0).real();
  const double d = rho(1, 1).real();
  const double min_eig = 0.5 * (a + d) - std::hypot(0.5 * (a - d), std::abs(rho(0, 1)));
  if (asymmetry > kReducedStateTolerance || trace_error > kReducedStateTolerance ||
      min_eig < -kReducedStateTolerance) {
    throw Error(ErrorCode::kNonphysicalOutput,
                "reduced state leaves the Bloch ball at t = " + std::to_string(t) +
                    " (trace error " + std::to_string(trace_error) +
                    ", min eigenvalue " + std::to_string(min_eig) + ")");
  }
  return Propagation{QubitDensity(rho, kReducedStateTolerance), std::move(kraus)};
}

DistinguishabilitySeries perr_series(const FieldState& field,
                                     const BlochVector& qubit,
                                     const CavityConfig& cfg, double t_max,
                                     std::size_t steps) {
  cfg.validate();
  if (steps < 2) {
    throw Error(ErrorCode::kInvalidArgument, "a series needs at least 2 steps");
  }
  CheckTime(t_max);

  DistinguishabilitySeries series;
  series.config = cfg;
  series.initial = qubit;
  series.samples.resize(steps);

  const QubitDensity rho0 = bloch_to_density(qubit);
  const double dt = t_max / static_cast<double>(steps - 1);
  parallel_for(steps, [&](std::size_t i) {
    const double t = i + 1 == steps ? t_max : dt * static_cast<double>(i);
    const Propagation p = jc_propagate(field, rho0, cfg, t);
    series.samples[i] = SeriesSample{t, helstrom_error(rho0, p.state)};
  });
  return series;
}

std::optional<double> nonunitary_tau(const DistinguishabilitySeries& series,
                                     DeltaLevel delta, double slack) {
  const double target = delta.value() + slack;
  const auto& s = series.samples;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].p_err > target) continue;
    if (i == 0) return s[0].t;
    const SeriesSample& lo = s[i - 1];
    const SeriesSample& hi = s[i];
    // lo.p_err > target >= hi.p_err, so the denominator is positive.
    const double frac = (lo.p_err - target) / (lo.p_err - hi.p_err);
    return lo.t + frac * (hi.t - lo.t);
  }
  return std::nullopt;
}

std::vector<std::size_t> kraus_support(const FieldState& field,
                                       const CavityConfig& cfg, double t) {
  const KrausSet set = jc_kraus(field, cfg, t);
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < set.operators.size(); ++m) {
    if (OperatorNorm(set.operators[m]) > kKrausSupportThreshold) out.push_back(m);
  }
  return out;
}

}  // namespace qsl

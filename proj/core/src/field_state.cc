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

#include "qsl/field_state.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "qsl/errors.h"

namespace qsl {
namespace {

// Real interference factor multiplying the coherent amplitude of |n>.
double SuperpositionWeight(FieldLabel label, std::size_t n) {
  switch (label) {
    case FieldLabel::kCoherent:
      return 1.0;
    case FieldLabel::kCatEven:
      return n % 2 == 0 ? 2.0 : 0.0;
    case FieldLabel::kCatOdd:
      return n % 2 == 1 ? 2.0 : 0.0;
    case FieldLabel::kE0:
      return n % 4 == 0 ? 4.0 : 0.0;
    default:
      return 0.0;
  }
}

// log of the Poisson weight e^{-x} x^n / n!.
double LogPoisson(double x, std::size_t n) {
  const double dn = static_cast<double>(n);
  return -x + dn * std::log(x) - std::lgamma(dn + 1.0);
}

std::string FormatMass(double m) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", m);
  return buf;
}

}  // namespace

std::string_view field_label_name(FieldLabel label) {
  switch (label) {
    case FieldLabel::kCoherent: return "coherent";
    case FieldLabel::kCatEven: return "cat_even";
    case FieldLabel::kCatOdd: return "cat_odd";
    case FieldLabel::kE0: return "e0";
    case FieldLabel::kFock: return "fock";
    case FieldLabel::kCustom: return "custom";
  }
  return "custom";
}

FieldLabel parse_field_label(std::string_view name) {
  for (FieldLabel l : {FieldLabel::kCoherent, FieldLabel::kCatEven,
                       FieldLabel::kCatOdd, FieldLabel::kE0, FieldLabel::kFock,
                       FieldLabel::kCustom}) {
    if (field_label_name(l) == name) return l;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown field label '" + std::string(name) + "'");
}

FieldState FieldState::Custom(std::vector<std::complex<double>> amplitudes) {
  if (amplitudes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "field amplitudes are empty");
  }
  double norm2 = 0.0;
  for (const auto& c : amplitudes) norm2 += std::norm(c);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw Error(ErrorCode::kInvalidArgument, "field amplitudes have zero norm");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& c : amplitudes) c *= scale;
  FieldState out;
  out.amps_ = std::move(amplitudes);
  out.label_ = FieldLabel::kCustom;
  return out;
}

double FieldState::mean_photon_number() const {
  double mean = 0.0;
  for (std::size_t n = 0; n < amps_.size(); ++n) {
    mean += static_cast<double>(n) * std::norm(amps_[n]);
  }
  return mean;
}

FieldState make_field(FieldLabel label, std::complex<double> alpha,
                      std::size_t n_max, std::size_t fock_n) {
  FieldState out;
  out.label_ = label;
  out.alpha_ = alpha;

  if (label == FieldLabel::kCustom) {
    throw Error(ErrorCode::kInvalidArgument,
                "custom fields are built with FieldState::Custom");
  }
  if (label == FieldLabel::kFock) {
    if (fock_n > n_max) {
      throw Error(ErrorCode::kTruncationTooSmall,
                  "Fock state |" + std::to_string(fock_n) +
                      "> lies above the cutoff; tail mass 1");
    }
    out.amps_.assign(n_max + 1, {0.0, 0.0});
    out.amps_[fock_n] = 1.0;
    return out;
  }

  const double x = std::norm(alpha);
  const double phase = std::arg(alpha);
  // Far enough into the Poisson tail that the remaining terms are < 1e-40.
  const std::size_t n_end = std::max<std::size_t>(
      n_max, static_cast<std::size_t>(x + 50.0 * std::sqrt(x) + 60.0));

  out.amps_.assign(n_max + 1, {0.0, 0.0});
  double kept = 0.0;
  double tail = 0.0;
  for (std::size_t n = 0; n <= n_end; ++n) {
    const double w = SuperpositionWeight(label, n);
    if (w == 0.0) continue;
    double magnitude;
    if (x == 0.0) {
      magnitude = n == 0 ? 1.0 : 0.0;
    } else {
      magnitude = std::exp(0.5 * LogPoisson(x, n));
    }
    const double amp = w * magnitude;
    if (n <= n_max) {
      out.amps_[n] = std::polar(amp, static_cast<double>(n) * phase);
      kept += amp * amp;
    } else {
      tail += amp * amp;
    }
  }
  const double total = kept + tail;
  if (!(kept > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(field_label_name(label)) +
                    " superposition vanishes for this alpha");
  }
  out.tail_mass_ = tail / total;
  if (out.tail_mass_ >= kTailTolerance) {
    throw Error(ErrorCode::kTruncationTooSmall,
                "Fock cutoff " + std::to_string(n_max) +
                    " discards tail mass " + FormatMass(out.tail_mass_));
  }
  const double scale = 1.0 / std::sqrt(kept);
  for (auto& c : out.amps_) c *= scale;
  return out;
}

}  // namespace qsl

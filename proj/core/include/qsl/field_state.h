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

// Truncated Fock-basis states of a single field mode.

#ifndef QSL_FIELD_STATE_H_
#define QSL_FIELD_STATE_H_

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace qsl {

// Largest untruncated probability mass allowed beyond the Fock cutoff.
inline constexpr double kTailTolerance = 1e-10;

enum class FieldLabel { kCoherent, kCatEven, kCatOdd, kE0, kFock, kCustom };

std::string_view field_label_name(FieldLabel label);
// Accepts the names above ("coherent", "cat_even", "cat_odd", "e0", "fock",
// "custom"). Throws InvalidArgument.
FieldLabel parse_field_label(std::string_view name);

class FieldState {
 public:
  // Normalizes `amplitudes` (index = photon number).
  static FieldState Custom(std::vector<std::complex<double>> amplitudes);

  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
  std::size_t n_max() const { return amps_.size() - 1; }
  FieldLabel label() const { return label_; }
  std::complex<double> alpha() const { return alpha_; }
  // Mass of the untruncated state above n_max, before renormalization.
  double tail_mass() const { return tail_mass_; }

  double mean_photon_number() const;

 private:
  friend FieldState make_field(FieldLabel, std::complex<double>, std::size_t,
                               std::size_t);
  FieldState() = default;

  std::vector<std::complex<double>> amps_;
  FieldLabel label_ = FieldLabel::kCustom;
  std::complex<double> alpha_{0.0, 0.0};
  double tail_mass_ = 0.0;
};

// coherent: |alpha>; cat_even / cat_odd: |alpha> +/- |-alpha>;
// e0: |alpha> + |-alpha> + |i alpha> + |-i alpha> (support on n = 0 mod 4);
// fock: |fock_n> (alpha ignored). Amplitudes are kept for n = 0..n_max and
// renormalized. Throws TruncationTooSmall when the discarded mass exceeds
// kTailTolerance, InvalidArgument for an empty superposition (odd cat at
// alpha = 0) or label = custom.
FieldState make_field(FieldLabel label, std::complex<double> alpha,
                      std::size_t n_max, std::size_t fock_n = 0);

}  // namespace qsl

#endif  // QSL_FIELD_STATE_H_

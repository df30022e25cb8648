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

// Collapse/revival diagnostics for a sampled p_err curve.

#ifndef QSL_ENVELOPE_H_
#define QSL_ENVELOPE_H_

#include <optional>
#include <vector>

#include "qsl/cavity_jc.h"

namespace qsl {

struct EnvelopePoint {
  double t = 0.0;          // window centre
  double amplitude = 0.0;  // max - min of p_err inside the window
};

// Peak-to-peak amplitude over a sliding window of length `window` (time
// units), one point per sample whose window fits inside the series.
std::vector<EnvelopePoint> oscillation_envelope(
    const DistinguishabilitySeries& series, double window);

struct RevivalAnalysis {
  double initial_amplitude = 0.0;
  std::optional<double> collapse_time;  // envelope first drops below threshold
  std::optional<double> revival_time;   // peak of the first lobe after that
  double revival_amplitude = 0.0;
};

// threshold = threshold_fraction * initial amplitude. The first revival
// lobe runs from the first return above threshold after the collapse to the
// next drop below it (or the end of the series).
RevivalAnalysis analyze_revival(const std::vector<EnvelopePoint>& envelope,
                                double threshold_fraction = 0.25);

// Largest envelope amplitude with window centre in [t0, t1].
double max_envelope_between(const std::vector<EnvelopePoint>& envelope,
                            double t0, double t1);

// One Rabi period of p_err for photon number n: pi / (g sqrt(n + 1)).
double rabi_window(double g, double mean_photon_number);

}  // namespace qsl

#endif  // QSL_ENVELOPE_H_

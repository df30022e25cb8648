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

#include "qsl/envelope.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

#include "qsl/errors.h"

namespace qsl {

std::vector<EnvelopePoint> oscillation_envelope(
    const DistinguishabilitySeries& series, double window) {
  if (!(window > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "envelope window must be positive");
  }
  const auto& s = series.samples;
  std::vector<EnvelopePoint> out;
  // Monotonic deques of indices for the running max and min.
  std::deque<std::size_t> hi, lo;
  std::size_t end = 0;
  for (std::size_t begin = 0; begin < s.size(); ++begin) {
    while (end < s.size() && s[end].t <= s[begin].t + window) {
      while (!hi.empty() && s[hi.back()].p_err <= s[end].p_err) hi.pop_back();
      while (!lo.empty() && s[lo.back()].p_err >= s[end].p_err) lo.pop_back();
      hi.push_back(end);
      lo.push_back(end);
      ++end;
    }
    if (end == s.size() && s.back().t < s[begin].t + window) break;
    while (hi.front() < begin) hi.pop_front();
    while (lo.front() < begin) lo.pop_front();
    out.push_back({s[begin].t + 0.5 * window,
                   s[hi.front()].p_err - s[lo.front()].p_err});
  }
  return out;
}

RevivalAnalysis analyze_revival(const std::vector<EnvelopePoint>& envelope,
                                double threshold_fraction) {
  RevivalAnalysis out;
  if (envelope.empty()) return out;
  out.initial_amplitude = envelope.front().amplitude;
  const double threshold = threshold_fraction * out.initial_amplitude;

  std::size_t i = 0;
  while (i < envelope.size() && envelope[i].amplitude >= threshold) ++i;
  if (i == envelope.size()) return out;
  out.collapse_time = envelope[i].t;

  while (i < envelope.size() && envelope[i].amplitude < threshold) ++i;
  if (i == envelope.size()) return out;

  std::size_t peak = i;
  for (; i < envelope.size() && envelope[i].amplitude >= threshold; ++i) {
    if (envelope[i].amplitude > envelope[peak].amplitude) peak = i;
  }
  out.revival_time = envelope[peak].t;
  out.revival_amplitude = envelope[peak].amplitude;
  return out;
}

double max_envelope_between(const std::vector<EnvelopePoint>& envelope,
                            double t0, double t1) {
  double best = 0.0;
  for (const auto& p : envelope) {
    if (p.t >= t0 && p.t <= t1) best = std::max(best, p.amplitude);
  }
  return best;
}

double rabi_window(double g, double mean_photon_number) {
  return std::numbers::pi / (g * std::sqrt(mean_photon_number + 1.0));
}

}  // namespace qsl

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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "test_util.h"

namespace qsl {
namespace {

using ::qsl::testing::CodeOf;
constexpr double kPi = std::numbers::pi;

DistinguishabilitySeries Sampled(double t_max, std::size_t steps, double (*f)(double)) {
  DistinguishabilitySeries s;
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = t_max * i / (steps - 1);
    s.samples.push_back({t, f(t)});
  }
  return s;
}

// Beat pattern: fast oscillation under a slowly vanishing and returning
// envelope |cos(t / 20)|.
double Beat(double t) { return 0.25 + 0.2 * std::abs(std::cos(t / 20)) * std::sin(3 * t); }

TEST(OscillationEnvelopeTest, MatchesBruteForceWindows) {
  const auto s = Sampled(100.0, 2001, Beat);
  const double w = 2.5;
  const auto env = oscillation_envelope(s, w);
  ASSERT_FALSE(env.empty());
  std::size_t k = 0;
  for (std::size_t b = 0; b < s.samples.size(); ++b) {
    const double t0 = s.samples[b].t;
    if (t0 + w > s.samples.back().t) break;
    double hi = -1, lo = 2;
    for (std::size_t j = b; j < s.samples.size() && s.samples[j].t <= t0 + w; ++j) {
      hi = std::max(hi, s.samples[j].p_err);
      lo = std::min(lo, s.samples[j].p_err);
    }
    ASSERT_LT(k, env.size());
    EXPECT_DOUBLE_EQ(env[k].t, t0 + 0.5 * w);
    EXPECT_DOUBLE_EQ(env[k].amplitude, hi - lo);
    ++k;
  }
  EXPECT_EQ(k, env.size());
}

TEST(OscillationEnvelopeTest, RejectsBadWindow) {
  const auto s = Sampled(1.0, 10, Beat);
  EXPECT_EQ(CodeOf([&] { oscillation_envelope(s, 0.0); }), ErrorCode::kInvalidArgument);
  EXPECT_TRUE(oscillation_envelope(s, 5.0).empty());
}

TEST(AnalyzeRevivalTest, FindsCollapseAndRevivalOfBeat) {
  const auto s = Sampled(100.0, 4001, Beat);
  const auto env = oscillation_envelope(s, 2 * kPi / 3);
  const auto a = analyze_revival(env);
  EXPECT_NEAR(a.initial_amplitude, 0.4, 0.02);
  ASSERT_TRUE(a.collapse_time.has_value());
  ASSERT_TRUE(a.revival_time.has_value());
  // |cos(t/20)| vanishes at 10 pi and peaks again at 20 pi.
  EXPECT_LT(*a.collapse_time, 10 * kPi);
  EXPECT_NEAR(*a.revival_time, 20 * kPi, 2.0);
  EXPECT_GT(a.revival_amplitude, 0.3);
  EXPECT_LT(max_envelope_between(env, 10 * kPi - 1, 10 * kPi + 1), 0.1);
}

TEST(AnalyzeRevivalTest, NoCollapse) {
  std::vector<EnvelopePoint> env = {{0, 1.0}, {1, 0.9}, {2, 0.95}};
  const auto a = analyze_revival(env);
  EXPECT_FALSE(a.collapse_time.has_value());
  EXPECT_FALSE(a.revival_time.has_value());
  EXPECT_FALSE(analyze_revival({}).collapse_time.has_value());
}

TEST(AnalyzeRevivalTest, CollapseWithoutRevival) {
  std::vector<EnvelopePoint> env = {{0, 1.0}, {1, 0.1}, {2, 0.05}};
  const auto a = analyze_revival(env);
  ASSERT_TRUE(a.collapse_time.has_value());
  EXPECT_EQ(*a.collapse_time, 1.0);
  EXPECT_FALSE(a.revival_time.has_value());
}

TEST(AnalyzeRevivalTest, PicksPeakOfFirstLobe) {
  std::vector<EnvelopePoint> env = {{0, 1.0}, {1, 0.1}, {2, 0.5}, {3, 0.7},
                                    {4, 0.6}, {5, 0.1}, {6, 0.9}};
  const auto a = analyze_revival(env);
  EXPECT_EQ(*a.revival_time, 3.0);
  EXPECT_EQ(a.revival_amplitude, 0.7);
}

TEST(RabiWindowTest, Value) {
  EXPECT_NEAR(rabi_window(0.05, 0.0), kPi / 0.05, 1e-12);
  EXPECT_NEAR(rabi_window(0.05, 3.0), kPi / 0.1, 1e-12);
}

TEST(MaxEnvelopeBetweenTest, EmptyRangeIsZero) {
  std::vector<EnvelopePoint> env = {{0, 1.0}, {1, 0.5}};
  EXPECT_EQ(max_envelope_between(env, 2, 3), 0.0);
  EXPECT_EQ(max_envelope_between(env, 0.5, 1), 0.5);
}

}  // namespace
}  // namespace qsl

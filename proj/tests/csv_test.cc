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

#include "qsl/csv.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "qsl/parallel.h"

namespace qsl {
namespace {

TEST(FormatNumberTest, FifteenSignificantDigits) {
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333333");
  EXPECT_EQ(format_number(1e-20), "1e-20");
  EXPECT_EQ(format_number(123456789.0), "123456789");
}

TEST(SeriesCsvTest, HeaderRowsAndTimeUnits) {
  DistinguishabilitySeries s;
  s.config.omega0 = 2.0;
  s.samples = {{0.0, 0.5}, {0.25, 0.4}, {0.5, 0.125}};
  std::ostringstream os;
  write_series_csv(os, s);
  EXPECT_EQ(os.str(), "t_omega0,p_err\n0,0.5\n0.5,0.4\n1,0.125\n");
}

TEST(RingCsvTest, Columns) {
  RingSample a;
  a.r = BlochVector(1, 0, 0);
  a.tau_exact = 0.5;
  a.fisher = 16.0;
  std::ostringstream os;
  write_ring_csv(os, {a}, 2.0);
  EXPECT_EQ(os.str(), "rx,ry,rz,tau_exact,fisher\n1,0,0,1,16\n");
}

TEST(CsvTest, ParsesBackWithinPrintPrecision) {
  DistinguishabilitySeries s;
  for (int i = 0; i < 100; ++i) s.samples.push_back({0.1 * i, 0.5 * std::exp(-0.01 * i)});
  std::ostringstream os;
  write_series_csv(os, s);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  for (int i = 0; std::getline(is, line); ++i) {
    const auto comma = line.find(',');
    ASSERT_NE(comma, std::string::npos);
    EXPECT_NEAR(std::stod(line.substr(0, comma)), s.samples[i].t, 1e-14);
    EXPECT_NEAR(std::stod(line.substr(comma + 1)), s.samples[i].p_err, 1e-15);
  }
}

TEST(ParallelTest, WorkerCountHonoursCap) {
  ::setenv("QSL_THREADS", "1", 1);
  EXPECT_EQ(worker_count(), 1u);
  ::setenv("QSL_THREADS", "junk", 1);
  EXPECT_GE(worker_count(), 1u);
  ::setenv("QSL_THREADS", "0", 1);
  EXPECT_GE(worker_count(), 1u);
  ::unsetenv("QSL_THREADS");
}

TEST(ParallelTest, VisitsEveryIndexOnceAndRethrows) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
  parallel_for(0, [](std::size_t) { FAIL(); });
  EXPECT_THROW(parallel_for(100,
                            [](std::size_t i) {
                              if (i == 57) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

}  // namespace
}  // namespace qsl

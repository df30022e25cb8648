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

#include <cstdio>

namespace qsl {

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

void write_series_csv(std::ostream& os, const DistinguishabilitySeries& series) {
  const double omega0 = series.config.omega0;
  os << "t_omega0,p_err\n";
  for (const SeriesSample& s : series.samples) {
    os << format_number(s.t * omega0) << ',' << format_number(s.p_err) << '\n';
  }
}

void write_ring_csv(std::ostream& os, const std::vector<RingSample>& samples,
                    double omega0) {
  os << "rx,ry,rz,tau_exact,fisher\n";
  for (const RingSample& s : samples) {
    os << format_number(s.r.x()) << ',' << format_number(s.r.y()) << ','
       << format_number(s.r.z()) << ',' << format_number(s.tau_exact * omega0)
       << ',' << format_number(s.fisher) << '\n';
  }
}

}  // namespace qsl

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

// CSV emitters. Numbers use 15 significant digits; lines end in LF.

#ifndef QSL_CSV_H_
#define QSL_CSV_H_

#include <ostream>
#include <string>
#include <vector>

#include "qsl/cavity_jc.h"
#include "qsl/speed_limits.h"

namespace qsl {

// printf("%.15g").
std::string format_number(double value);

// Header `t_omega0,p_err`; time column is t * omega0.
void write_series_csv(std::ostream& os, const DistinguishabilitySeries& series);

// Header `rx,ry,rz,tau_exact,fisher`; tau_exact in units of 1/omega0,
// fisher in raw units (1/time^2).
void write_ring_csv(std::ostream& os, const std::vector<RingSample>& samples,
                    double omega0);

}  // namespace qsl

#endif  // QSL_CSV_H_

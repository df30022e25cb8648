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

// Command-line front end. Every subcommand is first turned into a Scenario,
// so anything run from flags can be saved and replayed from a file.

#ifndef QSL_TOOLS_CLI_H_
#define QSL_TOOLS_CLI_H_

#include <ostream>

#include "qsl/scenario.h"

namespace qsl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotReachable = 2;

// Parses argv and runs the selected subcommand. Reports and data go to
// `out`, diagnostics to `err`.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Runs a fully specified scenario. Throws qsl::Error on invalid input.
int RunScenario(const Scenario& scenario, std::ostream& out, std::ostream& err);

}  // namespace qsl::cli

#endif  // QSL_TOOLS_CLI_H_

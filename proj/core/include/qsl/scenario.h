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

// Scenario descriptors: the parameter bundle behind each CLI command, with a
// lossless JSON form so any run can be replayed from a file.

#ifndef QSL_SCENARIO_H_
#define QSL_SCENARIO_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qsl/bloch.h"
#include "qsl/cavity_jc.h"
#include "qsl/field_state.h"

namespace qsl {

enum class CommandTag { kQsl, kBrach, kCavity, kScan };
enum class OutputFormat { kCsv, kJson };

std::string_view command_name(CommandTag tag);
CommandTag parse_command(std::string_view name);
std::string_view format_name(OutputFormat format);
OutputFormat parse_format(std::string_view name);

struct QslParams {
  Vec3 axis = Vec3::UnitZ();
  Vec3 bloch = Vec3::UnitX();
  double delta = 0.0;
  double omega0 = 1.0;
  bool ml_symmetrized = false;

  friend bool operator==(const QslParams&, const QslParams&) = default;
};

struct BrachParams {
  Vec3 r1 = Vec3::UnitX();
  Vec3 r2 = Vec3::UnitY();
  double omega0 = 1.0;

  friend bool operator==(const BrachParams&, const BrachParams&) = default;
};

struct FieldSpec {
  FieldLabel label = FieldLabel::kCoherent;
  double alpha_re = 3.0;
  double alpha_im = 0.0;
  std::size_t fock_n = 0;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Defaults: g = omega0 / 20, alpha = 3 coherent field, excited qubit,
// t in [0, 100 / omega0] on 10^4 samples.
struct CavityScenario {
  CavityConfig config;
  FieldSpec field;
  Vec3 qubit = Vec3::UnitZ();
  double t_max = 100.0;
  std::size_t steps = 10000;
  std::vector<double> deltas;  // levels reported by the summary

  friend bool operator==(const CavityScenario&, const CavityScenario&) = default;
};

struct ScanParams {
  Vec3 axis = Vec3::UnitZ();
  double omega0 = 1.0;
  double theta_psi = 0.0;
  int grid = 50;

  friend bool operator==(const ScanParams&, const ScanParams&) = default;
};

using ScenarioParams =
    std::variant<QslParams, BrachParams, CavityScenario, ScanParams>;

struct Scenario {
  CommandTag command = CommandTag::kQsl;
  ScenarioParams params;
  std::string output;  // empty or "-" means stdout
  OutputFormat format = OutputFormat::kCsv;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// The tag must agree with the held parameter type.
void validate_scenario(const Scenario& scenario);

std::string scenario_to_json(const Scenario& scenario);
// Throws InvalidArgument on malformed documents.
Scenario scenario_from_json(std::string_view text);

// Cavity descriptor: {omega0, g, detuning, n_max, frame,
// field: {label, alpha_re, alpha_im}, qubit: {rx, ry, rz}, t_max, steps}.
// field.fock_n and deltas are optional extensions; missing keys take the
// CavityScenario defaults.
std::string cavity_scenario_to_json(const CavityScenario& scenario);
CavityScenario cavity_scenario_from_json(std::string_view text);

FieldState build_field(const CavityScenario& scenario);

}  // namespace qsl

#endif  // QSL_SCENARIO_H_

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

#include "qsl/scenario.h"

#include <nlohmann/json.hpp>
#include <string>

#include "qsl/errors.h"

namespace qsl {
namespace {

using nlohmann::json;

json VecToJson(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

Vec3 VecFromJson(const json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw Error(ErrorCode::kInvalidArgument, "expected a 3-element array");
  }
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

template <typename T>
void ReadIfPresent(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

json CavityToJson(const CavityScenario& s) {
  json field = {{"label", std::string(field_label_name(s.field.label))},
                {"alpha_re", s.field.alpha_re},
                {"alpha_im", s.field.alpha_im},
                {"fock_n", s.field.fock_n}};
  json j = {{"omega0", s.config.omega0},
            {"g", s.config.g},
            {"detuning", s.config.detuning},
            {"n_max", s.config.n_max},
            {"frame", std::string(frame_name(s.config.frame))},
            {"field", field},
            {"qubit", {{"rx", s.qubit.x()}, {"ry", s.qubit.y()}, {"rz", s.qubit.z()}}},
            {"t_max", s.t_max},
            {"steps", s.steps},
            {"deltas", s.deltas}};
  return j;
}

CavityScenario CavityFromJson(const json& j) {
  CavityScenario s;
  ReadIfPresent(j, "omega0", s.config.omega0);
  ReadIfPresent(j, "g", s.config.g);
  ReadIfPresent(j, "detuning", s.config.detuning);
  ReadIfPresent(j, "n_max", s.config.n_max);
  if (j.contains("frame")) s.config.frame = parse_frame(j.at("frame").get<std::string>());
  if (j.contains("field")) {
    const json& f = j.at("field");
    if (f.contains("label")) s.field.label = parse_field_label(f.at("label").get<std::string>());
    ReadIfPresent(f, "alpha_re", s.field.alpha_re);
    ReadIfPresent(f, "alpha_im", s.field.alpha_im);
    ReadIfPresent(f, "fock_n", s.field.fock_n);
  }
  if (j.contains("qubit")) {
    const json& q = j.at("qubit");
    s.qubit = Vec3(q.value("rx", 0.0), q.value("ry", 0.0), q.value("rz", 0.0));
  }
  ReadIfPresent(j, "t_max", s.t_max);
  ReadIfPresent(j, "steps", s.steps);
  ReadIfPresent(j, "deltas", s.deltas);
  return s;
}

json ParamsToJson(const ScenarioParams& params) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, QslParams>) {
          return {{"axis", VecToJson(p.axis)},
                  {"bloch", VecToJson(p.bloch)},
                  {"delta", p.delta},
                  {"omega0", p.omega0},
                  {"ml_symmetrized", p.ml_symmetrized}};
        } else if constexpr (std::is_same_v<T, BrachParams>) {
          return {{"r1", VecToJson(p.r1)},
                  {"r2", VecToJson(p.r2)},
                  {"omega0", p.omega0}};
        } else if constexpr (std::is_same_v<T, CavityScenario>) {
          return CavityToJson(p);
        } else {
          return {{"axis", VecToJson(p.axis)},
                  {"omega0", p.omega0},
                  {"theta_psi", p.theta_psi},
                  {"grid", p.grid}};
        }
      },
      params);
}

ScenarioParams ParamsFromJson(CommandTag tag, const json& j) {
  switch (tag) {
    case CommandTag::kQsl: {
      QslParams p;
      if (j.contains("axis")) p.axis = VecFromJson(j.at("axis"));
      if (j.contains("bloch")) p.bloch = VecFromJson(j.at("bloch"));
      ReadIfPresent(j, "delta", p.delta);
      ReadIfPresent(j, "omega0", p.omega0);
      ReadIfPresent(j, "ml_symmetrized", p.ml_symmetrized);
      return p;
    }
    case CommandTag::kBrach: {
      BrachParams p;
      if (j.contains("r1")) p.r1 = VecFromJson(j.at("r1"));
      if (j.contains("r2")) p.r2 = VecFromJson(j.at("r2"));
      ReadIfPresent(j, "omega0", p.omega0);
      return p;
    }
    case CommandTag::kCavity:
      return CavityFromJson(j);
    case CommandTag::kScan: {
      ScanParams p;
      if (j.contains("axis")) p.axis = VecFromJson(j.at("axis"));
      ReadIfPresent(j, "omega0", p.omega0);
      ReadIfPresent(j, "theta_psi", p.theta_psi);
      ReadIfPresent(j, "grid", p.grid);
      return p;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown command");
}

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("bad JSON: ") + e.what());
  }
}

}  // namespace

std::string_view command_name(CommandTag tag) {
  switch (tag) {
    case CommandTag::kQsl: return "qsl";
    case CommandTag::kBrach: return "brach";
    case CommandTag::kCavity: return "cavity";
    case CommandTag::kScan: return "scan";
  }
  return "qsl";
}

CommandTag parse_command(std::string_view name) {
  for (CommandTag t : {CommandTag::kQsl, CommandTag::kBrach, CommandTag::kCavity,
                       CommandTag::kScan}) {
    if (command_name(t) == name) return t;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown command '" + std::string(name) + "'");
}

std::string_view format_name(OutputFormat format) {
  return format == OutputFormat::kCsv ? "csv" : "json";
}

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown output format '" + std::string(name) + "'");
}

void validate_scenario(const Scenario& scenario) {
  const std::size_t expected = static_cast<std::size_t>(scenario.command);
  if (scenario.params.index() != expected) {
    throw Error(ErrorCode::kInvalidArgument,
                "parameters do not match command '" +
                    std::string(command_name(scenario.command)) + "'");
  }
}

std::string scenario_to_json(const Scenario& scenario) {
  validate_scenario(scenario);
  const json j = {{"command", std::string(command_name(scenario.command))},
                  {"params", ParamsToJson(scenario.params)},
                  {"output", scenario.output},
                  {"format", std::string(format_name(scenario.format))}};
  return j.dump(2);
}

Scenario scenario_from_json(std::string_view text) {
  const json j = Parse(text);
  try {
    Scenario s;
    s.command = parse_command(j.at("command").get<std::string>());
    s.params = ParamsFromJson(s.command, j.value("params", json::object()));
    s.output = j.value("output", std::string());
    s.format = parse_format(j.value("format", std::string("csv")));
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("malformed scenario: ") + e.what());
  }
}

std::string cavity_scenario_to_json(const CavityScenario& scenario) {
  return CavityToJson(scenario).dump(2);
}

CavityScenario cavity_scenario_from_json(std::string_view text) {
  const json j = Parse(text);
  try {
    return CavityFromJson(j);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("malformed cavity scenario: ") + e.what());
  }
}

FieldState build_field(const CavityScenario& scenario) {
  return make_field(scenario.field.label,
                    {scenario.field.alpha_re, scenario.field.alpha_im},
                    scenario.config.n_max, scenario.field.fock_n);
}

}  // namespace qsl

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

#include "cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "qsl/brachistochrone.h"
#include "qsl/cavity_jc.h"
#include "qsl/csv.h"
#include "qsl/errors.h"
#include "qsl/field_state.h"
#include "qsl/speed_limits.h"

namespace qsl::cli {
namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

Vec3 ToVec(const std::vector<double>& v) { return Vec3(v[0], v[1], v[2]); }

std::vector<double> FromVec(const Vec3& v) { return {v.x(), v.y(), v.z()}; }

// Optional time in units of 1/omega0.
ordered_json Scaled(const std::optional<double>& t, double omega0) {
  return t ? ordered_json(*t * omega0) : ordered_json(nullptr);
}

ordered_json Raw(const std::optional<double>& t) {
  return t ? ordered_json(*t) : ordered_json(nullptr);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool IsStdout(const std::string& path) { return path.empty() || path == "-"; }

// Writes `body` to the scenario output (file or `out`).
void Emit(const Scenario& s, std::ostream& out,
          const std::function<void(std::ostream&)>& body) {
  if (IsStdout(s.output)) {
    body(out);
    return;
  }
  std::ofstream file(s.output, std::ios::binary);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + s.output + "'");
  body(file);
}

void WriteReport(const Scenario& s, const ordered_json& report, std::ostream& out) {
  out << report.dump(2) << '\n';
  if (IsStdout(s.output)) return;
  Emit(s, out, [&](std::ostream& os) {
    if (s.format == OutputFormat::kJson) {
      os << report.dump(2) << '\n';
      return;
    }
    // One header line and one row of the scalar fields.
    std::string header, row;
    for (const auto& [key, value] : report.items()) {
      if (value.is_structured()) continue;
      header += (header.empty() ? "" : ",") + key;
      std::string cell;
      if (value.is_number()) {
        cell = format_number(value.get<double>());
      } else if (value.is_boolean()) {
        cell = value.get<bool>() ? "true" : "false";
      } else if (!value.is_null()) {
        cell = value.get<std::string>();
      }
      row += (row.empty() && header.find(',') == std::string::npos ? "" : ",") + cell;
    }
    os << header << '\n' << row << '\n';
  });
}

int RunQsl(const Scenario& s, const QslParams& p, std::ostream& out, std::ostream& err) {
  // The shift only moves the energy origin; it is needed for the ML bound
  // and leaves the other quantities unchanged.
  const HamiltonianSpec h =
      HamiltonianSpec::FromDirection(p.axis, p.omega0).with_identity_shift(true);
  const BlochVector r(p.bloch);
  const DeltaLevel delta(p.delta);
  const ReachabilityReport rep = classify(r, h, delta, p.ml_symmetrized);

  ordered_json j;
  j["reachable"] = rep.reachable;
  j["tau_exact"] = Scaled(rep.tau_exact, p.omega0);
  j["tau_mt"] = Scaled(rep.tau_mt, p.omega0);
  j["tau_ml"] = Scaled(rep.tau_ml, p.omega0);
  j["fisher"] = rep.fisher;
  j["perp_norm"] = rep.perp_norm;
  j["min_perr"] = rep.min_perr;
  j["delta"] = p.delta;
  j["omega0"] = p.omega0;
  j["ml_symmetrized"] = p.ml_symmetrized;
  j["time_unit"] = "1/omega0";
  if (p.omega0 != 1.0) {
    j["raw"] = {{"tau_exact", Raw(rep.tau_exact)},
                {"tau_mt", Raw(rep.tau_mt)},
                {"tau_ml", Raw(rep.tau_ml)}};
  }
  WriteReport(s, j, out);
  if (!rep.reachable) {
    err << "NotReachable: 1 - 2 delta = " << format_number(delta.contrast())
        << " exceeds |n x r| = " << format_number(rep.perp_norm) << '\n';
    return kExitNotReachable;
  }
  return kExitOk;
}

int RunBrach(const Scenario& s, const BrachParams& p, std::ostream& out) {
  const BrachResult res = brach_hamiltonian(BlochVector(p.r1), BlochVector(p.r2), p.omega0);
  ordered_json j;
  j["axis"] = FromVec(res.axis);
  j["T"] = res.time * p.omega0;
  j["phi12"] = res.phi12;
  j["fisher_on_path"] = res.fisher_on_path;
  j["omega0"] = p.omega0;
  j["time_unit"] = "1/omega0";
  if (p.omega0 != 1.0) j["raw"] = {{"T", res.time}};
  WriteReport(s, j, out);
  return kExitOk;
}

int RunCavity(const Scenario& s, const CavityScenario& c, std::ostream& out,
              std::ostream& err) {
  c.config.validate();
  for (double d : c.deltas) DeltaLevel{d};
  const FieldState field = build_field(c);
  const DistinguishabilitySeries series =
      perr_series(field, BlochVector(c.qubit), c.config, c.t_max, c.steps);
  const double w = c.config.omega0;

  Emit(s, out, [&](std::ostream& os) {
    if (s.format == OutputFormat::kCsv) {
      write_series_csv(os, series);
      return;
    }
    ordered_json arr = ordered_json::array();
    for (const auto& p : series.samples) arr.push_back({{"t_omega0", p.t * w}, {"p_err", p.p_err}});
    os << arr.dump() << '\n';
  });

  std::size_t argmin = 0;
  for (std::size_t i = 1; i < series.samples.size(); ++i) {
    if (series.samples[i].p_err < series.samples[argmin].p_err) argmin = i;
  }
  ordered_json summary;
  summary["min_p_err"] = series.samples[argmin].p_err;
  summary["argmin_t_omega0"] = series.samples[argmin].t * w;
  ordered_json taus = ordered_json::array();
  for (double d : c.deltas) {
    const auto tau = nonunitary_tau(series, DeltaLevel(d));
    taus.push_back({{"delta", d}, {"tau_omega0", Scaled(tau, w)}});
  }
  summary["nonunitary_tau"] = taus;
  summary["field"] = std::string(field_label_name(field.label()));
  summary["frame"] = std::string(frame_name(c.config.frame));
  summary["tail_mass"] = field.tail_mass();
  summary["steps"] = c.steps;
  summary["time_unit"] = "1/omega0";
  if (w != 1.0) summary["raw"] = {{"argmin_t", series.samples[argmin].t}};
  (IsStdout(s.output) ? err : out) << summary.dump(2) << '\n';
  return kExitOk;
}

int RunScan(const Scenario& s, const ScanParams& p, std::ostream& out) {
  const HamiltonianSpec h = HamiltonianSpec::FromDirection(p.axis, p.omega0);
  const auto ring = scan_ring(h, p.theta_psi, p.grid);
  Emit(s, out, [&](std::ostream& os) {
    if (s.format == OutputFormat::kCsv) {
      write_ring_csv(os, ring, p.omega0);
      return;
    }
    ordered_json arr = ordered_json::array();
    for (const auto& r : ring) {
      arr.push_back({{"rx", r.r.x()}, {"ry", r.r.y()}, {"rz", r.r.z()},
                     {"tau_exact", r.tau_exact * p.omega0}, {"fisher", r.fisher}});
    }
    os << arr.dump() << '\n';
  });
  return kExitOk;
}

CLI::Option* AddVector(CLI::App* app, const std::string& name,
                       std::vector<double>& v, const std::string& help) {
  return app->add_option(name, v, help)->delimiter(',')->expected(3)->allow_extra_args(false);
}

void AddOutput(CLI::App* app, Scenario& s, std::string& format) {
  app->add_option("-o,--out", s.output, "Output path ('-' or empty for stdout)");
  app->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

void SaveScenario(const Scenario& s, const std::string& path) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  f << scenario_to_json(s) << '\n';
}

}  // namespace

int RunScenario(const Scenario& scenario, std::ostream& out, std::ostream& err) {
  validate_scenario(scenario);
  switch (scenario.command) {
    case CommandTag::kQsl:
      return RunQsl(scenario, std::get<QslParams>(scenario.params), out, err);
    case CommandTag::kBrach:
      return RunBrach(scenario, std::get<BrachParams>(scenario.params), out);
    case CommandTag::kCavity:
      return RunCavity(scenario, std::get<CavityScenario>(scenario.params), out, err);
    case CommandTag::kScan:
      return RunScan(scenario, std::get<ScanParams>(scenario.params), out);
  }
  return kExitError;
}

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum speed limits and distinguishability times for qubits"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string save_path;
  app.add_option("--save-scenario", save_path,
                 "Write the resolved scenario as JSON before running");

  // qsl
  QslParams qsl;
  std::vector<double> q_axis = FromVec(qsl.axis), q_bloch = FromVec(qsl.bloch);
  Scenario q_s{CommandTag::kQsl, {}, "", OutputFormat::kJson};
  std::string q_format = "json";
  auto* q_app = app.add_subcommand("qsl", "Distinguishability time and speed-limit bounds");
  AddVector(q_app, "--axis", q_axis, "Hamiltonian axis nx,ny,nz (normalized)")->required();
  AddVector(q_app, "--bloch", q_bloch, "Bloch vector rx,ry,rz")->required();
  q_app->add_option("--delta", qsl.delta, "Target error probability in [0, 1/2]")->required();
  q_app->add_option("--omega0", qsl.omega0, "Rate omega0");
  q_app->add_flag("--ml-symmetrized", qsl.ml_symmetrized, "Use |n.r| in the ML bound");
  AddOutput(q_app, q_s, q_format);

  // brach
  BrachParams brach;
  std::vector<double> b_r1 = FromVec(brach.r1), b_r2 = FromVec(brach.r2);
  Scenario b_s{CommandTag::kBrach, {}, "", OutputFormat::kJson};
  std::string b_format = "json";
  auto* b_app = app.add_subcommand("brach", "Minimal-time Hamiltonian between two states");
  AddVector(b_app, "--r1", b_r1, "Initial Bloch vector")->required();
  AddVector(b_app, "--r2", b_r2, "Target Bloch vector")->required();
  b_app->add_option("--omega0", brach.omega0, "Rate omega0");
  AddOutput(b_app, b_s, b_format);

  // cavity
  CavityScenario cav;
  std::vector<double> c_qubit = FromVec(cav.qubit);
  std::string c_frame = "lab", c_field = "coherent", c_scenario;
  Scenario c_s{CommandTag::kCavity, {}, "", OutputFormat::kCsv};
  std::string c_format = "csv";
  auto* c_app = app.add_subcommand("cavity", "Qubit distinguishability under Jaynes-Cummings coupling");
  auto* c_file = c_app->add_option("--scenario", c_scenario, "Cavity scenario JSON file");
  auto* o_omega0 = c_app->add_option("--omega0", cav.config.omega0, "Field frequency omega0");
  auto* o_g = c_app->add_option("--g", cav.config.g, "Coupling g");
  auto* o_det = c_app->add_option("--detuning", cav.config.detuning, "Qubit detuning");
  auto* o_nmax = c_app->add_option("--n-max", cav.config.n_max, "Fock cutoff");
  auto* o_frame = c_app->add_option("--frame", c_frame, "lab or rotating")
                      ->check(CLI::IsMember({"lab", "rotating"}));
  auto* o_field = c_app->add_option("--field", c_field, "coherent, cat_even, cat_odd, e0, fock");
  auto* o_are = c_app->add_option("--alpha", cav.field.alpha_re, "Re(alpha)");
  auto* o_aim = c_app->add_option("--alpha-im", cav.field.alpha_im, "Im(alpha)");
  auto* o_fock = c_app->add_option("--fock-n", cav.field.fock_n, "Photon number for --field fock");
  auto* o_qubit = AddVector(c_app, "--qubit", c_qubit, "Initial qubit Bloch vector");
  auto* o_tmax = c_app->add_option("--t-max", cav.t_max, "Final time");
  auto* o_steps = c_app->add_option("--steps", cav.steps, "Number of samples");
  auto* o_delta = c_app->add_option("--delta", cav.deltas, "Error levels for the summary (repeatable)");
  AddOutput(c_app, c_s, c_format);

  // scan
  ScanParams scan;
  std::vector<double> s_axis = FromVec(scan.axis);
  Scenario s_s{CommandTag::kScan, {}, "", OutputFormat::kCsv};
  std::string s_format = "csv";
  auto* s_app = app.add_subcommand("scan", "Bloch-ball states that outpace a pure reference");
  AddVector(s_app, "--axis", s_axis, "Hamiltonian axis");
  s_app->add_option("--omega0", scan.omega0, "Rate omega0");
  s_app->add_option("--theta-psi", scan.theta_psi, "Polar angle of the reference")->required();
  s_app->add_option("--grid", scan.grid, "Grid resolution");
  AddOutput(s_app, s_s, s_format);

  // run
  std::string r_path;
  auto* r_app = app.add_subcommand("run", "Replay a saved scenario");
  r_app->add_option("scenario", r_path, "Scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    Scenario s;
    if (*q_app) {
      qsl.axis = ToVec(q_axis);
      qsl.bloch = ToVec(q_bloch);
      s = q_s;
      s.format = parse_format(q_format);
      s.params = qsl;
    } else if (*b_app) {
      brach.r1 = ToVec(b_r1);
      brach.r2 = ToVec(b_r2);
      s = b_s;
      s.format = parse_format(b_format);
      s.params = brach;
    } else if (*c_app) {
      CavityScenario c = cav;
      c.config.frame = parse_frame(c_frame);
      c.field.label = parse_field_label(c_field);
      c.qubit = ToVec(c_qubit);
      if (*c_file) {
        // Start from the file; flags given explicitly override it.
        c = cavity_scenario_from_json(ReadFile(c_scenario));
        if (*o_omega0) c.config.omega0 = cav.config.omega0;
        if (*o_g) c.config.g = cav.config.g;
        if (*o_det) c.config.detuning = cav.config.detuning;
        if (*o_nmax) c.config.n_max = cav.config.n_max;
        if (*o_frame) c.config.frame = parse_frame(c_frame);
        if (*o_field) c.field.label = parse_field_label(c_field);
        if (*o_are) c.field.alpha_re = cav.field.alpha_re;
        if (*o_aim) c.field.alpha_im = cav.field.alpha_im;
        if (*o_fock) c.field.fock_n = cav.field.fock_n;
        if (*o_qubit) c.qubit = ToVec(c_qubit);
        if (*o_tmax) c.t_max = cav.t_max;
        if (*o_steps) c.steps = cav.steps;
        if (*o_delta) c.deltas = cav.deltas;
      }
      s = c_s;
      s.format = parse_format(c_format);
      s.params = c;
    } else if (*s_app) {
      scan.axis = ToVec(s_axis);
      s = s_s;
      s.format = parse_format(s_format);
      s.params = scan;
    } else {
      s = scenario_from_json(ReadFile(r_path));
    }
    SaveScenario(s, save_path);
    return RunScenario(s, out, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace qsl::cli

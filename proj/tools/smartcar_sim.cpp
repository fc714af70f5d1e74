/*
 * Copyright (c) 2026 The smartcar-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// smartcar-sim: run or check a scenario against the safety controller.
//
// Exit codes: 0 clean run, 1 scenario/config error, 2 invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "smartcar/config.hpp"
#include "smartcar/scenario.hpp"
#include "smartcar/simulator.hpp"

namespace {

constexpr int kExitScenarioError = 1;
constexpr int kExitViolation = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic smart-car safety controller simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string config_path;
  std::string report_path;
  long long until_ms = -1;

  auto* run = app.add_subcommand("run", "Execute a scenario and emit the report");
  run->add_option("--scenario", scenario_path, "Scenario file")->required();
  run->add_option("--config", config_path, "Config file (defaults when omitted)");
  run->add_option("--until-ms", until_ms, "Stop time; defaults to the last event plus gps_wait_ms + 1000");
  run->add_option("--report", report_path, "Write the report here instead of stdout");

  auto* check = app.add_subcommand("check", "Parse a scenario without running it");
  check->add_option("--scenario", scenario_path, "Scenario file")->required();

  CLI11_PARSE(app, argc, argv);

  std::vector<smartcar::sim::ScenarioEvent> scenario;
  smartcar::Config config;
  try {
    scenario = smartcar::sim::load_scenario(read_file(scenario_path));
    if (!config_path.empty()) config = smartcar::load_config(read_file(config_path));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitScenarioError;
  }

  if (check->parsed()) {
    std::cout << scenario.size() << " events\n";
    return 0;
  }

  const smartcar::SimMillis last = scenario.empty() ? 0 : scenario.back().t_ms;
  if (until_ms < 0) until_ms = last + config.gps_wait_ms + 1000;
  if (until_ms < last) {
    std::cerr << "error: --until-ms " << until_ms << " is before the last event at " << last << "\n";
    return kExitScenarioError;
  }

  const auto report = smartcar::sim::run(scenario, config, until_ms);
  const auto text = smartcar::sim::serialize(report);
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << report_path << "\n";
      return kExitScenarioError;
    }
    out << text;
  }
  for (const auto& v : report.violations) std::cerr << "violation: " << v << "\n";
  return report.violations.empty() ? 0 : kExitViolation;
}

// Copyright 2026 The greedybench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREEDYBENCH_REPRO_HPP_
#define GREEDYBENCH_REPRO_HPP_

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "greedybench/serialize.hpp"

namespace greedybench {

struct Expectation {
  std::string label;
  /// Exact "p/q", or a decimal, or a bound such as "<= 1".
  std::string expected;
  std::string computed;
  /// "exact", or an absolute tolerance such as "1e-12".
  std::string tolerance;
  bool pass = false;
  std::string citation;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct ScenarioReport {
  std::string name;
  std::map<std::string, std::string> parameters;
  std::vector<Expectation> expectations;
  CsvTable csv;
  Json certificates = Json::array();

  bool passed() const;
};

using ScenarioParameters = std::map<std::string, std::string>;

struct ScenarioInfo {
  std::string name;
  std::string summary;
  /// Parameter names with their defaults.
  ScenarioParameters defaults;
};

/// The built-in registry, in run order.
const std::vector<ScenarioInfo>& scenario_registry();

/// Runs a scenario. Parameters override the defaults; unknown names or an
/// unknown scenario throw std::invalid_argument.
ScenarioReport run_scenario(const std::string& name, const ScenarioParameters& parameters = {});

Json report_to_json(const ScenarioReport& report);

/// Header row, then one line per row; fields are quoted when needed.
void write_csv(const CsvTable& table, std::ostream& out);

/// "label: computed vs expected [tolerance] PASS|FAIL" lines.
void print_report(const ScenarioReport& report, std::ostream& out);

}  // namespace greedybench

#endif  // GREEDYBENCH_REPRO_HPP_

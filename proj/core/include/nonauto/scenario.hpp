// Copyright 2026 The nonauto Authors
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

#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "nonauto/analysis.hpp"
#include "nonauto/entropy.hpp"

namespace nonauto {

inline constexpr const char* kArtifactName = "nonauto";
inline constexpr const char* kArtifactVersion = "0.1.0";

struct AnalysisSpec {
  std::string detector;
  nlohmann::json params = nlohmann::json::object();
};

/// A parsed, validated run description: the phase space, the generating
/// family, and the analyses to execute. Rationals travel as exact strings;
/// there is no floating point anywhere in a scenario.
class Scenario {
 public:
  Scenario(std::string name, Family family, std::vector<AnalysisSpec> analyses);

  const std::string& name() const { return name_; }
  const Family& family() const { return family_; }
  SpaceKind space() const { return family_.space(); }
  const std::vector<AnalysisSpec>& analyses() const { return analyses_; }

  // Scenario-level defaults, overridable per analysis or from the CLI.
  unsigned default_mesh = 16;
  unsigned default_horizon = 64;
  uint64_t seed = 0;
  size_t breakpoint_budget = OmegaChain::kDefaultBreakpointBudget;
  std::string description;
  std::string output_path;

  nlohmann::json to_json() const;

 private:
  std::string name_;
  Family family_;
  std::vector<AnalysisSpec> analyses_;
};

/// Parses and validates scenario JSON text. Throws ParseError for malformed
/// documents and ValidationError for invariant violations (bad ranges,
/// detectors inapplicable to the declared space, ...).
Scenario parse_scenario(const std::string& text);
Scenario parse_scenario_json(const nlohmann::json& j);

/// Executes the analyses in declared order. Per-analysis errors are
/// captured into the report without aborting siblings. The report is
/// byte-deterministic for a fixed scenario and seed.
nlohmann::json run_scenario(const Scenario& scenario);

std::vector<std::string> builtin_scenario_names();
Scenario builtin_scenario(const std::string& name);

std::vector<std::string> detector_names();
std::string explain_detector(const std::string& name);

/// Canonical report serialization (2-space indent, sorted keys, '\n'
/// terminated) — the byte-identity contract is over this form.
std::string report_to_string(const nlohmann::json& report);

}  // namespace nonauto

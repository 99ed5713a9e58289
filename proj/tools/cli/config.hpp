// Copyright 2026 The trajcomply Authors
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
#ifndef TRAJCOMPLY__TOOLS__CONFIG_HPP_
#define TRAJCOMPLY__TOOLS__CONFIG_HPP_

#include "trajcomply/losses.hpp"
#include "trajcomply/refine.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string_view>
#include <vector>

namespace trajcomply::cli
{

// Default sweep grid: 0 followed by five half-decade steps from 1 to 100.
std::vector<double> default_alphas();

struct RunConfig
{
  LossConfig loss;
  RefineConfig refine;
  bool per_step_average = false;
  std::vector<double> alphas = default_alphas();
};

// Config files follow the scenario JSON conventions:
//   {"loss": {...LossConfig}, "refine": {..., "weights": {"offroad", "direction",
//    "diversity"}}, "per_step_average": bool, "alphas": [...]}
// Every key is optional; unknown keys are a ValidationError.
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::filesystem::path & path);

nlohmann::json to_json(const RunConfig & cfg);

}  // namespace trajcomply::cli

#endif  // TRAJCOMPLY__TOOLS__CONFIG_HPP_

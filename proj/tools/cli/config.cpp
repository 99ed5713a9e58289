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
#include "config.hpp"

#include "trajcomply/errors.hpp"
#include "trajcomply/map_model.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <string>

namespace trajcomply::cli
{

using nlohmann::json;

std::vector<double> default_alphas()
{
  return {0.0, 1.0, std::pow(10.0, 0.5), 10.0, std::pow(10.0, 1.5), 100.0};
}

namespace
{

double as_double(const json & v, const std::string & field)
{
  if (!v.is_number()) {
    throw ValidationError(field, "expected a number");
  }
  return v.get<double>();
}

bool as_bool(const json & v, const std::string & field)
{
  if (!v.is_boolean()) {
    throw ValidationError(field, "expected a boolean");
  }
  return v.get<bool>();
}

long long as_int(const json & v, const std::string & field)
{
  if (!v.is_number_integer()) {
    throw ValidationError(field, "expected an integer");
  }
  return v.get<long long>();
}

using Handler = std::function<void(const json &, const std::string &)>;

void visit(const json & obj, const std::string & field, const std::map<std::string, Handler> & handlers)
{
  if (!obj.is_object()) {
    throw ValidationError(field, "expected an object");
  }
  for (const auto & item : obj.items()) {
    const std::string path = field.empty() ? item.key() : field + "." + item.key();
    const auto it = handlers.find(item.key());
    if (it == handlers.end()) {
      throw ValidationError(path, "unknown config key");
    }
    it->second(item.value(), path);
  }
}

}  // namespace

RunConfig parse_config(std::string_view json_text)
{
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::exception & e) {
    throw ParseError(std::string("malformed config JSON: ") + e.what());
  }

  RunConfig cfg;
  LossConfig & loss = cfg.loss;
  RefineConfig & ref = cfg.refine;
  visit(root, "", {
    {"loss", [&](const json & v, const std::string & f) {
       visit(v, f, {
         {"offroad_margin", [&](const json & x, const std::string & p) { loss.offroad_margin = as_double(x, p); }},
         {"direction_dist_margin", [&](const json & x, const std::string & p) { loss.direction_dist_margin = as_double(x, p); }},
         {"direction_angle_margin", [&](const json & x, const std::string & p) { loss.direction_angle_margin = as_double(x, p); }},
         {"feasibility_uses_margin", [&](const json & x, const std::string & p) { loss.feasibility_uses_margin = as_bool(x, p); }},
       });
     }},
    {"refine", [&](const json & v, const std::string & f) {
       visit(v, f, {
         {"alpha", [&](const json & x, const std::string & p) { ref.alpha = as_double(x, p); }},
         {"weights", [&](const json & x, const std::string & p) {
            visit(x, p, {
              {"offroad", [&](const json & w, const std::string & q) { ref.weights.offroad = as_double(w, q); }},
              {"direction", [&](const json & w, const std::string & q) { ref.weights.direction = as_double(w, q); }},
              {"diversity", [&](const json & w, const std::string & q) { ref.weights.diversity = as_double(w, q); }},
            });
          }},
         {"step_size", [&](const json & x, const std::string & p) { ref.step_size = as_double(x, p); }},
         {"max_iters", [&](const json & x, const std::string & p) { ref.max_iters = static_cast<int>(as_int(x, p)); }},
         {"step_decay", [&](const json & x, const std::string & p) { ref.step_decay = as_double(x, p); }},
         {"convergence_tol", [&](const json & x, const std::string & p) { ref.convergence_tol = as_double(x, p); }},
         {"seed", [&](const json & x, const std::string & p) {
            const long long s = as_int(x, p);
            if (s < 0) {
              throw ValidationError(p, "seed must be non-negative");
            }
            ref.seed = static_cast<std::uint64_t>(s);
          }},
         {"init_noise", [&](const json & x, const std::string & p) { ref.init_noise = as_double(x, p); }},
         {"diversity_warmup_iters", [&](const json & x, const std::string & p) { ref.diversity_warmup_iters = static_cast<int>(as_int(x, p)); }},
       });
     }},
    {"per_step_average", [&](const json & v, const std::string & f) { cfg.per_step_average = as_bool(v, f); }},
    {"alphas", [&](const json & v, const std::string & f) {
       if (!v.is_array() || v.empty()) {
         throw ValidationError(f, "expected a non-empty array of numbers");
       }
       cfg.alphas.clear();
       for (std::size_t i = 0; i < v.size(); ++i) {
         cfg.alphas.push_back(as_double(v[i], f + "[" + std::to_string(i) + "]"));
       }
     }},
  });

  try {
    cfg.loss.validate();
  } catch (const ValidationError & e) {
    throw e.prefixed("loss");
  }
  try {
    cfg.refine.validate();
  } catch (const ValidationError & e) {
    throw e.prefixed("refine");
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path & path) { return parse_config(read_text_file(path)); }

json to_json(const RunConfig & cfg)
{
  const auto & l = cfg.loss;
  const auto & r = cfg.refine;
  return json{
    {"loss",
     {{"offroad_margin", l.offroad_margin},
      {"direction_dist_margin", l.direction_dist_margin},
      {"direction_angle_margin", l.direction_angle_margin},
      {"feasibility_uses_margin", l.feasibility_uses_margin}}},
    {"refine",
     {{"alpha", r.alpha},
      {"weights", {{"offroad", r.weights.offroad}, {"direction", r.weights.direction}, {"diversity", r.weights.diversity}}},
      {"step_size", r.step_size},
      {"max_iters", r.max_iters},
      {"step_decay", r.step_decay},
      {"convergence_tol", r.convergence_tol},
      {"seed", r.seed},
      {"init_noise", r.init_noise},
      {"diversity_warmup_iters", r.diversity_warmup_iters}}},
    {"per_step_average", cfg.per_step_average},
    {"alphas", cfg.alphas}};
}

}  // namespace trajcomply::cli

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
#include "commands.hpp"

#include "config.hpp"

#include "trajcomply/errors.hpp"
#include "trajcomply/map_model.hpp"
#include "trajcomply/metrics.hpp"
#include "trajcomply/parallel.hpp"
#include "trajcomply/perturb.hpp"
#include "trajcomply/refine.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>

#ifndef TRAJCOMPLY_VERSION
#define TRAJCOMPLY_VERSION "0.0.0"
#endif

namespace trajcomply::cli
{

namespace fs = std::filesystem;
using nlohmann::json;

namespace
{

// Fatal input problem: reported with context, exit code 2.
class InputError : public Error
{
public:
  using Error::Error;
};

struct Overrides
{
  std::optional<double> offroad_margin;
  std::optional<double> direction_dist_margin;
  std::optional<double> direction_angle_margin;
  std::optional<bool> feasibility_uses_margin;
  std::optional<double> alpha;
  std::optional<double> w_off;
  std::optional<double> w_dir;
  std::optional<double> w_div;
  std::optional<double> step_size;
  std::optional<int> max_iters;
  std::optional<double> step_decay;
  std::optional<double> convergence_tol;
  std::optional<std::uint64_t> seed;
  std::optional<double> init_noise;
  std::optional<int> diversity_warmup;
  std::optional<bool> per_step_average;
};

struct Options
{
  std::string scenes;
  std::string predictions;
  std::string config;
  std::string out;
  std::string alphas;
  double angle_deg = 0.0;
  double distance = 10.0;
  double arc = 10.0;
  int jobs = 0;
  Overrides over;
};

std::string fmt(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void add_config_options(CLI::App * cmd, Options & o)
{
  cmd->add_option("--config", o.config, "JSON config file (loss/refine settings)");
  cmd->add_option("--jobs", o.jobs, "Worker threads (0 = hardware concurrency)");
  auto & v = o.over;
  cmd->add_option("--offroad-margin", v.offroad_margin, "Offroad margin m (meters)");
  cmd->add_option("--direction-dist-margin", v.direction_dist_margin, "Direction distance margin m_d (meters)");
  cmd->add_option("--direction-angle-margin", v.direction_angle_margin, "Direction angle margin m_theta (radians)");
  cmd->add_flag("--feasibility-uses-margin,!--no-feasibility-uses-margin", v.feasibility_uses_margin, "Diversity feasibility uses the offroad margin");
  cmd->add_flag("--per-step-average,!--no-per-step-average", v.per_step_average, "Report Offroad/Direction averaged over steps");
  cmd->add_option("--w-off", v.w_off, "Offroad weight in the auxiliary loss");
  cmd->add_option("--w-dir", v.w_dir, "Direction weight in the auxiliary loss");
  cmd->add_option("--w-div", v.w_div, "Diversity weight in the auxiliary loss");
  cmd->add_option("--step-size", v.step_size, "Initial step size (meters per unit gradient)");
  cmd->add_option("--max-iters", v.max_iters, "Maximum refinement iterations");
  cmd->add_option("--step-decay", v.step_decay, "Multiplicative step decay per iteration");
  cmd->add_option("--convergence-tol", v.convergence_tol, "Stop when |delta L_final| falls below this");
  cmd->add_option("--seed", v.seed, "Seed for initial-noise perturbation");
  cmd->add_option("--init-noise", v.init_noise, "Std-dev (m) of Gaussian noise added before refining");
  cmd->add_option("--diversity-warmup", v.diversity_warmup, "Iteration at which the diversity weight switches on");
}

RunConfig resolve_config(const Options & o)
{
  RunConfig cfg = o.config.empty() ? RunConfig{} : load_config(o.config);
  const auto & v = o.over;
  auto set = [](auto & dst, const auto & src) {
    if (src) {
      dst = *src;
    }
  };
  set(cfg.loss.offroad_margin, v.offroad_margin);
  set(cfg.loss.direction_dist_margin, v.direction_dist_margin);
  set(cfg.loss.direction_angle_margin, v.direction_angle_margin);
  set(cfg.loss.feasibility_uses_margin, v.feasibility_uses_margin);
  set(cfg.per_step_average, v.per_step_average);
  set(cfg.refine.alpha, v.alpha);
  set(cfg.refine.weights.offroad, v.w_off);
  set(cfg.refine.weights.direction, v.w_dir);
  set(cfg.refine.weights.diversity, v.w_div);
  set(cfg.refine.step_size, v.step_size);
  set(cfg.refine.max_iters, v.max_iters);
  set(cfg.refine.step_decay, v.step_decay);
  set(cfg.refine.convergence_tol, v.convergence_tol);
  set(cfg.refine.seed, v.seed);
  set(cfg.refine.init_noise, v.init_noise);
  set(cfg.refine.diversity_warmup_iters, v.diversity_warmup);
  if (!o.alphas.empty()) {
    cfg.alphas.clear();
    std::stringstream ss(o.alphas);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        cfg.alphas.push_back(std::stod(tok, &used));
        if (used != tok.size()) {
          throw std::invalid_argument(tok);
        }
      } catch (const std::exception &) {
        throw ValidationError("--alphas", "cannot parse '" + tok + "' as a number");
      }
    }
    if (cfg.alphas.empty()) {
      throw ValidationError("--alphas", "no values given");
    }
  }
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
  for (double a : cfg.alphas) {
    if (!std::isfinite(a) || a < 0.0) {
      throw ValidationError("alphas", "every alpha must be finite and >= 0");
    }
  }
  return cfg;
}

int jobs_of(const Options & o)
{
  if (o.jobs > 0) {
    return o.jobs;
  }
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

struct LoadedScene
{
  fs::path file;
  Scene scene;
};

// Loads every *.json file in `dir` (names starting with '_' are run metadata and
// skipped), sorted by scene id.
std::vector<LoadedScene> load_scenes(const std::string & dir)
{
  if (dir.empty()) {
    throw InputError("--scenes is required");
  }
  if (!fs::is_directory(dir)) {
    throw InputError("scene directory not found: " + dir);
  }
  std::vector<fs::path> files;
  for (const auto & entry : fs::directory_iterator(dir)) {
    const auto & p = entry.path();
    if (entry.is_regular_file() && p.extension() == ".json" && p.filename().string().front() != '_') {
      files.push_back(p);
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw InputError("no scenario files in " + dir);
  }
  std::vector<LoadedScene> scenes;
  std::string problems;
  for (const auto & f : files) {
    try {
      scenes.push_back({f, load_scene(f)});
    } catch (const Error & e) {
      problems += "\n  " + f.string() + ": " + e.what();
    }
  }
  if (!problems.empty()) {
    throw InputError("invalid scenario file(s):" + problems);
  }
  std::sort(scenes.begin(), scenes.end(), [](const LoadedScene & a, const LoadedScene & b) {
    return a.scene.id < b.scene.id;
  });
  for (std::size_t i = 1; i < scenes.size(); ++i) {
    if (scenes[i].scene.id == scenes[i - 1].scene.id) {
      throw InputError(
        "duplicate scene id '" + scenes[i].scene.id + "' in " + scenes[i - 1].file.string() + " and " +
        scenes[i].file.string());
    }
  }
  return scenes;
}

// Scenes paired with their predictions; ids present on only one side are listed.
struct Matched
{
  std::vector<const Scene *> scenes;
  std::vector<PredictionSet> predictions;
  std::vector<std::string> unknown_ids;   // predictions without a scene
  std::vector<std::string> missing_ids;   // scenes without predictions
};

Matched match(const std::vector<LoadedScene> & scenes, const std::string & predictions_path)
{
  if (predictions_path.empty()) {
    throw InputError("--predictions is required");
  }
  PredictionMap preds;
  try {
    preds = load_predictions(predictions_path);
  } catch (const Error & e) {
    throw InputError(predictions_path + ": " + e.what());
  }
  Matched m;
  std::map<std::string, const Scene *> by_id;
  for (const auto & s : scenes) {
    by_id.emplace(s.scene.id, &s.scene);
  }
  for (const auto & [id, set] : preds) {
    if (!by_id.count(id)) {
      m.unknown_ids.push_back(id);
    }
  }
  for (const auto & [id, scene] : by_id) {
    auto it = preds.find(id);
    if (it == preds.end()) {
      m.missing_ids.push_back(id);
      continue;
    }
    PredictionMap one;
    one.emplace(id, std::move(it->second));
    try {
      bind_predictions(one, {{id, scene}});
    } catch (const Error & e) {
      throw InputError(predictions_path + ": " + e.what());
    }
    m.scenes.push_back(scene);
    m.predictions.push_back(std::move(one.begin()->second));
  }
  if (m.scenes.empty()) {
    throw InputError("no prediction ids match the scene corpus");
  }
  return m;
}

json manifest(const std::string & command, const RunConfig & cfg, const Options & o, json extra = json::object())
{
  json inputs = json::object();
  inputs["scenes"] = o.scenes;
  if (!o.predictions.empty()) {
    inputs["predictions"] = o.predictions;
  }
  inputs["config"] = o.config.empty() ? json(nullptr) : json(o.config);
  json m{
    {"command", command},
    {"tool", "trajcomply"},
    {"version", TRAJCOMPLY_VERSION},
    {"config", to_json(cfg)},
    {"inputs", std::move(inputs)}};
  for (auto & item : extra.items()) {
    m[item.key()] = item.value();
  }
  return m;
}

fs::path prepare_out(const Options & o)
{
  if (o.out.empty()) {
    throw InputError("--out is required");
  }
  fs::create_directories(o.out);
  return o.out;
}

void write_json(const fs::path & path, const json & j) { write_text_file(path, j.dump(2) + "\n"); }

void write_timing(const fs::path & out, const std::string & command, std::chrono::steady_clock::time_point start)
{
  const double secs =
    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_json(out / "_timing.json", json{{"command", command}, {"wall_clock_seconds", secs}});
}

json scene_report_json(const SceneReport & r)
{
  return json{
    {"id", r.id},           {"minADE", r.min_ade},       {"ade_winner", r.ade_winner},
    {"minFDE", r.min_fde},  {"fde_winner", r.fde_winner}, {"miss", r.miss},
    {"offroad", r.offroad}, {"direction", r.direction},   {"diversity", r.diversity}};
}

void report_mismatch(const Matched & m, std::ostream & err)
{
  auto list = [&](const char * what, const std::vector<std::string> & ids) {
    if (ids.empty()) {
      return;
    }
    err << what << ":";
    for (const auto & id : ids) {
      err << " " << id;
    }
    err << "\n";
  };
  list("prediction ids without a scene", m.unknown_ids);
  list("scenes without predictions", m.missing_ids);
}

struct Failure
{
  std::string id;
  std::string error;
};

json failures_json(const std::vector<Failure> & failures)
{
  json arr = json::array();
  for (const auto & f : failures) {
    arr.push_back(json{{"id", f.id}, {"error", f.error}});
  }
  return arr;
}

int cmd_evaluate(const Options & o, std::ostream & out, std::ostream & err)
{
  const auto start = std::chrono::steady_clock::now();
  const RunConfig cfg = resolve_config(o);
  const auto scenes = load_scenes(o.scenes);
  const Matched m = match(scenes, o.predictions);
  const fs::path dir = prepare_out(o);

  const MetricsConfig mcfg{cfg.loss, cfg.per_step_average};
  std::vector<std::optional<SceneReport>> slots(m.scenes.size());
  std::vector<std::string> errors(m.scenes.size());
  parallel_for(m.scenes.size(), jobs_of(o), [&](std::size_t i) {
    try {
      slots[i] = evaluate_scene(m.predictions[i], *m.scenes[i], mcfg);
    } catch (const Error & e) {
      errors[i] = e.what();
    }
  });

  std::vector<SceneReport> reports;
  std::vector<Failure> failures;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i]) {
      reports.push_back(*slots[i]);
    } else {
      failures.push_back({m.scenes[i]->id, errors[i]});
    }
  }
  if (reports.empty()) {
    throw InputError("every scene failed to evaluate");
  }
  const CorpusReport corpus = aggregate(std::move(reports));

  json scenes_json = json::array();
  std::string csv = "id,minADE,minFDE,miss,offroad,direction,diversity\n";
  for (const auto & r : corpus.scenes) {
    scenes_json.push_back(scene_report_json(r));
    csv += r.id + "," + fmt(r.min_ade) + "," + fmt(r.min_fde) + "," + (r.miss ? "1" : "0") + "," +
           fmt(r.offroad) + "," + fmt(r.direction) + "," + fmt(r.diversity) + "\n";
  }
  json report{
    {"manifest", manifest("evaluate", cfg, o)},
    {"summary",
     {{"scene_count", corpus.scene_count},
      {"minADE", corpus.min_ade},
      {"minFDE", corpus.min_fde},
      {"MR", corpus.miss_rate},
      {"offroad", corpus.offroad},
      {"direction", corpus.direction},
      {"diversity", corpus.diversity}}},
    {"scenes", std::move(scenes_json)},
    {"unknown_prediction_ids", m.unknown_ids},
    {"scenes_without_predictions", m.missing_ids},
    {"failures", failures_json(failures)}};
  write_json(dir / "report.json", report);
  write_text_file(dir / "report.csv", csv);
  write_timing(dir, "evaluate", start);

  out << "evaluated " << corpus.scene_count << " scene(s): minADE " << fmt(corpus.min_ade) << ", MR "
      << fmt(corpus.miss_rate) << ", offroad " << fmt(corpus.offroad) << "\n";
  report_mismatch(m, err);
  for (const auto & f : failures) {
    err << "scene " << f.id << ": " << f.error << "\n";
  }
  const bool partial = !m.unknown_ids.empty() || !m.missing_ids.empty() || !failures.empty();
  return partial ? kExitPartialFailure : kExitOk;
}

json record_json(const TraceRecord & r)
{
  return json{
    {"iteration", r.iteration}, {"L_original", r.original}, {"offroad", r.offroad},
    {"direction", r.direction}, {"diversity", r.diversity}, {"L_aux", r.aux},
    {"L_final", r.final_loss}};
}

int cmd_refine(const Options & o, std::ostream & out, std::ostream & err)
{
  const auto start = std::chrono::steady_clock::now();
  const RunConfig cfg = resolve_config(o);
  const auto scenes = load_scenes(o.scenes);
  const Matched m = match(scenes, o.predictions);
  const fs::path dir = prepare_out(o);
  fs::create_directories(dir / "traces");

  std::vector<std::optional<RefineTrace>> traces(m.scenes.size());
  std::vector<std::string> errors(m.scenes.size());
  parallel_for(m.scenes.size(), jobs_of(o), [&](std::size_t i) {
    try {
      traces[i] = refine(m.predictions[i], *m.scenes[i], cfg.loss, cfg.refine);
    } catch (const Error & e) {
      errors[i] = e.what();
    }
  });

  const MetricsConfig mcfg{cfg.loss, cfg.per_step_average};
  PredictionMap refined;
  json scenes_json = json::array();
  std::vector<Failure> failures;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    const Scene & scene = *m.scenes[i];
    if (!traces[i]) {
      failures.push_back({scene.id, errors[i]});
      continue;
    }
    const RefineTrace & tr = *traces[i];
    std::string csv = "iteration,L_original,offroad,direction,diversity,L_final\n";
    for (const auto & r : tr.records) {
      csv += std::to_string(r.iteration) + "," + fmt(r.original) + "," + fmt(r.offroad) + "," +
             fmt(r.direction) + "," + fmt(r.diversity) + "," + fmt(r.final_loss) + "\n";
    }
    write_text_file(dir / "traces" / (scene.id + ".csv"), csv);
    scenes_json.push_back(json{
      {"id", scene.id},
      {"iterations", tr.records.back().iteration},
      {"initial", record_json(tr.records.front())},
      {"final", record_json(tr.records.back())},
      {"metrics", scene_report_json(evaluate_scene(tr.final_predictions, scene, mcfg))}});
    refined.emplace(scene.id, tr.final_predictions);
  }
  if (refined.empty()) {
    throw InputError("every scene failed to refine");
  }
  save_predictions(refined, dir / "predictions.json");
  write_json(
    dir / "refine.json", json{
                           {"manifest", manifest("refine", cfg, o)},
                           {"scenes", std::move(scenes_json)},
                           {"unknown_prediction_ids", m.unknown_ids},
                           {"scenes_without_predictions", m.missing_ids},
                           {"failures", failures_json(failures)}});
  write_timing(dir, "refine", start);

  out << "refined " << refined.size() << " scene(s) at alpha " << fmt(cfg.refine.alpha) << "\n";
  report_mismatch(m, err);
  for (const auto & f : failures) {
    err << "scene " << f.id << ": " << f.error << "\n";
  }
  const bool partial = !m.unknown_ids.empty() || !m.missing_ids.empty() || !failures.empty();
  return partial ? kExitPartialFailure : kExitOk;
}

int cmd_sweep(const Options & o, std::ostream & out, std::ostream & err)
{
  const auto start = std::chrono::steady_clock::now();
  const RunConfig cfg = resolve_config(o);
  const auto scenes = load_scenes(o.scenes);
  const Matched m = match(scenes, o.predictions);
  const fs::path dir = prepare_out(o);

  std::vector<SweepCase> cases;
  for (std::size_t i = 0; i < m.scenes.size(); ++i) {
    cases.push_back({m.scenes[i], m.predictions[i]});
  }
  const auto rows = alpha_sweep(cases, cfg.loss, cfg.refine, cfg.alphas, jobs_of(o), cfg.per_step_average);

  std::string csv = "alpha,minADE,offroad,direction,diversity\n";
  json rows_json = json::array();
  for (const auto & r : rows) {
    csv += fmt(r.alpha) + "," + fmt(r.min_ade) + "," + fmt(r.offroad) + "," + fmt(r.direction) + "," +
           fmt(r.diversity) + "\n";
    rows_json.push_back(json{
      {"alpha", r.alpha}, {"minADE", r.min_ade}, {"offroad", r.offroad}, {"direction", r.direction},
      {"diversity", r.diversity}});
  }
  write_text_file(dir / "sweep.csv", csv);
  write_json(
    dir / "sweep.json", json{
                          {"manifest", manifest("sweep", cfg, o)},
                          {"scene_count", cases.size()},
                          {"rows", std::move(rows_json)},
                          {"unknown_prediction_ids", m.unknown_ids},
                          {"scenes_without_predictions", m.missing_ids}});
  write_timing(dir, "sweep", start);

  out << "swept " << rows.size() << " alpha value(s) over " << cases.size() << " scene(s)\n";
  report_mismatch(m, err);
  const bool partial = !m.unknown_ids.empty() || !m.missing_ids.empty();
  return partial ? kExitPartialFailure : kExitOk;
}

int cmd_perturb(const Options & o, std::ostream & out, std::ostream & err)
{
  const auto start = std::chrono::steady_clock::now();
  const RunConfig cfg = resolve_config(o);
  const TurnSpec spec{o.distance, o.angle_deg * kPi / 180.0, o.arc};
  spec.validate();
  const auto scenes = load_scenes(o.scenes);
  const fs::path dir = prepare_out(o);

  std::vector<std::optional<Scene>> perturbed(scenes.size());
  std::vector<std::string> errors(scenes.size());
  parallel_for(scenes.size(), jobs_of(o), [&](std::size_t i) {
    try {
      perturbed[i] = apply_turn(scenes[i].scene, spec);
    } catch (const Error & e) {
      errors[i] = e.what();
    }
  });

  std::vector<Failure> failures;
  json written = json::array();
  for (std::size_t i = 0; i < scenes.size(); ++i) {
    if (!perturbed[i]) {
      failures.push_back({scenes[i].scene.id, errors[i]});
      continue;
    }
    const fs::path name = scenes[i].file.filename();
    save_scene(*perturbed[i], dir / name);
    written.push_back(name.string());
  }
  if (written.empty()) {
    throw InputError("no scene could be perturbed");
  }
  json turn{
    {"angle_deg", o.angle_deg}, {"turn_angle_rad", spec.turn_angle}, {"trigger_distance", spec.trigger_distance},
    {"arc_length", spec.arc_length}};
  write_json(
    dir / "_manifest.json", json{
                              {"manifest", manifest("perturb", cfg, o, json{{"turn", turn}})},
                              {"scenes", std::move(written)},
                              {"failures", failures_json(failures)}});
  write_timing(dir, "perturb", start);

  out << "perturbed " << (scenes.size() - failures.size()) << " scene(s)\n";
  for (const auto & f : failures) {
    err << "scene " << f.id << ": " << f.error << "\n";
  }
  return failures.empty() ? kExitOk : kExitPartialFailure;
}

}  // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Map-compliance losses, metrics, refinement and scene perturbation for trajectory predictions",
               "trajcomply"};
  app.require_subcommand(1);
  Options o;

  auto * evaluate = app.add_subcommand("evaluate", "Score predictions against a scenario corpus");
  evaluate->add_option("--scenes", o.scenes, "Directory of scenario JSON files")->required();
  evaluate->add_option("--predictions", o.predictions, "Predictions JSON file")->required();
  evaluate->add_option("--out", o.out, "Output directory")->required();
  add_config_options(evaluate, o);

  auto * refine_cmd = app.add_subcommand("refine", "Refine predictions by gradient descent on L_final");
  refine_cmd->add_option("--scenes", o.scenes, "Directory of scenario JSON files")->required();
  refine_cmd->add_option("--predictions", o.predictions, "Predictions JSON file")->required();
  refine_cmd->add_option("--out", o.out, "Output directory")->required();
  refine_cmd->add_option("--alpha", o.over.alpha, "Auxiliary loss weight alpha");
  add_config_options(refine_cmd, o);

  auto * sweep = app.add_subcommand("sweep", "Refine at several alpha values and tabulate metrics");
  sweep->add_option("--scenes", o.scenes, "Directory of scenario JSON files")->required();
  sweep->add_option("--predictions", o.predictions, "Predictions JSON file")->required();
  sweep->add_option("--out", o.out, "Output directory")->required();
  sweep->add_option("--alphas", o.alphas, "Comma-separated alpha values");
  add_config_options(sweep, o);

  auto * perturb = app.add_subcommand("perturb", "Inject a turn into the road ahead of the ego agent");
  perturb->add_option("--scenes", o.scenes, "Directory of scenario JSON files")->required();
  perturb->add_option("--out", o.out, "Output directory for perturbed scenes")->required();
  perturb->add_option("--angle", o.angle_deg, "Turn angle in degrees (positive = left)")->required();
  perturb->add_option("--distance", o.distance, "Trigger distance ahead of the ego (m)");
  perturb->add_option("--arc", o.arc, "Arc length over which the turn ramps in (m)");
  add_config_options(perturb, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError & e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (evaluate->parsed()) {
      return cmd_evaluate(o, out, err);
    }
    if (refine_cmd->parsed()) {
      return cmd_refine(o, out, err);
    }
    if (sweep->parsed()) {
      return cmd_sweep(o, out, err);
    }
    return cmd_perturb(o, out, err);
  } catch (const Error & e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const fs::filesystem_error & e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace trajcomply::cli

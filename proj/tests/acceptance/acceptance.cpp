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
// Acceptance suite: one PASS/FAIL line per headline criterion. Exit status is
// non-zero when any criterion fails.
#include "commands.hpp"
#include "corridor.hpp"
#include "fixtures.hpp"
#include "gradcheck.hpp"
#include "oracles.hpp"

#include "trajcomply/geometry.hpp"
#include "trajcomply/losses.hpp"
#include "trajcomply/metrics.hpp"
#include "trajcomply/perturb.hpp"
#include "trajcomply/refine.hpp"

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#ifndef TRAJCOMPLY_CORRIDOR_DIR
#error "TRAJCOMPLY_CORRIDOR_DIR must point at the packaged corridor corpus"
#endif

namespace fs = std::filesystem;
using namespace trajcomply;
using testing::RandomFixture;

namespace
{

constexpr int kGradientFixtures = 50;
// Refinement strength used for the "with offroad weight" runs.
constexpr double kRefineAlpha = 10.0;

struct Outcome
{
  bool pass = false;
  std::string detail;
};

std::string fmt(const char * f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char * f, ...)
{
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof(buf), f, args);
  va_end(args);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Corpus
{
  std::vector<Scene> scenes;
  std::vector<PredictionSet> predictions;     // aligned with scenes
  std::vector<PredictionSet> straight_ahead;  // aligned with scenes
};

const Corpus & corpus()
{
  static const Corpus c = [] {
    Corpus out;
    const fs::path dir = TRAJCOMPLY_CORRIDOR_DIR;
    out.scenes = corpus::load_scene_dir(dir / "scenes");
    std::map<std::string, const Scene *> catalog;
    for (const auto & s : out.scenes) {
      catalog.emplace(s.id, &s);
    }
    auto preds = load_predictions(dir / "predictions.json", catalog);
    auto straight = load_predictions(dir / "straight_ahead.json", catalog);
    for (const auto & s : out.scenes) {
      out.predictions.push_back(preds.at(s.id));
      out.straight_ahead.push_back(straight.at(s.id));
    }
    return out;
  }();
  return c;
}

const std::vector<RandomFixture> & gradient_fixtures()
{
  static const std::vector<RandomFixture> f = [] {
    std::vector<RandomFixture> out;
    for (int i = 0; i < kGradientFixtures; ++i) {
      out.push_back(testing::random_fixture(static_cast<std::uint64_t>(i)));
    }
    return out;
  }();
  return f;
}

double mean_offroad(const std::vector<PredictionSet> & preds, const std::vector<Scene> & scenes, const LossConfig & cfg)
{
  double sum = 0.0;
  for (std::size_t i = 0; i < scenes.size(); ++i) {
    sum += offroad_loss(preds[i], scenes[i].drivable, cfg).value;
  }
  return sum / static_cast<double>(scenes.size());
}

std::vector<PredictionSet> refine_corpus(double alpha)
{
  const auto & c = corpus();
  RefineConfig rc;
  rc.alpha = alpha;
  std::vector<PredictionSet> out;
  for (std::size_t i = 0; i < c.scenes.size(); ++i) {
    out.push_back(refine(c.predictions[i], c.scenes[i], LossConfig{}, rc).final_predictions);
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome sdf_oracle()
{
  const auto t0 = std::chrono::steady_clock::now();
  testing::Rng rng(20261016);
  double max_err = 0.0;
  std::size_t sign_checked = 0;
  std::size_t sign_mismatch = 0;
  std::size_t points = 0;
  double max_spacing = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Polygon poly = testing::random_star_polygon(rng, {0.0, 0.0}, 3.0, 8.0, 3, 24);
    const DrivableArea area({poly});
    const oracle::Rings rings = oracle::rings_of(area);
    const oracle::DenseBoundarySampler dense(rings, 1000000);
    max_spacing = std::max(max_spacing, dense.max_spacing());
    for (int q = 0; q < 10000; ++q) {
      const Vec2 p{testing::uniform(rng, -10.0, 10.0), testing::uniform(rng, -10.0, 10.0)};
      const SignedDistanceResult sd = signed_distance(p, area);
      max_err = std::max(max_err, std::abs(std::abs(sd.distance) - dense.distance(p)));
      if (oracle::boundary_distance(p, rings) >= 1e-7) {
        ++sign_checked;
        const bool inside = oracle::winding_number(p, rings[0]) != 0;
        if ((sd.distance < 0.0) != inside || point_in_area(p, area) != inside) {
          ++sign_mismatch;
        }
      }
      ++points;
    }
  }
  const double secs = seconds_since(t0);
  return {
    max_err <= 1e-4 && sign_mismatch == 0 && secs < 60.0,
    fmt(
      "%zu queries on 100 polygons (1e6 boundary samples each, spacing <= %.2g m): max | |phi| - dense | = %.3g m "
      "(limit 1e-4), winding-number sign mismatches %zu/%zu, %.1f s (limit 60)",
      points, max_spacing, max_err, sign_mismatch, sign_checked, secs)};
}

Outcome gradient_suite()
{
  const auto t0 = std::chrono::steady_clock::now();
  testing::GradCheckResult off;
  testing::GradCheckResult dir;
  testing::GradCheckResult div;
  testing::GradCheckResult org;
  for (const auto & fx : gradient_fixtures()) {
    off.merge(testing::check_offroad_gradient(fx));
    dir.merge(testing::check_direction_gradient(fx));
    div.merge(testing::check_diversity_gradient(fx));
    org.merge(testing::check_original_gradient(fx));
  }
  const double secs = seconds_since(t0);
  std::string first;
  for (const auto * r : {&off, &dir, &div, &org}) {
    if (!r->failures.empty() && first.empty()) {
      first = "; first failure: " + r->failures.front();
    }
  }
  const bool nonvacuous = off.checked > 0 && dir.checked > 0 && div.checked > 0 && org.checked > 0;
  return {
    off.ok() && dir.ok() && div.ok() && org.ok() && nonvacuous && secs < 30.0,
    fmt(
      "%d fixtures, coordinates checked/skipped: offroad %zu/%zu, direction %zu/%zu, diversity %zu/%zu, "
      "original %zu/%zu; max error %.2g (limit 1e-4), %.1f s (limit 30)",
      kGradientFixtures, off.checked, off.skipped, dir.checked, dir.skipped, div.checked, div.skipped, org.checked,
      org.skipped, std::max({off.max_error, dir.max_error, div.max_error, org.max_error}), secs) +
      first};
}

Outcome loss_oracles()
{
  double worst = 0.0;
  std::size_t evaluations = 0;
  const auto check = [&](const PredictionSet & preds, const Scene & scene, const LossConfig & cfg) {
    const auto rings = oracle::rings_of(scene.drivable);
    const double off = offroad_loss(preds, scene.drivable, cfg).value;
    const double dir = direction_consistency_loss(preds, scene.centerlines, cfg, scene.ego_history().points).value;
    const auto feas = feasibility_indicator(preds, scene.drivable, cfg);
    const double div = diversity_loss(preds, feas).value;
    const double margin = cfg.feasibility_uses_margin ? cfg.offroad_margin : 0.0;
    const auto o_feas = oracle::feasible(preds, rings, margin);
    worst = std::max(worst, std::abs(off - oracle::offroad(preds, rings, cfg.offroad_margin)));
    worst = std::max(
      worst, std::abs(
               dir - oracle::direction(
                       preds, scene.centerlines, scene.ego_history().points, cfg.direction_dist_margin,
                       cfg.direction_angle_margin)));
    worst = std::max(worst, std::abs(div - oracle::diversity(preds, o_feas)));
    if (feas != o_feas) {
      worst = std::max(worst, 1.0);
    }
    ++evaluations;
  };
  for (const auto & fx : gradient_fixtures()) {
    check(fx.preds, fx.scene, fx.cfg);
  }
  const auto & c = corpus();
  for (std::size_t i = 0; i < c.scenes.size(); ++i) {
    check(c.predictions[i], c.scenes[i], LossConfig{});
    check(c.straight_ahead[i], c.scenes[i], LossConfig{});
  }
  return {
    worst <= 1e-9,
    fmt("%zu fixtures x 3 losses vs naive reimplementations: max |difference| = %.3g (limit 1e-9)", evaluations, worst)};
}

Outcome winner_takes_all()
{
  std::size_t ok = 0;
  for (const auto & fx : gradient_fixtures()) {
    if (testing::original_gradient_is_winner_only(fx.preds, fx.scene.ground_truth)) {
      ++ok;
    }
  }
  const auto n = gradient_fixtures().size();
  return {ok == n, fmt("original-loss gradient exactly zero on every non-winner mode in %zu/%zu fixtures", ok, n)};
}

Outcome refiner_efficacy()
{
  const auto t0 = std::chrono::steady_clock::now();
  const auto & c = corpus();
  const LossConfig cfg;

  // Corpus premise: 40-100% of each scene's modes start off the road.
  double min_frac = 1.0;
  double max_frac = 0.0;
  for (std::size_t i = 0; i < c.scenes.size(); ++i) {
    const auto feas = feasibility_indicator(c.predictions[i], c.scenes[i].drivable, cfg);
    const double off = static_cast<double>(std::count(feas.begin(), feas.end(), false));
    const double frac = off / static_cast<double>(feas.size());
    min_frac = std::min(min_frac, frac);
    max_frac = std::max(max_frac, frac);
  }
  const double initial = mean_offroad(c.predictions, c.scenes, cfg);
  const double with_aux = mean_offroad(refine_corpus(kRefineAlpha), c.scenes, cfg);
  const double without = mean_offroad(refine_corpus(0.0), c.scenes, cfg);
  const double red_aux = 1.0 - with_aux / initial;
  const double red_zero = 1.0 - without / initial;
  const double secs = seconds_since(t0);
  return {
    c.scenes.size() == 20 && min_frac >= 0.4 && red_aux >= 0.8 && red_zero < 0.1 && secs < 120.0,
    fmt(
      "%zu scenes, offroad mode fraction %.2f-%.2f; mean offroad %.4g -> %.4g (alpha=%g, -%.1f%%, need >=80%%), "
      "-> %.4g (alpha=0, -%.1f%%, need <10%%), %.1f s (limit 120)",
      c.scenes.size(), min_frac, max_frac, initial, with_aux, kRefineAlpha, 100.0 * red_aux, without,
      100.0 * red_zero, secs)};
}

Outcome alpha_sweep_shape()
{
  const auto & c = corpus();
  std::vector<SweepCase> cases;
  for (std::size_t i = 0; i < c.scenes.size(); ++i) {
    cases.push_back({&c.scenes[i], c.predictions[i]});
  }
  const std::vector<double> alphas{0.0, 1.0, std::pow(10.0, 0.5), 10.0, std::pow(10.0, 1.5), 100.0};
  const auto rows = alpha_sweep(cases, LossConfig{}, RefineConfig{}, alphas, 1);
  double min_ade_other = rows[1].min_ade;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    min_ade_other = std::min(min_ade_other, rows[k].min_ade);
  }
  const bool targeted = rows.back().offroad < rows.front().offroad;
  const bool accuracy = rows.front().min_ade <= min_ade_other + 1e-6;
  std::string table;
  for (const auto & r : rows) {
    table += fmt(" [%.4g: minADE %.6g, offroad %.4g]", r.alpha, r.min_ade, r.offroad);
  }
  return {targeted && accuracy, "offroad(alpha max) < offroad(0) and minADE(0) minimal within 1e-6:" + table};
}

Outcome diversity_filter()
{
  std::size_t cases = 0;
  std::size_t unchanged = 0;
  std::size_t changed_without_filter = 0;
  const auto check = [&](const PredictionSet & preds, const Scene & scene, const LossConfig & cfg) {
    const auto feas = feasibility_indicator(preds, scene.drivable, cfg);
    const double before = diversity_loss(preds, feas).value;
    // A mode parked well outside every polygon's bounding box.
    double max_x = -1e300;
    for (const auto & e : scene.drivable.edges()) {
      max_x = std::max({max_x, e.a.x, e.b.x});
    }
    PredictionSet extended = preds;
    Trajectory off = preds.modes.front();
    for (auto & p : off.points) {
      p.x += max_x - p.x + 50.0;
    }
    extended.modes.push_back(off);
    const auto feas2 = feasibility_indicator(extended, scene.drivable, cfg);
    const double after = diversity_loss(extended, feas2).value;
    const double unfiltered = diversity_loss(extended, std::vector<bool>(extended.modes.size(), true)).value;
    const double unfiltered_before = diversity_loss(preds, std::vector<bool>(preds.modes.size(), true)).value;
    ++cases;
    if (after == before && !feas2.back()) {
      ++unchanged;
    }
    if (unfiltered != after && unfiltered != unfiltered_before) {
      ++changed_without_filter;
    }
  };
  for (const auto & fx : gradient_fixtures()) {
    check(fx.preds, fx.scene, fx.cfg);
  }
  const auto & c = corpus();
  for (std::size_t i = 0; i < c.scenes.size(); ++i) {
    check(c.predictions[i], c.scenes[i], LossConfig{});
  }
  return {
    unchanged == cases && changed_without_filter == cases,
    fmt(
      "offroad mode added: value bit-identical in %zu/%zu fixtures; with the filter removed it changes in %zu/%zu",
      unchanged, cases, changed_without_filter, cases)};
}

Outcome perturbation_robustness()
{
  const auto & c = corpus();
  const LossConfig cfg;
  RefineConfig rc;
  rc.alpha = kRefineAlpha;
  std::size_t zero_on_original = 0;
  std::size_t positive_on_perturbed = 0;
  std::size_t perturbed_count = 0;
  // Predictions refined on the original map, for reference only: they cannot
  // anticipate a bend they never saw.
  const auto refined_on_original = refine_corpus(kRefineAlpha);
  double rerefined_sum = 0.0;
  double unrefined_sum = 0.0;
  double stale_sum = 0.0;
  for (std::size_t i = 0; i < c.scenes.size(); ++i) {
    if (offroad_loss(c.straight_ahead[i], c.scenes[i].drivable, cfg).value == 0.0) {
      ++zero_on_original;
    }
    for (double deg : {60.0, -60.0}) {
      const Scene p = apply_turn(c.scenes[i], TurnSpec{10.0, deg * kPi / 180.0, 10.0});
      ++perturbed_count;
      if (offroad_loss(c.straight_ahead[i], p.drivable, cfg).value > 0.0) {
        ++positive_on_perturbed;
      }
      // Refinement reads the map it is given, like a model trained with the offroad term.
      const auto rerefined = refine(c.predictions[i], p, cfg, rc).final_predictions;
      rerefined_sum += offroad_loss(rerefined, p.drivable, cfg).value;
      unrefined_sum += offroad_loss(c.predictions[i], p.drivable, cfg).value;
      stale_sum += offroad_loss(refined_on_original[i], p.drivable, cfg).value;
    }
  }
  const double n = static_cast<double>(perturbed_count);
  return {
    zero_on_original == c.scenes.size() && positive_on_perturbed == perturbed_count && rerefined_sum < unrefined_sum,
    fmt(
      "straight-ahead offroad zero on %zu/%zu originals, positive on %zu/%zu +-60 deg/10 m perturbed scenes; "
      "mean perturbed offroad: refined on the perturbed map %.4g < unrefined %.4g "
      "(refined on the original map, not gated: %.4g)",
      zero_on_original, c.scenes.size(), positive_on_perturbed, perturbed_count, rerefined_sum / n,
      unrefined_sum / n, stale_sum / n)};
}

std::map<std::string, std::string> read_tree(const fs::path & dir)
{
  std::map<std::string, std::string> files;
  for (const auto & e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().filename() != "_timing.json") {
      files[fs::relative(e.path(), dir).string()] = read_text_file(e.path());
    }
  }
  return files;
}

Outcome determinism()
{
  const fs::path corpus_dir = TRAJCOMPLY_CORRIDOR_DIR;
  const fs::path root = fs::temp_directory_path() / "trajcomply_acceptance_determinism";
  fs::remove_all(root);
  const std::string scenes = (corpus_dir / "scenes").string();
  const std::string preds = (corpus_dir / "predictions.json").string();
  std::vector<std::string> diffs;
  std::size_t files = 0;
  bool exit_ok = true;
  for (const std::string cmd : {"evaluate", "refine", "sweep"}) {
    std::map<std::string, std::string> runs[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = root / (cmd + std::to_string(run));
      std::vector<std::string> args{cmd, "--scenes", scenes, "--predictions", preds, "--out", out.string(),
                                    "--seed", "5", "--jobs", run == 0 ? "1" : "3"};
      if (cmd == "refine") {
        args.insert(args.end(), {"--alpha", "10", "--init-noise", "0.05"});
      }
      std::ostringstream sout;
      std::ostringstream serr;
      exit_ok = exit_ok && cli::run(args, sout, serr) == 0;
      runs[run] = read_tree(out);
    }
    files += runs[0].size();
    if (runs[0] != runs[1]) {
      diffs.push_back(cmd);
    }
  }
  fs::remove_all(root);
  std::string detail = fmt("evaluate/refine/sweep run twice (jobs 1 vs 3, seed 5): %zu report files compared", files);
  if (!diffs.empty()) {
    detail += ", differing:";
    for (const auto & d : diffs) {
      detail += " " + d;
    }
  } else {
    detail += ", all byte-identical";
  }
  return {diffs.empty() && exit_ok && files > 0, detail};
}

}  // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
    {"SDF oracle", sdf_oracle},
    {"Gradient suite", gradient_suite},
    {"Loss-value oracles", loss_oracles},
    {"Winner-takes-all gradient", winner_takes_all},
    {"Refiner efficacy", refiner_efficacy},
    {"Alpha-sweep shape", alpha_sweep_shape},
    {"Diversity filter", diversity_filter},
    {"Perturbation robustness", perturbation_robustness},
    {"Determinism", determinism},
  };
  int failed = 0;
  for (const auto & [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception & e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}

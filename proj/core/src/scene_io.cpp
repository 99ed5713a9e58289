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
#include "trajcomply/errors.hpp"
#include "trajcomply/map_model.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace trajcomply
{

using nlohmann::json;

namespace
{

std::string sub(const std::string & parent, std::size_t i)
{
  return parent + "[" + std::to_string(i) + "]";
}

const json & require(const json & obj, const char * key)
{
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ValidationError(key, "missing required field");
  }
  return *it;
}

const json & require_array(const json & v, const std::string & field)
{
  if (!v.is_array()) {
    throw ValidationError(field, "expected an array");
  }
  return v;
}

double to_double(const json & v, const std::string & field)
{
  if (!v.is_number()) {
    throw ValidationError(field, "expected a number");
  }
  const double d = v.get<double>();
  if (!std::isfinite(d)) {
    throw ValidationError(field, "number is not finite");
  }
  return d;
}

Vec2 to_point(const json & v, const std::string & field)
{
  if (!v.is_array() || v.size() != 2) {
    throw ValidationError(field, "expected a point [x, y]");
  }
  return {to_double(v[0], field + "[0]"), to_double(v[1], field + "[1]")};
}

std::vector<Vec2> to_points(const json & v, const std::string & field)
{
  require_array(v, field);
  std::vector<Vec2> pts;
  pts.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    pts.push_back(to_point(v[i], sub(field, i)));
  }
  return pts;
}

json from_points(const std::vector<Vec2> & pts)
{
  json arr = json::array();
  for (const auto & p : pts) {
    arr.push_back(json::array({p.x, p.y}));
  }
  return arr;
}

json parse_json(std::string_view text)
{
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception & e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Scene scene_from_json(const json & root)
{
  if (!root.is_object()) {
    throw ValidationError("", "scenario root must be an object");
  }
  static const std::set<std::string> known{"id",           "dt",          "horizon",     "histories",
                                           "drivable_area", "centerlines", "ground_truth"};
  for (const auto & item : root.items()) {
    if (!known.count(item.key())) {
      throw ValidationError(item.key(), "unknown field");
    }
  }

  const json & id = require(root, "id");
  if (!id.is_string()) {
    throw ValidationError("id", "expected a string");
  }
  const double dt = to_double(require(root, "dt"), "dt");
  const json & horizon = require(root, "horizon");
  if (!horizon.is_number_integer() || horizon.get<long long>() < 1) {
    throw ValidationError("horizon", "expected a positive integer");
  }

  std::vector<Trajectory> histories;
  const json & hist = require_array(require(root, "histories"), "histories");
  for (std::size_t a = 0; a < hist.size(); ++a) {
    histories.push_back({to_points(hist[a], sub("histories", a)), dt});
  }

  std::vector<Polygon> polygons;
  const json & area = require_array(require(root, "drivable_area"), "drivable_area");
  for (std::size_t p = 0; p < area.size(); ++p) {
    const std::string field = sub("drivable_area.polygons", p);
    auto verts = to_points(area[p], field);
    try {
      polygons.emplace_back(std::move(verts));
    } catch (const ValidationError & e) {
      throw e.prefixed(field);
    }
  }

  CenterlineSet centerlines;
  const json & cls = require_array(require(root, "centerlines"), "centerlines");
  for (std::size_t s = 0; s < cls.size(); ++s) {
    const std::string seg_field = sub("centerlines", s);
    const json & seg = require_array(cls[s], seg_field);
    CenterlineSegment segment;
    segment.reserve(seg.size());
    for (std::size_t k = 0; k < seg.size(); ++k) {
      const std::string field = sub(seg_field, k);
      if (!seg[k].is_array() || seg[k].size() != 3) {
        throw ValidationError(field, "expected a centerline point [x, y, theta]");
      }
      segment.push_back(
        {to_double(seg[k][0], field + "[0]"), to_double(seg[k][1], field + "[1]"),
         normalize_angle(to_double(seg[k][2], field + "[2]"))});
    }
    centerlines.segments.push_back(std::move(segment));
  }

  Trajectory gt{to_points(require(root, "ground_truth"), "ground_truth"), dt};

  std::optional<DrivableArea> drivable;
  try {
    drivable.emplace(std::move(polygons));
  } catch (const ValidationError & e) {
    throw e.prefixed("drivable_area");
  }

  Scene scene{
    id.get<std::string>(), dt, static_cast<std::size_t>(horizon.get<long long>()), std::move(histories),
    std::move(*drivable), std::move(centerlines), std::move(gt)};
  validate(scene);
  return scene;
}

json scene_to_json(const Scene & scene)
{
  json root = json::object();
  root["id"] = scene.id;
  root["dt"] = scene.dt;
  root["horizon"] = scene.horizon;
  json hist = json::array();
  for (const auto & h : scene.histories) {
    hist.push_back(from_points(h.points));
  }
  root["histories"] = std::move(hist);
  json area = json::array();
  for (const auto & poly : scene.drivable.polygons()) {
    area.push_back(from_points(poly.vertices()));
  }
  root["drivable_area"] = std::move(area);
  json cls = json::array();
  for (const auto & seg : scene.centerlines.segments) {
    json arr = json::array();
    for (const auto & c : seg) {
      arr.push_back(json::array({c.x, c.y, c.theta}));
    }
    cls.push_back(std::move(arr));
  }
  root["centerlines"] = std::move(cls);
  root["ground_truth"] = from_points(scene.ground_truth.points);
  return root;
}

}  // namespace

std::string read_text_file(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) {
    throw IoError("read failed: " + path.string());
  }
  return ss.str();
}

void write_text_file(const std::filesystem::path & path, std::string_view text)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open for writing: " + path.string());
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

Scene parse_scene(std::string_view json_text) { return scene_from_json(parse_json(json_text)); }

std::string serialize_scene(const Scene & scene)
{
  validate(scene);
  return scene_to_json(scene).dump(1) + "\n";
}

Scene load_scene(const std::filesystem::path & path) { return parse_scene(read_text_file(path)); }

void save_scene(const Scene & scene, const std::filesystem::path & path)
{
  write_text_file(path, serialize_scene(scene));
}

PredictionMap parse_predictions(std::string_view json_text)
{
  const json root = parse_json(json_text);
  if (!root.is_object()) {
    throw ValidationError("", "predictions root must be an object");
  }
  const json & scenes = require_array(require(root, "scenes"), "scenes");
  PredictionMap out;
  for (std::size_t i = 0; i < scenes.size(); ++i) {
    const std::string field = sub("scenes", i);
    const json & entry = scenes[i];
    if (!entry.is_object()) {
      throw ValidationError(field, "expected an object");
    }
    const auto id_it = entry.find("id");
    if (id_it == entry.end() || !id_it->is_string()) {
      throw ValidationError(field + ".id", "expected a string");
    }
    const auto modes_it = entry.find("modes");
    if (modes_it == entry.end()) {
      throw ValidationError(field + ".modes", "missing required field");
    }
    const json & modes = require_array(*modes_it, field + ".modes");
    PredictionSet set;
    for (std::size_t m = 0; m < modes.size(); ++m) {
      set.modes.push_back({to_points(modes[m], sub(field + ".modes", m)), Trajectory{}.dt});
    }
    validate(set, field);
    const std::string id = id_it->get<std::string>();
    if (!out.emplace(id, std::move(set)).second) {
      throw ValidationError(field + ".id", "duplicate scene id '" + id + "'");
    }
  }
  return out;
}

std::string serialize_predictions(const PredictionMap & predictions)
{
  json scenes = json::array();
  for (const auto & [id, set] : predictions) {
    json modes = json::array();
    for (const auto & mode : set.modes) {
      modes.push_back(from_points(mode.points));
    }
    scenes.push_back(json{{"id", id}, {"modes", std::move(modes)}});
  }
  return json{{"scenes", std::move(scenes)}}.dump(1) + "\n";
}

PredictionMap load_predictions(const std::filesystem::path & path)
{
  return parse_predictions(read_text_file(path));
}

void bind_predictions(PredictionMap & predictions, const std::map<std::string, const Scene *> & scenes)
{
  std::vector<std::string> unknown;
  for (const auto & [id, set] : predictions) {
    if (!scenes.count(id)) {
      unknown.push_back(id);
    }
  }
  if (!unknown.empty()) {
    throw UnknownSceneId(std::move(unknown));
  }
  for (auto & [id, set] : predictions) {
    const Scene & scene = *scenes.at(id);
    validate_against_horizon(set, scene.horizon, "scenes{" + id + "}");
    for (auto & mode : set.modes) {
      mode.dt = scene.dt;
    }
  }
}

PredictionMap load_predictions(
  const std::filesystem::path & path, const std::map<std::string, const Scene *> & scenes)
{
  PredictionMap preds = load_predictions(path);
  bind_predictions(preds, scenes);
  return preds;
}

void save_predictions(const PredictionMap & predictions, const std::filesystem::path & path)
{
  write_text_file(path, serialize_predictions(predictions));
}

}  // namespace trajcomply

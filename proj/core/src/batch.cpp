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
#include "trajcomply/batch.hpp"

#include "trajcomply/errors.hpp"
#include "trajcomply/parallel.hpp"

#include <string>

namespace trajcomply
{

PredictionSet unpack_predictions(std::span<const double> predictions, const BatchShape & shape, std::size_t b, double dt)
{
  PredictionSet set;
  set.modes.resize(shape.modes);
  const std::size_t stride_b = shape.modes * shape.steps * 2;
  for (std::size_t m = 0; m < shape.modes; ++m) {
    auto & mode = set.modes[m];
    mode.dt = dt;
    mode.points.resize(shape.steps);
    for (std::size_t t = 0; t < shape.steps; ++t) {
      const std::size_t base = b * stride_b + (m * shape.steps + t) * 2;
      mode.points[t] = {predictions[base], predictions[base + 1]};
    }
  }
  return set;
}

BatchResult batch_losses(
  std::span<const Scene * const> scenes, std::span<const double> predictions, const BatchShape & shape,
  const LossConfig & cfg, const AuxWeights & weights, int jobs)
{
  if (shape.batch == 0 || shape.modes == 0 || shape.steps == 0) {
    throw ShapeError("batch, mode and step dimensions must all be >= 1");
  }
  if (scenes.size() != shape.batch) {
    throw ShapeError(
      "got " + std::to_string(scenes.size()) + " scenes for batch dimension " + std::to_string(shape.batch));
  }
  if (predictions.size() != shape.element_count()) {
    throw ShapeError(
      "prediction array has " + std::to_string(predictions.size()) + " elements, shape implies " +
      std::to_string(shape.element_count()));
  }
  for (std::size_t b = 0; b < shape.batch; ++b) {
    if (scenes[b] == nullptr) {
      throw ShapeError("scene handle " + std::to_string(b) + " is null");
    }
    if (scenes[b]->horizon != shape.steps) {
      throw ShapeError(
        "scene " + scenes[b]->id + " has horizon " + std::to_string(scenes[b]->horizon) +
        ", array has " + std::to_string(shape.steps) + " steps");
    }
  }
  cfg.validate();

  BatchResult out;
  out.shape = shape;
  out.offroad.assign(shape.batch, 0.0);
  out.direction.assign(shape.batch, 0.0);
  out.diversity.assign(shape.batch, 0.0);
  out.combined.assign(shape.batch, 0.0);
  out.gradient.assign(shape.element_count(), 0.0);

  parallel_for(shape.batch, jobs, [&](std::size_t b) {
    const Scene & scene = *scenes[b];
    const PredictionSet preds = unpack_predictions(predictions, shape, b, scene.dt);
    validate(preds, "predictions[" + std::to_string(b) + "]");
    const AuxEvaluation aux = evaluate_aux(preds, scene, cfg);
    const LossValueAndGrad total = combine(aux, weights);
    out.offroad[b] = aux.offroad.value;
    out.direction[b] = aux.direction.value;
    out.diversity[b] = aux.diversity.value;
    out.combined[b] = total.value;
    const std::size_t stride_b = shape.modes * shape.steps * 2;
    for (std::size_t m = 0; m < shape.modes; ++m) {
      for (std::size_t t = 0; t < shape.steps; ++t) {
        const std::size_t base = b * stride_b + (m * shape.steps + t) * 2;
        out.gradient[base] = total.grad[m][t].x;
        out.gradient[base + 1] = total.grad[m][t].y;
      }
    }
  });
  return out;
}

}  // namespace trajcomply

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
#ifndef TRAJCOMPLY__BATCH_HPP_
#define TRAJCOMPLY__BATCH_HPP_

#include "trajcomply/losses.hpp"
#include "trajcomply/map_model.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace trajcomply
{

// Array-in/array-out loss evaluation over B scenes. Arrays are row-major float64:
// predictions and gradients have shape B x M x T x 2.
struct BatchShape
{
  std::size_t batch = 0;
  std::size_t modes = 0;
  std::size_t steps = 0;

  std::size_t element_count() const noexcept { return batch * modes * steps * 2; }
};

struct BatchResult
{
  BatchShape shape;
  std::vector<double> offroad;    // B
  std::vector<double> direction;  // B
  std::vector<double> diversity;  // B
  std::vector<double> combined;   // B
  std::vector<double> gradient;   // B x M x T x 2, gradient of `combined`
};

// Throws ShapeError when the array length disagrees with `shape`, when
// scenes.size() != shape.batch, or when T differs from a scene's horizon.
BatchResult batch_losses(
  std::span<const Scene * const> scenes, std::span<const double> predictions, const BatchShape & shape,
  const LossConfig & cfg, const AuxWeights & weights, int jobs = 1);

// Views one batch entry as a PredictionSet with the scene's dt.
PredictionSet unpack_predictions(std::span<const double> predictions, const BatchShape & shape, std::size_t b, double dt);

}  // namespace trajcomply

#endif  // TRAJCOMPLY__BATCH_HPP_

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
// Regenerates the packaged corridor corpus:
//   make_corridor_corpus <out_dir> [--scenes N] [--seed S]
#include "corridor.hpp"

#include <CLI11.hpp>

#include <exception>
#include <iostream>

int main(int argc, char ** argv)
{
  CLI::App app{"Generate the synthetic corridor corpus"};
  std::string out;
  trajcomply::corpus::CorridorOptions opt;
  app.add_option("out", out, "Output directory")->required();
  app.add_option("--scenes", opt.scene_count, "Number of scenes");
  app.add_option("--seed", opt.seed, "Generator seed");
  CLI11_PARSE(app, argc, argv);
  try {
    const auto corpus = trajcomply::corpus::make_corridor_corpus(opt);
    trajcomply::corpus::write_corpus(corpus, out);
    std::cout << "wrote " << corpus.scenes.size() << " scenes to " << out << "\n";
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

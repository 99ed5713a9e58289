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
#ifndef TRAJCOMPLY__TOOLS__COMMANDS_HPP_
#define TRAJCOMPLY__TOOLS__COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace trajcomply::cli
{

enum ExitCode : int
{
  kExitOk = 0,
  kExitInputError = 2,
  kExitPartialFailure = 3,
};

// Entry point shared by the executable and the tests. `args` excludes the program
// name, e.g. {"evaluate", "--scenes", "dir", ...}.
//
// Subcommands: evaluate | refine | sweep | perturb.
// Reports are written under --out; JSON reports embed a run manifest, and the
// wall-clock duration goes to <out>/_timing.json so reports stay reproducible.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

}  // namespace trajcomply::cli

#endif  // TRAJCOMPLY__TOOLS__COMMANDS_HPP_

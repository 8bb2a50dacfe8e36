// Copyright 2026 The SNIP Solver Authors
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

// Options shared by the four solution methods and a single entry point that
// dispatches on the method.

#ifndef SNIP_SOLVER_H_
#define SNIP_SOLVER_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "snip/branch_and_cut.h"
#include "snip/instance.h"

namespace snip {

enum class Algorithm { kDef, kCompactDef, kBenders, kPath };

// "def", "cdef", "benders", "path".
const char* AlgorithmName(Algorithm a);
std::optional<Algorithm> ParseAlgorithm(const std::string& name);

// Arc reliabilities used to find separation paths at fractional points.
enum class SigmaMode { kConvex, kPower, kBoth };

const char* SigmaModeName(SigmaMode m);
std::optional<SigmaMode> ParseSigmaMode(const std::string& name);

enum class SubproblemMethod { kDp, kLp };

struct SolveOptions {
  double gap_tolerance = 1e-4;
  double time_limit = 3600.0;
  std::int64_t node_limit = std::numeric_limits<std::int64_t>::max();
  SigmaMode sigma_mode = SigmaMode::kConvex;
  SubproblemMethod subproblem = SubproblemMethod::kDp;
  // Restrict root separation passes to scenarios that produced cuts in the
  // previous pass.
  bool scenario_list = true;
  std::int64_t root_pass_limit = 10000;
  bool record_cuts = false;

  // Engine options with the time already spent deducted.
  BranchAndCutOptions EngineOptions(double elapsed) const;
};

// Fills SolveResult::plan from the incumbent (x occupies the first |D| model
// variables in every formulation).
SolveResult Solve(const Instance& instance, Algorithm algorithm,
                  const SolveOptions& options = {});

}  // namespace snip

#endif  // SNIP_SOLVER_H_

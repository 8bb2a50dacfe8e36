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

// Best-bound branch-and-bound over binary variables with a lazy-cut callback
// invoked at every node solution whose binaries are integral.

#ifndef SNIP_BRANCH_AND_CUT_H_
#define SNIP_BRANCH_AND_CUT_H_

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "snip/linear_model.h"
#include "snip/simplex.h"

namespace snip {

enum class SolveStatus { kOptimal, kInfeasible, kLimitReached };

const char* SolveStatusName(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  // +inf without an incumbent.
  double objective = kInfinity;
  double bound = -kInfinity;
  double gap = kInfinity;
  // Model variable values of the incumbent.
  std::vector<double> values;
  // Incumbent restricted to the interdictable arcs (filled by the drivers).
  std::vector<std::uint8_t> plan;
  std::int64_t nodes = 0;
  std::array<std::int64_t, kProvenanceCount> cuts{};
  double time_total = 0.0;
  double time_cutgen = 0.0;
  double time_lp = 0.0;
  // Value after the root cutting loop (drivers) or of the root LP.
  double root_bound = -kInfinity;
  // Every cut added to the model, when BranchAndCutOptions::record_cuts.
  std::vector<Cut> emitted_cuts;

  std::int64_t total_cuts() const;
};

// (objective - bound) / max(|objective|, 1e-10), or +inf if either is not
// finite.
double RelativeGap(double objective, double bound);

struct BranchAndCutOptions {
  double gap_tolerance = 1e-4;
  double time_limit = std::numeric_limits<double>::infinity();
  std::int64_t node_limit = std::numeric_limits<std::int64_t>::max();
  double integrality_tolerance = 1e-6;
  double violation_tolerance = 1e-6;
  bool record_cuts = false;
  SimplexOptions lp;
};

// Called with the node LP solution. `is_integer` is always true in this
// engine: separation at fractional nodes is not performed.
using LazySeparator =
    std::function<std::vector<Cut>(std::span<const double> values,
                                   bool is_integer)>;

// Solves min c'x over `model` with its integer variables restricted to
// {lower..upper} (binaries here). Cuts returned by `separator` that are
// violated by more than the tolerance become global rows and the node is
// re-solved; an integral node is accepted as incumbent only when no violated
// cut comes back. `separator` may be empty. Time spent inside the separator is
// reported as time_cutgen.
SolveResult BranchAndCut(LinearModel model, const LazySeparator& separator,
                         const BranchAndCutOptions& options = {});

}  // namespace snip

#endif  // SNIP_BRANCH_AND_CUT_H_

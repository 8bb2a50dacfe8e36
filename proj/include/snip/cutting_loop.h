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

// Root LP cutting loop shared by the decomposition methods, with the
// active-unit list heuristic and duplicate suppression.

#ifndef SNIP_CUTTING_LOOP_H_
#define SNIP_CUTTING_LOOP_H_

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "snip/branch_and_cut.h"
#include "snip/linear_model.h"
#include "snip/simplex.h"

namespace snip {

// Remembers cuts by (owner, value variable, support, coefficients rounded to
// 1e-12).
class CutPool {
 public:
  // False if an identical cut was inserted before.
  bool Insert(const Cut& cut);
  std::size_t size() const { return keys_.size(); }

 private:
  std::unordered_set<std::string> keys_;
};

struct CuttingLoopOptions {
  // Shrink each pass to the units that produced cuts in the previous one.
  bool unit_list = true;
  std::int64_t pass_limit = 10000;
  double time_limit = 3600.0;
  double violation_tolerance = 1e-6;
  bool record_cuts = false;
  SimplexOptions lp;
};

struct CuttingLoopResult {
  // LP value after the last pass.
  double value = 0.0;
  std::int64_t passes = 0;
  bool time_limit_reached = false;
  double time_lp = 0.0;
  double time_cutgen = 0.0;
  std::array<std::int64_t, kProvenanceCount> cuts{};
  std::vector<Cut> emitted_cuts;
};

// Returns candidate cuts for the listed units (cut owners) at an LP point.
using UnitSeparator = std::function<std::vector<Cut>(
    std::span<const int> units, std::span<const double> values)>;

// LP-solve, separate over the active units, add violated cuts; stops when a
// pass over every unit adds nothing. Units 0..unit_count-1 are active at the
// start and whenever the list runs dry. Throws IterationLimitError after
// pass_limit passes.
CuttingLoopResult RunCuttingLoop(LinearModel& model, int unit_count,
                                 const UnitSeparator& separate, CutPool& pool,
                                 const CuttingLoopOptions& options);

// Adds the loop's time, cut counts and cuts to a branch-and-cut result and
// records the loop value as the root bound.
void AbsorbCuttingLoop(CuttingLoopResult loop, SolveResult& result);

}  // namespace snip

#endif  // SNIP_CUTTING_LOOP_H_

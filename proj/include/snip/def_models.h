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

// Extensive-form models. Both carry one block of node values pi per block
// (a scenario for the deterministic equivalent, a destination for the compact
// form) constrained by
//
//   pi_i - r_a pi_j >= 0                          a = (i,j) not in D
//   pi_i - r_a pi_j + (r_a - q_a) u_j x_a >= 0    a in D
//   pi_i - q_a pi_j >= 0                          a in D
//
// with pi_t = 1, 0 <= pi <= u, x binary under the budget row.

#ifndef SNIP_DEF_MODELS_H_
#define SNIP_DEF_MODELS_H_

#include <vector>

#include "snip/instance.h"
#include "snip/linear_model.h"
#include "snip/solver.h"

namespace snip {

struct DefModelMap {
  // Per D position.
  std::vector<int> x_var;
  // pi_var[b][i] for block b and node i.
  std::vector<std::vector<int>> pi_var;
  std::vector<NodeId> block_destination;
  // Block holding each scenario's origin value.
  std::vector<int> scenario_block;
  std::vector<int> arc_rows;
  std::vector<int> bigm_rows;
  std::vector<int> q_rows;
  int budget_row = -1;
};

struct DefModel {
  LinearModel model;
  DefModelMap map;
};

// One block per scenario.
DefModel BuildDef(const Instance& instance);
// One block per distinct destination; scenario weights on the origin values
// are summed per block.
DefModel BuildCompactDef(const Instance& instance);

// Optimal value with integrality dropped; +inf when infeasible, -inf when
// unbounded.
double LpRelaxationValue(const LinearModel& model);

SolveResult SolveDef(const Instance& instance, const SolveOptions& options = {});
SolveResult SolveCompactDef(const Instance& instance,
                            const SolveOptions& options = {});

}  // namespace snip

#endif  // SNIP_DEF_MODELS_H_

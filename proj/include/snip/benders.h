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

// Benders decomposition of the deterministic equivalent. For a fixed
// x in [0,1]^D the scenario value is
//
//   E(x) = min pi_s  s.t.  pi_i - r_a pi_j >= -(r_a - q_a) u_j x_a   (all a)
//                          pi_i - q_a pi_j >= 0                      (a in D)
//                          pi_t = 1,
//
// and any dual solution (y, z, y_t) gives theta >= y_t - sum (r_a - q_a) u_j
// y_a x_a.

#ifndef SNIP_BENDERS_H_
#define SNIP_BENDERS_H_

#include <span>
#include <utility>
#include <vector>

#include "snip/cutting_loop.h"
#include "snip/instance.h"
#include "snip/linear_model.h"
#include "snip/solver.h"

namespace snip {

// Sparse dual solution of one scenario subproblem.
struct DualPoint {
  int scenario = 0;
  double y_t = 0.0;
  std::vector<std::pair<ArcId, double>> y;
  std::vector<std::pair<ArcId, double>> z;
};

struct SubproblemResult {
  double value = 0.0;
  DualPoint point;
};

// Label-setting on pi_i = max_a max(r_a pi_j - (r_a - q_a) u_j x_a, q_a pi_j)
// and prefix products along the maximizing path. `u` is the uninterdicted
// value vector for the scenario's destination.
SubproblemResult SubproblemDp(const Instance& instance, int scenario,
                              std::span<const double> x,
                              const std::vector<double>& u);
// LP over the nodes that can reach the destination; the reference
// implementation.
SubproblemResult SubproblemLp(const Instance& instance, int scenario,
                              std::span<const double> x,
                              const std::vector<double>& u);

// Largest violation of the dual constraints (flow balance at every node and
// nonnegativity) of `point`.
double DualResidual(const Instance& instance, const DualPoint& point);

// theta_var >= y_t - sum (r_a - q_a) u_j y_a x_a, over x variables 0..|D|-1.
Cut BendersCut(const DualPoint& point, const Instance& instance,
               const std::vector<double>& u, int theta_var);

struct BendersMaster {
  LinearModel model;
  // Per scenario.
  std::vector<int> theta_var;
  CutPool pool;
};

BendersMaster BuildBendersMaster(const Instance& instance);

struct BendersRoot {
  BendersMaster master;
  CuttingLoopResult loop;
};

BendersRoot BendersRootLoop(const Instance& instance,
                            const SolveOptions& options = {});

SolveResult SolveBenders(const Instance& instance,
                         const SolveOptions& options = {});

}  // namespace snip

#endif  // SNIP_BENDERS_H_

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

// Bounded-variable revised simplex. Each row i carries a logical variable
// s_i = a_i x whose bounds encode the row sense, so the working system is
// [A -I][x; s] = 0 with every variable boxed (possibly by infinities). The
// dual method runs whenever the starting basis is dual feasible after bound
// flips (always the case for the nonnegative-cost models built here); a
// two-phase primal method handles the rest and cleans up after the dual.

#ifndef SNIP_SIMPLEX_H_
#define SNIP_SIMPLEX_H_

#include <cstdint>
#include <vector>

#include "snip/linear_model.h"

namespace snip {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

enum class VarStatus : std::int8_t { kBasic, kAtLower, kAtUpper, kFree };

// Statuses for the structural variables followed by one per row. A basis
// shorter than the model (rows added since it was taken) is extended with
// basic logicals.
struct LpBasis {
  std::vector<VarStatus> status;
  bool empty() const { return status.empty(); }
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> values;
  // d(objective)/d(rhs) per row: >= 0 on active >= rows, <= 0 on <= rows.
  std::vector<double> row_duals;
  std::vector<double> reduced_costs;
  LpBasis basis;
  std::int64_t iterations = 0;
};

struct SimplexOptions {
  double feasibility_tolerance = 1e-7;
  double optimality_tolerance = 1e-7;
  // Relative to the largest entry of the pivot row or column.
  double pivot_tolerance = 1e-7;
  // Basis updates kept in product form between refactorizations.
  int refactor_interval = 64;
  // Consecutive degenerate iterations before switching to Bland's rule.
  int degeneracy_threshold = 50;
  // 0 selects a size-dependent default. Exceeding it throws NumericalError.
  std::int64_t iteration_limit = 0;
};

// Integrality flags are ignored. Infeasible and unbounded models are reported
// through the status. Throws NumericalError on iteration limit or repeated
// basis singularity.
LpSolution SolveLp(const LinearModel& model, const LpBasis* warm_start = nullptr,
                   const SimplexOptions& options = {});

}  // namespace snip

#endif  // SNIP_SIMPLEX_H_

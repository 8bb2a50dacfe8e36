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

// Result rows for the command-line tool and the benchmark aggregation.

#ifndef SNIP_REPORT_H_
#define SNIP_REPORT_H_

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "snip/branch_and_cut.h"
#include "snip/linear_model.h"

namespace snip {

struct RunRow {
  std::string instance;
  std::string algorithm;
  // "optimal", "limit", "infeasible" or "error".
  std::string status;
  double objective = kInfinity;
  double bound = -kInfinity;
  double gap = kInfinity;
  std::int64_t nodes = 0;
  std::array<std::int64_t, kProvenanceCount> cuts{};
  double time_total = 0.0;
  double time_cutgen = 0.0;
  double time_lp = 0.0;
  // Set for "error" rows.
  std::string message;

  std::int64_t total_cuts() const;
};

RunRow MakeRow(const std::string& instance, const std::string& algorithm,
               const SolveResult& result);

// Tab-separated: instance alg status objective bound gap nodes cuts
// time_total time_cutgen time_lp. With `times` false the three time columns
// are written as "-" so output can be compared byte for byte.
std::string FormatRow(const RunRow& row, bool times = true);
std::string RowHeader();

struct Disagreement {
  std::string instance;
  std::string first;
  std::string second;
  double first_objective = 0.0;
  double second_objective = 0.0;
};

// Pairs of optimal rows on the same instance whose objectives differ by more
// than 2 * gap * max(obj, 1) + 1e-9.
std::vector<Disagreement> CheckAgreement(const std::vector<RunRow>& rows,
                                         double gap_tolerance);

// Mean time_total over solved ("optimal") rows per (group, algorithm), with
// the number of unsolved rows in parentheses. `group` maps a row to its
// table line (the budget, in the benchmark).
void WriteSummaryTable(std::ostream& out, const std::vector<RunRow>& rows,
                       const std::vector<std::string>& groups,
                       const std::vector<std::string>& algorithms);

}  // namespace snip

#endif  // SNIP_REPORT_H_

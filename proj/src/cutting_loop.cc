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

#include "snip/cutting_loop.h"

#include <chrono>
#include <iterator>
#include <cmath>
#include <numeric>
#include <set>

#include "snip/errors.h"

namespace snip {

namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

void AppendScaled(std::string& key, double v) {
  key += std::to_string(std::llround(v * 1e12));
  key += ',';
}

}  // namespace

bool CutPool::Insert(const Cut& cut) {
  std::string key = std::to_string(cut.owner) + ':' +
                    std::to_string(cut.value_var) + ':';
  AppendScaled(key, cut.constant);
  for (const Term& t : cut.terms) {
    if (std::llround(t.coef * 1e12) == 0) continue;
    key += std::to_string(t.var) + '=';
    AppendScaled(key, t.coef);
  }
  return keys_.insert(std::move(key)).second;
}

CuttingLoopResult RunCuttingLoop(LinearModel& model, int unit_count,
                                 const UnitSeparator& separate, CutPool& pool,
                                 const CuttingLoopOptions& options) {
  const auto start = Clock::now();
  CuttingLoopResult result;
  std::vector<int> all(unit_count);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> active = all;
  LpBasis basis;
  for (;;) {
    if (Seconds(start) >= options.time_limit) {
      result.time_limit_reached = true;
      break;
    }
    if (++result.passes > options.pass_limit) {
      throw IterationLimitError("root cutting loop exceeded " +
                                std::to_string(options.pass_limit) + " passes");
    }
    const auto lp_start = Clock::now();
    LpSolution lp = SolveLp(model, basis.empty() ? nullptr : &basis, options.lp);
    result.time_lp += Seconds(lp_start);
    if (lp.status != LpStatus::kOptimal) {
      throw NumericalError("root relaxation is not solvable");
    }
    basis = std::move(lp.basis);
    result.value = lp.objective;

    const auto sep_start = Clock::now();
    std::vector<Cut> cuts = separate(active, lp.values);
    result.time_cutgen += Seconds(sep_start);
    std::set<int> yielding;
    for (Cut& cut : cuts) {
      if (cut.Violation(lp.values) <= options.violation_tolerance) continue;
      if (!pool.Insert(cut)) continue;
      model.AddRow(cut.ToRow().terms, RowSense::kGreaterEqual, cut.constant);
      ++result.cuts[static_cast<int>(cut.provenance)];
      yielding.insert(cut.owner);
      if (options.record_cuts) result.emitted_cuts.push_back(std::move(cut));
    }
    if (yielding.empty()) {
      if (active.size() == all.size()) break;
      active = all;
      continue;
    }
    if (options.unit_list) active.assign(yielding.begin(), yielding.end());
  }
  return result;
}

void AbsorbCuttingLoop(CuttingLoopResult loop, SolveResult& result) {
  result.time_lp += loop.time_lp;
  result.time_cutgen += loop.time_cutgen;
  for (int p = 0; p < kProvenanceCount; ++p) result.cuts[p] += loop.cuts[p];
  if (!loop.emitted_cuts.empty()) {
    loop.emitted_cuts.insert(loop.emitted_cuts.end(),
                             std::make_move_iterator(result.emitted_cuts.begin()),
                             std::make_move_iterator(result.emitted_cuts.end()));
    result.emitted_cuts = std::move(loop.emitted_cuts);
  }
  result.root_bound = loop.value;
}

}  // namespace snip

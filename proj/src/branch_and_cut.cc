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

#include "snip/branch_and_cut.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <queue>

#include "snip/errors.h"

namespace snip {

namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct BoundChange {
  int var;
  double lower;
  double upper;
};

struct Node {
  std::vector<BoundChange> changes;
  LpBasis basis;
  double bound = -kInfinity;
  std::int64_t seq = 0;
};

struct WorseNode {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.seq > b.seq;
  }
};

}  // namespace

const char* SolveStatusName(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kLimitReached:
      return "limit";
  }
  return "unknown";
}

std::int64_t SolveResult::total_cuts() const {
  return std::accumulate(cuts.begin(), cuts.end(), std::int64_t{0});
}

double RelativeGap(double objective, double bound) {
  if (!std::isfinite(objective) || !std::isfinite(bound)) return kInfinity;
  return (objective - bound) / std::max(std::abs(objective), 1e-10);
}

SolveResult BranchAndCut(LinearModel model, const LazySeparator& separator,
                         const BranchAndCutOptions& options) {
  const auto start = Clock::now();
  SolveResult result;
  const int n = model.variable_count();
  std::vector<double> base_lower(n), base_upper(n);
  std::vector<int> integers;
  for (int j = 0; j < n; ++j) {
    base_lower[j] = model.variable(j).lower;
    base_upper[j] = model.variable(j).upper;
    if (model.variable(j).integer) integers.push_back(j);
  }

  double incumbent = kInfinity;
  double pruned_bound = kInfinity;
  auto can_prune = [&](double lb) {
    return std::isfinite(incumbent) &&
           RelativeGap(incumbent, lb) <= options.gap_tolerance;
  };

  std::priority_queue<Node, std::vector<Node>, WorseNode> open;
  std::int64_t seq = 0;
  open.push(Node{{}, {}, -kInfinity, seq++});
  bool limit = false;
  bool root_done = false;

  while (!open.empty()) {
    if (Seconds(start) >= options.time_limit ||
        result.nodes >= options.node_limit) {
      limit = true;
      break;
    }
    Node node = open.top();
    open.pop();
    if (can_prune(node.bound)) {
      pruned_bound = std::min(pruned_bound, node.bound);
      continue;
    }
    ++result.nodes;
    for (int j : integers) model.SetBounds(j, base_lower[j], base_upper[j]);
    for (const BoundChange& c : node.changes) {
      model.SetBounds(c.var, c.lower, c.upper);
    }

    LpBasis basis = std::move(node.basis);
    double node_bound = node.bound;
    for (;;) {
      if (Seconds(start) >= options.time_limit) {
        limit = true;
        open.push(Node{std::move(node.changes), std::move(basis), node_bound,
                       seq++});
        break;
      }
      const auto lp_start = Clock::now();
      LpSolution lp = SolveLp(model, basis.empty() ? nullptr : &basis, options.lp);
      result.time_lp += Seconds(lp_start);
      if (lp.status == LpStatus::kInfeasible) break;
      if (lp.status == LpStatus::kUnbounded) {
        throw NumericalError("branch and cut: unbounded node relaxation");
      }
      basis = std::move(lp.basis);
      node_bound = std::max(node_bound, lp.objective);
      if (!root_done) result.root_bound = lp.objective;
      if (can_prune(lp.objective)) {
        pruned_bound = std::min(pruned_bound, lp.objective);
        break;
      }

      int branch_var = -1;
      double best_frac = options.integrality_tolerance;
      for (int j : integers) {
        const double v = lp.values[j];
        const double frac = std::min(v - std::floor(v), std::ceil(v) - v);
        if (frac > best_frac) {
          best_frac = frac;
          branch_var = j;
        }
      }

      if (branch_var < 0) {
        for (int j : integers) lp.values[j] = std::round(lp.values[j]);
        if (separator) {
          const auto sep_start = Clock::now();
          std::vector<Cut> cuts = separator(lp.values, true);
          result.time_cutgen += Seconds(sep_start);
          int added = 0;
          for (Cut& cut : cuts) {
            if (cut.Violation(lp.values) <= options.violation_tolerance) continue;
            model.AddRow(cut.ToRow().terms, RowSense::kGreaterEqual,
                         cut.constant);
            ++result.cuts[static_cast<int>(cut.provenance)];
            if (options.record_cuts) result.emitted_cuts.push_back(std::move(cut));
            ++added;
          }
          if (added > 0) continue;
        }
        if (lp.objective < incumbent) {
          incumbent = lp.objective;
          result.values = lp.values;
        }
        break;
      }

      const double v = lp.values[branch_var];
      const double lo = model.variable(branch_var).lower;
      const double hi = model.variable(branch_var).upper;
      Node down{node.changes, basis, node_bound, seq++};
      down.changes.push_back({branch_var, lo, std::floor(v)});
      Node up{std::move(node.changes), std::move(basis), node_bound, seq++};
      up.changes.push_back({branch_var, std::ceil(v), hi});
      open.push(std::move(down));
      open.push(std::move(up));
      break;
    }
    root_done = true;
    if (limit) break;
  }

  double bound = std::min(pruned_bound, incumbent);
  if (!open.empty()) bound = std::min(bound, open.top().bound);
  result.objective = incumbent;
  result.bound = bound;
  result.gap = RelativeGap(incumbent, bound);
  if (limit) {
    result.status = SolveStatus::kLimitReached;
  } else if (std::isfinite(incumbent)) {
    result.status = SolveStatus::kOptimal;
    result.gap = std::max(result.gap, 0.0);
  } else {
    result.status = SolveStatus::kInfeasible;
  }
  result.time_total = Seconds(start);
  return result;
}

}  // namespace snip

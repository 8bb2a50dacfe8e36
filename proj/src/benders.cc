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

#include "snip/benders.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <queue>

#include "snip/errors.h"
#include "snip/simplex.h"

namespace snip {

namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

double InterdictionTerm(const Network& net, ArcId a, std::span<const double> x,
                        const std::vector<double>& u) {
  const int k = net.interdictable_index(a);
  if (k < 0) return 0.0;
  return (net.r(a) - net.q(a)) * u[net.arc(a).head] * x[k];
}

CuttingLoopOptions LoopOptions(const SolveOptions& options) {
  CuttingLoopOptions loop;
  loop.unit_list = options.scenario_list;
  loop.pass_limit = options.root_pass_limit;
  loop.time_limit = options.time_limit;
  loop.record_cuts = options.record_cuts;
  return loop;
}

}  // namespace

SubproblemResult SubproblemDp(const Instance& instance, int scenario,
                              std::span<const double> x,
                              const std::vector<double>& u) {
  const Network& net = instance.network;
  const Scenario& sc = instance.scenarios[scenario];
  const int n = net.node_count();
  std::vector<double> pi(n, 0.0);
  std::vector<std::optional<ArcId>> succ(n);
  std::vector<char> via_q(n, 0);
  std::vector<char> settled(n, 0);
  pi[sc.t] = 1.0;

  using Entry = std::pair<double, NodeId>;
  auto cmp = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
  heap.push({1.0, sc.t});
  while (!heap.empty()) {
    const auto [value, j] = heap.top();
    heap.pop();
    if (settled[j] || value != pi[j]) continue;
    settled[j] = 1;
    for (ArcId a : net.in_arcs(j)) {
      const NodeId i = net.arc(a).tail;
      if (settled[i]) continue;
      const double vr = net.r(a) * value - InterdictionTerm(net, a, x, u);
      const bool interdictable = net.interdictable_index(a) >= 0;
      const double vq = interdictable ? net.q(a) * value : -kInfinity;
      const double cand = std::max(vr, vq);
      const bool first = !succ[i].has_value();
      if (first || cand > pi[i] || (cand == pi[i] && a < *succ[i])) {
        const bool push = first || cand > pi[i];
        pi[i] = cand;
        succ[i] = a;
        via_q[i] = vq > vr ? 1 : 0;
        if (push) heap.push({cand, i});
      }
    }
  }

  SubproblemResult result;
  result.value = pi[sc.s];
  result.point.scenario = scenario;
  double prefix = 1.0;
  for (NodeId v = sc.s; v != sc.t;) {
    const ArcId a = *succ[v];
    if (via_q[v]) {
      result.point.z.push_back({a, prefix});
      prefix *= net.q(a);
    } else {
      result.point.y.push_back({a, prefix});
      prefix *= net.r(a);
    }
    v = net.arc(a).head;
  }
  result.point.y_t = prefix;
  return result;
}

SubproblemResult SubproblemLp(const Instance& instance, int scenario,
                              std::span<const double> x,
                              const std::vector<double>& u) {
  const Network& net = instance.network;
  const Scenario& sc = instance.scenarios[scenario];
  LinearModel model;
  std::vector<int> var(net.node_count(), -1);
  for (NodeId i = 0; i < net.node_count(); ++i) {
    if (u[i] > 0.0) {
      var[i] = model.AddVariable(-kInfinity, kInfinity, i == sc.s ? 1.0 : 0.0,
                                 false);
    }
  }
  std::vector<std::pair<ArcId, int>> arc_rows;
  std::vector<std::pair<ArcId, int>> q_rows;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arc(a);
    if (var[arc.tail] < 0 || var[arc.head] < 0) continue;
    arc_rows.push_back(
        {a, model.AddRow({{var[arc.tail], 1.0}, {var[arc.head], -net.r(a)}},
                         RowSense::kGreaterEqual,
                         -InterdictionTerm(net, a, x, u))});
    if (net.interdictable_index(a) >= 0) {
      q_rows.push_back(
          {a, model.AddRow({{var[arc.tail], 1.0}, {var[arc.head], -net.q(a)}},
                           RowSense::kGreaterEqual, 0.0)});
    }
  }
  const int terminal_row =
      model.AddRow({{var[sc.t], 1.0}}, RowSense::kEqual, 1.0);
  const LpSolution lp = SolveLp(model);
  if (lp.status != LpStatus::kOptimal) {
    throw NumericalError("scenario subproblem LP not solved to optimality");
  }
  SubproblemResult result;
  result.value = lp.objective;
  result.point.scenario = scenario;
  result.point.y_t = lp.row_duals[terminal_row];
  for (const auto& [a, row] : arc_rows) {
    if (lp.row_duals[row] != 0.0) {
      result.point.y.push_back({a, std::max(0.0, lp.row_duals[row])});
    }
  }
  for (const auto& [a, row] : q_rows) {
    if (lp.row_duals[row] != 0.0) {
      result.point.z.push_back({a, std::max(0.0, lp.row_duals[row])});
    }
  }
  return result;
}

double DualResidual(const Instance& instance, const DualPoint& point) {
  const Network& net = instance.network;
  const Scenario& sc = instance.scenarios[point.scenario];
  std::vector<double> balance(net.node_count(), 0.0);
  double worst = 0.0;
  auto flow = [&](ArcId a, double value, double coef) {
    worst = std::max(worst, -value);
    balance[net.arc(a).tail] += value;
    balance[net.arc(a).head] -= coef * value;
  };
  for (const auto& [a, v] : point.y) flow(a, v, net.r(a));
  for (const auto& [a, v] : point.z) {
    if (net.interdictable_index(a) < 0) worst = std::max(worst, std::abs(v));
    flow(a, v, net.q(a));
  }
  balance[sc.t] += point.y_t;
  balance[sc.s] -= 1.0;
  for (double b : balance) worst = std::max(worst, std::abs(b));
  return worst;
}

Cut BendersCut(const DualPoint& point, const Instance& instance,
               const std::vector<double>& u, int theta_var) {
  const Network& net = instance.network;
  Cut cut;
  cut.value_var = theta_var;
  cut.constant = point.y_t;
  cut.provenance = Provenance::kBenders;
  cut.owner = point.scenario;
  for (const auto& [a, y] : point.y) {
    const int k = net.interdictable_index(a);
    if (k < 0 || y == 0.0) continue;
    cut.terms.push_back({k, -(net.r(a) - net.q(a)) * u[net.arc(a).head] * y});
  }
  std::sort(cut.terms.begin(), cut.terms.end(),
            [](const Term& a, const Term& b) { return a.var < b.var; });
  return cut;
}

BendersMaster BuildBendersMaster(const Instance& instance) {
  const Network& net = instance.network;
  BendersMaster master;
  const auto& d = net.interdictable_ids();
  std::vector<Term> budget;
  for (size_t k = 0; k < d.size(); ++k) {
    const int var = master.model.AddVariable(0.0, 1.0, 0.0, true,
                                             "x" + std::to_string(d[k]));
    budget.push_back({var, net.cost(d[k])});
  }
  for (size_t w = 0; w < instance.scenarios.size(); ++w) {
    master.theta_var.push_back(master.model.AddVariable(
        0.0, kInfinity, instance.scenarios[w].p, false,
        "theta" + std::to_string(w)));
  }
  master.model.AddRow(std::move(budget), RowSense::kLessEqual, instance.budget,
                      "budget");
  return master;
}

namespace {

class BendersSeparator {
 public:
  BendersSeparator(const Instance& instance, const BendersMaster& master,
                   SubproblemMethod method)
      : instance_(instance),
        theta_var_(master.theta_var),
        method_(method),
        u_(UninterdictedBounds(instance.network, instance.Destinations())) {}

  std::vector<Cut> operator()(std::span<const int> scenarios,
                              std::span<const double> values) const {
    const auto x = values.first(instance_.network.interdictable_count());
    std::vector<Cut> cuts;
    for (int w : scenarios) {
      const std::vector<double>& u = u_.at(instance_.scenarios[w].t);
      const SubproblemResult sub = method_ == SubproblemMethod::kDp
                                       ? SubproblemDp(instance_, w, x, u)
                                       : SubproblemLp(instance_, w, x, u);
      if (sub.value - values[theta_var_[w]] <= kViolation) continue;
      cuts.push_back(BendersCut(sub.point, instance_, u, theta_var_[w]));
    }
    return cuts;
  }

 private:
  static constexpr double kViolation = 1e-6;
  const Instance& instance_;
  std::vector<int> theta_var_;
  SubproblemMethod method_;
  std::map<NodeId, std::vector<double>> u_;
};

}  // namespace

BendersRoot BendersRootLoop(const Instance& instance,
                            const SolveOptions& options) {
  BendersRoot root{BuildBendersMaster(instance), {}};
  const BendersSeparator separate(instance, root.master, options.subproblem);
  root.loop = RunCuttingLoop(root.master.model,
                             static_cast<int>(instance.scenarios.size()),
                             separate, root.master.pool, LoopOptions(options));
  return root;
}

SolveResult SolveBenders(const Instance& instance,
                         const SolveOptions& options) {
  const auto start = Clock::now();
  BendersRoot root = BendersRootLoop(instance, options);
  const BendersSeparator separate(instance, root.master, options.subproblem);
  std::vector<int> all(instance.scenarios.size());
  for (size_t w = 0; w < all.size(); ++w) all[w] = static_cast<int>(w);
  LazySeparator lazy = [&](std::span<const double> values, bool) {
    return separate(all, values);
  };
  SolveResult result = BranchAndCut(std::move(root.master.model), lazy,
                                    options.EngineOptions(Seconds(start)));
  AbsorbCuttingLoop(std::move(root.loop), result);
  if (!result.values.empty()) {
    for (int k = 0; k < instance.network.interdictable_count(); ++k) {
      result.plan.push_back(result.values[k] > 0.5 ? 1 : 0);
    }
  }
  result.time_total = Seconds(start);
  return result;
}

}  // namespace snip

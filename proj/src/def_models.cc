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

#include "snip/def_models.h"

#include <map>
#include <string>

#include "snip/simplex.h"

namespace snip {

namespace {

// Blocks are given by their destination and the objective weight of each
// node's value.
DefModel Build(const Instance& instance, const std::vector<NodeId>& destinations,
               const std::vector<std::vector<double>>& weights,
               std::vector<int> scenario_block) {
  const Network& net = instance.network;
  const auto u = UninterdictedBounds(net, destinations);
  DefModel def;
  LinearModel& model = def.model;
  DefModelMap& map = def.map;
  map.block_destination = destinations;
  map.scenario_block = std::move(scenario_block);

  const auto& d = net.interdictable_ids();
  for (size_t k = 0; k < d.size(); ++k) {
    map.x_var.push_back(
        model.AddVariable(0.0, 1.0, 0.0, true, "x" + std::to_string(d[k])));
  }
  for (size_t b = 0; b < destinations.size(); ++b) {
    const NodeId t = destinations[b];
    const std::vector<double>& ub = u.at(t);
    std::vector<int> vars(net.node_count());
    for (NodeId i = 0; i < net.node_count(); ++i) {
      const double lo = i == t ? 1.0 : 0.0;
      const double hi = i == t ? 1.0 : ub[i];
      vars[i] = model.AddVariable(
          lo, hi, weights[b][i], false,
          "pi" + std::to_string(i) + "_" + std::to_string(b));
    }
    map.pi_var.push_back(std::move(vars));
  }
  for (size_t b = 0; b < destinations.size(); ++b) {
    const std::vector<int>& pi = map.pi_var[b];
    const std::vector<double>& ub = u.at(destinations[b]);
    for (ArcId a = 0; a < net.arc_count(); ++a) {
      const Arc& arc = net.arc(a);
      const int k = net.interdictable_index(a);
      const double r = net.r(a);
      if (k < 0) {
        map.arc_rows.push_back(model.AddRow(
            {{pi[arc.tail], 1.0}, {pi[arc.head], -r}}, RowSense::kGreaterEqual,
            0.0));
        continue;
      }
      const double q = net.q(a);
      map.bigm_rows.push_back(model.AddRow(
          {{pi[arc.tail], 1.0},
           {pi[arc.head], -r},
           {map.x_var[k], (r - q) * ub[arc.head]}},
          RowSense::kGreaterEqual, 0.0));
      map.q_rows.push_back(model.AddRow(
          {{pi[arc.tail], 1.0}, {pi[arc.head], -q}}, RowSense::kGreaterEqual,
          0.0));
    }
  }
  std::vector<Term> budget;
  for (size_t k = 0; k < d.size(); ++k) {
    budget.push_back({map.x_var[k], net.cost(d[k])});
  }
  map.budget_row =
      model.AddRow(std::move(budget), RowSense::kLessEqual, instance.budget,
                   "budget");
  return def;
}

SolveResult SolveModel(const DefModel& def, const SolveOptions& options) {
  SolveResult result =
      BranchAndCut(def.model, nullptr, options.EngineOptions(0.0));
  if (!result.values.empty()) {
    for (int var : def.map.x_var) {
      result.plan.push_back(result.values[var] > 0.5 ? 1 : 0);
    }
  }
  return result;
}

}  // namespace

DefModel BuildDef(const Instance& instance) {
  const int n = instance.network.node_count();
  std::vector<NodeId> destinations;
  std::vector<std::vector<double>> weights;
  std::vector<int> scenario_block;
  for (size_t w = 0; w < instance.scenarios.size(); ++w) {
    const Scenario& sc = instance.scenarios[w];
    destinations.push_back(sc.t);
    weights.emplace_back(n, 0.0);
    weights.back()[sc.s] = sc.p;
    scenario_block.push_back(static_cast<int>(w));
  }
  return Build(instance, destinations, weights, std::move(scenario_block));
}

DefModel BuildCompactDef(const Instance& instance) {
  const int n = instance.network.node_count();
  const std::vector<NodeId> destinations = instance.Destinations();
  std::map<NodeId, int> block_of;
  for (size_t b = 0; b < destinations.size(); ++b) {
    block_of[destinations[b]] = static_cast<int>(b);
  }
  std::vector<std::vector<double>> weights(destinations.size(),
                                           std::vector<double>(n, 0.0));
  std::vector<int> scenario_block;
  for (const Scenario& sc : instance.scenarios) {
    const int b = block_of.at(sc.t);
    weights[b][sc.s] += sc.p;
    scenario_block.push_back(b);
  }
  return Build(instance, destinations, weights, std::move(scenario_block));
}

double LpRelaxationValue(const LinearModel& model) {
  const LpSolution lp = SolveLp(model);
  switch (lp.status) {
    case LpStatus::kOptimal:
      return lp.objective;
    case LpStatus::kInfeasible:
      return kInfinity;
    case LpStatus::kUnbounded:
      return -kInfinity;
  }
  return kInfinity;
}

SolveResult SolveDef(const Instance& instance, const SolveOptions& options) {
  return SolveModel(BuildDef(instance), options);
}

SolveResult SolveCompactDef(const Instance& instance,
                            const SolveOptions& options) {
  return SolveModel(BuildCompactDef(instance), options);
}

}  // namespace snip

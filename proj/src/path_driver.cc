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

#include "snip/path_driver.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "snip/path_cuts.h"

namespace snip {

namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
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

PathMaster BuildPathMaster(const Instance& instance) {
  const Network& net = instance.network;
  PathMaster master;
  const auto& d = net.interdictable_ids();
  std::vector<Term> budget;
  for (size_t k = 0; k < d.size(); ++k) {
    const int var = master.model.AddVariable(0.0, 1.0, 0.0, true,
                                             "x" + std::to_string(d[k]));
    budget.push_back({var, net.cost(d[k])});
  }
  const auto u = UninterdictedBounds(net, instance.Destinations());
  std::map<std::pair<NodeId, NodeId>, int> index;
  std::vector<double> weight;
  for (const Scenario& sc : instance.scenarios) {
    auto [it, inserted] =
        index.emplace(std::make_pair(sc.s, sc.t),
                      static_cast<int>(master.pairs.size()));
    if (inserted) {
      master.pairs.push_back({sc.s, sc.t});
      weight.push_back(0.0);
    }
    weight[it->second] += sc.p;
    master.scenario_pair.push_back(it->second);
  }
  for (size_t i = 0; i < master.pairs.size(); ++i) {
    const auto [s, t] = master.pairs[i];
    master.pi_var.push_back(master.model.AddVariable(
        0.0, u.at(t)[s], weight[i], false,
        "pi" + std::to_string(s) + "_" + std::to_string(t)));
  }
  master.model.AddRow(std::move(budget), RowSense::kLessEqual, instance.budget,
                      "budget");
  return master;
}

PathSeparator::PathSeparator(const Instance& instance, const PathMaster& master,
                             SigmaMode mode)
    : instance_(instance),
      pairs_(master.pairs),
      pi_var_(master.pi_var),
      mode_(mode) {}

void PathSeparator::CountRound(std::int64_t runs) {
  ++stats_.rounds;
  stats_.dp_runs += runs;
  stats_.max_dp_runs_per_round = std::max(stats_.max_dp_runs_per_round, runs);
}

std::vector<Cut> PathSeparator::Fractional(std::span<const int> pairs,
                                           std::span<const double> values) {
  const Network& net = instance_.network;
  const auto x = values.first(net.interdictable_count());
  std::vector<std::vector<double>> sigmas;
  if (mode_ != SigmaMode::kPower) sigmas.push_back(FractionalSigma(net, x));
  if (mode_ != SigmaMode::kConvex) sigmas.push_back(PlanSigma(net, x));

  std::vector<Cut> cuts;
  std::int64_t runs = 0;
  for (const std::vector<double>& sigma : sigmas) {
    std::map<NodeId, ReliabilityLabels> labels;
    for (int p : pairs) {
      const auto [s, t] = pairs_[p];
      auto it = labels.find(t);
      if (it == labels.end()) {
        it = labels.emplace(t, MaxReliabilityLabels(net, sigma, t)).first;
        ++runs;
      }
      if (it->second.pi[s] <= 0.0) continue;
      const PathFunction pf(net, ExtractPath(it->second, net, s));
      std::vector<Cut> found =
          SeparateFractional(pf, x, values[pi_var_[p]], pi_var_[p], p);
      for (Cut& c : found) cuts.push_back(std::move(c));
    }
  }
  CountRound(runs);
  return cuts;
}

std::vector<Cut> PathSeparator::Integer(std::span<const double> values) {
  const Network& net = instance_.network;
  std::vector<double> x(values.begin(),
                        values.begin() + net.interdictable_count());
  for (double& v : x) v = v > 0.5 ? 1.0 : 0.0;
  const std::vector<double> sigma = PlanSigma(net, x);
  std::map<NodeId, ReliabilityLabels> labels;
  std::vector<Cut> cuts;
  for (size_t p = 0; p < pairs_.size(); ++p) {
    const auto [s, t] = pairs_[p];
    auto it = labels.find(t);
    if (it == labels.end()) {
      it = labels.emplace(t, MaxReliabilityLabels(net, sigma, t)).first;
    }
    const double pi = values[pi_var_[p]];
    if (it->second.pi[s] <= pi + kCutViolation) continue;
    const PathFunction pf(net, ExtractPath(it->second, net, s));
    std::vector<Cut> found =
        SeparateInteger(pf, x, pi, pi_var_[p], static_cast<int>(p));
    for (Cut& c : found) cuts.push_back(std::move(c));
  }
  CountRound(static_cast<std::int64_t>(labels.size()));
  return cuts;
}

namespace {

CuttingLoopResult RunRoot(PathMaster& master, PathSeparator& separator,
                          const SolveOptions& options) {
  UnitSeparator separate = [&](std::span<const int> units,
                               std::span<const double> values) {
    return separator.Fractional(units, values);
  };
  return RunCuttingLoop(master.model, static_cast<int>(master.pairs.size()),
                        separate, master.pool, LoopOptions(options));
}

}  // namespace

PathRoot PathRootLoop(const Instance& instance, const SolveOptions& options) {
  PathRoot root{BuildPathMaster(instance), {}, {}};
  PathSeparator separator(instance, root.master, options.sigma_mode);
  root.loop = RunRoot(root.master, separator, options);
  root.stats = separator.stats();
  return root;
}

PathSolveResult SolvePathDetailed(const Instance& instance,
                                  const SolveOptions& options) {
  const auto start = Clock::now();
  PathMaster master = BuildPathMaster(instance);
  PathSeparator separator(instance, master, options.sigma_mode);
  CuttingLoopResult loop = RunRoot(master, separator, options);
  LazySeparator lazy = [&](std::span<const double> values, bool) {
    return separator.Integer(values);
  };
  PathSolveResult out;
  out.result = BranchAndCut(std::move(master.model), lazy,
                            options.EngineOptions(Seconds(start)));
  AbsorbCuttingLoop(std::move(loop), out.result);
  if (!out.result.values.empty()) {
    for (int k = 0; k < instance.network.interdictable_count(); ++k) {
      out.result.plan.push_back(out.result.values[k] > 0.5 ? 1 : 0);
    }
  }
  out.result.time_total = Seconds(start);
  out.stats = separator.stats();
  return out;
}

SolveResult SolvePath(const Instance& instance, const SolveOptions& options) {
  return SolvePathDetailed(instance, options).result;
}

}  // namespace snip

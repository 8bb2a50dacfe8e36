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

// Path-based branch-and-cut: one value variable pi per distinct
// origin-destination pair, bounded below by cuts on h_P for maximum-reliability
// paths P found at the current point.

#ifndef SNIP_PATH_DRIVER_H_
#define SNIP_PATH_DRIVER_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "snip/cutting_loop.h"
#include "snip/instance.h"
#include "snip/linear_model.h"
#include "snip/solver.h"

namespace snip {

struct PathMaster {
  LinearModel model;
  // Distinct (s, t) pairs and their value variables.
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::vector<int> pi_var;
  std::vector<int> scenario_pair;
  CutPool pool;
};

PathMaster BuildPathMaster(const Instance& instance);

// Labels are computed once per destination per separation round; these
// counters let callers check that.
struct PathSeparationStats {
  std::int64_t rounds = 0;
  std::int64_t dp_runs = 0;
  std::int64_t max_dp_runs_per_round = 0;
};

class PathSeparator {
 public:
  PathSeparator(const Instance& instance, const PathMaster& master,
                SigmaMode mode);

  // Fractional point: paths under the configured reliabilities, then
  // heuristic lifted-cut separation.
  std::vector<Cut> Fractional(std::span<const int> pairs,
                              std::span<const double> values);
  // Integral point: one path per pair under the plan, exact separation.
  std::vector<Cut> Integer(std::span<const double> values);

  const PathSeparationStats& stats() const { return stats_; }

 private:
  void CountRound(std::int64_t runs);

  const Instance& instance_;
  std::vector<std::pair<NodeId, NodeId>> pairs_;
  std::vector<int> pi_var_;
  SigmaMode mode_;
  PathSeparationStats stats_;
};

struct PathRoot {
  PathMaster master;
  CuttingLoopResult loop;
  PathSeparationStats stats;
};

PathRoot PathRootLoop(const Instance& instance,
                      const SolveOptions& options = {});

struct PathSolveResult {
  SolveResult result;
  PathSeparationStats stats;
};

PathSolveResult SolvePathDetailed(const Instance& instance,
                                  const SolveOptions& options = {});
SolveResult SolvePath(const Instance& instance, const SolveOptions& options = {});

}  // namespace snip

#endif  // SNIP_PATH_DRIVER_H_

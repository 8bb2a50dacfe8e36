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

#include <gtest/gtest.h>

#include "snip/simplex.h"
#include "test_util.h"

namespace snip {
namespace {

Instance SmallGrid(std::uint64_t seed, QRegime regime, double budget,
                   int scenarios = 4) {
  GeneratorParams params;
  params.rows = 3 + static_cast<int>(seed % 2);
  params.cols = 3 + static_cast<int>(seed % 3);
  params.regime = regime;
  params.scenario_count = scenarios;
  params.budget = budget;
  params.seed = seed;
  return GenerateInstance(params);
}

QRegime RegimeOf(std::uint64_t seed) {
  return static_cast<QRegime>(seed % 3);
}

double FixedPlanValue(LinearModel model, const DefModelMap& map,
                      const std::vector<std::uint8_t>& x) {
  for (size_t k = 0; k < map.x_var.size(); ++k) {
    model.SetBounds(map.x_var[k], x[k], x[k]);
  }
  return LpRelaxationValue(model);
}

TEST(DefModelsTest, DiamondShape) {
  const Instance inst = DiamondInstance();
  const DefModel def = BuildDef(inst);
  EXPECT_EQ(def.model.variable_count(), 2 + 4 * 1);
  EXPECT_EQ(def.model.row_count(), (2 + 2 * 2) * 1 + 1);
  for (int var : def.map.x_var) EXPECT_TRUE(def.model.variable(var).integer);
  EXPECT_NEAR(FixedPlanValue(def.model, def.map, {0, 0}), 0.72, 1e-10);
  EXPECT_NEAR(FixedPlanValue(def.model, def.map, {1, 0}), 0.63, 1e-10);

  const DefModel compact = BuildCompactDef(inst);
  EXPECT_EQ(compact.model.variable_count(), def.model.variable_count());
  EXPECT_EQ(compact.model.row_count(), def.model.row_count());
  EXPECT_NEAR(FixedPlanValue(compact.model, compact.map, {1, 0}), 0.63, 1e-10);
}

TEST(DefModelsTest, CompactSharesBlocks) {
  Instance inst = DiamondInstance();
  inst.scenarios = {{0, 3, 0.5}, {1, 3, 0.25}, {0, 1, 0.25}};
  const DefModel def = BuildDef(inst);
  const DefModel compact = BuildCompactDef(inst);
  EXPECT_EQ(def.map.pi_var.size(), 3u);
  EXPECT_EQ(compact.map.pi_var.size(), 2u);
  EXPECT_EQ(compact.map.scenario_block[0], compact.map.scenario_block[1]);
  EXPECT_NE(compact.map.scenario_block[0], compact.map.scenario_block[2]);
}

TEST(DefModelsTest, ZeroBudget) {
  Instance inst = DiamondInstance();
  inst.budget = 0.0;
  EXPECT_NEAR(LpRelaxationValue(BuildDef(inst).model), 0.72, 1e-10);
  EXPECT_NEAR(LpRelaxationValue(BuildCompactDef(inst).model), 0.72, 1e-10);
  const SolveResult r = SolveDef(inst);
  EXPECT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.objective, 0.72, 1e-10);
}

TEST(DefModelsTest, DiamondSolves) {
  const Instance inst = DiamondInstance();
  for (const SolveResult& r : {SolveDef(inst), SolveCompactDef(inst)}) {
    EXPECT_EQ(r.status, SolveStatus::kOptimal);
    EXPECT_NEAR(r.objective, 0.63, 1e-9);
    EXPECT_EQ(r.plan, (std::vector<std::uint8_t>{1, 0}));
  }
}

TEST(DefModelsTest, RelaxationsAgreeAndBoundTheOptimum) {
  for (std::uint64_t seed = 1; seed <= 24; ++seed) {
    const Instance inst = SmallGrid(seed, RegimeOf(seed), 1 + seed % 3);
    const DefModel def = BuildDef(inst);
    const DefModel compact = BuildCompactDef(inst);
    const double lp_def = LpRelaxationValue(def.model);
    const double lp_compact = LpRelaxationValue(compact.model);
    EXPECT_NEAR(lp_def, lp_compact, 1e-6) << "seed " << seed;
    const double opt = BruteForce(inst).objective;
    EXPECT_LE(lp_def, opt + 1e-9);

    // A compact LP solution copied to every scenario of the same destination
    // is feasible for the full model with the same objective.
    const LpSolution cs = SolveLp(compact.model);
    ASSERT_EQ(cs.status, LpStatus::kOptimal);
    std::vector<double> full(def.model.variable_count(), 0.0);
    for (size_t k = 0; k < def.map.x_var.size(); ++k) {
      full[def.map.x_var[k]] = cs.values[compact.map.x_var[k]];
    }
    for (size_t w = 0; w < inst.scenarios.size(); ++w) {
      const auto& from = compact.map.pi_var[compact.map.scenario_block[w]];
      const auto& to = def.map.pi_var[def.map.scenario_block[w]];
      for (size_t i = 0; i < to.size(); ++i) full[to[i]] = cs.values[from[i]];
    }
    EXPECT_LE(def.model.MaxViolation(full), 1e-7);
    EXPECT_NEAR(def.model.ObjectiveValue(full), cs.objective, 1e-9);
  }
}

TEST(DefModelsTest, MatchBruteForce) {
  for (std::uint64_t seed = 1; seed <= 18; ++seed) {
    const Instance inst = SmallGrid(seed, RegimeOf(seed), 1 + seed % 3);
    const BruteForceResult bf = BruteForce(inst);
    SolveOptions options;
    options.gap_tolerance = 1e-9;
    for (bool compact : {false, true}) {
      const SolveResult r =
          compact ? SolveCompactDef(inst, options) : SolveDef(inst, options);
      ASSERT_EQ(r.status, SolveStatus::kOptimal);
      EXPECT_NEAR(r.objective, bf.objective, 1e-7) << "seed " << seed;
      InterdictionPlan plan{r.plan};
      EXPECT_LE(plan.Cost(inst.network), inst.budget + 1e-9);
      EXPECT_NEAR(EvaluatePlan(inst, plan), r.objective, 1e-7);
    }
  }
}

TEST(DefModelsTest, IncumbentValuesSatisfyRecursion) {
  for (std::uint64_t seed = 3; seed <= 9; ++seed) {
    const Instance inst = SmallGrid(seed, RegimeOf(seed), 2);
    const DefModel def = BuildDef(inst);
    SolveOptions options;
    options.gap_tolerance = 1e-9;
    const SolveResult r = SolveDef(inst, options);
    ASSERT_EQ(r.status, SolveStatus::kOptimal);
    const std::vector<double> sigma =
        testing::SigmaOf(inst.network, r.plan);
    for (size_t w = 0; w < inst.scenarios.size(); ++w) {
      const Scenario& sc = inst.scenarios[w];
      const double pi = r.values[def.map.pi_var[def.map.scenario_block[w]][sc.s]];
      EXPECT_NEAR(pi, testing::EnumerateBestPath(inst.network, sigma, sc.s, sc.t),
                  1e-7);
    }
  }
}

}  // namespace
}  // namespace snip

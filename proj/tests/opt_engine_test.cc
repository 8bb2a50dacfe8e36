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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "snip/branch_and_cut.h"
#include "snip/errors.h"
#include "snip/linear_model.h"
#include "snip/simplex.h"
#include "test_util.h"

namespace snip {
namespace {

TEST(LinearModelTest, RowsMergeAndValidate) {
  LinearModel m;
  const int x = m.AddVariable(0, 1, 1, false);
  const int y = m.AddVariable(0, 1, 1, false);
  const int r = m.AddRow({{x, 1}, {y, 2}, {x, 3}, {y, -2}}, RowSense::kLessEqual, 4);
  ASSERT_EQ(m.row(r).terms.size(), 1u);
  EXPECT_EQ(m.row(r).terms[0].coef, 4.0);
  EXPECT_THROW(m.AddRow({{5, 1}}, RowSense::kEqual, 0), std::invalid_argument);
  EXPECT_THROW(m.AddRow({{x, NAN}}, RowSense::kEqual, 0), std::invalid_argument);
  EXPECT_THROW(m.AddVariable(2, 1, 0, false), std::invalid_argument);
  const std::vector<double> v = {2.0, 0.5};
  EXPECT_NEAR(m.MaxViolation(v), 4.0, 1e-15);
  EXPECT_FALSE(m.DebugString().empty());
}

TEST(LinearModelTest, CutRecord) {
  Cut cut;
  cut.value_var = 2;
  cut.constant = 0.5;
  cut.terms = {{0, -0.25}, {1, 0.1}};
  const std::vector<double> v = {1.0, 1.0, 0.2};
  EXPECT_NEAR(cut.Bound(v), 0.35, 1e-15);
  EXPECT_NEAR(cut.Violation(v), 0.15, 1e-15);
  const Row row = cut.ToRow();
  EXPECT_EQ(row.sense, RowSense::kGreaterEqual);
  EXPECT_NEAR(row.Activity(v), 0.2 + 0.25 - 0.1, 1e-15);
  EXPECT_EQ(row.rhs, 0.5);
  EXPECT_STREQ(ProvenanceName(Provenance::kLifted1), "supermod-lifted-1");
}

TEST(SimplexTest, SingleRow) {
  LinearModel m;
  const int x = m.AddVariable(0, 10, 1, false);
  const int r = m.AddRow({{x, 1}}, RowSense::kGreaterEqual, 3);
  const LpSolution s = SolveLp(m);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.values[x], 3.0, 1e-12);
  EXPECT_NEAR(s.row_duals[r], 1.0, 1e-12);
}

TEST(SimplexTest, BoundActive) {
  LinearModel m;
  const int x = m.AddVariable(0, 1, -1, false);
  const LpSolution s = SolveLp(m);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.values[x], 1.0);
  EXPECT_EQ(s.objective, -1.0);
}

TEST(SimplexTest, InfeasibleAndUnbounded) {
  LinearModel m;
  const int x = m.AddVariable(0, 10, 1, false);
  m.AddRow({{x, 1}}, RowSense::kGreaterEqual, 2);
  m.AddRow({{x, 1}}, RowSense::kLessEqual, 1);
  EXPECT_EQ(SolveLp(m).status, LpStatus::kInfeasible);

  LinearModel u;
  const int y = u.AddVariable(-kInfinity, kInfinity, 1, false);
  const int z = u.AddVariable(0, kInfinity, 0, false);
  u.AddRow({{y, 1}, {z, 1}}, RowSense::kLessEqual, 5);
  EXPECT_EQ(SolveLp(u).status, LpStatus::kUnbounded);
}

TEST(SimplexTest, FreeVariablesAndEquality) {
  // min x + y, x - y = 1, x + 2y >= 4, x, y free.
  LinearModel m;
  const int x = m.AddVariable(-kInfinity, kInfinity, 1, false);
  const int y = m.AddVariable(-kInfinity, kInfinity, 1, false);
  m.AddRow({{x, 1}, {y, -1}}, RowSense::kEqual, 1);
  m.AddRow({{x, 1}, {y, 2}}, RowSense::kGreaterEqual, 4);
  const LpSolution s = SolveLp(m);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.values[x], 2.0, 1e-12);
  EXPECT_NEAR(s.values[y], 1.0, 1e-12);
  EXPECT_NEAR(s.objective, 3.0, 1e-12);
}

// Dual feasibility, complementary slackness and strong duality of an optimal
// solution.
void CheckDuals(const LinearModel& m, const LpSolution& s) {
  const int n = m.variable_count();
  std::vector<double> d(n);
  for (int j = 0; j < n; ++j) d[j] = m.variable(j).objective;
  double dual_obj = 0.0;
  for (int i = 0; i < m.row_count(); ++i) {
    const Row& row = m.row(i);
    const double y = s.row_duals[i];
    for (const Term& t : row.terms) d[t.var] -= t.coef * y;
    dual_obj += y * row.rhs;
    const double slack = row.Activity(s.values) - row.rhs;
    if (row.sense == RowSense::kGreaterEqual) {
      EXPECT_GE(y, -1e-9);
    } else if (row.sense == RowSense::kLessEqual) {
      EXPECT_LE(y, 1e-9);
    }
    if (std::abs(y) > 1e-9) {
      EXPECT_NEAR(slack, 0.0, 1e-8);
    }
  }
  for (int j = 0; j < n; ++j) {
    EXPECT_NEAR(d[j], s.reduced_costs[j], 1e-8);
    const Variable& v = m.variable(j);
    if (d[j] > 1e-9) {
      EXPECT_NEAR(s.values[j], v.lower, 1e-8);
    } else if (d[j] < -1e-9) {
      EXPECT_NEAR(s.values[j], v.upper, 1e-8);
    }
    if (std::abs(d[j]) > 1e-12) dual_obj += d[j] * s.values[j];
  }
  EXPECT_NEAR(dual_obj, s.objective, 1e-8);
}

TEST(SimplexTest, RandomModelsMatchVertexEnumeration) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::uniform_int_distribution<int> small(-2, 2);
  int optimal = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    LinearModel m;
    const int n = 1 + static_cast<int>(rng() % 5);
    const int rows = static_cast<int>(rng() % 5);
    for (int j = 0; j < n; ++j) {
      const double lo = small(rng);
      m.AddVariable(lo, lo + 1 + rng() % 3, std::round(coef(rng) * 2) / 2,
                    false);
    }
    for (int i = 0; i < rows; ++i) {
      std::vector<Term> terms;
      for (int j = 0; j < n; ++j) {
        if (rng() % 3) terms.push_back({j, static_cast<double>(small(rng))});
      }
      const RowSense sense = static_cast<RowSense>(rng() % 3);
      m.AddRow(std::move(terms), sense, small(rng));
    }
    const auto oracle = testing::VertexEnumerationLp(m);
    const LpSolution s = SolveLp(m);
    if (!oracle) {
      EXPECT_EQ(s.status, LpStatus::kInfeasible) << m.DebugString();
      ++infeasible;
      continue;
    }
    ++optimal;
    ASSERT_EQ(s.status, LpStatus::kOptimal) << m.DebugString();
    EXPECT_NEAR(s.objective, *oracle, 1e-8) << m.DebugString();
    EXPECT_LE(m.MaxViolation(s.values), 1e-8);
    CheckDuals(m, s);
    // Warm start from the optimal basis after adding a row.
    LinearModel grown = m;
    std::vector<Term> terms;
    for (int j = 0; j < n; ++j) terms.push_back({j, static_cast<double>(small(rng))});
    grown.AddRow(std::move(terms), RowSense::kGreaterEqual, small(rng));
    const auto grown_oracle = testing::VertexEnumerationLp(grown);
    const LpSolution w = SolveLp(grown, &s.basis);
    if (grown_oracle) {
      ASSERT_EQ(w.status, LpStatus::kOptimal) << grown.DebugString();
      EXPECT_NEAR(w.objective, *grown_oracle, 1e-8);
      CheckDuals(grown, w);
    } else {
      EXPECT_EQ(w.status, LpStatus::kInfeasible);
    }
  }
  EXPECT_GT(optimal, 100);
  EXPECT_GT(infeasible, 5);
}

TEST(SimplexTest, Degenerate) {
  // Many constraints through the same vertex.
  LinearModel m;
  const int x = m.AddVariable(0, kInfinity, -1, false);
  const int y = m.AddVariable(0, kInfinity, -1, false);
  for (int k = 1; k <= 20; ++k) {
    m.AddRow({{x, static_cast<double>(k)}, {y, 1.0}}, RowSense::kLessEqual,
             k + 1.0);
  }
  const LpSolution s = SolveLp(m);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.objective, -2.0, 1e-10);
}

TEST(BranchAndCutTest, TinyKnapsack) {
  LinearModel m;
  const int x = m.AddVariable(0, 1, -1, true);
  const int y = m.AddVariable(0, 1, -1, true);
  m.AddRow({{x, 1}, {y, 1}}, RowSense::kLessEqual, 1);
  const SolveResult r = BranchAndCut(m, nullptr);
  EXPECT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.objective, -1.0, 1e-12);
}

TEST(BranchAndCutTest, FractionalRootNeedsBranching) {
  // max 5a + 4b + 3c, 2a + 3b + c <= 3.5, 4a + b + 2c <= 5.5.
  LinearModel m;
  const int a = m.AddVariable(0, 1, -5, true);
  const int b = m.AddVariable(0, 1, -4, true);
  const int c = m.AddVariable(0, 1, -3, true);
  m.AddRow({{a, 2}, {b, 3}, {c, 1}}, RowSense::kLessEqual, 3.5);
  m.AddRow({{a, 4}, {b, 1}, {c, 2}}, RowSense::kLessEqual, 5.5);
  const SolveResult r = BranchAndCut(m, nullptr);
  // Enumerate.
  double best = 0.0;
  for (const auto& v : testing::AllBinary(3)) {
    if (2 * v[0] + 3 * v[1] + v[2] > 3.5 || 4 * v[0] + v[1] + 2 * v[2] > 5.5) {
      continue;
    }
    best = std::min(best, -5.0 * v[0] - 4.0 * v[1] - 3.0 * v[2]);
  }
  EXPECT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.objective, best, 1e-9);
  EXPECT_GE(r.nodes, 1);
}

TEST(BranchAndCutTest, InfeasibleModel) {
  LinearModel m;
  const int x = m.AddVariable(0, 1, 1, true);
  m.AddRow({{x, 2}}, RowSense::kEqual, 1);
  EXPECT_EQ(BranchAndCut(m, nullptr).status, SolveStatus::kInfeasible);
}

// Value-function model min pi, pi >= v(x) enforced lazily, with v known by
// enumeration. The separator returns no-good cuts
// pi >= v(xbar) (1 - sum_{xbar_k = 0} x_k - sum_{xbar_k = 1} (1 - x_k)).
struct ValueModel {
  LinearModel model;
  int pi = 0;
};

std::vector<Cut> NoGood(std::span<const double> values, int d, int pi,
                        const std::function<double(const std::vector<std::uint8_t>&)>& v) {
  std::vector<std::uint8_t> x(d);
  for (int k = 0; k < d; ++k) x[k] = values[k] > 0.5;
  const double value = v(x);
  if (values[pi] >= value - 1e-9) return {};
  Cut cut;
  cut.value_var = pi;
  cut.constant = value;
  for (int k = 0; k < d; ++k) {
    if (x[k]) {
      cut.constant -= value;
      cut.terms.push_back({k, value});
    } else {
      cut.terms.push_back({k, -value});
    }
  }
  return {cut};
}

TEST(BranchAndCutTest, DiamondWithLazyCuts) {
  LinearModel m;
  m.AddVariable(0, 1, 0, true);  // (a,t)
  m.AddVariable(0, 1, 0, true);  // (s,b)
  const int pi = m.AddVariable(0, 0.72, 1, false);
  m.AddRow({{0, 1}, {1, 1}}, RowSense::kLessEqual, 1);
  auto value = [](const std::vector<std::uint8_t>& x) {
    const double top = 0.9 * (x[0] ? 0.4 : 0.8);
    const double bottom = (x[1] ? 0.07 : 0.7) * 0.9;
    return std::max(top, bottom);
  };
  int calls = 0;
  LazySeparator sep = [&](std::span<const double> values, bool is_integer) {
    EXPECT_TRUE(is_integer);
    ++calls;
    Cut cut;
    cut.value_var = pi;
    cut.constant = 0.63;
    cut.terms = {{1, -0.567}};
    if (cut.Violation(values) > 1e-6) return std::vector<Cut>{cut};
    return NoGood(values, 2, pi, value);
  };
  const SolveResult r = BranchAndCut(m, sep);
  EXPECT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.objective, 0.63, 1e-9);
  EXPECT_EQ(r.values[0], 1.0);
  EXPECT_EQ(r.values[1], 0.0);
  EXPECT_GT(calls, 0);
  EXPECT_GT(r.total_cuts(), 0);
  EXPECT_LE(RelativeGap(r.objective, r.bound), 1e-4);
}

TEST(BranchAndCutTest, RandomValueFunctions) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 6);
    // v(x) = max over three "paths" of products.
    std::vector<std::vector<double>> factor(3, std::vector<double>(d));
    for (auto& f : factor) {
      for (double& v : f) v = unit(rng) < 0.5 ? 1.0 : unit(rng);
    }
    auto value = [&](const std::vector<std::uint8_t>& x) {
      double best = 0.0;
      for (const auto& f : factor) {
        double p = 0.9;
        for (int k = 0; k < d; ++k) p *= x[k] ? f[k] : 1.0;
        best = std::max(best, p);
      }
      return best;
    };
    const double budget = 1 + rng() % 3;
    LinearModel m;
    std::vector<Term> row;
    for (int k = 0; k < d; ++k) {
      m.AddVariable(0, 1, 0, true);
      row.push_back({k, 1.0});
    }
    const int pi = m.AddVariable(0, 1, 1, false);
    m.AddRow(row, RowSense::kLessEqual, budget);
    double best = kInfinity;
    for (const auto& x : testing::AllBinary(d)) {
      int used = 0;
      for (auto b : x) used += b;
      if (used <= budget) best = std::min(best, value(x));
    }
    BranchAndCutOptions opt;
    opt.gap_tolerance = 1e-9;
    const SolveResult r = BranchAndCut(
        m, [&](std::span<const double> v, bool) { return NoGood(v, d, pi, value); },
        opt);
    ASSERT_EQ(r.status, SolveStatus::kOptimal);
    EXPECT_NEAR(r.objective, best, 1e-9) << "trial " << trial;
    EXPECT_LE(r.bound, r.objective + 1e-12);
  }
}

TEST(BranchAndCutTest, LimitsReportBounds) {
  LinearModel m;
  for (int k = 0; k < 12; ++k) m.AddVariable(0, 1, -(1.0 + 0.01 * k), true);
  std::vector<Term> row;
  for (int k = 0; k < 12; ++k) row.push_back({k, 2.0 + 0.1 * k});
  m.AddRow(row, RowSense::kLessEqual, 9.05);
  const SolveResult full = BranchAndCut(m, nullptr);
  ASSERT_EQ(full.status, SolveStatus::kOptimal);

  BranchAndCutOptions opt;
  opt.time_limit = 0.0;
  const SolveResult timed = BranchAndCut(m, nullptr, opt);
  EXPECT_EQ(timed.status, SolveStatus::kLimitReached);
  EXPECT_LE(timed.bound, full.objective + 1e-9);

  opt.time_limit = kInfinity;
  opt.node_limit = 2;
  const SolveResult nodes = BranchAndCut(m, nullptr, opt);
  EXPECT_EQ(nodes.status, SolveStatus::kLimitReached);
  EXPECT_LE(nodes.bound, full.objective + 1e-9);
  EXPECT_EQ(nodes.nodes, 2);
}

TEST(BranchAndCutTest, RelativeGap) {
  EXPECT_NEAR(RelativeGap(2.0, 1.0), 0.5, 1e-15);
  EXPECT_EQ(RelativeGap(kInfinity, 1.0), kInfinity);
  EXPECT_EQ(RelativeGap(0.0, 0.0), 0.0);
  EXPECT_STREQ(SolveStatusName(SolveStatus::kLimitReached), "limit");
}

}  // namespace
}  // namespace snip
